#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acgraph/group.hpp"

namespace acg {

/// Canonical integer code of a k-tuple: sum of entries[i] * n^i.
using Code = std::uint64_t;

/// n^k, throwing BudgetExceeded when it does not fit in 63 bits.
Code tuple_space_size(std::size_t n, std::size_t k);

struct KTuple {
  std::vector<Element> entries;

  std::size_t size() const noexcept { return entries.size(); }
  Code code(std::size_t n) const;
  static KTuple from_code(Code code, std::size_t n, std::size_t k);
  bool operator==(const KTuple&) const = default;
};

enum class MoveKind { RightMult, LeftMult, Invert, Conjugate };

const char* to_string(MoveKind kind);

/// What a Conjugate move conjugates by: an element of S u S^-1, or an
/// operator generator applied with sign +1 or its inverse with sign -1.
struct Conjugator {
  enum class Type { Element, Automorphism };
  Type type = Type::Element;
  std::uint32_t index = 0;
  int sign = 1;
  bool operator==(const Conjugator&) const = default;
};

/// One elementary transformation.
///   RightMult  x_i <- x_i x_j^sign
///   LeftMult   x_i <- x_j^sign x_i
///   Invert     x_i <- x_i^-1
///   Conjugate  x_i <- w^-1 x_i w   or   x_i <- a^sign(x_i)
struct MoveSpec {
  MoveKind kind = MoveKind::Invert;
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  int sign = 1;
  Conjugator w{};
  bool operator==(const MoveSpec&) const = default;
};

/// The edge generator of an AC-graph: Nielsen moves plus conjugation by
/// S u S^-1 and by the operator generators and their inverses.
class MoveAlphabet {
 public:
  MoveAlphabet(GroupPtr group, std::span<const Element> conjugators, OperatorSet ops = {});

  /// S = generators of G.
  static MoveAlphabet with_generators(GroupPtr group, OperatorSet ops = {});
  /// S = G.
  static MoveAlphabet with_all(GroupPtr group, OperatorSet ops = {});

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const std::vector<Element>& conjugators() const noexcept { return conjugators_; }
  const OperatorSet& operators() const noexcept { return ops_; }

  /// Every valid move for tuples of length k.
  std::vector<MoveSpec> moves(std::size_t k) const;
  /// Throws InputError if m is not a valid move for length k.
  void check(const MoveSpec& m, std::size_t k) const;
  /// New value of entry m.i; m must be valid.
  Element image(const MoveSpec& m, std::span<const Element> entries) const;
  MoveSpec inverse(const MoveSpec& m) const;

  /// Stable textual identity of the alphabet for cache headers.
  std::string descriptor() const;

 private:
  GroupPtr group_;
  std::vector<Element> conjugators_;
  OperatorSet ops_;
  OperatorSet inverse_ops_;
};

KTuple apply_move(const KTuple& t, const MoveSpec& m, const MoveAlphabet& alphabet);

/// Images of t under every move, duplicates and self-loops included.
std::vector<KTuple> neighbors(const KTuple& t, const MoveAlphabet& alphabet);

bool is_n_generating(const KTuple& t, const FiniteGroup& g, const OperatorSet& ops);

struct ExploreOptions {
  /// Maximum size n^k of the raw code space.
  std::uint64_t budget = std::uint64_t{1} << 28;
  unsigned threads = 1;
};

/// Codes of all normally generating k-tuples, increasing.
std::vector<Code> enumerate_nk(const FiniteGroup& g, std::size_t k, const OperatorSet& ops,
                               const ExploreOptions& options = {});

/// Partition of N_k into connected components. Ids are numbered so that
/// representatives (smallest code of each component) increase.
class ComponentTable {
 public:
  ComponentTable() = default;
  ComponentTable(std::size_t k, std::size_t group_order, std::vector<Code> codes,
                 std::vector<std::uint32_t> ids);

  std::size_t k() const noexcept { return k_; }
  std::size_t group_order() const noexcept { return n_; }
  std::size_t vertex_count() const noexcept { return codes_.size(); }
  std::size_t component_count() const noexcept { return reps_.size(); }

  std::optional<std::uint32_t> label(Code code) const;
  std::optional<std::uint32_t> label(const KTuple& t) const { return label(t.code(n_)); }
  Code rep(std::uint32_t id) const { return reps_.at(id); }

  const std::vector<Code>& codes() const noexcept { return codes_; }
  const std::vector<std::uint32_t>& ids() const noexcept { return ids_; }
  const std::vector<Code>& reps() const noexcept { return reps_; }
  /// Size of each component.
  std::vector<std::size_t> component_sizes() const;

  bool operator==(const ComponentTable&) const = default;

 private:
  std::size_t k_ = 0;
  std::size_t n_ = 0;
  std::vector<Code> codes_;
  std::vector<std::uint32_t> ids_;
  std::vector<Code> reps_;
};

/// Exhaustive component labelling of the AC-graph on N_k(G, ops) with the
/// alphabet's edges. Union-find over edges regenerated on the fly; with
/// threads > 1 the vertex range is sharded over a lock-free union-find and
/// the result is independent of scheduling.
ComponentTable components(const MoveAlphabet& alphabet, std::size_t k,
                          const ExploreOptions& options = {});

struct Certificate {
  std::vector<MoveSpec> moves;
};

KTuple replay(const KTuple& start, const Certificate& cert, const MoveAlphabet& alphabet);

enum class Equivalence { Equivalent, Different, Inconclusive };

const char* to_string(Equivalence e);

struct EquivalenceResult {
  Equivalence status = Equivalence::Inconclusive;
  std::optional<Certificate> certificate;
};

/// Bidirectional breadth-first search for a move sequence from u to v.
/// "Different" is only reported from a component table lookup; a search
/// that runs out of depth is "Inconclusive". Returned certificates have
/// been replayed. Throws InputError if u or v is not in N_k.
EquivalenceResult equivalent(const KTuple& u, const KTuple& v, const MoveAlphabet& alphabet,
                             const ComponentTable* table = nullptr, std::size_t depth_cap = 64);

KTuple project_tuple(const Homomorphism& phi, const KTuple& t);

/// The same moves on the image side: element conjugators pass through phi,
/// operator moves keep their index (target operators must be the induced
/// ones, in the same order).
MoveSpec project_move(const Homomorphism& phi, const MoveSpec& m);

/// Target alphabet for project_move: S mapped through phi, operators
/// induced on the target.
MoveAlphabet project_alphabet(const Homomorphism& phi, const MoveAlphabet& source);

/// Replays cert from u in the source (must reach v, else std::logic_error)
/// and then in the target from phi(u); true iff it arrives at phi(v).
bool lift_equivalence_check(const Homomorphism& phi, const KTuple& u, const KTuple& v,
                            const Certificate& cert, const MoveAlphabet& source);

}  // namespace acg
