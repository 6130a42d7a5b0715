#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "acgraph/error.hpp"

namespace acg {

/// Dense index of a group element. The identity is always 0.
using Element = std::uint32_t;

/// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Element>;

/// Image list of a permutation of {0, ..., degree-1}.
using Permutation = std::vector<std::uint32_t>;

struct GroupLimits {
  std::size_t max_order = 2048;
  /// Associativity is checked on all triples up to this order, sampled above.
  std::size_t exhaustive_check_bound = 128;
};

/// A finite group given by its full Cayley table.
///
/// Elements are indices 0..n-1 with 0 the identity. Instances are immutable
/// and are normally handled through GroupPtr so that tables of a few
/// million entries are shared rather than copied.
class FiniteGroup {
 public:
  static constexpr Element identity = 0;

  FiniteGroup(std::size_t order, std::vector<Element> table,
              std::vector<Element> generators,
              std::vector<std::string> names = {},
              std::vector<Permutation> permutations = {});

  std::size_t order() const noexcept { return n_; }
  bool contains(Element a) const noexcept { return a < n_; }

  Element mul(Element a, Element b) const noexcept { return table_[std::size_t{a} * n_ + b]; }
  Element inv(Element a) const noexcept { return inv_[a]; }
  /// w^-1 a w
  Element conjugate(Element a, Element w) const noexcept { return mul(mul(inv_[w], a), w); }
  /// a^-1 b^-1 a b
  Element commutator(Element a, Element b) const noexcept {
    return mul(mul(inv_[a], inv_[b]), mul(a, b));
  }
  Element power(Element a, std::int64_t e) const noexcept;
  std::size_t element_order(Element a) const noexcept;

  const std::vector<Element>& generators() const noexcept { return generators_; }
  const std::vector<Element>& table() const noexcept { return table_; }
  const std::vector<Element>& inverse_table() const noexcept { return inv_; }

  /// Display name; falls back to the decimal index.
  std::string name(Element a) const;
  bool has_names() const noexcept { return !names_.empty(); }

  /// Concrete permutations of each element when the group was built from
  /// permutations, empty otherwise.
  const std::vector<Permutation>& permutations() const noexcept { return perms_; }

  bool is_abelian() const noexcept;

  /// SHA-256 (hex) of the canonical table bytes.
  const std::string& hash() const noexcept { return hash_; }

  /// Runs the table invariants: identity, inverses, Latin square,
  /// associativity (exhaustive up to the bound, sampled above) and
  /// generation. Throws ValidationError naming the first failing entry.
  void validate(const GroupLimits& limits = {}, std::uint64_t seed = 0x5eed) const;

 private:
  std::size_t n_;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<Element> generators_;
  std::vector<std::string> names_;
  std::vector<Permutation> perms_;
  std::string hash_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A map source -> target stored as a table of target indices.
struct Homomorphism {
  GroupPtr source;
  GroupPtr target;
  std::vector<Element> map;

  Element operator()(Element a) const { return map[a]; }
  /// Throws ValidationError unless the map is multiplicative.
  void validate() const;
  ElementSet kernel() const;
  ElementSet image() const;
};

/// An automorphism of a fixed group, given as a bijective element table.
struct Automorphism {
  std::vector<Element> perm;

  Element operator()(Element a) const { return perm[a]; }
  Automorphism inverse() const;
  bool operator==(const Automorphism&) const = default;
};

/// Builds an automorphism and checks bijectivity and multiplicativity.
Automorphism make_automorphism(const FiniteGroup& g, std::vector<Element> perm);

/// Generators of an operator group acting on G by automorphisms. Inner
/// automorphisms are always implied; an empty list means no extra operators.
struct OperatorSet {
  std::vector<Automorphism> autos;

  bool empty() const noexcept { return autos.empty(); }
  static OperatorSet from_tables(const FiniteGroup& g,
                                 const std::vector<std::vector<Element>>& tables);
};

// --- construction -----------------------------------------------------

/// Closure of permutation generators, enumerated breadth-first from the
/// identity. Products compose left to right: (x)(gh) = ((x)g)h.
GroupPtr build_from_permutations(std::size_t degree, const std::vector<Permutation>& gens,
                                 const GroupLimits& limits = {});

/// Z/f1 x ... x Z/fd in mixed radix, first coordinate fastest.
GroupPtr build_abelian(const std::vector<std::uint64_t>& factors,
                       const GroupLimits& limits = {});

/// From a full multiplication table. If the identity is not at index 0 it
/// is swapped there. A generating set is chosen greedily in index order.
GroupPtr build_from_table(const std::vector<std::vector<Element>>& rows,
                          const GroupLimits& limits = {});

// --- subgroups ----------------------------------------------------------

ElementSet subgroup_closure(const FiniteGroup& g, std::span<const Element> seed);

/// Smallest subgroup containing seed that is stable under conjugation by G
/// and under every operator in ops.
ElementSet normal_closure(const FiniteGroup& g, const OperatorSet& ops,
                          std::span<const Element> seed);

ElementSet commutator_subgroup(const FiniteGroup& g);
ElementSet center(const FiniteGroup& g);

bool is_subgroup(const FiniteGroup& g, std::span<const Element> set);
bool is_normal(const FiniteGroup& g, const OperatorSet& ops, std::span<const Element> set);
bool is_perfect(const FiniteGroup& g);

/// Orbits of G under conjugation together with the operators, each sorted,
/// ordered by smallest member.
std::vector<ElementSet> operator_classes(const FiniteGroup& g, const OperatorSet& ops);

struct Quotient {
  GroupPtr group;
  Homomorphism projection;
};

/// G/N with cosets ordered by their smallest element (identity coset first).
Quotient quotient(const GroupPtr& g, const ElementSet& n);

Quotient abelianization(const GroupPtr& g);

/// Operators induced on the target of a surjection whose kernel is
/// operator-stable. Throws InputError otherwise.
OperatorSet induced_operator(const Homomorphism& projection, const OperatorSet& ops);

struct Embedding {
  GroupPtr group;
  Homomorphism inclusion;
};

/// A subgroup H as a group in its own right, elements in increasing index
/// order of H.
Embedding subgroup_as_group(const GroupPtr& g, const ElementSet& h);

/// Operators restricted to an operator-stable subgroup.
OperatorSet restrict_operator(const Embedding& sub, const OperatorSet& ops);

/// Conjugation by the generators of the ambient group, restricted to a
/// normal subgroup. Turns a normal subgroup N of G into a G-group.
OperatorSet conjugation_operator(const Embedding& sub);

/// Minimal number of normal operator-generators of G (0 iff G trivial).
std::size_t d_normal(const FiniteGroup& g, const OperatorSet& ops);

/// Memoized normal closures. Every normal closure of a finite element set
/// is the product of the normal closures of its members, so closures are
/// identified by small integer ids and combined through a join table.
class NormalClosureOracle {
 public:
  using Id = std::uint32_t;

  NormalClosureOracle(const FiniteGroup& g, const OperatorSet& ops);

  Id of_element(Element a) const { return element_id_[a]; }
  Id trivial() const noexcept { return 0; }
  Id join(Id a, Id b);
  Id of_elements(std::span<const Element> elems);

  bool is_full(Id id) const { return sizes_[id] == g_->order(); }
  std::size_t size(Id id) const { return sizes_[id]; }
  bool contains(Id id, Element a) const { return bitmaps_[id][a] != 0; }
  ElementSet members(Id id) const;
  std::size_t count() const noexcept { return bitmaps_.size(); }

 private:
  Id intern(std::vector<char> bitmap);

  const FiniteGroup* g_;
  std::vector<Id> element_id_;
  std::vector<std::vector<char>> bitmaps_;
  std::vector<std::size_t> sizes_;
  std::unordered_map<std::string, Id> index_;
  std::unordered_map<std::uint64_t, Id> joins_;
};

/// Cycle notation, e.g. "(0 1 2)(3 4)"; the identity prints as "()".
std::string cycle_string(const Permutation& p);

}  // namespace acg
