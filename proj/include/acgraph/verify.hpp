#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "acgraph/ac_graph.hpp"
#include "acgraph/group.hpp"

namespace acg {

enum class Outcome { Pass, Fail, Info };

const char* to_string(Outcome o);

struct VerificationReport {
  std::string claim;
  std::string group;
  std::string group_hash;
  std::size_t k = 0;
  std::string alphabet;
  Outcome outcome = Outcome::Fail;
  nlohmann::json evidence = nlohmann::json::object();
  /// Codes of two tuples witnessing a failure.
  std::optional<std::pair<Code, Code>> counterexample;
  double runtime_ms = 0.0;

  bool passed() const noexcept { return outcome != Outcome::Fail; }
  nlohmann::json to_json(bool include_runtime = true) const;
};

enum class ConjugatorPolicy { Generators, All };

struct VerifyOptions {
  ExploreOptions explore{};
  ConjugatorPolicy conjugators = ConjugatorPolicy::Generators;
  std::uint64_t seed = 1;
  /// Trials for the randomized property suites.
  std::size_t trials = 2000;
  /// Largest n^3 for which lifting checks are also run at k = 3.
  std::uint64_t k3_limit = std::uint64_t{1} << 21;
  std::size_t structure_cap = 512;
};

MoveAlphabet make_alphabet(const GroupPtr& g, const OperatorSet& ops, ConjugatorPolicy policy);

/// Components of Delta_k(G) against pullbacks of components of
/// Delta_k(Ab(G)). Requires k >= max(d_G(G), 2).
VerificationReport verify_lifting(const GroupPtr& g, std::size_t k, const VerifyOptions& opt = {},
                                  const std::string& name = "");

/// Delta_k(G, ops) connected for perfect G and k >= 2.
VerificationReport verify_perfect(const GroupPtr& g, const OperatorSet& ops, std::size_t k,
                                  const VerifyOptions& opt = {}, const std::string& name = "");

/// Delta_k(G, ops) connected for k >= d_{G ops}(G) + 1.
VerificationReport verify_k_plus_one(const GroupPtr& g, const OperatorSet& ops, std::size_t k,
                                     const VerifyOptions& opt = {}, const std::string& name = "");

/// (x, y) and (u(x,y), v_n(x,y)) in one component, with a replayed
/// certificate of at most 64 moves.
VerificationReport ak_test(const GroupPtr& g, Element x, Element y, int n,
                           const VerifyOptions& opt = {}, const std::string& name = "");

/// All generating k-tuples (images of bases of F_k) share one component.
VerificationReport verify_free_image_connected(const GroupPtr& g, std::size_t k,
                                               const VerifyOptions& opt = {},
                                               const std::string& name = "");

/// Every component of Delta_k(G) contains a generating tuple (G perfect).
VerificationReport verify_pullback_normal_generation(const GroupPtr& g, std::size_t k,
                                                     const VerifyOptions& opt = {},
                                                     const std::string& name = "");

/// Partition of Delta_k(G, ops) against pullbacks from Ab(G) with the
/// induced operators. Reports what it finds without pass/fail.
VerificationReport rel_conjecture_search(const GroupPtr& g, const OperatorSet& ops,
                                         std::optional<std::size_t> k,
                                         const VerifyOptions& opt = {},
                                         const std::string& name = "");

/// Component count of Delta_k(A) for abelian A against the closed formula,
/// plus the representative-tuple transversal when k = d.
VerificationReport verify_abelian_formula(const GroupPtr& a, std::size_t k,
                                          const VerifyOptions& opt = {},
                                          const std::string& name = "");

/// Random certificates replayed through the abelianisation map.
VerificationReport verify_ac_modulo(const GroupPtr& g, std::size_t k,
                                    const VerifyOptions& opt = {}, const std::string& name = "");

/// (..., w_i g, ...) stays in the component of (..., w_i, ...) whenever g
/// lies in the normal closure of the other entries.
VerificationReport verify_ac_extension(const GroupPtr& g, std::size_t k,
                                       const VerifyOptions& opt = {},
                                       const std::string& name = "");

/// Non-N-generating elements equal W(G); N_k membership is decided in
/// G/W(G); the semisimple decomposition exists; the normal-rank formula
/// agrees with brute force where it applies.
VerificationReport verify_structure(const GroupPtr& g, const OperatorSet& ops,
                                    const VerifyOptions& opt = {}, const std::string& name = "");

/// Move reversibility, N_k closure under moves, and equal partitions for
/// S = generators and S = G.
VerificationReport verify_invariants(const GroupPtr& g, const OperatorSet& ops, std::size_t k,
                                     const VerifyOptions& opt = {}, const std::string& name = "");

/// The full default matrix.
std::vector<VerificationReport> verify_all(const VerifyOptions& opt = {}, unsigned threads = 1);

}  // namespace acg
