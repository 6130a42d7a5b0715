#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "acgraph/group.hpp"

namespace acg {

inline constexpr std::size_t kDefaultStructureCap = 512;

struct NormalSubgroupLattice {
  GroupPtr group;
  OperatorSet ops;
  /// All normal operator-subgroups, by increasing order then members.
  std::vector<ElementSet> normals;
  /// Indices into normals of the maximal proper ones.
  std::vector<std::size_t> maximal_proper;
};

/// Every normal operator-subgroup, found as joins of closures of
/// (conjugacy + operator) classes. Throws BudgetExceeded above cap.
NormalSubgroupLattice normal_subgroups(const GroupPtr& g, const OperatorSet& ops,
                                       std::size_t cap = kDefaultStructureCap);

/// Intersection of the maximal proper normal operator-subgroups; all of G
/// when there are none.
ElementSet n_frattini(const GroupPtr& g, const OperatorSet& ops,
                      std::size_t cap = kDefaultStructureCap);

/// True iff whenever Y together with x normally generates G, Y alone does.
/// Y ranges over the normal operator-subgroups, which is enough because the
/// condition only sees Y through its normal closure.
bool non_n_generating_test(const GroupPtr& g, const OperatorSet& ops, Element x,
                           std::size_t cap = kDefaultStructureCap);

/// All elements passing non_n_generating_test, sharing one closure cache.
ElementSet non_n_generating_elements(const GroupPtr& g, const OperatorSet& ops,
                                     std::size_t cap = kDefaultStructureCap);

/// G/W(G) written as a direct product of operator-simple factors.
struct SemisimpleDecomposition {
  GroupPtr group;
  ElementSet frattini;
  Quotient quotient;
  OperatorSet quotient_ops;
  /// Factors as element sets of the quotient group.
  std::vector<ElementSet> factors;
  std::vector<bool> factor_abelian;
  /// components[q][i] = projection of quotient element q onto factor i.
  std::vector<std::vector<Element>> components;
  bool perfect = false;

  std::size_t size() const noexcept { return factors.size(); }
  /// Factor orders, sorted.
  std::vector<std::size_t> factor_orders() const;
};

/// Minimal normal operator-subgroups of G/W(G) picked greedily until they
/// span it; each pick meets the previous product trivially. Factor order
/// follows the smallest non-identity element, or a seeded shuffle when
/// tie_seed is set.
SemisimpleDecomposition semisimple_decompose(const GroupPtr& g, const OperatorSet& ops,
                                             std::size_t cap = kDefaultStructureCap,
                                             std::optional<std::uint64_t> tie_seed = {});

/// Indices i with a nontrivial i-th component of the image of x in G/W(G).
std::vector<std::size_t> support(const SemisimpleDecomposition& d, Element x);

/// Union of supports covers every factor. Throws InputError if G is not perfect.
bool perfect_generation_criterion(const SemisimpleDecomposition& d,
                                  std::span<const Element> entries);

/// max{d(A), 1} for G = (non-abelian operator-simple factors) x A, 0 for
/// the trivial group; empty when G does not split that way.
std::optional<std::size_t> d_normal_formula(const GroupPtr& g, const OperatorSet& ops,
                                            std::size_t cap = kDefaultStructureCap);

}  // namespace acg
