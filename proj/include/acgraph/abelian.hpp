#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "acgraph/ac_graph.hpp"
#include "acgraph/group.hpp"

namespace acg {

/// Invariant factors m1 | m2 | ... | md (each >= 2) with generators of the
/// matching cyclic direct factors.
struct AbelianInvariants {
  std::vector<std::uint64_t> factors;
  std::vector<Element> gens;

  std::size_t rank() const noexcept { return factors.size(); }
};

/// Splits off a cyclic factor of maximal order, then repeats in the
/// quotient. Each generator is the smallest index with the required order
/// that meets the part already split off trivially. Throws InputError for
/// non-abelian groups.
AbelianInvariants invariant_factors(const FiniteGroup& a);

std::uint64_t euler_phi(std::uint64_t m);

/// Number of components of the AC-graph of A on k-tuples: 1 if k > d,
/// otherwise the number of {+1,-1}-orbits on units mod m1. Requires
/// k >= d and k >= 2.
std::uint64_t dg_component_count(const AbelianInvariants& inv, std::size_t k);

/// (z1^lambda, z2, ..., zd). Throws InputError unless gcd(lambda, m1) = 1.
KTuple dg_representative(const FiniteGroup& a, const AbelianInvariants& inv,
                         std::uint64_t lambda);

/// Component labels on generating k-tuples of an abelian group, computed by
/// exhaustive search (conjugation is trivial, so only Nielsen moves act).
class AbelianComponentLabeler {
 public:
  AbelianComponentLabeler(GroupPtr a, std::size_t k, const ExploreOptions& options = {});

  /// Throws InputError if t does not generate A.
  std::uint32_t id(const KTuple& t) const;
  std::optional<std::uint32_t> try_id(const KTuple& t) const { return table_.label(t); }

  std::size_t count() const noexcept { return table_.component_count(); }
  const ComponentTable& table() const noexcept { return table_; }
  const AbelianInvariants& invariants() const noexcept { return inv_; }
  const FiniteGroup& group() const noexcept { return *a_; }

  /// Agreement with dg_component_count; empty when the formula does not
  /// apply (k < 2 or k < d).
  std::optional<bool> matches_formula() const;

 private:
  GroupPtr a_;
  std::size_t k_;
  AbelianInvariants inv_;
  ComponentTable table_;
};

}  // namespace acg
