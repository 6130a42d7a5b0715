#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acgraph/io.hpp"

namespace acg::catalog {

/// Named groups: Z2 Z3 Z4 Z6 V4 Z5xZ5 Z2xZ4 Z3xZ3 S3 D4 Q8 A4 SL(2,3) S4 A5
/// SL(2,5) A5xZ2 S5 A5xA5. Matrix groups act on the nonzero vectors of
/// F_p^2. Throws InputError for unknown names.
GroupSpec spec(std::string_view name);
GroupPtr group(std::string_view name, const GroupLimits& limits = {});

/// Z/2, Z/3, Z/4, Z/6, V4, [5,5], [2,4], S3, D4, Q8, A4, SL(2,3), S4, A5,
/// SL(2,5), A5 x Z/2.
std::vector<std::string> default_matrix();
std::vector<std::string> all_names();

/// The automorphism x -> t^-1 x t of a permutation group normalised by t.
Automorphism conjugation_automorphism(const FiniteGroup& g, const Permutation& t);

/// Extends generator images along the Cayley graph; the result is checked
/// to be an endomorphism table (not necessarily bijective).
std::vector<Element> extend_on_generators(const FiniteGroup& g, std::span<const Element> images);

struct OperatorExample {
  std::string label;
  GroupPtr group;
  OperatorSet ops;
};

/// Small groups with a nontrivial operator group, for the relativised
/// component comparison.
std::vector<OperatorExample> operator_examples();

}  // namespace acg::catalog
