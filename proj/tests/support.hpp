#pragma once

#include <string>

#include "acgraph/catalog.hpp"
#include "acgraph/group.hpp"
#include "oracles.hpp"

inline oracle::Table raw(const acg::FiniteGroup& g) { return {g.order(), g.table()}; }

inline oracle::Set as_set(const acg::ElementSet& s) { return {s.begin(), s.end()}; }

inline acg::Element named(const acg::FiniteGroup& g, const std::string& name) {
  for (acg::Element x = 0; x < g.order(); ++x)
    if (g.name(x) == name) return x;
  throw std::runtime_error("no element " + name);
}
