#include "acgraph/catalog.hpp"

#include <array>
#include <map>
#include <numeric>

namespace acg::catalog {

namespace {

using Matrix = std::array<int, 4>;  // row-major 2x2

/// Action v -> vM of 2x2 matrices over F_p on the p^2 - 1 nonzero vectors.
std::vector<Permutation> matrix_action(int p, const std::vector<Matrix>& mats) {
  std::vector<std::pair<int, int>> points;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      if (a || b) points.emplace_back(a, b);
  auto index = [&](int a, int b) {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i] == std::pair{a, b}) return static_cast<std::uint32_t>(i);
    return std::uint32_t{0};
  };
  std::vector<Permutation> out;
  for (const auto& m : mats) {
    Permutation perm(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto [a, b] = points[i];
      const int x = ((a * m[0] + b * m[2]) % p + p) % p;
      const int y = ((a * m[1] + b * m[3]) % p + p) % p;
      perm[i] = index(x, y);
    }
    out.push_back(std::move(perm));
  }
  return out;
}

GroupSpec perm(std::string name, std::size_t degree, std::vector<Permutation> gens) {
  GroupSpec s;
  s.type = GroupSpec::Type::Permutation;
  s.name = std::move(name);
  s.degree = degree;
  s.generators = std::move(gens);
  return s;
}

GroupSpec abelian(std::string name, std::vector<std::uint64_t> factors) {
  GroupSpec s;
  s.type = GroupSpec::Type::Abelian;
  s.name = std::move(name);
  s.factors = std::move(factors);
  return s;
}

const std::vector<GroupSpec>& registry() {
  static const std::vector<GroupSpec> specs = [] {
    const Matrix transvection{1, 1, 0, 1}, rotation{0, -1, 1, 0};
    std::vector<GroupSpec> v;
    v.push_back(abelian("Z2", {2}));
    v.push_back(abelian("Z3", {3}));
    v.push_back(abelian("Z4", {4}));
    v.push_back(abelian("Z6", {6}));
    v.push_back(abelian("V4", {2, 2}));
    v.push_back(abelian("Z5xZ5", {5, 5}));
    v.push_back(abelian("Z2xZ4", {2, 4}));
    v.push_back(abelian("Z3xZ3", {3, 3}));
    v.push_back(perm("S3", 3, {{1, 2, 0}, {1, 0, 2}}));
    v.push_back(perm("D4", 4, {{1, 2, 3, 0}, {0, 3, 2, 1}}));
    v.push_back(perm("Q8", 8, matrix_action(3, {{0, -1, 1, 0}, {1, 1, 1, -1}})));
    v.push_back(perm("A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}));
    v.push_back(perm("SL(2,3)", 8, matrix_action(3, {transvection, rotation})));
    v.push_back(perm("S4", 4, {{1, 2, 3, 0}, {1, 0, 2, 3}}));
    v.push_back(perm("A5", 5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}));
    v.push_back(perm("SL(2,5)", 24, matrix_action(5, {transvection, rotation})));
    v.push_back(perm("A5xZ2", 7, {{1, 2, 3, 4, 0, 5, 6}, {1, 2, 0, 3, 4, 5, 6}, {0, 1, 2, 3, 4, 6, 5}}));
    v.push_back(perm("S5", 5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}));
    v.push_back(perm("A5xA5", 10,
                     {{1, 2, 3, 4, 0, 5, 6, 7, 8, 9},
                      {1, 2, 0, 3, 4, 5, 6, 7, 8, 9},
                      {0, 1, 2, 3, 4, 6, 7, 8, 9, 5},
                      {0, 1, 2, 3, 4, 6, 7, 5, 8, 9}}));
    return v;
  }();
  return specs;
}

}  // namespace

GroupSpec spec(std::string_view name) {
  for (const auto& s : registry())
    if (s.name == name) return s;
  throw InputError("unknown catalog group '" + std::string(name) + "'");
}

GroupPtr group(std::string_view name, const GroupLimits& limits) {
  return spec(name).build(limits);
}

std::vector<std::string> default_matrix() {
  return {"Z2", "Z3", "Z4", "Z6", "V4", "Z5xZ5", "Z2xZ4", "S3",
          "D4", "Q8", "A4", "SL(2,3)", "S4", "A5", "SL(2,5)", "A5xZ2"};
}

std::vector<std::string> all_names() {
  std::vector<std::string> out;
  for (const auto& s : registry()) out.push_back(s.name);
  return out;
}

Automorphism conjugation_automorphism(const FiniteGroup& g, const Permutation& t) {
  const auto& perms = g.permutations();
  if (perms.empty()) throw InputError("group has no permutation representation");
  if (t.size() != perms.front().size()) throw InputError("conjugating permutation has wrong degree");
  std::map<Permutation, Element> index;
  for (Element x = 0; x < perms.size(); ++x) index.emplace(perms[x], x);
  Permutation tinv(t.size());
  for (std::uint32_t i = 0; i < t.size(); ++i) tinv[t[i]] = i;
  std::vector<Element> table(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    // t^-1 x t with left-to-right composition
    Permutation c(t.size());
    for (std::uint32_t i = 0; i < t.size(); ++i) c[i] = t[perms[x][tinv[i]]];
    auto it = index.find(c);
    if (it == index.end()) throw InputError("permutation does not normalise the group");
    table[x] = it->second;
  }
  return make_automorphism(g, std::move(table));
}

std::vector<Element> extend_on_generators(const FiniteGroup& g, std::span<const Element> images) {
  const auto& gens = g.generators();
  if (images.size() != gens.size()) throw InputError("one image per generator required");
  constexpr Element unset = ~Element{0};
  std::vector<Element> map(g.order(), unset);
  map[FiniteGroup::identity] = FiniteGroup::identity;
  std::vector<Element> queue{FiniteGroup::identity};
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Element y = g.mul(queue[h], gens[s]);
      if (map[y] == unset) {
        map[y] = g.mul(map[queue[h]], images[s]);
        queue.push_back(y);
      }
    }
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (map[g.mul(a, b)] != g.mul(map[a], map[b]))
        throw InputError("generator images do not extend to a homomorphism");
  return map;
}

std::vector<OperatorExample> operator_examples() {
  std::vector<OperatorExample> out;
  auto with = [&](std::string label, std::string_view name,
                  std::vector<std::vector<Element>> gen_images) {
    GroupPtr g = group(name);
    OperatorSet ops;
    for (const auto& imgs : gen_images)
      ops.autos.push_back(make_automorphism(*g, extend_on_generators(*g, imgs)));
    out.push_back({std::move(label), g, std::move(ops)});
  };
  // abelian generators are unit vectors; elements are mixed radix indices
  with("V4 with the order-3 automorphism", "V4", {{2, 3}});
  with("Z3xZ3 with coordinate swap", "Z3xZ3", {{3, 1}});
  with("Z5xZ5 with (a,b) -> (2a,3b)", "Z5xZ5", {{2, 15}});
  with("Z5xZ5 with coordinate swap", "Z5xZ5", {{5, 1}});
  with("Z4 with inversion", "Z4", {{3}});
  {
    GroupPtr a5 = group("A5");
    out.push_back({"A5 with the outer automorphism from S5", a5,
                   OperatorSet{{conjugation_automorphism(*a5, {1, 0, 2, 3, 4})}}});
  }
  {
    GroupPtr s3 = group("S3");
    out.push_back({"S3 (inner only)", s3, OperatorSet{}});
  }
  return out;
}

}  // namespace acg::catalog
