#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acgraph/abelian.hpp"
#include "support.hpp"

using namespace acg;

namespace {

std::uint64_t brute_phi(std::uint64_t m) {
  std::uint64_t c = 0;
  for (std::uint64_t a = 1; a <= m; ++a) c += oracle::gcd(a, m) == 1;
  return c;
}

/// Orbits of {+1,-1} on the units mod m, counted directly.
std::uint64_t brute_pm_orbits(std::uint64_t m) {
  std::set<std::uint64_t> reps;
  for (std::uint64_t a = 0; a < m; ++a)
    if (oracle::gcd(a, m) == 1) reps.insert(std::min(a, (m - a) % m));
  return m == 1 ? 1 : reps.size();
}

const std::vector<std::vector<std::uint64_t>> kAbelian{
    {2},    {3},    {4},    {6},    {2, 2}, {5, 5}, {2, 4},  {3, 3},  {2, 2, 2},
    {7, 7}, {3, 9}, {4, 4}, {2, 6}, {6, 6}, {2, 3}, {4, 6},  {10, 10}, {3, 3, 3}};

}  // namespace

TEST_CASE("invariant factors") {
  CHECK(invariant_factors(*build_abelian({2, 4})).factors == std::vector<std::uint64_t>{2, 4});
  const auto z23 = build_abelian({2, 3});
  CHECK(invariant_factors(*z23).factors == std::vector<std::uint64_t>{6});
  CHECK(oracle::order_census(raw(*z23)).rbegin()->first == 6);
  CHECK(invariant_factors(*abelianization(catalog::group("S3")).group).factors ==
        std::vector<std::uint64_t>{2});
  CHECK(invariant_factors(*build_abelian({1})).rank() == 0);
  CHECK_THROWS_AS(invariant_factors(*catalog::group("S3")), InputError);
}

TEST_CASE("invariant factor decomposition is a direct product") {
  for (const auto& f : kAbelian) {
    const auto a = build_abelian(f);
    const auto inv = invariant_factors(*a);
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < inv.rank(); ++i) {
      prod *= inv.factors[i];
      CHECK(inv.factors[i] >= 2);
      if (i) CHECK(inv.factors[i] % inv.factors[i - 1] == 0);
      CHECK(a->element_order(inv.gens[i]) == inv.factors[i]);
    }
    CHECK(prod == a->order());
    const auto t = raw(*a);
    CHECK(oracle::subgroup(t, {inv.gens.begin(), inv.gens.end()}).size() == a->order());
    for (std::size_t i = 0; i < inv.rank(); ++i)
      for (std::size_t j = i + 1; j < inv.rank(); ++j) {
        const auto ci = oracle::subgroup(t, {inv.gens[i]}), cj = oracle::subgroup(t, {inv.gens[j]});
        std::vector<std::uint32_t> both;
        std::set_intersection(ci.begin(), ci.end(), cj.begin(), cj.end(), std::back_inserter(both));
        CHECK(both.size() == 1);
      }
    // abelian groups are determined by their order census
    std::vector<std::uint64_t> fs(inv.factors.begin(), inv.factors.end());
    CHECK(oracle::order_census(raw(*build_abelian(fs))) == oracle::order_census(t));
  }
}

TEST_CASE("euler phi") {
  for (std::uint64_t m = 1; m <= 200; ++m) CHECK(euler_phi(m) == brute_phi(m));
}

TEST_CASE("closed component count") {
  const auto z55 = invariant_factors(*build_abelian({5, 5}));
  CHECK(dg_component_count(z55, 2) == 2);
  CHECK(dg_component_count(invariant_factors(*build_abelian({3, 3, 3})), 4) == 1);
  CHECK(dg_component_count(invariant_factors(*build_abelian({2, 2})), 2) == 1);
  CHECK_THROWS_AS(dg_component_count(z55, 1), InputError);
  CHECK_THROWS_AS(dg_component_count(invariant_factors(*build_abelian({2, 2, 2})), 2), InputError);
  for (std::uint64_t m = 2; m <= 40; ++m) {
    const auto inv = invariant_factors(*build_abelian({m, m}, {4096, 16}));
    CHECK(dg_component_count(inv, 2) == brute_pm_orbits(m));
    CHECK(dg_component_count(inv, 3) == 1);
  }
}

TEST_CASE("representatives in [5,5]") {
  const auto a = build_abelian({5, 5});
  const AbelianComponentLabeler lab(a, 2);
  const auto& inv = lab.invariants();
  const auto r1 = dg_representative(*a, inv, 1), r2 = dg_representative(*a, inv, 2),
             r4 = dg_representative(*a, inv, 4);
  CHECK(r1.entries == std::vector<Element>{inv.gens[0], inv.gens[1]});
  CHECK(lab.id(r1) != lab.id(r2));
  CHECK(lab.id(r1) == lab.id(r4));
  CHECK_THROWS_AS(dg_representative(*a, inv, 5), InputError);
  CHECK_THROWS_AS(lab.id(KTuple{{0, 0}}), InputError);
  CHECK(lab.table().vertex_count() == 480);
  CHECK(lab.count() == 2);
  CHECK(lab.matches_formula() == true);
}

TEST_CASE("Z/2 at k = 2 is one triangle") {
  const AbelianComponentLabeler lab(build_abelian({2}), 2);
  CHECK(lab.table().vertex_count() == 3);
  CHECK(lab.id(KTuple{{1, 0}}) == lab.id(KTuple{{0, 1}}));
  CHECK(lab.id(KTuple{{1, 1}}) == lab.id(KTuple{{0, 1}}));
}

TEST_CASE("labeler agrees with the closed count") {
  for (const auto& f : kAbelian) {
    const auto a = build_abelian(f);
    const auto d = invariant_factors(*a).rank();
    for (std::size_t k = std::max<std::size_t>(d, 2); k <= 3; ++k) {
      CAPTURE(a->order());
      CAPTURE(k);
      const AbelianComponentLabeler lab(a, k);
      REQUIRE(lab.matches_formula().has_value());
      CHECK(*lab.matches_formula());
      CHECK(lab.count() == dg_component_count(lab.invariants(), k));
    }
  }
}

TEST_CASE("labeler agrees with brute-force search") {
  for (const auto& f : std::vector<std::vector<std::uint64_t>>{{2}, {4}, {6}, {2, 2}, {3, 3}, {2, 4}, {5, 5}}) {
    const auto a = build_abelian(f);
    for (std::size_t k : {1, 2}) {
      if (k == 1 && f.size() > 1) continue;
      const AbelianComponentLabeler lab(a, k);
      const auto ref = oracle::ac_components(raw(*a), k, {});
      std::vector<int> mine(ref.labels.size(), -1);
      for (std::size_t p = 0; p < lab.table().vertex_count(); ++p)
        mine[lab.table().codes()[p]] = static_cast<int>(lab.table().ids()[p]);
      CHECK(oracle::same_partition(mine, ref.labels));
    }
  }
}

TEST_CASE("determinant class separates components of (Z/m)^2") {
  for (std::uint64_t m = 2; m <= 13; ++m) {
    const auto a = build_abelian({m, m});
    const AbelianComponentLabeler lab(a, 2);
    std::vector<int> det(m * m * m * m, -1), mine(det.size(), -1);
    for (Element u = 0; u < m * m; ++u)
      for (Element v = 0; v < m * m; ++v) {
        const auto dc = oracle::det_class(m, u, v);
        if (oracle::gcd(dc, m) == 1 && (dc != 0 || m == 1)) det[u + v * m * m] = static_cast<int>(dc);
      }
    for (std::size_t p = 0; p < lab.table().vertex_count(); ++p)
      mine[lab.table().codes()[p]] = static_cast<int>(lab.table().ids()[p]);
    CAPTURE(m);
    CHECK(oracle::same_partition(mine, det));
  }
}

TEST_CASE("representatives form a transversal") {
  for (std::uint64_t m : {3, 4, 5, 7, 8, 9, 10, 12}) {
    for (const auto& f : std::vector<std::vector<std::uint64_t>>{{m, m}, {m}}) {
      const auto a = build_abelian(f);
      const std::size_t k = std::max<std::size_t>(f.size(), 2);
      if (f.size() == 1) continue;  // k = d needs d >= 2
      const AbelianComponentLabeler lab(a, k);
      std::set<std::uint32_t> hit;
      std::size_t reps = 0;
      for (std::uint64_t lambda = 1; lambda < m; ++lambda) {
        if (oracle::gcd(lambda, m) != 1 || m - lambda < lambda) continue;
        hit.insert(lab.id(dg_representative(*a, lab.invariants(), lambda)));
        ++reps;
      }
      CHECK(hit.size() == reps);
      CHECK(hit.size() == lab.count());
    }
  }
}

TEST_CASE("trivial group") {
  const AbelianComponentLabeler lab(build_abelian({1}), 2);
  CHECK(lab.count() == 1);
  CHECK(lab.table().vertex_count() == 1);
}
