#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <unordered_set>

#include "acgraph/blackbox.hpp"
#include "support.hpp"

using namespace acg;

namespace {

std::shared_ptr<const MoveAlphabet> alphabet(const GroupPtr& g, OperatorSet ops = {}) {
  return std::make_shared<const MoveAlphabet>(MoveAlphabet::with_generators(g, std::move(ops)));
}

KTuple start_tuple(const FiniteGroup& g, std::size_t k) {
  KTuple t{std::vector<Element>(k, 0)};
  for (std::size_t i = 0; i < std::min(k, g.generators().size()); ++i) t.entries[i] = g.generators()[i];
  return t;
}

}  // namespace

TEST_CASE("walks are deterministic in the seed") {
  const auto a5 = catalog::group("A5");
  const auto al = alphabet(a5);
  WalkState s1(al, start_tuple(*a5, 3), 42), s2(al, start_tuple(*a5, 3), 42), s3(al, start_tuple(*a5, 3), 43);
  bool diverged = false;
  for (int i = 0; i < 2000; ++i) {
    const MoveSpec m1 = s1.step(), m2 = s2.step();
    s3.step();
    REQUIRE(m1 == m2);
    REQUIRE(s1.tuple() == s2.tuple());
    diverged |= s1.tuple() != s3.tuple();
  }
  CHECK(diverged);
  CHECK(s1.steps_taken() == 2000);

  WalkState a(al, start_tuple(*a5, 3), 7), b(al, start_tuple(*a5, 3), 7);
  CHECK(sample_elements(a, 100, 500, 3) == sample_elements(b, 100, 500, 3));
}

TEST_CASE("walk_step leaves its argument alone") {
  const auto s3 = catalog::group("S3");
  WalkState s(alphabet(s3), start_tuple(*s3, 2), 1);
  const KTuple before = s.tuple();
  const WalkState next = walk_step(s);
  CHECK(s.tuple() == before);
  CHECK(s.steps_taken() == 0);
  CHECK(next.steps_taken() == 1);
}

TEST_CASE("walks stay in N_k") {
  for (const auto& ex : catalog::operator_examples()) {
    const std::size_t k = std::max<std::size_t>(2, d_normal(*ex.group, ex.ops));
    KTuple start = start_tuple(*ex.group, k);
    if (!is_n_generating(start, *ex.group, ex.ops)) continue;
    WalkState s(alphabet(ex.group, ex.ops), start, 5);
    for (int i = 0; i < 10000; ++i) {
      s.step();
      REQUIRE(is_n_generating(s.tuple(), *ex.group, ex.ops));
    }
  }
  const auto a5 = catalog::group("A5");
  WalkState s(alphabet(a5), start_tuple(*a5, 2), 9);
  for (int i = 0; i < 10000; ++i) {
    s.step();
    REQUIRE(is_n_generating(s.tuple(), *a5, {}));
  }
  CHECK_THROWS_AS(WalkState(alphabet(a5), KTuple{{0, 0}}, 1), InputError);
}

TEST_CASE("k = 1 in an abelian group only inverts") {
  const auto z5 = build_abelian({5});
  WalkState s(alphabet(z5), KTuple{{2}}, 3);
  for (int i = 0; i < 1000; ++i) {
    s.step();
    const Element x = s.tuple().entries[0];
    REQUIRE((x == 2 || x == 3));
  }
}

TEST_CASE("sample contract") {
  const auto a5 = catalog::group("A5");
  WalkState s(alphabet(a5), start_tuple(*a5, 2), 1);
  CHECK_THROWS_AS(sample_elements(s, 10, 0, 1), InputError);
  CHECK(sample_elements(s, 10, 1, 1).size() == 1);
  WalkState t(alphabet(a5), start_tuple(*a5, 2), 1);
  sample_elements(t, 30, 20, 4);
  CHECK(t.steps_taken() == 30 + 19 * 4);

  const auto triv = build_abelian({1});
  WalkState z(alphabet(triv), KTuple{{0, 0}}, 1);
  for (Element e : sample_elements(z, 5, 100, 2)) CHECK(e == 0);
}

TEST_CASE("uniformity report arithmetic") {
  const auto z3 = catalog::group("Z3");
  std::vector<Element> flat;
  for (int i = 0; i < 300; ++i) flat.push_back(static_cast<Element>(i % 3));
  const auto r = uniformity_report(flat, *z3);
  CHECK(r.chi_square == doctest::Approx(0.0));
  CHECK(r.p_value == doctest::Approx(1.0));
  CHECK(r.degrees_of_freedom == 2);
  CHECK(r.counts == std::vector<std::uint64_t>{100, 100, 100});
  CHECK_FALSE(r.low_power);

  // two degrees of freedom: survival function is exp(-x/2)
  std::vector<Element> skew;
  for (int i = 0; i < 150; ++i) skew.push_back(0);
  for (int i = 0; i < 90; ++i) skew.push_back(1);
  for (int i = 0; i < 60; ++i) skew.push_back(2);
  const auto rs = uniformity_report(skew, *z3);
  const double chi = (50.0 * 50 + 10.0 * 10 + 40.0 * 40) / 100.0;
  CHECK(rs.chi_square == doctest::Approx(chi).epsilon(1e-12));
  CHECK(rs.p_value == doctest::Approx(std::exp(-chi / 2)).epsilon(1e-9));

  // four degrees of freedom: exp(-x/2) (1 + x/2)
  const auto z5 = build_abelian({5});
  std::vector<Element> five;
  const int c5[] = {40, 35, 25, 30, 20};
  for (Element e = 0; e < 5; ++e)
    for (int i = 0; i < c5[e]; ++i) five.push_back(e);
  const auto r5 = uniformity_report(five, *z5);
  const double x5 = (100.0 + 25 + 25 + 0 + 100) / 30.0;
  CHECK(r5.chi_square == doctest::Approx(x5).epsilon(1e-12));
  CHECK(r5.p_value == doctest::Approx(std::exp(-x5 / 2) * (1 + x5 / 2)).epsilon(1e-9));
  CHECK_FALSE(r5.low_power);  // exactly 30 per element
  five.pop_back();
  CHECK(uniformity_report(five, *z5).low_power);

  const auto a5 = catalog::group("A5");
  const std::vector<Element> same(6000, 7);
  CHECK(uniformity_report(same, *a5).p_value < 1e-100);
}

TEST_CASE("A5 sampler passes chi-square at 1e-3") {
  const auto a5 = catalog::group("A5");
  WalkState s(alphabet(a5), start_tuple(*a5, 3), 2024);
  const auto samples = sample_elements(s, kDefaultBurnIn, 60000, kDefaultStride);
  const auto r = uniformity_report(samples, *a5);
  CHECK(r.degrees_of_freedom == 59);
  CHECK(r.p_value > 1e-3);
}

TEST_CASE("long walks cover a good part of N_2(A5)") {
  const auto a5 = catalog::group("A5");
  WalkState s(alphabet(a5), start_tuple(*a5, 2), 77);
  std::unordered_set<Code> seen;
  for (int i = 0; i < 1000000; ++i) {
    s.step();
    seen.insert(s.tuple().code(60));
  }
  CHECK(seen.size() > 360);
}
