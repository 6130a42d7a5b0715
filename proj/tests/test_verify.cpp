#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acgraph/abelian.hpp"
#include "acgraph/verify.hpp"
#include "acgraph/words.hpp"
#include "support.hpp"

using namespace acg;

namespace {

oracle::Components brute(const GroupPtr& g, std::size_t k, const OperatorSet& ops = {}) {
  std::vector<oracle::Auto> autos;
  for (const auto& a : ops.autos) autos.emplace_back(a.perm.begin(), a.perm.end());
  return oracle::ac_components(raw(*g), k, {g->generators().begin(), g->generators().end()}, autos);
}

const catalog::OperatorExample& example(const std::string& label) {
  static const auto all = catalog::operator_examples();
  for (const auto& ex : all)
    if (ex.label == label) return ex;
  FAIL("no operator example " << label);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("lifting examples") {
  for (const auto& name : {"S3", "Q8", "SL(2,3)"}) {
    CAPTURE(name);
    const auto g = catalog::group(name);
    const auto r = verify_lifting(g, 2, {}, name);
    CHECK(r.outcome == Outcome::Pass);
    CHECK(r.evidence["components"] == 1);
    CHECK(r.evidence["abelian_components"] == 1);
    CHECK(r.evidence["components"] == brute(g, 2).count);
    CHECK(r.evidence["vertices"] == brute(g, 2).vertices);
    CHECK_FALSE(r.counterexample.has_value());
  }
  CHECK(verify_lifting(catalog::group("Q8"), 2).evidence["abelianization_factors"] ==
        nlohmann::json::array({2, 2}));
  CHECK(verify_lifting(catalog::group("SL(2,3)"), 2).evidence["abelianization_factors"] ==
        nlohmann::json::array({3}));
  CHECK_THROWS_AS(verify_lifting(catalog::group("S3"), 1), InputError);
}

TEST_CASE("perfect examples") {
  const auto a5 = catalog::group("A5");
  const auto r = verify_perfect(a5, {}, 2, {}, "A5");
  CHECK(r.outcome == Outcome::Pass);
  CHECK(r.evidence["vertices"] == 3599);
  CHECK(r.evidence["components"] == 1);

  const auto& outer = example("A5 with the outer automorphism from S5");
  const auto ro = verify_perfect(outer.group, outer.ops, 2);
  CHECK(ro.outcome == Outcome::Pass);
  CHECK(brute(outer.group, 2, outer.ops).count == 1);

  const auto sl = verify_perfect(catalog::group("SL(2,5)"), {}, 2);
  CHECK(sl.outcome == Outcome::Pass);
  CHECK(sl.evidence["vertices"].get<std::size_t>() <= 14399);

  CHECK_THROWS_AS(verify_perfect(catalog::group("S4"), {}, 2), InputError);
  CHECK_THROWS_AS(verify_perfect(a5, {}, 1), InputError);
}

TEST_CASE("k+1 examples") {
  CHECK(verify_k_plus_one(catalog::group("S3"), {}, 2).outcome == Outcome::Pass);
  CHECK(verify_k_plus_one(catalog::group("Z6"), {}, 2).outcome == Outcome::Pass);
  const auto v4 = verify_k_plus_one(catalog::group("V4"), {}, 3);
  CHECK(v4.outcome == Outcome::Pass);
  CHECK(v4.evidence["d_normal"] == 2);
  CHECK(brute(catalog::group("V4"), 3).count == 1);
  CHECK_THROWS_AS(verify_k_plus_one(catalog::group("V4"), {}, 2), InputError);
  // with operators the normal rank can drop
  const auto& z55 = example("Z5xZ5 with coordinate swap");
  const std::size_t d = d_normal(*z55.group, z55.ops);
  CHECK(verify_k_plus_one(z55.group, z55.ops, d + 1).outcome == Outcome::Pass);
}

TEST_CASE("Akbulut-Kirby examples") {
  const auto s3 = catalog::group("S3");
  const auto r = ak_test(s3, named(*s3, "(0 1)"), named(*s3, "(0 1 2)"), 3);
  CHECK(r.outcome == Outcome::Pass);
  CHECK(r.evidence["same_component"] == true);
  CHECK(r.evidence["abelianized_determinant"] == -1);
  CHECK(r.evidence["certificate_length"].get<std::size_t>() <= 64);

  // replay the reported certificate independently
  const auto al = MoveAlphabet::with_generators(s3);
  Certificate cert;
  for (const auto& m : r.evidence["certificate"]) cert.moves.push_back(move_from_json(m));
  const auto [u, v] = akbulut_kirby(3);
  const Element xy[] = {named(*s3, "(0 1)"), named(*s3, "(0 1 2)")};
  const KTuple target{{evaluate(u, xy, *s3), evaluate(v, xy, *s3)}};
  CHECK(replay(KTuple{{xy[0], xy[1]}}, cert, al) == target);

  const auto a5 = catalog::group("A5");
  CHECK(ak_test(a5, a5->generators()[0], a5->generators()[1], 2).outcome == Outcome::Pass);
  CHECK_THROWS_AS(ak_test(s3, 0, 0, 2), InputError);
  CHECK_THROWS_AS(ak_test(s3, xy[0], xy[1], 1), InputError);
}

TEST_CASE("free-image examples") {
  for (const auto& name : {"A5", "Z4", "S3"}) {
    CAPTURE(name);
    const auto r = verify_free_image_connected(catalog::group(name), 2);
    CHECK(r.outcome == Outcome::Pass);
    CHECK(r.evidence["vacuous"] == false);
  }
  CHECK(verify_free_image_connected(catalog::group("A5"), 2).evidence["generating_tuple_components"] == 1);
  // three generators are needed for (Z/2)^3
  const auto r = verify_free_image_connected(build_abelian({2, 2, 2}), 2);
  CHECK(r.outcome == Outcome::Pass);
  CHECK(r.evidence["vacuous"] == true);
}

TEST_CASE("pullback examples") {
  CHECK(verify_pullback_normal_generation(catalog::group("A5"), 2).outcome == Outcome::Pass);
  CHECK(verify_pullback_normal_generation(catalog::group("SL(2,5)"), 2).outcome == Outcome::Pass);
  const auto triv = verify_pullback_normal_generation(build_abelian({1}), 2);
  CHECK(triv.outcome == Outcome::Pass);
  CHECK(triv.evidence["vertices"] == 1);
  CHECK_THROWS_AS(verify_pullback_normal_generation(catalog::group("S3"), 2), InputError);
}

TEST_CASE("abelian formula") {
  const auto r = verify_abelian_formula(catalog::group("Z5xZ5"), 2);
  CHECK(r.outcome == Outcome::Pass);
  CHECK(r.evidence["components"] == 2);
  CHECK(r.evidence["formula"] == 2);
  CHECK(r.evidence["vertices"] == 480);
  CHECK(r.evidence["transversal"] == true);
  CHECK(verify_abelian_formula(catalog::group("Z5xZ5"), 3).evidence["components"] == 1);
  CHECK_THROWS_AS(verify_abelian_formula(catalog::group("Z5xZ5"), 1), InputError);
}

TEST_CASE("randomised property suites") {
  for (const auto& name : {"S3", "D4", "SL(2,3)", "Z2xZ4", "A4"}) {
    CAPTURE(name);
    const auto g = catalog::group(name);
    VerifyOptions opt;
    opt.trials = 500;
    const auto m = verify_ac_modulo(g, 2, opt);
    CHECK(m.outcome == Outcome::Pass);
    CHECK(m.evidence["passed"] == m.evidence["trials"]);
    const auto e = verify_ac_extension(g, 2, opt);
    CHECK(e.outcome == Outcome::Pass);
    CHECK(e.evidence["passed"] == e.evidence["trials"]);
  }
}

TEST_CASE("structure and invariants reports") {
  const auto s = verify_structure(catalog::group("S3"), {});
  CHECK(s.outcome == Outcome::Pass);
  CHECK(s.evidence["W_order"] == 3);
  CHECK(verify_structure(catalog::group("A5"), {}).evidence["W_order"] == 1);
  CHECK(verify_structure(catalog::group("Z4"), {}).evidence["W_order"] == 2);
  for (const auto& name : {"S3", "Q8", "Z5xZ5"}) {
    CAPTURE(name);
    const auto g = catalog::group(name);
    const auto r = verify_invariants(g, {}, 2);
    CHECK(r.outcome == Outcome::Pass);
    CHECK(r.evidence["components"] == brute(g, 2).count);
  }
}

TEST_CASE("relativised search reports without a verdict") {
  const auto& z55 = example("Z5xZ5 with coordinate swap");
  const auto r = rel_conjecture_search(z55.group, z55.ops, std::nullopt);
  CHECK(r.outcome == Outcome::Info);
  CHECK(r.passed());
  CHECK(r.evidence.contains("conjecture_regime"));
  CHECK(r.evidence["components"] == brute(z55.group, r.k, z55.ops).count);
  CHECK(r.to_json(false)["outcome"] == "info");
}

TEST_CASE("full matrix passes and reports are reproducible") {
  const auto a = verify_all({}, 1);
  const auto b = verify_all({}, 2);
  REQUIRE(a.size() == b.size());
  std::size_t fails = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CAPTURE(a[i].claim);
    CAPTURE(a[i].group);
    CHECK(a[i].claim != "error");
    fails += !a[i].passed();
    CHECK(a[i].to_json(false) == b[i].to_json(false));
    CHECK_FALSE(a[i].to_json(false).contains("runtime_ms"));
  }
  CHECK(fails == 0);
}
