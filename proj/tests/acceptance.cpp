// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "acgraph/abelian.hpp"
#include "acgraph/blackbox.hpp"
#include "acgraph/catalog.hpp"
#include "acgraph/io.hpp"
#include "acgraph/structure.hpp"
#include "acgraph/verify.hpp"
#include "acgraph/words.hpp"

using namespace acg;

namespace {

// wall-clock bounds per criterion, seconds
constexpr double kLimit1 = 1.0;
constexpr double kLimit2 = 10.0;
constexpr double kLimit3 = 60.0;
constexpr double kLimit4 = 300.0;
constexpr double kChiAlpha = 1e-3;
constexpr std::size_t kPropertyTrials = 10000;
constexpr std::size_t kMaxCertificate = 64;

struct Check {
  bool ok = true;
  std::ostringstream why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

std::size_t abelian_rank(const FiniteGroup& g) { return invariant_factors(g).rank(); }

Element named(const FiniteGroup& g, const std::string& name) {
  for (Element e = 0; e < g.order(); ++e)
    if (g.name(e) == name) return e;
  throw std::logic_error("no element " + name);
}

bool same_set(const ElementSet& s, std::vector<Element> want) {
  std::sort(want.begin(), want.end());
  return std::vector<Element>(s.begin(), s.end()) == want;
}

void c1(Check& c, std::string& note) {
  const auto g = catalog::group("Z5xZ5");
  const auto t = components(MoveAlphabet::with_generators(g), 2);
  c.require(t.component_count() == 2, "component count");
  c.require(t.vertex_count() == 480, "vertex count");
  const AbelianComponentLabeler lab(g, 2);
  c.require(lab.count() == 2 && lab.matches_formula() == true, "abelian-components");
  const auto& inv = lab.invariants();
  const auto r1 = dg_representative(*g, inv, 1), r2 = dg_representative(*g, inv, 2),
             r4 = dg_representative(*g, inv, 4);
  c.require(t.label(r1) != t.label(r2), "lambda 1 and 2 together");
  c.require(t.label(r1) == t.label(r4), "lambda 1 and 4 apart");
  note = "2 components over 480 vertices";
}

void c2(Check& c, std::string& note) {
  std::size_t checked = 0;
  for (const auto& name : catalog::default_matrix()) {
    const auto g = catalog::group(name);
    if (!g->is_abelian()) continue;
    const std::size_t k = abelian_rank(*g) + 1;
    if (k > 3) continue;
    const auto t = components(MoveAlphabet::with_generators(g), k);
    c.require(t.component_count() == 1, name + " not connected");
    ++checked;
  }
  note = std::to_string(checked) + " abelian groups connected at k = d+1";
}

void c3(Check& c, std::string& note) {
  const auto a5 = components(MoveAlphabet::with_generators(catalog::group("A5")), 2);
  const auto sl = components(MoveAlphabet::with_generators(catalog::group("SL(2,5)")), 2);
  c.require(a5.component_count() == 1 && a5.vertex_count() == 3599, "A5");
  c.require(sl.component_count() == 1 && sl.vertex_count() <= 14399, "SL(2,5)");
  note = "A5 " + std::to_string(a5.vertex_count()) + " vertices, SL(2,5) " +
         std::to_string(sl.vertex_count()) + " vertices, one component each";
}

void c4(Check& c, std::string& note) {
  const VerifyOptions opt;
  std::size_t runs = 0;
  for (const auto& name : catalog::default_matrix()) {
    const auto g = catalog::group(name);
    if (g->is_abelian()) continue;
    for (std::size_t k : {2, 3}) {
      const std::uint64_t n = g->order();
      if (k == 3 && n * n * n > opt.k3_limit) continue;
      const auto r = verify_lifting(g, k, opt, name);
      c.require(r.outcome == Outcome::Pass, name + " k=" + std::to_string(k));
      ++runs;
    }
  }
  note = std::to_string(runs) + " lifting checks";
}

void c5(Check& c, std::string& note) {
  std::size_t runs = 0;
  for (const auto& name : catalog::default_matrix()) {
    const auto g = catalog::group(name);
    const std::size_t k = d_normal(*g, {}) + 1;
    const auto r = verify_k_plus_one(g, {}, k, {}, name);
    c.require(r.outcome == Outcome::Pass, name);
    ++runs;
  }
  note = std::to_string(runs) + " groups connected at d_normal + 1";
}

void c6(Check& c, std::string& note) {
  std::size_t longest = 0;
  const auto s3 = catalog::group("S3"), a5 = catalog::group("A5");
  const std::pair<GroupPtr, std::pair<Element, Element>> cases[] = {
      {s3, {named(*s3, "(0 1)"), named(*s3, "(0 1 2)")}},
      {a5, {a5->generators()[0], a5->generators()[1]}}};
  for (const auto& [g, xy] : cases) {
    const auto al = MoveAlphabet::with_generators(g);
    for (int n = 2; n <= 4; ++n) {
      const auto r = ak_test(g, xy.first, xy.second, n);
      const std::string tag = std::to_string(g->order()) + "/n=" + std::to_string(n);
      c.require(r.outcome == Outcome::Pass, "ak " + tag);
      if (r.outcome != Outcome::Pass) continue;
      Certificate cert;
      for (const auto& m : r.evidence["certificate"]) cert.moves.push_back(move_from_json(m));
      longest = std::max(longest, cert.moves.size());
      c.require(cert.moves.size() <= kMaxCertificate, "certificate too long " + tag);
      const auto [u, v] = akbulut_kirby(n);
      const Element img[] = {xy.first, xy.second};
      const KTuple target{{evaluate(u, img, *g), evaluate(v, img, *g)}};
      c.require(replay(KTuple{{xy.first, xy.second}}, cert, al) == target, "replay " + tag);
    }
  }
  note = "6 pairs, longest certificate " + std::to_string(longest) + " moves";
}

void c7(Check& c, std::string& note) {
  const VerifyOptions opt;
  const auto s3 = catalog::group("S3"), a5 = catalog::group("A5"), z4 = catalog::group("Z4");
  const Element r = named(*s3, "(0 1 2)");
  c.require(same_set(n_frattini(s3, {}), {0, r, s3->mul(r, r)}), "W(S3)");
  c.require(same_set(n_frattini(a5, {}), {0}), "W(A5)");
  c.require(same_set(n_frattini(z4, {}), {0, 2}), "W(Z4)");

  std::size_t structure_runs = 0;
  for (const auto& name : catalog::default_matrix()) {
    const auto g = catalog::group(name);
    const auto rep = verify_structure(g, {}, opt, name);
    c.require(rep.outcome == Outcome::Pass, "structure " + name);
    ++structure_runs;
    const bool formula_expected = name == "A5" || name == "A5xZ2" || g->is_abelian();
    if (formula_expected) {
      c.require(rep.evidence["d_formula_applicable"] == true, "formula n/a on " + name);
      c.require(rep.evidence.value("d_formula", -1) == rep.evidence["d_normal"], "formula " + name);
    }
  }
  const auto a5a5 = catalog::group("A5xA5", {4096, 128});
  VerifyOptions wide = opt;
  wide.structure_cap = 4096;
  const auto big = verify_structure(a5a5, {}, wide, "A5xA5");
  c.require(big.outcome == Outcome::Pass, "structure A5xA5");
  c.require(big.evidence["factors"] == nlohmann::json::array({60, 60}), "A5xA5 factors");
  note = std::to_string(structure_runs) + " matrix groups plus A5xA5";
}

void c8(Check& c, std::string& note) {
  std::vector<GroupPtr> groups;
  for (const auto& name : catalog::default_matrix()) {
    const auto g = catalog::group(name);
    if (g->order() <= 60) groups.push_back(g);
  }
  VerifyOptions opt;
  opt.trials = (kPropertyTrials + groups.size() - 1) / groups.size();
  std::size_t mod = 0, ext = 0;
  for (const auto& g : groups) {
    const std::size_t k = std::max<std::size_t>(2, d_normal(*g, {}));
    const auto a = verify_ac_modulo(g, k, opt);
    const auto b = verify_ac_extension(g, k, opt);
    c.require(a.outcome == Outcome::Pass, "modulo on order " + std::to_string(g->order()));
    c.require(b.outcome == Outcome::Pass, "extension on order " + std::to_string(g->order()));
    mod += a.evidence["passed"].get<std::size_t>();
    ext += b.evidence["passed"].get<std::size_t>();
  }
  c.require(mod >= kPropertyTrials && ext >= kPropertyTrials, "too few trials");
  note = std::to_string(mod) + " projection replays, " + std::to_string(ext) + " extension checks";
}

void c9(Check& c, std::string& note) {
  const auto a5 = catalog::group("A5");
  const auto al = std::make_shared<const MoveAlphabet>(MoveAlphabet::with_generators(a5));
  const KTuple start{{a5->generators()[0], a5->generators()[1], 0}};
  auto run = [&] {
    WalkState s(al, start, 20240601);
    return sample_elements(s, 1000, 60000, 10);
  };
  const auto x = run(), y = run();
  const bool identical = x.size() == y.size() &&
                         std::memcmp(x.data(), y.data(), x.size() * sizeof(Element)) == 0;
  c.require(identical, "streams differ");
  const auto rep = uniformity_report(x, *a5);
  c.require(rep.p_value > kChiAlpha, "chi-square p too small");
  char buf[96];
  std::snprintf(buf, sizeof buf, "chi2 %.2f on %zu dof, p = %.4f", rep.chi_square,
                rep.degrees_of_freedom, rep.p_value);
  note = buf;
}

void c10(Check& c, std::string& note) {
  std::size_t runs = 0;
  for (const auto& name : catalog::default_matrix()) {
    const auto g = catalog::group(name);
    const std::size_t d = d_normal(*g, {});
    for (std::size_t k : {std::size_t{2}, d + 1}) {
      if (k < std::max<std::size_t>(d, 1)) continue;
      std::uint64_t space = 1;
      for (std::size_t i = 0; i < k; ++i) space *= g->order();
      if (space > ExploreOptions{}.budget) continue;
      const auto r = verify_invariants(g, {}, k, {}, name);
      c.require(r.outcome == Outcome::Pass, name + " k=" + std::to_string(k));
      ++runs;
      if (k == d + 1) break;
    }
  }
  for (const auto& ex : catalog::operator_examples()) {
    const std::size_t k = std::max<std::size_t>(2, d_normal(*ex.group, ex.ops));
    const auto r = verify_invariants(ex.group, ex.ops, k, {}, ex.label);
    c.require(r.outcome == Outcome::Pass, ex.label);
    ++runs;
  }
  const auto all = verify_all();
  std::size_t fails = 0;
  for (const auto& r : all) fails += !r.passed();
  c.require(fails == 0, std::to_string(fails) + " failures in the full matrix");
  note = std::to_string(runs) + " invariant suites, " + std::to_string(all.size()) +
         " matrix reports, " + std::to_string(fails) + " failures";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit;
    std::function<void(Check&, std::string&)> body;
  };
  const Criterion criteria[] = {
      {1, "abelian count for Z5xZ5, k=2", kLimit1, c1},
      {2, "abelian groups connected at k=d+1", kLimit2, c2},
      {3, "A5 and SL(2,5) connected at k=2", kLimit3, c3},
      {4, "components lift from the abelianisation", kLimit4, c4},
      {5, "connected at k = d_normal + 1", 0, c5},
      {6, "Akbulut-Kirby pairs share a component", 0, c6},
      {7, "structure suite", 0, c7},
      {8, "projection and extension property suites", 0, c8},
      {9, "sampler uniformity and reproducibility", 0, c9},
      {10, "invariant suites over the matrix", 0, c10},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    std::string note;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(c, note);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.limit > 0 && secs >= cr.limit) {
      std::ostringstream w;
      w << "took " << secs << " s, limit " << cr.limit << " s";
      c.require(false, w.str());
    }
    char head[64];
    std::snprintf(head, sizeof head, "criterion %2d %s (%.2f s)", cr.id, c.ok ? "PASS" : "FAIL", secs);
    std::cout << head << "  " << cr.title << ": " << (c.ok ? note : c.why.str()) << std::endl;
    failed += !c.ok;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << 10 - failed << "/10" << std::endl;
  return failed ? 1 : 0;
}
