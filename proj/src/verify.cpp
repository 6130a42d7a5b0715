#include "acgraph/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <thread>
#include <unordered_map>

#include "acgraph/abelian.hpp"
#include "acgraph/catalog.hpp"
#include "acgraph/io.hpp"
#include "acgraph/structure.hpp"
#include "acgraph/words.hpp"

namespace acg {

using nlohmann::json;

namespace {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

VerificationReport start_report(std::string claim, const std::string& name, const FiniteGroup& g,
                                std::size_t k, const std::string& alphabet) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.group = name.empty() ? "order-" + std::to_string(g.order()) : name;
  r.group_hash = g.hash();
  r.k = k;
  r.alphabet = alphabet;
  return r;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

/// Checks that labels of tg are exactly pullbacks of labels of ta along phi.
/// Fills evidence and counterexample; returns agreement.
bool compare_with_pullback(const ComponentTable& tg, const Homomorphism& phi,
                           const ComponentTable& ta, VerificationReport& r) {
  const std::size_t n = phi.source->order(), k = tg.k();
  std::unordered_map<std::uint32_t, std::pair<std::uint32_t, Code>> g_to_a, a_to_g;
  std::vector<char> hit(ta.component_count(), 0);
  for (std::size_t p = 0; p < tg.vertex_count(); ++p) {
    const Code c = tg.codes()[p];
    const std::uint32_t gid = tg.ids()[p];
    const auto la = ta.label(project_tuple(phi, KTuple::from_code(c, n, k)));
    if (!la) {
      r.evidence["failure"] = "projection leaves N_k of the quotient";
      r.counterexample = std::pair{c, c};
      return false;
    }
    hit[*la] = 1;
    auto [ga, fresh_g] = g_to_a.emplace(gid, std::pair{*la, c});
    if (!fresh_g && ga->second.first != *la) {
      r.evidence["failure"] = "one component maps to two quotient components";
      r.counterexample = std::pair{ga->second.second, c};
      return false;
    }
    auto [ag, fresh_a] = a_to_g.emplace(*la, std::pair{gid, c});
    if (!fresh_a && ag->second.first != gid) {
      r.evidence["failure"] = "two components share a quotient component";
      r.counterexample = std::pair{ag->second.second, c};
      return false;
    }
  }
  const auto hits = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1));
  r.evidence["quotient_components_hit"] = hits;
  if (hits != ta.component_count()) {
    r.evidence["failure"] = "some quotient component has no preimage";
    return false;
  }
  return true;
}

bool generates(const FiniteGroup& g, std::span<const Element> entries) {
  return subgroup_closure(g, entries).size() == g.order();
}

Element find_named(const FiniteGroup& g, const std::string& name) {
  for (Element x = 0; x < g.order(); ++x)
    if (g.name(x) == name) return x;
  throw InputError("no element named " + name);
}

}  // namespace

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Info: return "info";
  }
  return "?";
}

json VerificationReport::to_json(bool include_runtime) const {
  json j{{"claim", claim},         {"group", group},          {"group_hash", group_hash},
         {"k", k},                 {"alphabet", alphabet},    {"engine", kEngineVersion},
         {"outcome", acg::to_string(outcome)}, {"evidence", evidence}};
  j["counterexample"] =
      counterexample ? json::array({counterexample->first, counterexample->second}) : json(nullptr);
  if (include_runtime) j["runtime_ms"] = runtime_ms;
  return j;
}

MoveAlphabet make_alphabet(const GroupPtr& g, const OperatorSet& ops, ConjugatorPolicy policy) {
  return policy == ConjugatorPolicy::All ? MoveAlphabet::with_all(g, ops)
                                         : MoveAlphabet::with_generators(g, ops);
}

VerificationReport verify_lifting(const GroupPtr& g, std::size_t k, const VerifyOptions& opt,
                                  const std::string& name) {
  Stopwatch sw;
  const std::size_t d = d_normal(*g, OperatorSet{});
  if (k < std::max<std::size_t>(d, 2))
    throw InputError("lifting check needs k >= max(d_G(G), 2) = " +
                     std::to_string(std::max<std::size_t>(d, 2)));
  const auto alphabet = make_alphabet(g, {}, opt.conjugators);
  auto r = start_report("lifting", name, *g, k, alphabet.descriptor());
  const auto tg = components(alphabet, k, opt.explore);
  const auto ab = abelianization(g);
  const AbelianComponentLabeler labeler(ab.group, k, opt.explore);
  r.evidence["vertices"] = tg.vertex_count();
  r.evidence["components"] = tg.component_count();
  r.evidence["d_normal"] = d;
  r.evidence["abelianization_order"] = ab.group->order();
  r.evidence["abelianization_factors"] = labeler.invariants().factors;
  r.evidence["abelian_components"] = labeler.count();
  if (auto m = labeler.matches_formula()) r.evidence["abelian_matches_formula"] = *m;
  const bool ok = compare_with_pullback(tg, ab.projection, labeler.table(), r);
  r.outcome = ok && labeler.matches_formula().value_or(true) ? Outcome::Pass : Outcome::Fail;
  r.runtime_ms = sw.ms();
  return r;
}

VerificationReport verify_perfect(const GroupPtr& g, const OperatorSet& ops, std::size_t k,
                                  const VerifyOptions& opt, const std::string& name) {
  Stopwatch sw;
  if (!is_perfect(*g)) throw InputError("group is not perfect");
  if (k < 2) throw InputError("perfect-group check needs k >= 2");
  const auto alphabet = make_alphabet(g, ops, opt.conjugators);
  auto r = start_report("perfect", name, *g, k, alphabet.descriptor());
  const auto t = components(alphabet, k, opt.explore);
  r.evidence["vertices"] = t.vertex_count();
  r.evidence["components"] = t.component_count();
  r.evidence["operators"] = ops.autos.size();
  r.outcome = t.component_count() == 1 ? Outcome::Pass : Outcome::Fail;
  if (t.component_count() > 1) r.counterexample = std::pair{t.rep(0), t.rep(1)};
  r.runtime_ms = sw.ms();
  return r;
}

VerificationReport verify_k_plus_one(const GroupPtr& g, const OperatorSet& ops, std::size_t k,
                                     const VerifyOptions& opt, const std::string& name) {
  Stopwatch sw;
  const std::size_t d = d_normal(*g, ops);
  if (k < d + 1) throw InputError("check needs k >= d_normal + 1 = " + std::to_string(d + 1));
  const auto alphabet = make_alphabet(g, ops, opt.conjugators);
  auto r = start_report("kplus1", name, *g, k, alphabet.descriptor());
  const auto t = components(alphabet, k, opt.explore);
  r.evidence["d_normal"] = d;
  r.evidence["vertices"] = t.vertex_count();
  r.evidence["components"] = t.component_count();
  r.evidence["operators"] = ops.autos.size();
  r.outcome = t.component_count() == 1 ? Outcome::Pass : Outcome::Fail;
  if (t.component_count() > 1) r.counterexample = std::pair{t.rep(0), t.rep(1)};
  r.runtime_ms = sw.ms();
  return r;
}

VerificationReport ak_test(const GroupPtr& g, Element x, Element y, int n,
                           const VerifyOptions& opt, const std::string& name) {
  Stopwatch sw;
  const KTuple base{{x, y}};
  if (!g->contains(x) || !g->contains(y) || !is_n_generating(base, *g, OperatorSet{}))
    throw InputError("images of x and y must normally generate the group");
  const auto [u, v] = akbulut_kirby(n);
  const std::vector<Element> images{x, y};
  const KTuple ak{{evaluate(u, images, *g), evaluate(v, images, *g)}};
  const auto alphabet = make_alphabet(g, {}, opt.conjugators);
  auto r = start_report("ak", name, *g, 2, alphabet.descriptor());
  const auto table = components(alphabet, 2, opt.explore);
  const auto lu = table.label(base), lv = table.label(ak);
  const auto res = equivalent(base, ak, alphabet, &table, 64);

  const auto au = abelianized_vector(u), av = abelianized_vector(v);
  const std::int64_t det = au[0] * av[1] - au[1] * av[0];
  r.evidence["n"] = n;
  r.evidence["u"] = to_string(u);
  r.evidence["v"] = to_string(v);
  r.evidence["xy"] = {g->name(x), g->name(y)};
  r.evidence["uv_image"] = {g->name(ak.entries[0]), g->name(ak.entries[1])};
  r.evidence["same_component"] = lu && lv && *lu == *lv;
  r.evidence["search"] = to_string(res.status);
  r.evidence["abelianized_determinant"] = det;
  if (res.certificate) {
    r.evidence["certificate_length"] = res.certificate->moves.size();
    r.evidence["certificate"] = to_json(*res.certificate);
  }
  const bool ok = lu && lv && *lu == *lv && res.status == Equivalence::Equivalent &&
                  res.certificate->moves.size() <= 64 &&
                  replay(base, *res.certificate, alphabet) == ak && det == -1;
  r.outcome = ok ? Outcome::Pass : Outcome::Fail;
  if (!ok) r.counterexample = std::pair{base.code(g->order()), ak.code(g->order())};
  r.runtime_ms = sw.ms();
  return r;
}

VerificationReport verify_free_image_connected(const GroupPtr& g, std::size_t k,
                                               const VerifyOptions& opt,
                                               const std::string& name) {
  Stopwatch sw;
  if (k < 2) throw InputError("free-image check needs k >= 2");
  const auto alphabet = make_alphabet(g, {}, opt.conjugators);
  auto r = start_report("free-image", name, *g, k, alphabet.descriptor());
  const auto t = components(alphabet, k, opt.explore);
  const std::size_t n = g->order();

  // components met by tuples that generate G as a subgroup
  std::vector<char> met(t.component_count(), 0);
  std::optional<Code> base;
  for (std::size_t p = 0; p < t.vertex_count(); ++p) {
    if (!generates(*g, KTuple::from_code(t.codes()[p], n, k).entries)) continue;
    if (!base) base = t.codes()[p];
    met[t.ids()[p]] = 1;
  }
  r.evidence["generating_tuple_components"] = std::count(met.begin(), met.end(), 1);
  r.evidence["vacuous"] = !base.has_value();
  r.outcome = Outcome::Pass;
  if (!base) {
    r.runtime_ms = sw.ms();
    return r;
  }

  // phi sends the free basis to the base tuple; images of all bases are
  // its orbit under Nielsen moves
  std::vector<MoveSpec> nielsen;
  for (const MoveSpec& m : alphabet.moves(k))
    if (m.kind != MoveKind::Conjugate) nielsen.push_back(m);
  std::unordered_map<Code, char> seen{{*base, 1}};
  std::vector<Code> queue{*base};
  const auto base_id = *t.label(*base);
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const KTuple cur = KTuple::from_code(queue[h], n, k);
    const auto id = t.label(queue[h]);
    if ((!id || *id != base_id) && r.outcome == Outcome::Pass) {
      r.outcome = Outcome::Fail;
      r.counterexample = std::pair{*base, queue[h]};
    }
    for (const MoveSpec& m : nielsen) {
      const Code c = apply_move(cur, m, alphabet).code(n);
      if (seen.emplace(c, 1).second) queue.push_back(c);
    }
  }
  r.evidence["base"] = *base;
  r.evidence["basis_images"] = queue.size();
  r.evidence["components"] = t.component_count();
  r.runtime_ms = sw.ms();
  return r;
}

VerificationReport verify_pullback_normal_generation(const GroupPtr& g, std::size_t k,
                                                     const VerifyOptions& opt,
                                                     const std::string& name) {
  Stopwatch sw;
  if (!is_perfect(*g)) throw InputError("group is not perfect");
  const auto alphabet = make_alphabet(g, {}, opt.conjugators);
  auto r = start_report("pullback", name, *g, k, alphabet.descriptor());
  const auto t = components(alphabet, k, opt.explore);
  std::vector<char> has_generating(t.component_count(), 0);
  for (std::size_t p = 0; p < t.vertex_count(); ++p)
    if (!has_generating[t.ids()[p]] &&
        generates(*g, KTuple::from_code(t.codes()[p], g->order(), k).entries))
      has_generating[t.ids()[p]] = 1;
  r.outcome = Outcome::Pass;
  for (std::uint32_t id = 0; id < has_generating.size(); ++id)
    if (!has_generating[id]) {
      r.outcome = Outcome::Fail;
      r.counterexample = std::pair{t.rep(id), t.rep(id)};
      break;
    }
  r.evidence["components"] = t.component_count();
  r.evidence["vertices"] = t.vertex_count();
  r.runtime_ms = sw.ms();
  return r;
}

VerificationReport rel_conjecture_search(const GroupPtr& g, const OperatorSet& ops,
                                         std::optional<std::size_t> k_opt,
                                         const VerifyOptions& opt, const std::string& name) {
  Stopwatch sw;
  const std::size_t d = d_normal(*g, ops);
  const std::size_t k = k_opt.value_or(std::max<std::size_t>(d, 2));
  if (k < std::max<std::size_t>(d, 1)) throw InputError("k below the normal rank");
  const auto alphabet = make_alphabet(g, ops, opt.conjugators);
  auto r = start_report("rel-conjecture", name, *g, k, alphabet.descriptor());
  const auto tg = components(alphabet, k, opt.explore);
  const auto ab = abelianization(g);
  const auto ab_alphabet =
      make_alphabet(ab.group, induced_operator(ab.projection, ops), opt.conjugators);
  const auto ta = components(ab_alphabet, k, opt.explore);
  const bool agrees = compare_with_pullback(tg, ab.projection, ta, r);
  r.outcome = Outcome::Info;
  r.evidence["d_normal"] = d;
  r.evidence["conjecture_regime"] = k == d && d >= 2;
  r.evidence["components"] = tg.component_count();
  r.evidence["abelian_components"] = ta.component_count();
  r.evidence["agrees_with_abelianization"] = agrees;
  r.runtime_ms = sw.ms();
  return r;
}

VerificationReport verify_abelian_formula(const GroupPtr& a, std::size_t k,
                                          const VerifyOptions& opt, const std::string& name) {
  Stopwatch sw;
  const AbelianComponentLabeler labeler(a, k, opt.explore);
  const auto& inv = labeler.invariants();
  auto r = start_report("abelian-count", name, *a, k, "nielsen");
  r.evidence["factors"] = inv.factors;
  r.evidence["vertices"] = labeler.table().vertex_count();
  r.evidence["components"] = labeler.count();
  const auto matches = labeler.matches_formula();
  if (!matches) throw InputError("closed formula needs k >= max(d, 2)");
  r.evidence["formula"] = dg_component_count(inv, k);
  bool ok = *matches;
  if (k == inv.rank() && k >= 2) {
    // one representative per {lambda, -lambda}
    const std::uint64_t m = inv.factors.front();
    std::vector<std::uint32_t> hit;
    json lambdas = json::array();
    for (std::uint64_t lambda = 1; lambda < std::max<std::uint64_t>(m, 2); ++lambda) {
      if (std::gcd(lambda, m) != 1 || m - lambda < lambda) continue;
      const auto id = labeler.id(dg_representative(*a, inv, lambda));
      lambdas.push_back({{"lambda", lambda}, {"component", id}});
      hit.push_back(id);
    }
    std::sort(hit.begin(), hit.end());
    const bool transversal = std::adjacent_find(hit.begin(), hit.end()) == hit.end() &&
                             hit.size() == labeler.count();
    r.evidence["representatives"] = lambdas;
    r.evidence["transversal"] = transversal;
    ok = ok && transversal;
  }
  r.outcome = ok ? Outcome::Pass : Outcome::Fail;
  r.runtime_ms = sw.ms();
  return r;
}

VerificationReport verify_ac_modulo(const GroupPtr& g, std::size_t k, const VerifyOptions& opt,
                                    const std::string& name) {
  Stopwatch sw;
  const auto alphabet = make_alphabet(g, {}, opt.conjugators);
  auto r = start_report("ac-modulo", name, *g, k, alphabet.descriptor());
  std::vector<Quotient> maps{abelianization(g)};
  const ElementSet z = center(*g);
  if (z.size() > 1 && z.size() < g->order()) maps.push_back(quotient(g, z));
  std::mt19937_64 rng(opt.seed);
  const auto moves = alphabet.moves(k);
  std::size_t passed = 0;
  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    const auto& q = maps[trial % maps.size()];
    KTuple u{std::vector<Element>(k)};
    for (auto& e : u.entries) e = static_cast<Element>(draw(rng, g->order()));
    Certificate cert;
    const std::size_t len = 1 + draw(rng, 32);
    for (std::size_t s = 0; s < len; ++s) cert.moves.push_back(moves[draw(rng, moves.size())]);
    const KTuple v = replay(u, cert, alphabet);
    if (lift_equivalence_check(q.projection, u, v, cert, alphabet)) {
      ++passed;
    } else if (!r.counterexample) {
      r.counterexample = std::pair{u.code(g->order()), v.code(g->order())};
    }
  }
  r.evidence["trials"] = opt.trials;
  r.evidence["passed"] = passed;
  r.evidence["quotients"] = maps.size();
  r.outcome = passed == opt.trials ? Outcome::Pass : Outcome::Fail;
  r.runtime_ms = sw.ms();
  return r;
}

VerificationReport verify_ac_extension(const GroupPtr& g, std::size_t k, const VerifyOptions& opt,
                                       const std::string& name) {
  Stopwatch sw;
  const auto alphabet = make_alphabet(g, {}, opt.conjugators);
  auto r = start_report("ac-extension", name, *g, k, alphabet.descriptor());
  const auto table = components(alphabet, k, opt.explore);
  NormalClosureOracle oracle(*g, {});
  std::map<NormalClosureOracle::Id, ElementSet> members;
  std::mt19937_64 rng(opt.seed);
  std::size_t passed = 0;
  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    const Code c = table.codes()[draw(rng, table.vertex_count())];
    KTuple w = KTuple::from_code(c, g->order(), k);
    const std::size_t i = draw(rng, k);
    std::vector<Element> others;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) others.push_back(w.entries[j]);
    const auto id = oracle.of_elements(others);
    auto it = members.find(id);
    if (it == members.end()) it = members.emplace(id, oracle.members(id)).first;
    const Element h = it->second[draw(rng, it->second.size())];
    w.entries[i] = g->mul(w.entries[i], h);
    const auto lw = table.label(w);
    if (lw && *lw == *table.label(c)) {
      ++passed;
    } else if (!r.counterexample) {
      r.counterexample = std::pair{c, w.code(g->order())};
    }
  }
  r.evidence["trials"] = opt.trials;
  r.evidence["passed"] = passed;
  r.outcome = passed == opt.trials ? Outcome::Pass : Outcome::Fail;
  r.runtime_ms = sw.ms();
  return r;
}

VerificationReport verify_structure(const GroupPtr& g, const OperatorSet& ops,
                                    const VerifyOptions& opt, const std::string& name) {
  Stopwatch sw;
  auto r = start_report("structure", name, *g, 0, "ops:" + std::to_string(ops.autos.size()));
  const std::size_t n = g->order();
  bool ok = true;
  auto fail = [&](const std::string& why) {
    if (ok) r.evidence["failure"] = why;
    ok = false;
  };

  const ElementSet w = n_frattini(g, ops, opt.structure_cap);
  const ElementSet non_gen = non_n_generating_elements(g, ops, opt.structure_cap);
  r.evidence["W_order"] = w.size();
  if (w != non_gen) fail("non-N-generating elements differ from W(G)");

  const auto dec = semisimple_decompose(g, ops, opt.structure_cap);
  const auto dec2 = semisimple_decompose(g, ops, opt.structure_cap, opt.seed);
  r.evidence["quotient_order"] = dec.quotient.group->order();
  r.evidence["factors"] = dec.factor_orders();
  if (dec.factor_orders() != dec2.factor_orders()) fail("decomposition not unique up to order");
  std::size_t product = 1;
  for (auto o : dec.factor_orders()) product *= o;
  if (product != dec.quotient.group->order()) fail("factor orders do not multiply out");

  // N_k membership is decided modulo W(G)
  NormalClosureOracle og(*g, ops);
  NormalClosureOracle oq(*dec.quotient.group, dec.quotient_ops);
  const auto& proj = dec.quotient.projection;
  std::mt19937_64 rng(opt.seed);
  const bool exhaustive = n * n <= 20000;
  const std::size_t pairs = exhaustive ? n * n : opt.trials;
  std::size_t support_checks = 0;
  for (std::size_t t = 0; t < pairs; ++t) {
    const Element a = exhaustive ? static_cast<Element>(t / n) : static_cast<Element>(draw(rng, n));
    const Element b = exhaustive ? static_cast<Element>(t % n) : static_cast<Element>(draw(rng, n));
    const bool in_g = og.is_full(og.join(og.of_element(a), og.of_element(b)));
    const bool in_q = oq.is_full(oq.join(oq.of_element(proj(a)), oq.of_element(proj(b))));
    if (in_g != in_q) {
      fail("normal generation not decided modulo W(G)");
      r.counterexample = std::pair{Code{a} + Code{b} * n, Code{a} + Code{b} * n};
    }
    if (dec.perfect) {
      const Element pair[] = {a, b};
      ++support_checks;
      if (perfect_generation_criterion(dec, pair) != in_g) fail("support criterion disagrees");
    }
  }
  r.evidence["generation_pairs_checked"] = pairs;

  bool all_nonabelian = std::none_of(dec.factor_abelian.begin(), dec.factor_abelian.end(),
                                     [](bool b) { return b; });
  if (dec.perfect != all_nonabelian) fail("perfectness does not match non-abelian factors");
  if (dec.perfect) {
    // normal closure of x in the quotient contains every factor in its support
    const FiniteGroup& q = *dec.quotient.group;
    for (Element x = 0; x < q.order(); ++x) {
      const Element one[] = {x};
      const ElementSet cl = normal_closure(q, dec.quotient_ops, one);
      for (std::size_t i = 0; i < dec.size(); ++i)
        if (dec.components[x][i] != FiniteGroup::identity &&
            !std::includes(cl.begin(), cl.end(), dec.factors[i].begin(), dec.factors[i].end()))
          fail("normal closure misses a factor in the support");
    }
    r.evidence["support_checks"] = support_checks;
  }

  const std::size_t d = d_normal(*g, ops);
  r.evidence["d_normal"] = d;
  const auto formula = d_normal_formula(g, ops, opt.structure_cap);
  r.evidence["d_formula_applicable"] = formula.has_value();
  if (formula) {
    r.evidence["d_formula"] = *formula;
    if (*formula != d) fail("normal-rank formula disagrees with brute force");
  }
  r.outcome = ok ? Outcome::Pass : Outcome::Fail;
  r.runtime_ms = sw.ms();
  return r;
}

VerificationReport verify_invariants(const GroupPtr& g, const OperatorSet& ops, std::size_t k,
                                     const VerifyOptions& opt, const std::string& name) {
  Stopwatch sw;
  const auto gens = MoveAlphabet::with_generators(g, ops);
  const auto all = MoveAlphabet::with_all(g, ops);
  auto r = start_report("invariants", name, *g, k, gens.descriptor());
  bool ok = true;
  auto fail = [&](const std::string& why) {
    if (ok) r.evidence["failure"] = why;
    ok = false;
  };
  // components() itself throws if a move leaves N_k
  const auto t_gens = components(gens, k, opt.explore);
  const auto t_all = components(all, k, opt.explore);
  if (!(t_gens == t_all)) fail("partition depends on the conjugator set");

  std::mt19937_64 rng(opt.seed);
  const auto moves = all.moves(k);
  const std::size_t n = g->order();
  const std::size_t samples = std::min<std::size_t>(t_all.vertex_count(), 500);
  for (std::size_t s = 0; s < samples; ++s) {
    const KTuple t = KTuple::from_code(t_all.codes()[draw(rng, t_all.vertex_count())], n, k);
    for (const MoveSpec& m : moves) {
      const KTuple img = apply_move(t, m, all);
      if (apply_move(img, all.inverse(m), all) != t) fail("move not reversible");
      if (!t_all.label(img) || *t_all.label(img) != *t_all.label(t)) fail("move leaves component");
    }
  }
  std::size_t certified = 0, inconclusive = 0;
  for (std::size_t s = 0; s < 20 && t_gens.vertex_count() > 0; ++s) {
    const KTuple u = KTuple::from_code(t_gens.codes()[draw(rng, t_gens.vertex_count())], n, k);
    KTuple v = u;
    for (int step = 0; step < 8; ++step) v = apply_move(v, moves[draw(rng, moves.size())], all);
    const auto res = equivalent(u, v, gens, &t_gens, 64);
    if (res.status == Equivalence::Equivalent) {
      if (replay(u, *res.certificate, gens) != v) fail("certificate does not replay");
      ++certified;
    } else if (res.status == Equivalence::Different) {
      fail("equivalent tuples reported different");
    } else {
      ++inconclusive;
    }
  }
  r.evidence["vertices"] = t_all.vertex_count();
  r.evidence["components"] = t_all.component_count();
  r.evidence["sampled_vertices"] = samples;
  r.evidence["certificates"] = certified;
  r.evidence["inconclusive"] = inconclusive;
  r.outcome = ok ? Outcome::Pass : Outcome::Fail;
  r.runtime_ms = sw.ms();
  return r;
}

std::vector<VerificationReport> verify_all(const VerifyOptions& opt, unsigned threads) {
  std::vector<std::function<VerificationReport()>> claims;
  for (const auto& name : catalog::default_matrix()) {
    claims.push_back([name, opt] {
      const GroupPtr g = catalog::group(name);
      return verify_structure(g, {}, opt, name);
    });
    claims.push_back([name, opt] {
      const GroupPtr g = catalog::group(name);
      return verify_k_plus_one(g, {}, d_normal(*g, {}) + 1, opt, name);
    });
    claims.push_back([name, opt] {
      return verify_invariants(catalog::group(name), {}, 2, opt, name);
    });
    claims.push_back([name, opt] {
      return verify_free_image_connected(catalog::group(name), 2, opt, name);
    });
    claims.push_back([name, opt] { return verify_ac_modulo(catalog::group(name), 2, opt, name); });
    claims.push_back([name, opt] { return verify_ac_extension(catalog::group(name), 2, opt, name); });
    const GroupPtr probe = catalog::group(name);
    const std::size_t d = d_normal(*probe, {});
    if (probe->is_abelian()) {
      for (std::size_t k : {std::max<std::size_t>(d, 2), d + 1})
        if (k >= 2 && k <= 3)
          claims.push_back([name, opt, k] {
            return verify_abelian_formula(catalog::group(name), k, opt, name);
          });
    } else {
      claims.push_back([name, opt, d] {
        return verify_lifting(catalog::group(name), std::max<std::size_t>(d, 2), opt, name);
      });
      const std::uint64_t n = probe->order();
      if (std::max<std::size_t>(d, 2) < 3 && n * n * n <= opt.k3_limit)
        claims.push_back([name, opt] { return verify_lifting(catalog::group(name), 3, opt, name); });
    }
    if (is_perfect(*probe) && probe->order() > 1) {
      claims.push_back([name, opt] { return verify_perfect(catalog::group(name), {}, 2, opt, name); });
      claims.push_back([name, opt] {
        return verify_pullback_normal_generation(catalog::group(name), 2, opt, name);
      });
    }
  }
  for (int n : {2, 3, 4}) {
    claims.push_back([n, opt] {
      const GroupPtr g = catalog::group("S3");
      return ak_test(g, find_named(*g, "(0 1)"), find_named(*g, "(0 1 2)"), n, opt, "S3");
    });
    claims.push_back([n, opt] {
      const GroupPtr g = catalog::group("A5");
      return ak_test(g, g->generators()[0], g->generators()[1], n, opt, "A5");
    });
  }
  claims.push_back([opt] {
    const GroupPtr a5 = catalog::group("A5");
    const OperatorSet outer{{catalog::conjugation_automorphism(*a5, {1, 0, 2, 3, 4})}};
    return verify_perfect(a5, outer, 2, opt, "A5 with outer automorphism");
  });
  claims.push_back([opt] {
    const GroupPtr s5 = catalog::group("S5");
    const auto a5 = subgroup_as_group(s5, commutator_subgroup(*s5));
    return verify_perfect(a5.group, conjugation_operator(a5), 2, opt, "A5 normal in S5");
  });
  claims.push_back([opt] {
    const GroupPtr s4 = catalog::group("S4");
    const auto a4 = subgroup_as_group(s4, commutator_subgroup(*s4));
    const OperatorSet ops = conjugation_operator(a4);
    return verify_k_plus_one(a4.group, ops, d_normal(*a4.group, ops) + 1, opt, "A4 normal in S4");
  });

  std::vector<VerificationReport> reports(claims.size());
  auto run = [&](std::size_t i) {
    try {
      reports[i] = claims[i]();
    } catch (const std::exception& e) {
      reports[i].claim = "error";
      reports[i].outcome = Outcome::Fail;
      reports[i].evidence["error"] = e.what();
    }
  };
  if (threads <= 1) {
    for (std::size_t i = 0; i < claims.size(); ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < claims.size();) run(i);
      });
    for (auto& th : pool) th.join();
  }
  return reports;
}

}  // namespace acg
