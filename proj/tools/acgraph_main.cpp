// acgraph command-line front end.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "acgraph/abelian.hpp"
#include "acgraph/ac_graph.hpp"
#include "acgraph/blackbox.hpp"
#include "acgraph/catalog.hpp"
#include "acgraph/io.hpp"
#include "acgraph/structure.hpp"
#include "acgraph/verify.hpp"
#include "acgraph/words.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace acg;

namespace {

struct RunConfig {
  std::uint64_t budget = std::uint64_t{1} << 28;
  std::size_t structure_cap = kDefaultStructureCap;
  std::size_t max_order = GroupLimits{}.max_order;
  std::size_t check_bound = GroupLimits{}.exhaustive_check_bound;
  std::uint64_t seed = 1;
  bool seed_given = false;
  unsigned threads = 1;
  bool compact = false;
  bool no_timing = false;
  std::string cache_dir;
  std::string conjugators = "gens";

  GroupLimits limits() const { return {max_order, check_bound}; }
  ExploreOptions explore() const { return {budget, threads}; }
  ConjugatorPolicy policy() const {
    return conjugators == "all" ? ConjugatorPolicy::All : ConjugatorPolicy::Generators;
  }
  VerifyOptions verify() const {
    VerifyOptions o;
    o.explore = explore();
    o.conjugators = policy();
    o.seed = seed;
    o.structure_cap = structure_cap;
    return o;
  }
};

void print(const json& j, const RunConfig& cfg) {
  std::cout << (cfg.compact ? j.dump() : j.dump(2)) << '\n';
}

/// A file path, or failing that a catalog name.
GroupPtr load_group(const std::string& arg, const RunConfig& cfg, std::string* name = nullptr) {
  if (fs::exists(arg)) {
    const GroupSpec s = read_group_spec(arg);
    if (name) *name = s.name.empty() ? fs::path(arg).stem().string() : s.name;
    return s.build(cfg.limits());
  }
  if (name) *name = arg;
  try {
    return catalog::group(arg, cfg.limits());
  } catch (const InputError&) {
    throw InputError("no group file or catalog group named '" + arg + "'");
  }
}

OperatorSet load_autos(const std::string& path, const FiniteGroup& g) {
  return path.empty() ? OperatorSet{} : parse_autos_file(path, g);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, sep);) out.push_back(tok);
  return out;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

/// One integer: a tuple code. Comma separated integers: element indices.
/// Otherwise comma separated words in the group's generators.
KTuple parse_tuple(const std::string& text, const FiniteGroup& g, std::size_t k) {
  const auto parts = split(text, ',');
  if (parts.size() == 1 && all_digits(parts[0])) {
    const Code c = std::stoull(parts[0]);
    if (c >= tuple_space_size(g.order(), k)) throw InputError("tuple code out of range");
    return KTuple::from_code(c, g.order(), k);
  }
  if (parts.size() != k) throw InputError("expected " + std::to_string(k) + " entries in '" + text + "'");
  KTuple t;
  for (const auto& p : parts) {
    if (all_digits(p)) {
      const auto e = std::stoull(p);
      if (e >= g.order()) throw InputError("element index out of range: " + p);
      t.entries.push_back(static_cast<Element>(e));
    } else {
      const auto& gens = g.generators();
      t.entries.push_back(evaluate(parse_word(p, static_cast<std::uint32_t>(gens.size())), gens, g));
    }
  }
  return t;
}

json tuple_json(const KTuple& t, const FiniteGroup& g) {
  json j = json::array();
  for (Element e : t.entries) j.push_back(g.has_names() ? json(g.name(e)) : json(e));
  return j;
}

std::string cache_path(const RunConfig& cfg, const FiniteGroup& g, std::size_t k,
                       const MoveAlphabet& alphabet) {
  const auto d = alphabet.descriptor();
  const auto tag = std::to_string(std::hash<std::string>{}(d));
  return (fs::path(cfg.cache_dir) / (g.hash().substr(0, 16) + "-k" + std::to_string(k) + "-" + tag + ".tbl"))
      .string();
}

ComponentTable cached_components(const RunConfig& cfg, const FiniteGroup& g,
                                 const MoveAlphabet& alphabet, std::size_t k) {
  if (cfg.cache_dir.empty()) return components(alphabet, k, cfg.explore());
  fs::create_directories(cfg.cache_dir);
  const auto path = cache_path(cfg, g, k, alphabet);
  if (fs::exists(path)) return load_component_table(path, g, alphabet);
  auto table = components(alphabet, k, cfg.explore());
  save_component_table(path, table, g, alphabet);
  return table;
}

int emit_reports(const std::vector<VerificationReport>& reports, const RunConfig& cfg) {
  json arr = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    arr.push_back(r.to_json(!cfg.no_timing));
    ok = ok && r.passed();
  }
  print(arr, cfg);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AC-graphs of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;

  app.add_option("--budget", cfg.budget, "Largest raw tuple space n^k to explore")->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", cfg.seed, "Random seed (default 1)");
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.compact, "Compact single-line JSON output");
  app.add_option("--cache", cfg.cache_dir, "Directory for persisted component tables");
  app.add_option("--structure-cap", cfg.structure_cap, "Largest order for lattice computations")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-order", cfg.max_order, "Largest accepted group order")->check(CLI::PositiveNumber);
  app.add_option("--check-bound", cfg.check_bound, "Exhaustive associativity check bound")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", cfg.no_timing, "Omit runtimes from reports");
  app.add_option("--conjugators", cfg.conjugators, "Conjugator set S: gens or all")
      ->check(CLI::IsMember({"gens", "all"}));

  std::string group_arg, autos_path, dot_path, u_text, v_text, report_path, out_dir, claim;
  std::size_t k = 2;
  int n = 2;
  std::int64_t x_img = -1, y_img = -1;
  std::uint64_t burn_in = kDefaultBurnIn, count = 1000, stride = kDefaultStride;
  bool search = false;

  auto* c_components = app.add_subcommand("components", "Component table of the AC-graph");
  c_components->add_option("group", group_arg, "Group file or catalog name")->required();
  c_components->add_option("-k", k, "Tuple length")->required();
  c_components->add_option("--autos", autos_path, "Automorphism file");
  c_components->add_option("--dot", dot_path, "Also write the graph in DOT format");

  auto* c_equiv = app.add_subcommand("equiv", "Search for a move sequence between two tuples");
  c_equiv->add_option("group", group_arg)->required();
  c_equiv->add_option("-k", k)->required();
  c_equiv->add_option("--u", u_text, "Code, element indices, or words")->required();
  c_equiv->add_option("--v", v_text, "Code, element indices, or words")->required();
  c_equiv->add_option("--autos", autos_path);

  auto* c_abelian = app.add_subcommand("abelian-components", "Components for an abelian group");
  c_abelian->add_option("group", group_arg)->required();
  c_abelian->add_option("-k", k)->required();

  auto* c_structure = app.add_subcommand("structure", "N-Frattini subgroup and semisimple quotient");
  c_structure->add_option("group", group_arg)->required();
  c_structure->add_option("--autos", autos_path);

  auto* c_sample = app.add_subcommand("sample", "Product-replacement sampler");
  c_sample->add_option("group", group_arg)->required();
  c_sample->add_option("-k", k)->required();
  c_sample->add_option("--burn-in", burn_in);
  c_sample->add_option("--count", count)->check(CLI::PositiveNumber);
  c_sample->add_option("--stride", stride);
  c_sample->add_option("--autos", autos_path);
  c_sample->add_option("--report", report_path, "Uniformity report file (default stderr)");

  auto* c_verify = app.add_subcommand("verify", "Run verification checks");
  c_verify->add_option("claim", claim, "all|lifting|perfect|kplus1|ak|free-image|pullback|rel-conjecture")
      ->required()
      ->check(CLI::IsMember({"all", "lifting", "perfect", "kplus1", "ak", "free-image", "pullback",
                             "rel-conjecture"}));
  c_verify->add_option("group", group_arg);
  auto* k_opt = c_verify->add_option("-k", k);
  c_verify->add_option("--autos", autos_path);
  c_verify->add_option("-n", n, "Akbulut-Kirby parameter");
  c_verify->add_option("--x", x_img, "Image of x (element index)");
  c_verify->add_option("--y", y_img, "Image of y (element index)");
  c_verify->add_flag("--search", search, "Required for rel-conjecture");

  auto* c_ak = app.add_subcommand("ak", "Akbulut-Kirby finite-quotient test");
  c_ak->add_option("group", group_arg)->required();
  c_ak->add_option("-n", n)->required();
  c_ak->add_option("--x", x_img);
  c_ak->add_option("--y", y_img);

  auto* c_dot = app.add_subcommand("dot", "Write the AC-graph in DOT format");
  c_dot->add_option("group", group_arg)->required();
  c_dot->add_option("-k", k)->required();
  c_dot->add_option("--autos", autos_path);
  c_dot->add_option("-o,--out", dot_path, "Output file (default stdout)");

  auto* c_catalog = app.add_subcommand("catalog", "List or export the built-in groups");
  c_catalog->add_option("--out", out_dir, "Write one group file per catalog entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  cfg.seed_given = seed_opt->count() > 0;

  try {
    if (*c_components) {
      const auto g = load_group(group_arg, cfg);
      const auto alphabet = make_alphabet(g, load_autos(autos_path, *g), cfg.policy());
      const auto table = cached_components(cfg, *g, alphabet, k);
      if (!dot_path.empty()) emit_dot(table, alphabet, dot_path);
      print({{"vertex_count", table.vertex_count()},
             {"component_count", table.component_count()},
             {"reps", table.reps()},
             {"component_sizes", table.component_sizes()},
             {"group_hash", g->hash()},
             {"alphabet", alphabet.descriptor()}},
            cfg);
      return 0;
    }
    if (*c_equiv) {
      const auto g = load_group(group_arg, cfg);
      const auto alphabet = make_alphabet(g, load_autos(autos_path, *g), cfg.policy());
      const KTuple u = parse_tuple(u_text, *g, k), v = parse_tuple(v_text, *g, k);
      std::optional<ComponentTable> table;
      if (tuple_space_size(g->order(), k) <= cfg.budget) table = cached_components(cfg, *g, alphabet, k);
      const auto res = equivalent(u, v, alphabet, table ? &*table : nullptr, 64);
      json j{{"equivalent", res.status == Equivalence::Equivalent},
             {"status", to_string(res.status)},
             {"u", {{"code", u.code(g->order())}, {"entries", tuple_json(u, *g)}}},
             {"v", {{"code", v.code(g->order())}, {"entries", tuple_json(v, *g)}}}};
      j["certificate"] = res.certificate ? to_json(*res.certificate) : json(nullptr);
      print(j, cfg);
      return 0;
    }
    if (*c_abelian) {
      const auto g = load_group(group_arg, cfg);
      const AbelianComponentLabeler labeler(g, k, cfg.explore());
      json j{{"count", labeler.count()},
             {"representatives", labeler.table().reps()},
             {"factors", labeler.invariants().factors}};
      const auto m = labeler.matches_formula();
      j["matches_formula"] = m ? json(*m) : json(nullptr);
      if (m) j["formula"] = dg_component_count(labeler.invariants(), k);
      print(j, cfg);
      return 0;
    }
    if (*c_structure) {
      const auto g = load_group(group_arg, cfg);
      const auto ops = load_autos(autos_path, *g);
      const auto dec = semisimple_decompose(g, ops, cfg.structure_cap);
      const auto formula = d_normal_formula(g, ops, cfg.structure_cap);
      json j{{"W_order", dec.frattini.size()},
             {"quotient_order", dec.quotient.group->order()},
             {"factors", dec.factor_orders()},
             {"perfect", dec.perfect},
             {"d_normal", d_normal(*g, ops)},
             {"d_formula_applicable", formula.has_value()}};
      if (formula) j["d_formula"] = *formula;
      print(j, cfg);
      return 0;
    }
    if (*c_sample) {
      if (!cfg.seed_given && std::getenv("CI")) throw InputError("--seed is required when CI is set");
      const auto g = load_group(group_arg, cfg);
      const auto ops = load_autos(autos_path, *g);
      auto alphabet = std::make_shared<const MoveAlphabet>(make_alphabet(g, ops, cfg.policy()));
      // start from the generators padded with the identity
      KTuple start{std::vector<Element>(k, FiniteGroup::identity)};
      for (std::size_t i = 0; i < std::min(k, g->generators().size()); ++i)
        start.entries[i] = g->generators()[i];
      if (!is_n_generating(start, *g, ops))
        throw InputError("k is smaller than the number of catalog generators");
      WalkState state(alphabet, start, cfg.seed);
      const auto samples = sample_elements(state, burn_in, count, stride);
      std::string out;
      for (Element e : samples) out += std::to_string(e) + '\n';
      std::cout << out;
      const auto rep = uniformity_report(samples, *g);
      const json rj{{"samples", rep.samples},           {"chi_square", rep.chi_square},
                    {"degrees_of_freedom", rep.degrees_of_freedom},
                    {"p_value", rep.p_value},           {"low_power", rep.low_power},
                    {"counts", rep.counts},             {"move_distribution", rep.move_distribution},
                    {"seed", cfg.seed},                 {"burn_in", burn_in},
                    {"stride", stride},                 {"k", k},
                    {"group_hash", g->hash()},          {"engine", kEngineVersion}};
      if (report_path.empty()) {
        std::cerr << rj.dump() << '\n';
      } else {
        std::ofstream f(report_path);
        if (!f) throw InputError("cannot write " + report_path);
        f << rj.dump(2) << '\n';
      }
      return 0;
    }
    if (*c_verify || *c_ak) {
      if (*c_ak) claim = "ak";
      auto opt = cfg.verify();
      if (claim == "all") return emit_reports(verify_all(opt, cfg.threads), cfg);
      if (group_arg.empty()) throw InputError("verify " + claim + " needs a group");
      std::string name;
      const auto g = load_group(group_arg, cfg, &name);
      const auto ops = load_autos(autos_path, *g);
      const bool k_given = k_opt->count() > 0;
      VerificationReport r;
      if (claim == "lifting") {
        r = verify_lifting(g, k, opt, name);
      } else if (claim == "perfect") {
        r = verify_perfect(g, ops, k, opt, name);
      } else if (claim == "kplus1") {
        r = verify_k_plus_one(g, ops, k_given ? k : d_normal(*g, ops) + 1, opt, name);
      } else if (claim == "free-image") {
        r = verify_free_image_connected(g, k, opt, name);
      } else if (claim == "pullback") {
        r = verify_pullback_normal_generation(g, k, opt, name);
      } else if (claim == "rel-conjecture") {
        if (!search) throw InputError("rel-conjecture only runs as a search; pass --search");
        r = rel_conjecture_search(g, ops, k_given ? std::optional{k} : std::nullopt, opt, name);
      } else {
        const auto& gens = g->generators();
        if ((x_img < 0 || y_img < 0) && gens.size() < 2)
          throw InputError("pass --x and --y for groups with fewer than two generators");
        const Element x = x_img >= 0 ? static_cast<Element>(x_img) : gens[0];
        const Element y = y_img >= 0 ? static_cast<Element>(y_img) : gens[1];
        r = ak_test(g, x, y, n, opt, name);
      }
      return emit_reports({r}, cfg);
    }
    if (*c_dot) {
      const auto g = load_group(group_arg, cfg);
      const auto alphabet = make_alphabet(g, load_autos(autos_path, *g), cfg.policy());
      const auto table = cached_components(cfg, *g, alphabet, k);
      if (dot_path.empty()) {
        emit_dot(table, alphabet, std::cout);
      } else {
        emit_dot(table, alphabet, dot_path);
      }
      return 0;
    }
    if (*c_catalog) {
      json listing = json::array();
      if (!out_dir.empty()) fs::create_directories(out_dir);
      for (const auto& name : catalog::all_names()) {
        const auto s = catalog::spec(name);
        try {
          const auto g = s.build(cfg.limits());
          listing.push_back({{"name", name}, {"order", g->order()}, {"hash", g->hash()}});
        } catch (const BudgetExceeded& e) {
          listing.push_back({{"name", name}, {"skipped", e.what()}});
        }
        if (out_dir.empty()) continue;
        std::string file = name;
        std::erase_if(file, [](char c) { return c == '(' || c == ')'; });
        std::replace(file.begin(), file.end(), ',', '_');
        std::ofstream(fs::path(out_dir) / (file + ".json")) << s.to_json().dump(2) << '\n';
      }
      if (!out_dir.empty()) {
        std::map<std::string, int> seen;
        for (const auto& ex : catalog::operator_examples()) {
          if (ex.ops.empty()) continue;
          const std::string base = ex.label.substr(0, ex.label.find(' '));
          const int nth = ++seen[base];
          const std::string file = base + "-autos" + (nth > 1 ? "-" + std::to_string(nth) : "");
          json autos = json::array();
          for (const auto& a : ex.ops.autos) autos.push_back(a.perm);
          std::ofstream(fs::path(out_dir) / (file + ".json"))
              << json{{"group_hash", ex.group->hash()}, {"label", ex.label}, {"autos", autos}}.dump()
              << '\n';
        }
      }
      print(listing, cfg);
      return 0;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
