#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "acgraph/abelian.hpp"
#include "acgraph/blackbox.hpp"
#include "acgraph/catalog.hpp"
#include "acgraph/io.hpp"
#include "acgraph/structure.hpp"
#include "acgraph/verify.hpp"

namespace py = pybind11;
using namespace acg;
using nlohmann::json;

namespace {

py::object to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(to_py(x));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
  }
}

struct Group {
  GroupPtr g;
  std::string label;
};

OperatorSet make_ops(const Group& g, const std::vector<std::vector<Element>>& autos) {
  return OperatorSet::from_tables(*g.g, autos);
}

ConjugatorPolicy policy(const std::string& s) {
  if (s == "gens") return ConjugatorPolicy::Generators;
  if (s == "all") return ConjugatorPolicy::All;
  throw InputError("conjugators must be 'gens' or 'all'");
}

KTuple as_tuple(const Group& g, const std::vector<Element>& entries) {
  for (Element e : entries)
    if (!g.g->contains(e)) throw InputError("element " + std::to_string(e) + " out of range");
  return KTuple{entries};
}

py::dict table_dict(const ComponentTable& t) {
  py::dict d;
  d["vertex_count"] = t.vertex_count();
  d["component_count"] = t.component_count();
  d["reps"] = t.reps();
  d["component_sizes"] = t.component_sizes();
  return d;
}

VerifyOptions options(std::uint64_t seed, std::size_t trials, unsigned threads, const std::string& conj) {
  VerifyOptions o;
  o.seed = seed;
  o.trials = trials;
  o.explore.threads = threads;
  o.conjugators = policy(conj);
  return o;
}

}  // namespace

PYBIND11_MODULE(_acgraph, m) {
  m.doc() = "AC-graphs of finite groups";
  static py::exception<BudgetExceeded> budget_exc(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetExceeded& e) {
      py::set_error(budget_exc, e.what());
    } catch (const InputError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Group>(m, "Group")
      .def_property_readonly("order", [](const Group& g) { return g.g->order(); })
      .def_property_readonly("hash", [](const Group& g) { return g.g->hash(); })
      .def_property_readonly("label", [](const Group& g) { return g.label; })
      .def_property_readonly("generators", [](const Group& g) { return g.g->generators(); })
      .def_property_readonly("is_abelian", [](const Group& g) { return g.g->is_abelian(); })
      .def("mul", [](const Group& g, Element a, Element b) { return g.g->mul(a, b); })
      .def("inv", [](const Group& g, Element a) { return g.g->inv(a); })
      .def("name", [](const Group& g, Element a) { return g.g->name(a); })
      .def("element_order", [](const Group& g, Element a) { return g.g->element_order(a); })
      .def("__repr__", [](const Group& g) {
        return "<Group " + g.label + " of order " + std::to_string(g.g->order()) + ">";
      });

  m.def("catalog_names", &catalog::all_names);
  m.def("default_matrix", &catalog::default_matrix);
  m.def(
      "catalog_group",
      [](const std::string& name, std::size_t max_order) {
        return Group{catalog::group(name, {max_order, GroupLimits{}.exhaustive_check_bound}), name};
      },
      py::arg("name"), py::arg("max_order") = GroupLimits{}.max_order);
  m.def(
      "load_group",
      [](const std::string& path) {
        const auto spec = read_group_spec(path);
        return Group{spec.build(), spec.name.empty() ? path : spec.name};
      },
      py::arg("path"));
  m.def(
      "abelian_group",
      [](const std::vector<std::uint64_t>& factors) {
        std::string label = "Z";
        for (std::size_t i = 0; i < factors.size(); ++i)
          label += (i ? "xZ" : "") + std::to_string(factors[i]);
        return Group{build_abelian(factors), label};
      },
      py::arg("factors"));

  m.def(
      "components",
      [](const Group& g, std::size_t k, const std::string& conjugators,
         const std::vector<std::vector<Element>>& autos, unsigned threads) {
        const auto al = make_alphabet(g.g, make_ops(g, autos), policy(conjugators));
        ExploreOptions eo;
        eo.threads = threads;
        ComponentTable t;
        {
          py::gil_scoped_release release;
          t = components(al, k, eo);
        }
        auto d = table_dict(t);
        d["alphabet"] = al.descriptor();
        return d;
      },
      py::arg("group"), py::arg("k"), py::arg("conjugators") = "gens",
      py::arg("autos") = std::vector<std::vector<Element>>{}, py::arg("threads") = 1);

  m.def(
      "equivalent",
      [](const Group& g, const std::vector<Element>& u, const std::vector<Element>& v,
         std::size_t depth_cap) {
        const auto al = MoveAlphabet::with_generators(g.g);
        const auto r = equivalent(as_tuple(g, u), as_tuple(g, v), al, nullptr, depth_cap);
        py::dict d;
        d["status"] = std::string(to_string(r.status));
        d["certificate"] = r.certificate ? to_py(to_json(*r.certificate)) : py::none();
        return d;
      },
      py::arg("group"), py::arg("u"), py::arg("v"), py::arg("depth_cap") = 64);

  m.def(
      "abelian_components",
      [](const Group& g, std::size_t k) {
        const AbelianComponentLabeler lab(g.g, k);
        auto d = table_dict(lab.table());
        d["factors"] = lab.invariants().factors;
        const auto f = lab.matches_formula();
        d["matches_formula"] = f ? py::object(py::bool_(*f)) : py::none();
        return d;
      },
      py::arg("group"), py::arg("k"));

  m.def(
      "structure",
      [](const Group& g, std::size_t cap) {
        const auto w = n_frattini(g.g, {}, cap);
        const auto dec = semisimple_decompose(g.g, {}, cap);
        const auto f = d_normal_formula(g.g, {}, cap);
        py::dict d;
        d["W"] = std::vector<Element>(w.begin(), w.end());
        d["W_order"] = w.size();
        d["quotient_order"] = dec.quotient.group->order();
        d["factors"] = dec.factor_orders();
        d["perfect"] = dec.perfect;
        d["d_normal"] = d_normal(*g.g, {});
        d["d_formula"] = f ? py::object(py::int_(*f)) : py::none();
        return d;
      },
      py::arg("group"), py::arg("structure_cap") = kDefaultStructureCap);

  m.def(
      "verify",
      [](const std::string& claim, const Group& g, std::optional<std::size_t> k, int n,
         std::optional<Element> x, std::optional<Element> y,
         const std::vector<std::vector<Element>>& autos, std::uint64_t seed, std::size_t trials,
         unsigned threads, const std::string& conjugators) {
        const auto opt = options(seed, trials, threads, conjugators);
        const auto ops = make_ops(g, autos);
        const std::size_t kk = k.value_or(2);
        VerificationReport r;
        if (claim == "lifting") r = verify_lifting(g.g, kk, opt, g.label);
        else if (claim == "perfect") r = verify_perfect(g.g, ops, kk, opt, g.label);
        else if (claim == "kplus1")
          r = verify_k_plus_one(g.g, ops, k.value_or(d_normal(*g.g, ops) + 1), opt, g.label);
        else if (claim == "ak") {
          const auto& gens = g.g->generators();
          if ((!x || !y) && gens.size() < 2) throw InputError("ak needs --x and --y for this group");
          r = ak_test(g.g, x.value_or(gens[0]), y.value_or(gens.size() > 1 ? gens[1] : 0), n, opt,
                      g.label);
        } else if (claim == "free-image") r = verify_free_image_connected(g.g, kk, opt, g.label);
        else if (claim == "pullback") r = verify_pullback_normal_generation(g.g, kk, opt, g.label);
        else if (claim == "rel-conjecture") r = rel_conjecture_search(g.g, ops, k, opt, g.label);
        else if (claim == "abelian-count") r = verify_abelian_formula(g.g, kk, opt, g.label);
        else if (claim == "structure") r = verify_structure(g.g, ops, opt, g.label);
        else if (claim == "invariants") r = verify_invariants(g.g, ops, kk, opt, g.label);
        else throw InputError("unknown claim '" + claim + "'");
        return to_py(r.to_json(false));
      },
      py::arg("claim"), py::arg("group"), py::arg("k") = py::none(), py::arg("n") = 2,
      py::arg("x") = py::none(), py::arg("y") = py::none(),
      py::arg("autos") = std::vector<std::vector<Element>>{}, py::arg("seed") = 1,
      py::arg("trials") = VerifyOptions{}.trials, py::arg("threads") = 1,
      py::arg("conjugators") = "gens");

  m.def(
      "verify_all",
      [](std::uint64_t seed, unsigned threads) {
        VerifyOptions o;
        o.seed = seed;
        std::vector<VerificationReport> rs;
        {
          py::gil_scoped_release release;
          rs = verify_all(o, threads);
        }
        py::list out;
        for (const auto& r : rs) out.append(to_py(r.to_json(false)));
        return out;
      },
      py::arg("seed") = 1, py::arg("threads") = 1);

  m.def(
      "sample",
      [](const Group& g, std::size_t k, std::uint64_t count, std::uint64_t seed,
         std::uint64_t burn_in, std::uint64_t stride) {
        KTuple start{std::vector<Element>(k, 0)};
        const auto& gens = g.g->generators();
        if (gens.size() > k) throw InputError("k is smaller than the number of generators");
        std::copy(gens.begin(), gens.end(), start.entries.begin());
        WalkState s(std::make_shared<const MoveAlphabet>(MoveAlphabet::with_generators(g.g)), start,
                    seed);
        const auto xs = sample_elements(s, burn_in, count, stride);
        const auto rep = uniformity_report(xs, *g.g);
        py::dict report;
        report["chi_square"] = rep.chi_square;
        report["degrees_of_freedom"] = rep.degrees_of_freedom;
        report["p_value"] = rep.p_value;
        report["low_power"] = rep.low_power;
        report["counts"] = rep.counts;
        return py::make_tuple(xs, report);
      },
      py::arg("group"), py::arg("k"), py::arg("count"), py::arg("seed"),
      py::arg("burn_in") = kDefaultBurnIn, py::arg("stride") = kDefaultStride);

  m.attr("ENGINE_VERSION") = kEngineVersion;
}
