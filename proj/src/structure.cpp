#include "acgraph/structure.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace acg {

namespace {

void check_cap(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap)
    throw BudgetExceeded("group order " + std::to_string(g.order()) + " exceeds structure cap " +
                         std::to_string(cap));
}

using Id = NormalClosureOracle::Id;

/// Ids of all normal operator-subgroups: the trivial one closed under
/// joining with single-class closures.
std::vector<Id> lattice_ids(const FiniteGroup& g, const OperatorSet& ops,
                            NormalClosureOracle& oracle) {
  std::vector<Id> atoms;
  for (const auto& cls : operator_classes(g, ops)) {
    const Id id = oracle.of_element(cls.front());
    if (std::find(atoms.begin(), atoms.end(), id) == atoms.end()) atoms.push_back(id);
  }
  std::vector<Id> found{oracle.trivial()};
  std::vector<char> seen(1, 1);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Id atom : atoms) {
      const Id j = oracle.join(found[i], atom);
      if (j >= seen.size()) seen.resize(j + 1, 0);
      if (!seen[j]) {
        seen[j] = 1;
        found.push_back(j);
      }
    }
  }
  return found;
}

bool subset_of(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::size_t> maximal_proper_indices(const std::vector<ElementSet>& normals,
                                                std::size_t order) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (normals[i].size() == order) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < normals.size() && maximal; ++j)
      if (j != i && normals[j].size() != order && normals[j].size() > normals[i].size() &&
          subset_of(normals[i], normals[j]))
        maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

std::vector<ElementSet> sorted_normals(const FiniteGroup& g, const OperatorSet& ops) {
  NormalClosureOracle oracle(g, ops);
  std::vector<ElementSet> normals;
  for (Id id : lattice_ids(g, ops, oracle)) normals.push_back(oracle.members(id));
  std::sort(normals.begin(), normals.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return normals;
}

}  // namespace

NormalSubgroupLattice normal_subgroups(const GroupPtr& g, const OperatorSet& ops,
                                       std::size_t cap) {
  check_cap(*g, cap);
  NormalSubgroupLattice lattice{g, ops, sorted_normals(*g, ops), {}};
  lattice.maximal_proper = maximal_proper_indices(lattice.normals, g->order());
  return lattice;
}

ElementSet n_frattini(const GroupPtr& g, const OperatorSet& ops, std::size_t cap) {
  const auto lattice = normal_subgroups(g, ops, cap);
  if (lattice.maximal_proper.empty()) {
    ElementSet all(g->order());
    for (Element x = 0; x < all.size(); ++x) all[x] = x;
    return all;
  }
  ElementSet acc = lattice.normals[lattice.maximal_proper.front()];
  for (std::size_t idx : lattice.maximal_proper) {
    ElementSet next;
    const auto& m = lattice.normals[idx];
    std::set_intersection(acc.begin(), acc.end(), m.begin(), m.end(), std::back_inserter(next));
    acc = std::move(next);
  }
  return acc;
}

ElementSet non_n_generating_elements(const GroupPtr& g, const OperatorSet& ops, std::size_t cap) {
  check_cap(*g, cap);
  NormalClosureOracle oracle(*g, ops);
  const auto ys = lattice_ids(*g, ops, oracle);
  ElementSet out;
  for (Element x = 0; x < g->order(); ++x) {
    bool passes = true;
    for (Id y : ys)
      if (!oracle.is_full(y) && oracle.is_full(oracle.join(y, oracle.of_element(x)))) {
        passes = false;
        break;
      }
    if (passes) out.push_back(x);
  }
  return out;
}

bool non_n_generating_test(const GroupPtr& g, const OperatorSet& ops, Element x, std::size_t cap) {
  check_cap(*g, cap);
  if (!g->contains(x)) throw InputError("element out of range");
  NormalClosureOracle oracle(*g, ops);
  for (Id y : lattice_ids(*g, ops, oracle))
    if (!oracle.is_full(y) && oracle.is_full(oracle.join(y, oracle.of_element(x)))) return false;
  return true;
}

std::vector<std::size_t> SemisimpleDecomposition::factor_orders() const {
  std::vector<std::size_t> out;
  for (const auto& f : factors) out.push_back(f.size());
  std::sort(out.begin(), out.end());
  return out;
}

SemisimpleDecomposition semisimple_decompose(const GroupPtr& g, const OperatorSet& ops,
                                             std::size_t cap,
                                             std::optional<std::uint64_t> tie_seed) {
  check_cap(*g, cap);
  SemisimpleDecomposition d;
  d.group = g;
  d.frattini = n_frattini(g, ops, cap);
  d.quotient = quotient(g, d.frattini);
  d.quotient_ops = induced_operator(d.quotient.projection, ops);
  d.perfect = is_perfect(*g);
  const FiniteGroup& q = *d.quotient.group;

  const auto normals = sorted_normals(q, d.quotient_ops);
  std::vector<ElementSet> minimal;
  for (const auto& m : normals) {
    if (m.size() == 1) continue;
    bool is_min = true;
    for (const auto& other : normals)
      if (other.size() > 1 && other.size() < m.size() && subset_of(other, m)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(m);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const ElementSet& a, const ElementSet& b) { return a[1] < b[1]; });
  if (tie_seed) std::shuffle(minimal.begin(), minimal.end(), std::mt19937_64(*tie_seed));

  ElementSet span{FiniteGroup::identity};
  for (const auto& m : minimal) {
    if (span.size() == q.order()) break;
    if (subset_of(m, span)) continue;
    d.factors.push_back(m);
    ElementSet seed(span);
    seed.insert(seed.end(), m.begin(), m.end());
    span = subgroup_closure(q, seed);
  }
  if (span.size() != q.order())
    throw std::logic_error("minimal normal subgroups do not span G/W(G)");

  // Unique factorisation q = f_0 f_1 ... f_{s-1}.
  const std::size_t s = d.factors.size();
  std::vector<std::pair<Element, std::vector<Element>>> partial{
      {FiniteGroup::identity, std::vector<Element>(s, FiniteGroup::identity)}};
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<std::pair<Element, std::vector<Element>>> next;
    for (const auto& [x, comps] : partial)
      for (Element f : d.factors[i]) {
        auto c = comps;
        c[i] = f;
        next.emplace_back(q.mul(x, f), std::move(c));
      }
    partial = std::move(next);
  }
  d.components.assign(q.order(), {});
  for (auto& [x, comps] : partial) {
    if (!d.components[x].empty()) throw std::logic_error("factors do not form a direct product");
    d.components[x] = std::move(comps);
  }
  for (const auto& c : d.components)
    if (c.empty() && s > 0) throw std::logic_error("factors do not form a direct product");
  if (s == 0)
    for (auto& c : d.components) c.clear();

  // Each factor must be operator-simple under conjugation by the quotient
  // and the induced operators.
  for (const auto& f : d.factors) {
    const auto sub = subgroup_as_group(d.quotient.group, f);
    OperatorSet acting = conjugation_operator(sub);
    for (auto& a : restrict_operator(sub, d.quotient_ops).autos) acting.autos.push_back(std::move(a));
    if (sorted_normals(*sub.group, acting).size() != 2)
      throw std::logic_error("semisimple factor is not operator-simple");
    d.factor_abelian.push_back(sub.group->is_abelian());
  }
  return d;
}

std::vector<std::size_t> support(const SemisimpleDecomposition& d, Element x) {
  std::vector<std::size_t> out;
  const Element q = d.quotient.projection(x);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.components[q][i] != FiniteGroup::identity) out.push_back(i);
  return out;
}

bool perfect_generation_criterion(const SemisimpleDecomposition& d,
                                  std::span<const Element> entries) {
  if (!d.perfect) throw InputError("support criterion requires a perfect group");
  std::vector<char> covered(d.size(), 0);
  for (Element x : entries)
    for (std::size_t i : support(d, x)) covered[i] = 1;
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

std::optional<std::size_t> d_normal_formula(const GroupPtr& g, const OperatorSet& ops,
                                            std::size_t cap) {
  check_cap(*g, cap);
  if (g->order() == 1) return 0;
  const ElementSet derived = commutator_subgroup(*g);
  const ElementSet z = center(*g);
  ElementSet meet;
  std::set_intersection(derived.begin(), derived.end(), z.begin(), z.end(),
                        std::back_inserter(meet));
  if (meet.size() != 1 || derived.size() * z.size() != g->order()) return std::nullopt;

  if (derived.size() > 1) {
    const auto sub = subgroup_as_group(g, derived);
    const OperatorSet sub_ops = restrict_operator(sub, ops);
    const auto dec = semisimple_decompose(sub.group, sub_ops, cap);
    if (dec.frattini.size() != 1) return std::nullopt;
    for (bool ab : dec.factor_abelian)
      if (ab) return std::nullopt;
  }
  const auto abelian_part = subgroup_as_group(g, z);
  const std::size_t d_a = d_normal(*abelian_part.group, restrict_operator(abelian_part, ops));
  return std::max<std::size_t>(d_a, 1);
}

}  // namespace acg
