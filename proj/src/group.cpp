#include "acgraph/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "sha256.hpp"

namespace acg {

namespace {

constexpr Element kNone = ~Element{0};

/// Incremental subgroup closure over a dense bitmap. Keeps a short list of
/// generators; adding an element already inside is a no-op.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const FiniteGroup& g) : g_(g), in_(g.order(), 0) {
    in_[FiniteGroup::identity] = 1;
    elems_.push_back(FiniteGroup::identity);
  }

  void add(Element x) {
    if (in_[x]) return;
    gens_.push_back(x);
    const std::size_t old = elems_.size();
    for (std::size_t i = 0; i < old; ++i) push(g_.mul(elems_[i], x));
    for (std::size_t i = old; i < elems_.size(); ++i)
      for (Element s : gens_) push(g_.mul(elems_[i], s));
  }

  bool contains(Element x) const { return in_[x] != 0; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<char>& bitmap() const { return in_; }
  const std::vector<Element>& gens() const { return gens_; }
  std::vector<char> take_bitmap() { return std::move(in_); }

  ElementSet sorted() const {
    ElementSet out(elems_);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void push(Element y) {
    if (!in_[y]) {
      in_[y] = 1;
      elems_.push_back(y);
    }
  }

  const FiniteGroup& g_;
  std::vector<char> in_;
  std::vector<Element> elems_;
  std::vector<Element> gens_;
};

/// Orbit closure of seed under conjugation by the generators of G and the
/// operators; returned as a bitmap.
std::vector<char> operator_orbit(const FiniteGroup& g, const OperatorSet& ops,
                                 std::span<const Element> seed) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> queue;
  auto push = [&](Element x) {
    if (!seen[x]) {
      seen[x] = 1;
      queue.push_back(x);
    }
  };
  for (Element x : seed) push(x);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element x = queue[i];
    for (Element s : g.generators()) push(g.conjugate(x, s));
    for (const auto& a : ops.autos) push(a(x));
  }
  return seen;
}

void check_order_cap(std::size_t order, const GroupLimits& limits) {
  if (order > limits.max_order)
    throw BudgetExceeded("group order " + std::to_string(order) + " exceeds cap " +
                         std::to_string(limits.max_order));
}

std::string table_hash(std::size_t n, const std::vector<Element>& table) {
  std::string buf;
  buf.reserve(4 * (table.size() + 1));
  detail::put_u32(buf, static_cast<std::uint32_t>(n));
  for (Element e : table) detail::put_u32(buf, e);
  return detail::sha256_hex(buf);
}

}  // namespace

// --- FiniteGroup ---------------------------------------------------------

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table,
                         std::vector<Element> generators, std::vector<std::string> names,
                         std::vector<Permutation> permutations)
    : n_(order),
      table_(std::move(table)),
      inv_(order, kNone),
      generators_(std::move(generators)),
      names_(std::move(names)),
      perms_(std::move(permutations)) {
  if (n_ == 0) throw InputError("group order must be positive");
  if (table_.size() != n_ * n_) throw InputError("multiplication table has wrong size");
  for (Element e : table_)
    if (e >= n_) throw InputError("multiplication table entry out of range");
  for (Element s : generators_)
    if (s >= n_) throw InputError("generator index out of range");
  if (!names_.empty() && names_.size() != n_) throw InputError("element name count mismatch");
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b)
      if (mul(a, b) == identity) {
        inv_[a] = b;
        break;
      }
  hash_ = table_hash(n_, table_);
}

Element FiniteGroup::power(Element a, std::int64_t e) const noexcept {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Element result = identity;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Element a) const noexcept {
  std::size_t k = 1;
  for (Element x = a; x != identity; x = mul(x, a)) ++k;
  return k;
}

std::string FiniteGroup::name(Element a) const {
  if (!names_.empty()) return names_[a];
  return std::to_string(a);
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Element a : generators_)
    for (Element b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

void FiniteGroup::validate(const GroupLimits& limits, std::uint64_t seed) const {
  check_order_cap(n_, limits);
  auto fail = [](const std::string& msg) { throw ValidationError(msg); };
  for (Element g = 0; g < n_; ++g) {
    if (mul(identity, g) != g || mul(g, identity) != g)
      fail("identity law fails for element " + std::to_string(g));
    if (inv_[g] == kNone || mul(inv_[g], g) != identity)
      fail("element " + std::to_string(g) + " has no two-sided inverse");
  }
  // Latin square: every row and column is a permutation.
  std::vector<std::uint32_t> row_seen(n_, 0), col_seen(n_, 0);
  for (Element a = 0; a < n_; ++a) {
    const std::uint32_t stamp = a + 1;
    for (Element b = 0; b < n_; ++b) {
      Element r = mul(a, b), c = mul(b, a);
      if (row_seen[r] == stamp)
        fail("row " + std::to_string(a) + " repeats entry " + std::to_string(r));
      if (col_seen[c] == stamp)
        fail("column " + std::to_string(a) + " repeats entry " + std::to_string(c));
      row_seen[r] = col_seen[c] = stamp;
    }
  }
  auto check_triple = [&](Element a, Element b, Element c) {
    const Element lhs = mul(mul(a, b), c), rhs = mul(a, mul(b, c));
    if (lhs != rhs) {
      std::ostringstream os;
      os << "non-associative triple (" << a << "," << b << "," << c << "): (ab)c=" << lhs
         << " but a(bc)=" << rhs;
      fail(os.str());
    }
  };
  if (n_ <= limits.exhaustive_check_bound) {
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b)
        for (Element c = 0; c < n_; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n_ - 1));
    for (int t = 0; t < (1 << 18); ++t) check_triple(pick(rng), pick(rng), pick(rng));
  }
  if (subgroup_closure(*this, generators_).size() != n_)
    fail("generators do not generate the group");
}

// --- Homomorphism / Automorphism -------------------------------------------

void Homomorphism::validate() const {
  if (!source || !target) throw ValidationError("homomorphism without groups");
  if (map.size() != source->order()) throw ValidationError("homomorphism table has wrong size");
  for (Element x : map)
    if (x >= target->order()) throw ValidationError("homomorphism image out of range");
  if (map[FiniteGroup::identity] != FiniteGroup::identity)
    throw ValidationError("homomorphism does not fix the identity");
  for (Element a = 0; a < source->order(); ++a)
    for (Element b = 0; b < source->order(); ++b)
      if (map[source->mul(a, b)] != target->mul(map[a], map[b]))
        throw ValidationError("homomorphism not multiplicative at (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
}

ElementSet Homomorphism::kernel() const {
  ElementSet out;
  for (Element a = 0; a < map.size(); ++a)
    if (map[a] == FiniteGroup::identity) out.push_back(a);
  return out;
}

ElementSet Homomorphism::image() const {
  ElementSet out(map.begin(), map.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Automorphism Automorphism::inverse() const {
  Automorphism out{std::vector<Element>(perm.size())};
  for (Element a = 0; a < perm.size(); ++a) out.perm[perm[a]] = a;
  return out;
}

Automorphism make_automorphism(const FiniteGroup& g, std::vector<Element> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw InputError("automorphism table has wrong size");
  std::vector<char> hit(n, 0);
  for (Element x : perm) {
    if (x >= n || hit[x]) throw InputError("automorphism table is not a bijection");
    hit[x] = 1;
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (perm[g.mul(a, b)] != g.mul(perm[a], perm[b]))
        throw InputError("automorphism table is not multiplicative at (" + std::to_string(a) +
                         "," + std::to_string(b) + ")");
  return Automorphism{std::move(perm)};
}

OperatorSet OperatorSet::from_tables(const FiniteGroup& g,
                                     const std::vector<std::vector<Element>>& tables) {
  OperatorSet ops;
  for (const auto& t : tables) ops.autos.push_back(make_automorphism(g, t));
  return ops;
}

// --- construction ---------------------------------------------------------

std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      if (j != i) out += ' ';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

GroupPtr build_from_permutations(std::size_t degree, const std::vector<Permutation>& gens,
                                 const GroupLimits& limits) {
  if (degree == 0) throw InputError("permutation degree must be positive");
  for (const auto& p : gens) {
    if (p.size() != degree) throw InputError("permutation has wrong degree");
    std::vector<char> hit(degree, 0);
    for (auto x : p) {
      if (x >= degree || hit[x]) throw InputError("generator is not a bijection");
      hit[x] = 1;
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);

  std::vector<Permutation> elems{id};
  std::map<Permutation, Element> index{{id, 0}};
  std::vector<Element> parent{0};
  std::vector<std::uint32_t> via{0};
  // right_gen[e * ngens + s] = e * gens[s]
  std::vector<Element> right_gen;
  const std::size_t ngens = gens.size();

  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t s = 0; s < ngens; ++s) {
      Permutation prod(degree);
      for (std::size_t x = 0; x < degree; ++x) prod[x] = gens[s][elems[head][x]];
      auto [it, inserted] = index.emplace(prod, static_cast<Element>(elems.size()));
      if (inserted) {
        check_order_cap(elems.size() + 1, limits);
        elems.push_back(std::move(prod));
        parent.push_back(static_cast<Element>(head));
        via.push_back(static_cast<std::uint32_t>(s));
      }
      right_gen.push_back(it->second);
    }
  }

  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (Element g = 0; g < n; ++g) {
    Element* row = table.data() + std::size_t{g} * n;
    row[0] = g;
    for (Element h = 1; h < n; ++h) row[h] = right_gen[std::size_t{row[parent[h]]} * ngens + via[h]];
  }

  std::vector<Element> generators;
  for (const auto& p : gens) {
    Element e = index.at(p);
    if (e != FiniteGroup::identity &&
        std::find(generators.begin(), generators.end(), e) == generators.end())
      generators.push_back(e);
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& p : elems) names.push_back(cycle_string(p));
  return std::make_shared<const FiniteGroup>(n, std::move(table), std::move(generators),
                                             std::move(names), std::move(elems));
}

GroupPtr build_abelian(const std::vector<std::uint64_t>& factors, const GroupLimits& limits) {
  std::size_t n = 1;
  for (auto f : factors) {
    if (f == 0) throw InputError("abelian factor must be at least 1");
    if (f > limits.max_order || n * f > limits.max_order)
      throw BudgetExceeded("abelian group order exceeds cap " + std::to_string(limits.max_order));
    n *= f;
  }
  const std::size_t d = factors.size();
  auto digits = [&](std::size_t x) {
    std::vector<std::uint64_t> c(d);
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = x % factors[i];
      x /= factors[i];
    }
    return c;
  };
  auto pack = [&](const std::vector<std::uint64_t>& c) {
    std::size_t x = 0;
    for (std::size_t i = d; i-- > 0;) x = x * factors[i] + c[i];
    return static_cast<Element>(x);
  };
  std::vector<std::vector<std::uint64_t>> coords(n);
  for (std::size_t x = 0; x < n; ++x) coords[x] = digits(x);
  std::vector<Element> table(n * n);
  std::vector<std::uint64_t> c(d);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < d; ++i) c[i] = (coords[a][i] + coords[b][i]) % factors[i];
      table[a * n + b] = pack(c);
    }
  std::vector<Element> generators;
  for (std::size_t i = 0; i < d; ++i) {
    if (factors[i] == 1) continue;
    std::vector<std::uint64_t> unit(d, 0);
    unit[i] = 1;
    generators.push_back(pack(unit));
  }
  std::vector<std::string> names;
  if (d > 1) {
    for (std::size_t x = 0; x < n; ++x) {
      std::string s = "(";
      for (std::size_t i = 0; i < d; ++i) s += (i ? "," : "") + std::to_string(coords[x][i]);
      names.push_back(s + ")");
    }
  }
  return std::make_shared<const FiniteGroup>(n, std::move(table), std::move(generators),
                                             std::move(names));
}

GroupPtr build_from_table(const std::vector<std::vector<Element>>& rows,
                          const GroupLimits& limits) {
  const std::size_t n = rows.size();
  if (n == 0) throw InputError("empty multiplication table");
  check_order_cap(n, limits);
  for (const auto& r : rows) {
    if (r.size() != n) throw InputError("multiplication table is not square");
    for (Element x : r)
      if (x >= n) throw InputError("multiplication table entry out of range");
  }
  Element e = kNone;
  for (Element a = 0; a < n && e == kNone; ++a) {
    bool ok = true;
    for (Element b = 0; b < n && ok; ++b) ok = rows[a][b] == b && rows[b][a] == b;
    if (ok) e = a;
  }
  if (e == kNone) throw ValidationError("multiplication table has no identity element");
  // relabel: swap e and 0
  auto relabel = [e](Element x) { return x == e ? 0 : (x == 0 ? e : x); };
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[std::size_t{relabel(a)} * n + relabel(b)] = relabel(rows[a][b]);
  std::vector<std::string> names;
  if (e != 0)
    for (Element a = 0; a < n; ++a) names.push_back(std::to_string(relabel(a)));

  FiniteGroup provisional(n, table, {});
  SubgroupBuilder builder(provisional);
  std::vector<Element> generators;
  for (Element a = 1; a < n && builder.size() < n; ++a) builder.add(a);
  generators = builder.gens();
  return std::make_shared<const FiniteGroup>(n, std::move(table), std::move(generators),
                                             std::move(names));
}

// --- subgroups --------------------------------------------------------------

ElementSet subgroup_closure(const FiniteGroup& g, std::span<const Element> seed) {
  SubgroupBuilder builder(g);
  for (Element x : seed) builder.add(x);
  return builder.sorted();
}

ElementSet normal_closure(const FiniteGroup& g, const OperatorSet& ops,
                          std::span<const Element> seed) {
  const auto orbit = operator_orbit(g, ops, seed);
  SubgroupBuilder builder(g);
  for (Element x = 0; x < g.order(); ++x)
    if (orbit[x]) builder.add(x);
  return builder.sorted();
}

ElementSet commutator_subgroup(const FiniteGroup& g) {
  SubgroupBuilder builder(g);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) builder.add(g.commutator(a, b));
  return builder.sorted();
}

ElementSet center(const FiniteGroup& g) {
  ElementSet out;
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element s : g.generators()) central = central && g.mul(a, s) == g.mul(s, a);
    if (central) out.push_back(a);
  }
  return out;
}

bool is_subgroup(const FiniteGroup& g, std::span<const Element> set) {
  std::vector<char> in(g.order(), 0);
  for (Element x : set) {
    if (x >= g.order()) return false;
    in[x] = 1;
  }
  if (!in[FiniteGroup::identity]) return false;
  for (Element a : set) {
    if (!in[g.inv(a)]) return false;
    for (Element b : set)
      if (!in[g.mul(a, b)]) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const OperatorSet& ops, std::span<const Element> set) {
  if (!is_subgroup(g, set)) return false;
  std::vector<char> in(g.order(), 0);
  for (Element x : set) in[x] = 1;
  for (Element h : set) {
    for (Element w = 0; w < g.order(); ++w)
      if (!in[g.conjugate(h, w)]) return false;
    for (const auto& a : ops.autos)
      if (!in[a(h)]) return false;
  }
  return true;
}

bool is_perfect(const FiniteGroup& g) { return commutator_subgroup(g).size() == g.order(); }

std::vector<ElementSet> operator_classes(const FiniteGroup& g, const OperatorSet& ops) {
  std::vector<char> done(g.order(), 0);
  std::vector<ElementSet> classes;
  for (Element a = 0; a < g.order(); ++a) {
    if (done[a]) continue;
    const Element seed[] = {a};
    const auto orbit = operator_orbit(g, ops, seed);
    ElementSet cls;
    for (Element x = 0; x < g.order(); ++x)
      if (orbit[x]) {
        cls.push_back(x);
        done[x] = 1;
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

Quotient quotient(const GroupPtr& gp, const ElementSet& nset) {
  const FiniteGroup& g = *gp;
  if (!is_subgroup(g, nset)) throw InputError("quotient: N is not a subgroup");
  if (!is_normal(g, OperatorSet{}, nset)) throw InputError("quotient: N is not normal");
  std::vector<Element> coset_of(g.order(), kNone);
  std::vector<Element> reps;
  for (Element a = 0; a < g.order(); ++a) {
    if (coset_of[a] != kNone) continue;
    const auto c = static_cast<Element>(reps.size());
    reps.push_back(a);
    for (Element x : nset) coset_of[g.mul(a, x)] = c;
  }
  const std::size_t m = reps.size();
  std::vector<Element> table(m * m);
  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < m; ++b) table[std::size_t{a} * m + b] = coset_of[g.mul(reps[a], reps[b])];
  std::vector<Element> generators;
  for (Element s : g.generators()) {
    Element c = coset_of[s];
    if (c != FiniteGroup::identity &&
        std::find(generators.begin(), generators.end(), c) == generators.end())
      generators.push_back(c);
  }
  std::vector<std::string> names;
  if (g.has_names())
    for (Element r : reps) names.push_back("[" + g.name(r) + "]");
  auto q = std::make_shared<const FiniteGroup>(m, std::move(table), std::move(generators),
                                               std::move(names));
  return Quotient{q, Homomorphism{gp, q, std::move(coset_of)}};
}

Quotient abelianization(const GroupPtr& g) { return quotient(g, commutator_subgroup(*g)); }

OperatorSet induced_operator(const Homomorphism& projection, const OperatorSet& ops) {
  const auto& target = *projection.target;
  const auto kernel = projection.kernel();
  std::vector<Element> preimage(target.order(), kNone);
  for (Element a = 0; a < projection.map.size(); ++a)
    if (preimage[projection.map[a]] == kNone) preimage[projection.map[a]] = a;
  OperatorSet out;
  for (const auto& a : ops.autos) {
    for (Element k : kernel)
      if (projection(a(k)) != FiniteGroup::identity)
        throw InputError("kernel is not stable under the operators");
    std::vector<Element> perm(target.order());
    for (Element q = 0; q < target.order(); ++q) perm[q] = projection(a(preimage[q]));
    out.autos.push_back(make_automorphism(target, std::move(perm)));
  }
  return out;
}

Embedding subgroup_as_group(const GroupPtr& gp, const ElementSet& h) {
  const FiniteGroup& g = *gp;
  if (!is_subgroup(g, h)) throw InputError("subgroup_as_group: not a subgroup");
  const std::size_t m = h.size();
  std::vector<Element> local(g.order(), kNone);
  for (Element i = 0; i < m; ++i) local[h[i]] = i;
  std::vector<Element> table(m * m);
  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < m; ++b) table[std::size_t{a} * m + b] = local[g.mul(h[a], h[b])];
  std::vector<std::string> names;
  std::vector<Permutation> perms;
  for (Element x : h) {
    if (g.has_names()) names.push_back(g.name(x));
    if (!g.permutations().empty()) perms.push_back(g.permutations()[x]);
  }
  FiniteGroup provisional(m, table, {});
  SubgroupBuilder builder(provisional);
  for (Element a = 1; a < m && builder.size() < m; ++a) builder.add(a);
  auto sub = std::make_shared<const FiniteGroup>(m, std::move(table), builder.gens(),
                                                 std::move(names), std::move(perms));
  return Embedding{sub, Homomorphism{sub, gp, h}};
}

OperatorSet restrict_operator(const Embedding& sub, const OperatorSet& ops) {
  const auto& h = sub.inclusion.map;
  std::vector<Element> local(sub.inclusion.target->order(), kNone);
  for (Element i = 0; i < h.size(); ++i) local[h[i]] = i;
  OperatorSet out;
  for (const auto& a : ops.autos) {
    std::vector<Element> perm(h.size());
    for (Element i = 0; i < h.size(); ++i) {
      perm[i] = local[a(h[i])];
      if (perm[i] == kNone) throw InputError("subgroup is not stable under the operators");
    }
    out.autos.push_back(make_automorphism(*sub.group, std::move(perm)));
  }
  return out;
}

OperatorSet conjugation_operator(const Embedding& sub) {
  const auto& g = *sub.inclusion.target;
  const auto& h = sub.inclusion.map;
  std::vector<Element> local(g.order(), kNone);
  for (Element i = 0; i < h.size(); ++i) local[h[i]] = i;
  OperatorSet out;
  for (Element s : g.generators()) {
    std::vector<Element> perm(h.size());
    bool trivial = true;
    for (Element i = 0; i < h.size(); ++i) {
      perm[i] = local[g.conjugate(h[i], s)];
      if (perm[i] == kNone) throw InputError("subgroup is not normal in the ambient group");
      trivial = trivial && perm[i] == i;
    }
    if (trivial) continue;
    Automorphism a = make_automorphism(*sub.group, std::move(perm));
    if (std::find(out.autos.begin(), out.autos.end(), a) == out.autos.end())
      out.autos.push_back(std::move(a));
  }
  return out;
}

std::size_t d_normal(const FiniteGroup& g, const OperatorSet& ops) {
  if (g.order() == 1) return 0;
  NormalClosureOracle oracle(g, ops);
  // The normal closure of a tuple depends only on the operator classes of
  // its entries, so every coordinate ranges over distinct class closures.
  std::vector<NormalClosureOracle::Id> ids;
  for (const auto& cls : operator_classes(g, ops)) {
    auto id = oracle.of_element(cls.front());
    if (id != oracle.trivial() && std::find(ids.begin(), ids.end(), id) == ids.end())
      ids.push_back(id);
  }
  for (std::size_t t = 1;; ++t) {
    // depth-first over increasing index combinations of size t
    std::vector<std::size_t> pick;
    std::vector<NormalClosureOracle::Id> acc{oracle.trivial()};
    bool found = false;
    auto dfs = [&](auto&& self, std::size_t start) -> void {
      if (found) return;
      if (pick.size() == t) {
        found = oracle.is_full(acc.back());
        return;
      }
      for (std::size_t i = start; i < ids.size() && !found; ++i) {
        pick.push_back(i);
        acc.push_back(oracle.join(acc.back(), ids[i]));
        self(self, i + 1);
        acc.pop_back();
        pick.pop_back();
      }
    };
    dfs(dfs, 0);
    if (found) return t;
    if (t >= ids.size()) return t;  // unreachable for a finite group
  }
}

// --- NormalClosureOracle -----------------------------------------------------

NormalClosureOracle::NormalClosureOracle(const FiniteGroup& g, const OperatorSet& ops)
    : g_(&g), element_id_(g.order(), 0) {
  std::vector<char> triv(g.order(), 0);
  triv[FiniteGroup::identity] = 1;
  intern(std::move(triv));
  for (const auto& cls : operator_classes(g, ops)) {
    SubgroupBuilder builder(g);
    for (Element x : cls) builder.add(x);
    const Id id = intern(builder.take_bitmap());
    for (Element x : cls) element_id_[x] = id;
  }
}

NormalClosureOracle::Id NormalClosureOracle::intern(std::vector<char> bitmap) {
  std::string key(bitmap.begin(), bitmap.end());
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  const auto id = static_cast<Id>(bitmaps_.size());
  sizes_.push_back(static_cast<std::size_t>(std::count(bitmap.begin(), bitmap.end(), 1)));
  bitmaps_.push_back(std::move(bitmap));
  index_.emplace(std::move(key), id);
  return id;
}

NormalClosureOracle::Id NormalClosureOracle::join(Id a, Id b) {
  if (a == b) return a;
  if (a > b) std::swap(a, b);
  const std::uint64_t key = (std::uint64_t{a} << 32) | b;
  if (auto it = joins_.find(key); it != joins_.end()) return it->second;
  Id result;
  if (sizes_[a] == g_->order() || sizes_[b] == g_->order()) {
    result = sizes_[a] == g_->order() ? a : b;
  } else {
    SubgroupBuilder builder(*g_);
    for (Element x = 0; x < g_->order(); ++x)
      if (bitmaps_[a][x] || bitmaps_[b][x]) builder.add(x);
    result = intern(builder.take_bitmap());
  }
  joins_.emplace(key, result);
  return result;
}

NormalClosureOracle::Id NormalClosureOracle::of_elements(std::span<const Element> elems) {
  Id acc = trivial();
  for (Element x : elems) acc = join(acc, of_element(x));
  return acc;
}

ElementSet NormalClosureOracle::members(Id id) const {
  ElementSet out;
  for (Element x = 0; x < g_->order(); ++x)
    if (bitmaps_[id][x]) out.push_back(x);
  return out;
}

}  // namespace acg
