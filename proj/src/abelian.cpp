#include "acgraph/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace acg {

namespace {

/// Smallest j >= 1 with y^j in H.
std::size_t order_modulo(const FiniteGroup& a, Element y, const std::vector<char>& in_h) {
  std::size_t j = 1;
  for (Element x = y; !in_h[x]; x = a.mul(x, y)) ++j;
  return j;
}

}  // namespace

AbelianInvariants invariant_factors(const FiniteGroup& a) {
  for (Element x = 0; x < a.order(); ++x)
    for (Element y = 0; y < x; ++y)
      if (a.mul(x, y) != a.mul(y, x)) throw InputError("invariant_factors: group is not abelian");

  const std::size_t n = a.order();
  std::vector<std::size_t> order(n);
  for (Element x = 0; x < n; ++x) order[x] = a.element_order(x);

  std::vector<Element> split;
  std::vector<std::uint64_t> factors;
  std::vector<Element> h_elems{FiniteGroup::identity};
  std::vector<char> in_h(n, 0);
  in_h[FiniteGroup::identity] = 1;
  while (h_elems.size() < n) {
    std::size_t exponent = 1;
    for (Element y = 0; y < n; ++y) exponent = std::max(exponent, order_modulo(a, y, in_h));
    Element pick = 0;
    for (Element y = 1; y < n && pick == 0; ++y)
      if (order[y] == exponent && order_modulo(a, y, in_h) == exponent) pick = y;
    if (pick == 0) throw std::logic_error("invariant_factors: no independent cyclic factor found");
    split.push_back(pick);
    factors.push_back(exponent);
    // H <- H x <pick>
    std::vector<Element> next;
    for (Element h : h_elems)
      for (Element x = h, j = 0; j < exponent; ++j, x = a.mul(x, pick)) next.push_back(x);
    for (Element x : next) in_h[x] = 1;
    h_elems = std::move(next);
  }
  std::reverse(split.begin(), split.end());
  std::reverse(factors.begin(), factors.end());
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (factors[i] % factors[i - 1] != 0)
      throw std::logic_error("invariant_factors: divisibility chain broken");
  return AbelianInvariants{std::move(factors), std::move(split)};
}

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t result = m;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::uint64_t dg_component_count(const AbelianInvariants& inv, std::size_t k) {
  const std::size_t d = inv.rank();
  if (k < 2) throw InputError("component formula needs k >= 2");
  if (k < d) throw InputError("no generating k-tuples: k < number of invariant factors");
  if (k > d || d == 0) return 1;
  const std::uint64_t m = inv.factors.front();
  // units mod m up to sign; for m <= 2 the sign action is trivial
  return m <= 2 ? 1 : euler_phi(m) / 2;
}

KTuple dg_representative(const FiniteGroup& a, const AbelianInvariants& inv,
                         std::uint64_t lambda) {
  if (inv.rank() == 0) throw InputError("trivial group has no representative tuple");
  const std::uint64_t m = inv.factors.front();
  if (std::gcd(lambda, m) != 1) throw InputError("lambda is not a unit modulo m1");
  KTuple t{inv.gens};
  t.entries[0] = a.power(inv.gens[0], static_cast<std::int64_t>(lambda % m));
  return t;
}

AbelianComponentLabeler::AbelianComponentLabeler(GroupPtr a, std::size_t k,
                                                 const ExploreOptions& options)
    : a_(std::move(a)), k_(k), inv_(invariant_factors(*a_)) {
  const MoveAlphabet nielsen(a_, std::span<const Element>{});
  table_ = components(nielsen, k, options);
}

std::uint32_t AbelianComponentLabeler::id(const KTuple& t) const {
  if (t.size() != k_) throw InputError("tuple length does not match");
  auto label = table_.label(t);
  if (!label) throw InputError("tuple does not generate the abelian group");
  return *label;
}

std::optional<bool> AbelianComponentLabeler::matches_formula() const {
  if (k_ < 2 || k_ < inv_.rank()) return std::nullopt;
  return dg_component_count(inv_, k_) == count();
}

}  // namespace acg
