#include "acgraph/blackbox.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <limits>

namespace acg {

WalkState::WalkState(std::shared_ptr<const MoveAlphabet> alphabet, KTuple start,
                     std::uint64_t seed)
    : alphabet_(std::move(alphabet)), tuple_(std::move(start)), rng_(seed) {
  if (tuple_.size() == 0) throw InputError("walk needs a non-empty tuple");
  for (Element e : tuple_.entries)
    if (!alphabet_->group().contains(e)) throw InputError("walk start has an entry outside the group");
  if (!is_n_generating(tuple_, alphabet_->group(), alphabet_->operators()))
    throw InputError("walk start is not normally generating");
  moves_ = alphabet_->moves(tuple_.size());
}

std::uint64_t WalkState::uniform(std::uint64_t bound) {
  // rejection sampling on the top of the range keeps draws unbiased
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do r = rng_();
  while (r >= limit);
  return r % bound;
}

const MoveSpec& WalkState::step() {
  const MoveSpec& m = moves_[uniform(moves_.size())];
  tuple_.entries[m.i] = alphabet_->image(m, tuple_.entries);
  ++steps_;
  return m;
}

WalkState walk_step(WalkState s) {
  s.step();
  return s;
}

std::vector<Element> sample_elements(WalkState& s, std::uint64_t burn_in, std::uint64_t count,
                                     std::uint64_t stride) {
  if (count == 0) throw InputError("sample count must be at least 1");
  for (std::uint64_t i = 0; i < burn_in; ++i) s.step();
  std::vector<Element> out;
  out.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) {
    if (c > 0)
      for (std::uint64_t i = 0; i < stride; ++i) s.step();
    out.push_back(s.tuple().entries[s.uniform(s.tuple().size())]);
  }
  return out;
}

UniformityReport uniformity_report(std::span<const Element> samples, const FiniteGroup& g) {
  UniformityReport r;
  const std::size_t n = g.order();
  r.samples = samples.size();
  r.counts.assign(n, 0);
  for (Element x : samples) {
    if (!g.contains(x)) throw InputError("sample outside the group");
    ++r.counts[x];
  }
  r.degrees_of_freedom = n - 1;
  r.low_power = samples.size() < 30 * n;
  if (samples.empty()) {
    r.p_value = 0.0;
    return r;
  }
  const double expected = static_cast<double>(samples.size()) / static_cast<double>(n);
  for (auto c : r.counts) {
    const double diff = static_cast<double>(c) - expected;
    r.chi_square += diff * diff / expected;
  }
  r.p_value = r.degrees_of_freedom == 0
                  ? 1.0
                  : boost::math::gamma_q(static_cast<double>(r.degrees_of_freedom) / 2.0,
                                         r.chi_square / 2.0);
  return r;
}

}  // namespace acg
