#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "acgraph/ac_graph.hpp"

namespace acg {

inline constexpr std::uint64_t kDefaultBurnIn = 1000;
inline constexpr std::uint64_t kDefaultStride = 10;

/// Product-replacement walk on the AC-graph: every step applies one move
/// drawn uniformly from all (kind, positions, sign, conjugator) choices.
class WalkState {
 public:
  /// Throws InputError if start is not normally generating.
  WalkState(std::shared_ptr<const MoveAlphabet> alphabet, KTuple start, std::uint64_t seed);

  const KTuple& tuple() const noexcept { return tuple_; }
  std::uint64_t steps_taken() const noexcept { return steps_; }
  const MoveAlphabet& alphabet() const noexcept { return *alphabet_; }

  /// Applies one random move; returns it.
  const MoveSpec& step();
  /// Uniform integer in [0, bound), platform independent.
  std::uint64_t uniform(std::uint64_t bound);

 private:
  std::shared_ptr<const MoveAlphabet> alphabet_;
  std::vector<MoveSpec> moves_;
  KTuple tuple_;
  std::mt19937_64 rng_;
  std::uint64_t steps_ = 0;
};

/// Copying step, for callers that keep the previous state.
WalkState walk_step(WalkState s);

/// After burn_in steps, emits a uniformly chosen entry of the current tuple,
/// then advances stride steps, until count elements are collected.
std::vector<Element> sample_elements(WalkState& s, std::uint64_t burn_in, std::uint64_t count,
                                     std::uint64_t stride);

struct UniformityReport {
  std::size_t samples = 0;
  std::vector<std::uint64_t> counts;
  double chi_square = 0.0;
  std::size_t degrees_of_freedom = 0;
  double p_value = 1.0;
  /// Fewer than 30 samples per element.
  bool low_power = false;
  std::string move_distribution = "uniform over (kind, i, j, sign, conjugator)";
};

/// Pearson chi-square of the sample counts against the uniform distribution.
UniformityReport uniformity_report(std::span<const Element> samples, const FiniteGroup& g);

}  // namespace acg
