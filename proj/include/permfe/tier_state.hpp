#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "permfe/evaluator.hpp"

namespace permfe {

inline constexpr int kMaxTiers = 4;
using TierCell = std::array<int, kMaxTiers>;

struct TierRun {
  TierCell cell{};
  int length = 0;
  friend bool operator==(const TierRun&, const TierRun&) = default;
};

// Per-position tuples of t-exponents for the specialized catalytic variables
// (one tuple entry per tier), stored as runs of equal consecutive tuples.
// Position 1 is the first run's first cell. For a single tier this is the
// count vector (a_0, a_1, ...) of how many variables equal 1, t, t^2, ...
class TierState {
 public:
  explicit TierState(int tiers = 1);

  static TierState zeros(int tiers, int n);
  // One exponent sequence per tier; all sequences must have equal length.
  static TierState from_tiers(const std::vector<std::vector<int>>& tiers);
  static TierState from_key(int tiers, std::string_view key);

  StateKey key() const;
  int tiers() const { return tiers_; }
  int length() const { return length_; }
  const std::vector<TierRun>& runs() const { return runs_; }

  // Exponents of one tier, positions 1..n.
  std::vector<int> tier(int t) const;
  // Tuple at 1-based position `pos`.
  TierCell cell(int pos) const;

  // Every tier nondecreasing along positions.
  bool is_monotone() const;

  // Appends a run, merging with the previous one when the tuples agree.
  void push_run(const TierCell& cell, int length);

  friend bool operator==(const TierState&, const TierState&) = default;

 private:
  int tiers_;
  int length_ = 0;
  std::vector<TierRun> runs_;
};

// Replaces every exponent above r+1 by r+1 (all tiers) and re-merges runs.
TierState collapse_state(const TierState& state, int r);

// The variable a chain of tiers ultimately counts.
enum class TrackedVar { t, s };

// A tower of tiers feeding one tracked pattern. Tier 0 is the bottom
// (21-pairs for tail-swap chains, 12-pairs for increasing chains); the top
// tier's insertions produce occurrences of the tracked pattern.
//
// Inserting value i in front multiplies by
//   TailSwap:   x_1 x_2 ... x_{i-1}      (bottom tier, positions before i)
//   Increasing: x_i^{n-i}                (bottom tier, position i)
// and substitutes, for every position j >= i of the shorter state,
//   tier l < top:  e'_j = e_{j+1} + (tier l+1 at position i)
//   top tier:      e'_j = e_{j+1} + 1
struct Chain {
  enum class Kind { Increasing, TailSwap };
  Kind kind;
  int tiers;
  TrackedVar var;
};

struct InsertStep {
  int t_exp = 0;
  int s_exp = 0;
  TierState child;
};

// One branch (value i inserted in front, 1 <= i <= length) without any
// saturation. Tier layout: chains are concatenated in order.
InsertStep insert_front(const TierState& state, int i,
                        std::span<const Chain> chains);

// Functional-equation recursion over TierStates for one or two chains.
// Exponents saturate at cap+1 of the chain's variable; branches whose
// prefactor exceeds a cap are dropped.
class ChainScheme : public RecursionScheme {
 public:
  ChainScheme(std::vector<Chain> chains, Cap t_cap, Cap s_cap, bool refine_q);

  PolyKind kind() const override { return kind_; }
  Cap t_cap() const override { return t_cap_; }
  Cap s_cap() const override { return s_cap_; }
  StateKey root(int n) const override;
  int length(const StateKey& state) const override;
  void expand(const StateKey& state, std::vector<Branch>& out) const override;

  int tiers() const { return tiers_; }
  const std::vector<Chain>& chains() const { return chains_; }

 private:
  Cap cap_of(TrackedVar v) const { return v == TrackedVar::t ? t_cap_ : s_cap_; }

  std::vector<Chain> chains_;
  std::vector<int> chain_base_;
  // Saturation value per tier, or -1 when unbounded.
  TierCell ceiling_{};
  int tiers_ = 0;
  bool all_tail_swap_ = true;
  PolyKind kind_;
  Cap t_cap_;
  Cap s_cap_;
  bool refine_q_;
};

}  // namespace permfe
