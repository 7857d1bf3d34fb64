#include "permfe/tier_state.hpp"

#include <algorithm>
#include <cassert>

#include "permfe/errors.hpp"

namespace permfe {

TierState::TierState(int tiers) : tiers_(tiers) {
  if (tiers < 1 || tiers > kMaxTiers) {
    throw InvalidInput("tier count must be in 1.." + std::to_string(kMaxTiers));
  }
}

TierState TierState::zeros(int tiers, int n) {
  TierState st(tiers);
  st.push_run(TierCell{}, n);
  return st;
}

TierState TierState::from_tiers(const std::vector<std::vector<int>>& tiers) {
  TierState st(static_cast<int>(tiers.size()));
  const std::size_t n = tiers.front().size();
  for (const auto& t : tiers) {
    if (t.size() != n) throw InvalidInput("tier sequences differ in length");
  }
  for (std::size_t pos = 0; pos < n; ++pos) {
    TierCell cell{};
    for (std::size_t l = 0; l < tiers.size(); ++l) cell[l] = tiers[l][pos];
    st.push_run(cell, 1);
  }
  return st;
}

TierState TierState::from_key(int tiers, std::string_view key) {
  TierState st(tiers);
  const std::size_t stride = tiers + 1;
  const std::size_t slots = exponent_slots(key);
  for (std::size_t base = 0; base < slots; base += stride) {
    TierCell cell{};
    for (int l = 0; l < tiers; ++l) cell[l] = read_exponent(key, base + l);
    st.push_run(cell, read_exponent(key, base + tiers));
  }
  return st;
}

StateKey TierState::key() const {
  StateKey key;
  key.reserve(runs_.size() * (tiers_ + 1) * sizeof(Exponent));
  for (const auto& run : runs_) {
    for (int l = 0; l < tiers_; ++l) append_exponent(key, run.cell[l]);
    append_exponent(key, run.length);
  }
  return key;
}

std::vector<int> TierState::tier(int t) const {
  std::vector<int> out;
  out.reserve(length_);
  for (const auto& run : runs_) out.insert(out.end(), run.length, run.cell[t]);
  return out;
}

TierCell TierState::cell(int pos) const {
  if (pos < 1 || pos > length_) throw InvalidInput("position out of range");
  for (const auto& run : runs_) {
    if (pos <= run.length) return run.cell;
    pos -= run.length;
  }
  return {};
}

bool TierState::is_monotone() const {
  for (std::size_t r = 1; r < runs_.size(); ++r) {
    for (int l = 0; l < tiers_; ++l) {
      if (runs_[r].cell[l] < runs_[r - 1].cell[l]) return false;
    }
  }
  return true;
}

void TierState::push_run(const TierCell& cell, int length) {
  if (length <= 0) return;
  length_ += length;
  if (!runs_.empty() && runs_.back().cell == cell) {
    runs_.back().length += length;
    return;
  }
  runs_.push_back({cell, length});
}

TierState collapse_state(const TierState& state, int r) {
  TierState out(state.tiers());
  for (const auto& run : state.runs()) {
    TierCell cell = run.cell;
    for (int l = 0; l < state.tiers(); ++l) cell[l] = std::min(cell[l], r + 1);
    out.push_run(cell, run.length);
  }
  return out;
}

namespace {

int total_tiers(std::span<const Chain> chains) {
  int total = 0;
  for (const auto& c : chains) total += c.tiers;
  return total;
}

// Exponent increments applied to positions j >= i when `at_i` is the tuple
// at the insertion position.
TierCell insertion_delta(std::span<const Chain> chains, const TierCell& at_i) {
  TierCell delta{};
  int base = 0;
  for (const auto& c : chains) {
    for (int l = 0; l + 1 < c.tiers; ++l) delta[base + l] = at_i[base + l + 1];
    delta[base + c.tiers - 1] = 1;
    base += c.tiers;
  }
  return delta;
}

TierCell shifted(const TierCell& cell, const TierCell& delta, int tiers,
                 const TierCell* ceiling) {
  TierCell out{};
  for (int l = 0; l < tiers; ++l) {
    out[l] = cell[l] + delta[l];
    if (ceiling && (*ceiling)[l] >= 0) out[l] = std::min(out[l], (*ceiling)[l]);
  }
  return out;
}

// Child state for inserting at offset `offset` of run `at`.
TierState build_child(const TierState& state, std::size_t at, int offset,
                      const TierCell& delta, const TierCell* ceiling) {
  const auto& runs = state.runs();
  const int tiers = state.tiers();
  TierState child(tiers);
  for (std::size_t r = 0; r < at; ++r) child.push_run(runs[r].cell, runs[r].length);
  child.push_run(runs[at].cell, offset);
  child.push_run(shifted(runs[at].cell, delta, tiers, ceiling),
                 runs[at].length - offset - 1);
  for (std::size_t r = at + 1; r < runs.size(); ++r) {
    child.push_run(shifted(runs[r].cell, delta, tiers, ceiling), runs[r].length);
  }
  return child;
}

}  // namespace

InsertStep insert_front(const TierState& state, int i,
                        std::span<const Chain> chains) {
  if (total_tiers(chains) != state.tiers()) {
    throw InvalidInput("chain layout does not match the state's tiers");
  }
  if (i < 1 || i > state.length()) {
    throw InvalidInput("insertion position " + std::to_string(i) +
                       " outside 1.." + std::to_string(state.length()));
  }
  const auto& runs = state.runs();
  std::size_t at = 0;
  int before = 0;
  while (before + runs[at].length < i) before += runs[at++].length;
  const int offset = i - 1 - before;
  const TierCell& here = runs[at].cell;

  InsertStep step{0, 0, TierState(state.tiers())};
  int base = 0;
  for (const auto& c : chains) {
    int e = 0;
    if (c.kind == Chain::Kind::TailSwap) {
      for (std::size_t r = 0; r < at; ++r) e += runs[r].length * runs[r].cell[base];
      e += offset * here[base];
    } else {
      e = (state.length() - i) * here[base];
    }
    (c.var == TrackedVar::t ? step.t_exp : step.s_exp) += e;
    base += c.tiers;
  }
  step.child = build_child(state, at, offset, insertion_delta(chains, here), nullptr);
  return step;
}

ChainScheme::ChainScheme(std::vector<Chain> chains, Cap t_cap, Cap s_cap,
                         bool refine_q)
    : chains_(std::move(chains)), t_cap_(t_cap), s_cap_(s_cap),
      refine_q_(refine_q) {
  if (chains_.empty()) throw InvalidInput("chain scheme needs a chain");
  bool uses_s = false;
  for (const auto& c : chains_) {
    if (c.tiers < 1) throw InvalidInput("chains need at least one tier");
    chain_base_.push_back(tiers_);
    for (int l = 0; l < c.tiers && tiers_ + l < kMaxTiers; ++l) {
      const Cap cap = cap_of(c.var);
      ceiling_[tiers_ + l] = cap ? *cap + 1 : -1;
    }
    tiers_ += c.tiers;
    uses_s |= c.var == TrackedVar::s;
    all_tail_swap_ &= c.kind == Chain::Kind::TailSwap;
  }
  if (tiers_ > kMaxTiers) throw InvalidInput("too many tiers");
  kind_ = PolyKind{uses_s, refine_q_};
  if (!uses_s) s_cap_ = kFull;
}

StateKey ChainScheme::root(int n) const { return TierState::zeros(tiers_, n).key(); }

int ChainScheme::length(const StateKey& state) const {
  int n = 0;
  const std::size_t stride = tiers_ + 1;
  for (std::size_t slot = tiers_; slot < exponent_slots(state); slot += stride) {
    n += read_exponent(state, slot);
  }
  return n;
}

void ChainScheme::expand(const StateKey& key, std::vector<Branch>& out) const {
  out.clear();
  const TierState state = TierState::from_key(tiers_, key);
  const auto& runs = state.runs();
  const int n = state.length();

  // Running sums of each chain's bottom tier over positions before the
  // current run (the tail-swap prefactor).
  std::array<int, kMaxTiers> prefix{};
  int pos = 1;
  for (std::size_t at = 0; at < runs.size(); ++at) {
    const TierCell& here = runs[at].cell;
    const TierCell delta = insertion_delta(chains_, here);
    for (int offset = 0; offset < runs[at].length; ++offset) {
      const int i = pos + offset;
      int t_exp = 0;
      int s_exp = 0;
      for (std::size_t c = 0; c < chains_.size(); ++c) {
        const int bottom = here[chain_base_[c]];
        const int e = chains_[c].kind == Chain::Kind::TailSwap
                          ? prefix[c] + offset * bottom
                          : (n - i) * bottom;
        (chains_[c].var == TrackedVar::t ? t_exp : s_exp) += e;
      }
      if ((t_cap_ && t_exp > *t_cap_) || (s_cap_ && s_exp > *s_cap_)) {
        // Tail-swap prefactors only grow with i.
        if (all_tail_swap_) return;
        continue;
      }
      TierState child = build_child(state, at, offset, delta, &ceiling_);
      assert(child.is_monotone());
      out.push_back({t_exp, s_exp, refine_q_ ? i - 1 : 0, child.key()});
    }
    for (std::size_t c = 0; c < chains_.size(); ++c) {
      prefix[c] += runs[at].length * here[chain_base_[c]];
    }
    pos += runs[at].length;
  }
}

}  // namespace permfe
