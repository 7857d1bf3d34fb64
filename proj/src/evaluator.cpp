#include "permfe/evaluator.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <unordered_set>

#include <omp.h>

#include "permfe/errors.hpp"

namespace permfe {

void append_exponent(StateKey& key, int value) {
  if (value < 0 || value > std::numeric_limits<Exponent>::max()) {
    throw LimitExceeded("catalytic exponent " + std::to_string(value) +
                        " does not fit a state key");
  }
  const auto v = static_cast<Exponent>(value);
  key.push_back(static_cast<char>(v & 0xff));
  key.push_back(static_cast<char>(v >> 8));
}

int read_exponent(std::string_view key, std::size_t slot) {
  const auto lo = static_cast<unsigned char>(key[2 * slot]);
  const auto hi = static_cast<unsigned char>(key[2 * slot + 1]);
  return lo | (hi << 8);
}

SerialEvaluator::SerialEvaluator(const RecursionScheme& scheme,
                                 std::size_t memo_limit)
    : scheme_(scheme), memo_limit_(memo_limit) {}

TruncatedPoly SerialEvaluator::evaluate(const StateKey& state) {
  if (scheme_.length(state) == 0) return scheme_.one();
  if (auto it = memo_.find(state); it != memo_.end()) return it->second;

  std::vector<Branch> branches;
  scheme_.expand(state, branches);
  TruncatedPoly acc = scheme_.zero();
  for (const Branch& b : branches) {
    acc.add_shifted(evaluate(b.child), b.t_exp, b.s_exp, b.q_exp);
  }
  if (memo_limit_ == 0 || memo_.size() < memo_limit_) {
    memo_.emplace(state, acc);
  }
  return acc;
}

std::vector<StateKey> SerialEvaluator::memo_keys() const {
  std::vector<StateKey> keys;
  keys.reserve(memo_.size());
  for (const auto& [k, v] : memo_) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<std::vector<StateKey>> discover_states(
    const RecursionScheme& scheme, std::span<const StateKey> roots) {
  int top = 0;
  for (const auto& r : roots) top = std::max(top, scheme.length(r));
  std::vector<std::vector<StateKey>> layers(top + 1);
  std::vector<std::unordered_set<StateKey>> seen(top + 1);
  for (const auto& r : roots) {
    const int len = scheme.length(r);
    if (seen[len].insert(r).second) layers[len].push_back(r);
  }

  for (int len = top; len >= 1; --len) {
    const auto& layer = layers[len];
    const int count = static_cast<int>(layer.size());
    const int threads = omp_get_max_threads();
    std::vector<std::vector<StateKey>> found(threads);

#pragma omp parallel
    {
      const int tid = omp_get_thread_num();
      std::vector<Branch> branches;
      std::unordered_set<StateKey> local;
#pragma omp for schedule(static)
      for (int idx = 0; idx < count; ++idx) {
        scheme.expand(layer[idx], branches);
        for (auto& b : branches) {
          assert(scheme.length(b.child) == len - 1);
          if (local.insert(b.child).second) found[tid].push_back(std::move(b.child));
        }
      }
    }

    for (auto& chunk : found) {
      for (auto& key : chunk) {
        if (seen[len - 1].insert(key).second) {
          layers[len - 1].push_back(std::move(key));
        }
      }
    }
    seen[len].clear();
  }
  if (layers[0].empty() && top > 0) layers[0].push_back(StateKey{});
  return layers;
}

std::vector<TruncatedPoly> evaluate_layered(const RecursionScheme& scheme,
                                            std::span<const StateKey> roots) {
  auto layers = discover_states(scheme, roots);
  const int top = static_cast<int>(layers.size()) - 1;

  std::vector<TruncatedPoly> results(roots.size(), scheme.zero());
  std::vector<std::vector<std::size_t>> roots_at(top + 1);
  for (std::size_t r = 0; r < roots.size(); ++r) {
    roots_at[scheme.length(roots[r])].push_back(r);
  }

  std::unordered_map<StateKey, std::size_t> prev_index;
  std::vector<TruncatedPoly> prev_values;
  for (std::size_t idx = 0; idx < layers[0].size(); ++idx) {
    prev_index.emplace(layers[0][idx], idx);
    prev_values.push_back(scheme.one());
  }
  for (std::size_t r : roots_at[0]) results[r] = scheme.one();

  for (int len = 1; len <= top; ++len) {
    const auto& layer = layers[len];
    const int count = static_cast<int>(layer.size());
    std::vector<TruncatedPoly> values(count, scheme.zero());

#pragma omp parallel
    {
      std::vector<Branch> branches;
#pragma omp for schedule(dynamic, 16)
      for (int idx = 0; idx < count; ++idx) {
        scheme.expand(layer[idx], branches);
        TruncatedPoly& acc = values[idx];
        for (const Branch& b : branches) {
          const auto it = prev_index.find(b.child);
          assert(it != prev_index.end());
          acc.add_shifted(prev_values[it->second], b.t_exp, b.s_exp, b.q_exp);
        }
      }
    }

    std::unordered_map<StateKey, std::size_t> index;
    index.reserve(layer.size());
    for (std::size_t idx = 0; idx < layer.size(); ++idx) {
      index.emplace(layer[idx], idx);
    }
    for (std::size_t r : roots_at[len]) {
      results[r] = values[index.at(roots[r])];
    }
    prev_index = std::move(index);
    prev_values = std::move(values);
    layers[len - 1].clear();
    layers[len - 1].shrink_to_fit();
  }
  return results;
}

std::vector<TruncatedPoly> evaluate_lengths(const RecursionScheme& scheme,
                                            std::span<const int> lengths,
                                            const EvalOptions& options) {
  std::vector<StateKey> roots;
  for (int n : lengths) {
    if (n < 0) throw InvalidInput("n must be >= 0");
    roots.push_back(scheme.root(n));
  }
  const bool layered =
      options.mode == EvalMode::Layered ||
      (options.mode == EvalMode::Auto && omp_get_max_threads() > 1);
  if (layered) return evaluate_layered(scheme, roots);
  SerialEvaluator serial(scheme, options.memo_limit);
  std::vector<TruncatedPoly> out;
  for (const auto& r : roots) out.push_back(serial.evaluate(r));
  return out;
}

TruncatedPoly evaluate_length(const RecursionScheme& scheme, int n,
                              const EvalOptions& options) {
  const int lengths[] = {n};
  return evaluate_lengths(scheme, lengths, options).front();
}

}  // namespace permfe
