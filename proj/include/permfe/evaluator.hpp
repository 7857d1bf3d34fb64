#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "permfe/truncated_poly.hpp"

namespace permfe {

// Canonical byte serialization of a specialized catalytic state. The empty
// key is reserved for the length-0 state.
using StateKey = std::string;

using Exponent = std::uint16_t;
void append_exponent(StateKey& key, int value);
int read_exponent(std::string_view key, std::size_t slot);
inline std::size_t exponent_slots(std::string_view key) {
  return key.size() / sizeof(Exponent);
}

// One term of a functional equation: t^t_exp s^s_exp q^q_exp times the
// polynomial of `child`, a state one entry shorter.
struct Branch {
  int t_exp = 0;
  int s_exp = 0;
  int q_exp = 0;
  StateKey child;
};

// A functional equation specialized to monomial values of its catalytic
// variables, i.e. a recursion P(state) = sum over branches of
// prefactor * P(child) with P(empty) = 1.
class RecursionScheme {
 public:
  virtual ~RecursionScheme() = default;

  virtual PolyKind kind() const = 0;
  virtual Cap t_cap() const = 0;
  virtual Cap s_cap() const { return kFull; }

  // All catalytic variables set to 1, for permutations of length n.
  virtual StateKey root(int n) const = 0;
  virtual int length(const StateKey& state) const = 0;

  // Replaces `out` with the branches of `state` (length >= 1). Branches whose
  // prefactor already exceeds a cap are omitted.
  virtual void expand(const StateKey& state, std::vector<Branch>& out) const = 0;

  TruncatedPoly one() const { return TruncatedPoly::one(kind(), t_cap(), s_cap()); }
  TruncatedPoly zero() const { return TruncatedPoly(kind(), t_cap(), s_cap()); }
};

// Memoized top-down recursion, single-threaded. This is the reference the
// layered evaluator is checked against. With a nonzero memo limit, states
// beyond the limit are recomputed instead of stored; results do not change.
class SerialEvaluator {
 public:
  explicit SerialEvaluator(const RecursionScheme& scheme,
                           std::size_t memo_limit = 0);

  TruncatedPoly evaluate(const StateKey& state);
  TruncatedPoly evaluate_root(int n) { return evaluate(scheme_.root(n)); }

  std::size_t memo_size() const { return memo_.size(); }
  std::vector<StateKey> memo_keys() const;

 private:
  const RecursionScheme& scheme_;
  std::size_t memo_limit_;
  std::unordered_map<StateKey, TruncatedPoly> memo_;
};

// States reachable from `roots`, grouped by length (index = length).
std::vector<std::vector<StateKey>> discover_states(
    const RecursionScheme& scheme, std::span<const StateKey> roots);

// Bottom-up evaluation by layers of equal length; each layer is evaluated
// with an OpenMP parallel loop over its states. Returns one polynomial per
// root, in order.
std::vector<TruncatedPoly> evaluate_layered(const RecursionScheme& scheme,
                                            std::span<const StateKey> roots);

// Auto picks Layered when OpenMP offers more than one thread, else Serial
// (on one thread the serial recursion avoids expanding each state twice).
enum class EvalMode { Auto, Serial, Layered };

struct EvalOptions {
  EvalMode mode = EvalMode::Auto;
  // Serial mode only; 0 means unbounded.
  std::size_t memo_limit = 0;
};

// The scheme's polynomial for each permutation length in `lengths`.
std::vector<TruncatedPoly> evaluate_lengths(const RecursionScheme& scheme,
                                            std::span<const int> lengths,
                                            const EvalOptions& options = {});
TruncatedPoly evaluate_length(const RecursionScheme& scheme, int n,
                              const EvalOptions& options = {});

}  // namespace permfe
