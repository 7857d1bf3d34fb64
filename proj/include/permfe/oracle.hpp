#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "permfe/bigint.hpp"
#include "permfe/permutation.hpp"
#include "permfe/truncated_poly.hpp"

namespace permfe {

inline constexpr int kDefaultOracleLimit = 10;

struct OracleOptions {
  int limit = kDefaultOracleLimit;
  // Adds a q^inv(pi) factor to every term.
  bool track_inversions = false;
};

// Sparse multivariate polynomial sum_{pi in S_n} prod_j t_j^{N_{tau_j}(pi)}
// (times q^inv(pi) when tracked). Exponent vectors list the pattern
// variables in order, followed by the q exponent if present.
struct Distribution {
  int patterns = 0;
  bool has_q = false;
  std::map<std::vector<int>, BigInt> terms;

  BigInt total() const;
  const BigInt& coeff(const std::vector<int>& exps) const;
  std::string to_string() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;
};

// Exhaustive scan of S_n, split across OpenMP threads by the first two
// entries. Deterministic for any thread count. Throws LimitExceeded when
// n > options.limit and InvalidInput when `taus` is empty.
Distribution brute_force_distribution(int n, std::span<const Permutation> taus,
                                      const OracleOptions& options = {});

// Single-threaded reference for the parallel scan.
Distribution brute_force_distribution_serial(int n,
                                             std::span<const Permutation> taus,
                                             const OracleOptions& options = {});

// Dense view of a one- or two-pattern distribution, with full caps.
// One pattern maps to t; two patterns map to (s, t) in that order.
TruncatedPoly to_truncated(const Distribution& d);

}  // namespace permfe
