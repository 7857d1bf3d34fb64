#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permfe/evaluator.hpp"
#include "permfe/oracle.hpp"

namespace permfe {

// Something that claims to produce the full distribution polynomial for
// each n: one pattern in t, or two patterns in (s, t).
struct VerifyTarget {
  std::string name;
  std::vector<Permutation> patterns;
  std::function<TruncatedPoly(int n)> engine;
  bool refine_q = false;
  // Largest n to check for this target (joint engines stop earlier).
  int n_max = 0;
};

struct VerifyMismatch {
  std::string target;
  int n = 0;
  std::string coefficient;  // e.g. "[t^3]" or "[s^1 t^2 q^4]"
  BigInt engine_value;
  BigInt oracle_value;

  std::string to_string() const;
};

struct VerifyReport {
  std::vector<std::string> lines;
  std::optional<VerifyMismatch> mismatch;
  bool ok() const { return !mismatch.has_value(); }
};

// Every engine in full mode: seven single-pattern targets up to
// `single_n_max` and the two joint targets up to `joint_n_max`.
std::vector<VerifyTarget> standard_targets(int single_n_max, int joint_n_max,
                                           bool refine_q,
                                           const EvalOptions& options = {});

// Compares each target against the brute-force oracle for n = 1..n_max,
// stopping at the first mismatch. Throws LimitExceeded if any target's n_max
// exceeds the oracle limit.
VerifyReport verify_targets(std::span<const VerifyTarget> targets,
                            const OracleOptions& oracle = {});

// First differing coefficient of two same-kind polynomials, if any.
std::optional<std::string> first_difference(const TruncatedPoly& a,
                                            const TruncatedPoly& b,
                                            BigInt* a_value = nullptr,
                                            BigInt* b_value = nullptr);

}  // namespace permfe
