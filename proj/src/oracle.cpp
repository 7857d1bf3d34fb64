#include "permfe/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "permfe/errors.hpp"

namespace permfe {

namespace {

using Tally = std::map<std::vector<int>, std::uint64_t>;

void check_request(int n, std::span<const Permutation> taus,
                   const OracleOptions& options) {
  if (taus.empty()) throw InvalidInput("oracle needs at least one pattern");
  for (const auto& tau : taus) {
    if (tau.size() == 0) throw InvalidInput("oracle patterns must be nonempty");
  }
  if (n < 0) throw InvalidInput("n must be >= 0");
  if (n > options.limit) {
    throw LimitExceeded("n=" + std::to_string(n) + " exceeds the oracle limit " +
                        std::to_string(options.limit) +
                        " (raise it with --oracle-limit)");
  }
}

void tally(const std::vector<int>& word, std::span<const Permutation> taus,
           bool with_q, Tally& into, std::vector<int>& exps) {
  const Permutation pi(word);
  for (std::size_t j = 0; j < taus.size(); ++j) {
    exps[j] = static_cast<int>(count_occurrences(pi, taus[j]));
  }
  if (with_q) exps.back() = static_cast<int>(inversions(pi));
  ++into[exps];
}

// Every permutation of {1..n} whose one-line form starts with `prefix`.
void scan_with_prefix(int n, const std::vector<int>& prefix,
                      std::span<const Permutation> taus, bool with_q,
                      Tally& into) {
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v) {
    if (std::find(prefix.begin(), prefix.end(), v) == prefix.end()) {
      rest.push_back(v);
    }
  }
  std::vector<int> word(prefix);
  word.resize(n);
  std::vector<int> exps(taus.size() + (with_q ? 1 : 0));
  do {
    std::copy(rest.begin(), rest.end(), word.begin() + prefix.size());
    tally(word, taus, with_q, into, exps);
  } while (std::next_permutation(rest.begin(), rest.end()));
}

Distribution finish(const Tally& t, std::size_t patterns, bool with_q) {
  Distribution d;
  d.patterns = static_cast<int>(patterns);
  d.has_q = with_q;
  for (const auto& [exps, count] : t) d.terms[exps] = count;
  return d;
}

}  // namespace

BigInt Distribution::total() const {
  BigInt sum = 0;
  for (const auto& [exps, c] : terms) sum += c;
  return sum;
}

const BigInt& Distribution::coeff(const std::vector<int>& exps) const {
  static const BigInt zero = 0;
  auto it = terms.find(exps);
  return it == terms.end() ? zero : it->second;
}

std::string Distribution::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [exps, c] : terms) {
    if (!first) out << " + ";
    first = false;
    std::vector<std::string> factors;
    for (std::size_t j = 0; j < exps.size(); ++j) {
      if (exps[j] == 0) continue;
      std::string var;
      if (has_q && j + 1 == exps.size()) {
        var = "q";
      } else if (patterns == 1) {
        var = "t";
      } else {
        var = "t" + std::to_string(j + 1);
      }
      factors.push_back(exps[j] == 1 ? var : var + "^" + std::to_string(exps[j]));
    }
    if (factors.empty() || c != 1) {
      out << c;
      if (!factors.empty()) out << '*';
    }
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (f) out << '*';
      out << factors[f];
    }
  }
  return first ? "0" : out.str();
}

Distribution brute_force_distribution_serial(int n,
                                             std::span<const Permutation> taus,
                                             const OracleOptions& options) {
  check_request(n, taus, options);
  Tally t;
  scan_with_prefix(n, {}, taus, options.track_inversions, t);
  return finish(t, taus.size(), options.track_inversions);
}

Distribution brute_force_distribution(int n, std::span<const Permutation> taus,
                                      const OracleOptions& options) {
  check_request(n, taus, options);
  if (n < 3) return brute_force_distribution_serial(n, taus, options);

  std::vector<std::vector<int>> prefixes;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a != b) prefixes.push_back({a, b});
    }
  }
  const bool with_q = options.track_inversions;
  const int tasks = static_cast<int>(prefixes.size());
  std::vector<Tally> partial(tasks);

#pragma omp parallel for schedule(dynamic, 1)
  for (int task = 0; task < tasks; ++task) {
    scan_with_prefix(n, prefixes[task], taus, with_q, partial[task]);
  }

  Tally merged;
  for (const auto& p : partial) {
    for (const auto& [exps, count] : p) merged[exps] += count;
  }
  return finish(merged, taus.size(), with_q);
}

TruncatedPoly to_truncated(const Distribution& d) {
  if (d.patterns < 1 || d.patterns > 2) {
    throw InvalidInput("to_truncated handles one or two patterns");
  }
  const PolyKind kind{d.patterns == 2, d.has_q};
  TruncatedPoly out(kind, kFull, kFull);
  for (const auto& [exps, c] : d.terms) {
    const int q = d.has_q ? exps.back() : 0;
    if (d.patterns == 1) {
      out.add_term(exps[0], 0, q, c);
    } else {
      out.add_term(exps[1], exps[0], q, c);
    }
  }
  return out;
}

}  // namespace permfe
