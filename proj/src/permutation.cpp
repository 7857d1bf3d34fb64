#include "permfe/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "permfe/errors.hpp"

namespace permfe {

Permutation::Permutation(std::vector<int> elems) : elems_(std::move(elems)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : elems_) {
    if (v < 1 || v > n) {
      throw InvalidInput("permutation entry " + std::to_string(v) +
                         " outside 1.." + std::to_string(n));
    }
    if (seen[v]) {
      throw InvalidInput("permutation entry " + std::to_string(v) +
                         " repeated");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  const bool separated = text.find_first_of(" ,\t") != std::string_view::npos;
  std::vector<int> elems;
  if (!separated) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0') {
        throw InvalidInput("bad permutation digit '" + std::string(1, c) +
                           "' in \"" + std::string(text) + "\"");
      }
      elems.push_back(c - '0');
    }
    return Permutation(std::move(elems));
  }
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    for (char c : token) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw InvalidInput("bad permutation entry \"" + token + "\"");
      }
    }
    elems.push_back(std::stoi(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return Permutation(std::move(elems));
}

Permutation Permutation::reversed() const {
  std::vector<int> e(elems_.rbegin(), elems_.rend());
  return Permutation(std::move(e));
}

Permutation Permutation::complemented() const {
  std::vector<int> e(elems_);
  for (int& v : e) v = size() + 1 - v;
  return Permutation(std::move(e));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) {
    if (i) out << ' ';
    out << elems_[i];
  }
  return out.str();
}

std::string Permutation::to_compact_string() const {
  std::string s;
  for (int v : elems_) s += std::to_string(v);
  return s;
}

Permutation reduce(std::span<const int> word) {
  std::vector<int> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  for (int v : word) {
    if (v < 1) throw InvalidInput("reduce: entries must be positive");
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return word[a] < word[b]; });
  std::vector<int> out(word.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && word[order[rank]] == word[order[rank - 1]]) {
      throw InvalidInput("reduce: duplicate entry " +
                         std::to_string(word[order[rank]]));
    }
    out[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(out));
}

namespace {

// Extends a partial occurrence (positions chosen for tau[0..depth)) by one
// more position, checking order-isomorphism against every earlier entry.
std::uint64_t extend_occurrence(const Permutation& pi, const Permutation& tau,
                                std::vector<int>& chosen, int depth,
                                int start) {
  const int k = tau.size();
  if (depth == k) return 1;
  std::uint64_t total = 0;
  const int n = pi.size();
  for (int pos = start; pos <= n - (k - depth); ++pos) {
    const int v = pi[pos];
    bool ok = true;
    for (int p = 0; p < depth && ok; ++p) {
      ok = (pi[chosen[p]] < v) == (tau[p] < tau[depth]);
    }
    if (!ok) continue;
    chosen[depth] = pos;
    total += extend_occurrence(pi, tau, chosen, depth + 1, pos + 1);
  }
  return total;
}

}  // namespace

std::uint64_t count_occurrences(const Permutation& pi, const Permutation& tau) {
  if (tau.size() > pi.size()) return 0;
  if (tau.size() == 0) return 1;
  std::vector<int> chosen(tau.size());
  return extend_occurrence(pi, tau, chosen, 0, 0);
}

std::uint64_t inversions(const Permutation& pi) {
  std::uint64_t inv = 0;
  for (int i = 0; i < pi.size(); ++i) {
    for (int j = i + 1; j < pi.size(); ++j) {
      if (pi[i] > pi[j]) ++inv;
    }
  }
  return inv;
}

PatternSpec PatternSpec::increasing(int k) {
  if (k < 2) throw InvalidInput("increasing pattern needs k >= 2");
  return PatternSpec(Kind::Increasing, Permutation::identity(k));
}

PatternSpec PatternSpec::tail_swap(int k) {
  if (k < 3) throw InvalidInput("tail-swap pattern needs k >= 3");
  std::vector<int> e(k);
  std::iota(e.begin(), e.end(), 1);
  std::swap(e[k - 2], e[k - 1]);
  return PatternSpec(Kind::TailSwap, Permutation(std::move(e)));
}

PatternSpec PatternSpec::cycle(int k) {
  if (k < 3) throw InvalidInput("cycle pattern needs k >= 3");
  std::vector<int> e(k);
  for (int i = 0; i < k - 1; ++i) e[i] = i + 2;
  e[k - 1] = 1;
  return PatternSpec(Kind::Cycle, Permutation(std::move(e)));
}

PatternSpec PatternSpec::explicit_pattern(Permutation tau) {
  return PatternSpec(Kind::Explicit, std::move(tau));
}

PatternSpec PatternSpec::from_permutation(const Permutation& tau) {
  const int k = tau.size();
  if (k >= 2 && tau == increasing(k).permutation()) return increasing(k);
  if (k >= 3 && tau == tail_swap(k).permutation()) return tail_swap(k);
  if (k >= 3 && tau == cycle(k).permutation()) return cycle(k);
  return explicit_pattern(tau);
}

PatternSpec PatternSpec::parse(std::string_view text) {
  return from_permutation(Permutation::parse(text));
}

std::string PatternSpec::name() const {
  return pattern_.size() <= 9 ? pattern_.to_compact_string()
                              : pattern_.to_string();
}

}  // namespace permfe
