#include "permfe/fe_cycle.hpp"

#include <algorithm>

#include "permfe/errors.hpp"

namespace permfe {

namespace {

void check_position(int i, int n) {
  if (i < 1 || i > n) {
    throw InvalidInput("merge position " + std::to_string(i) + " outside 1.." +
                       std::to_string(n));
  }
}

void saturate(std::vector<int>& v, Cap cap) {
  if (!cap) return;
  for (int& e : v) e = std::min(e, *cap + 1);
}

}  // namespace

std::vector<int> r1_merge(std::span<const int> exps, int i) {
  const int n = static_cast<int>(exps.size());
  check_position(i, n);
  std::vector<int> out(exps.begin(), exps.begin() + (i - 1));
  if (i < n) {
    out.push_back(exps[i - 1] + exps[i] + 1);
    out.insert(out.end(), exps.begin() + i + 1, exps.end());
  }
  return out;
}

LowerTriangle::LowerTriangle(int n)
    : n_(n), e_(static_cast<std::size_t>(n) * (n + 1) / 2, 0) {}

LowerTriangle LowerTriangle::from_rows(const std::vector<std::vector<int>>& rows) {
  LowerTriangle m(static_cast<int>(rows.size()));
  for (int b = 1; b <= m.size(); ++b) {
    if (static_cast<int>(rows[b - 1].size()) != b) {
      throw InvalidInput("lower-triangular row " + std::to_string(b) +
                         " must have " + std::to_string(b) + " entries");
    }
    for (int c = 1; c <= b; ++c) m.at(b, c) = rows[b - 1][c - 1];
  }
  return m;
}

LowerTriangle r2_merge(const LowerTriangle& cmat, std::span<const int> dvec,
                       int i) {
  const int n = cmat.size();
  check_position(i, n);
  if (static_cast<int>(dvec.size()) != n) {
    throw InvalidInput("d vector length must match the triangle");
  }
  LowerTriangle out(n - 1);
  for (int row = 1; row <= n - 1; ++row) {
    if (row < i) {
      for (int c = 1; c <= row; ++c) out.at(row, c) = cmat.at(row, c);
      continue;
    }
    const int b = row + 1;
    for (int c = 1; c <= row; ++c) {
      if (c < i) {
        out.at(row, c) = cmat.at(b, c) + dvec[c - 1];
      } else if (c == i) {
        out.at(row, c) = cmat.at(b, i) + cmat.at(b, i + 1) + dvec[i - 1];
      } else {
        out.at(row, c) = cmat.at(b, c + 1);
      }
    }
  }
  return out;
}

Cycle231Scheme::Cycle231Scheme(Cap r, bool refine_q) : cap_(r), refine_q_(refine_q) {}

StateKey Cycle231Scheme::encode(std::span<const int> exps) {
  StateKey key;
  for (int e : exps) append_exponent(key, e);
  return key;
}

std::vector<int> Cycle231Scheme::decode(const StateKey& key) {
  std::vector<int> exps(exponent_slots(key));
  for (std::size_t s = 0; s < exps.size(); ++s) exps[s] = read_exponent(key, s);
  return exps;
}

StateKey Cycle231Scheme::root(int n) const {
  return encode(std::vector<int>(n, 0));
}

int Cycle231Scheme::length(const StateKey& state) const {
  return static_cast<int>(exponent_slots(state));
}

void Cycle231Scheme::expand(const StateKey& key, std::vector<Branch>& out) const {
  out.clear();
  const std::vector<int> exps = decode(key);
  const int n = static_cast<int>(exps.size());
  int prefactor = 0;
  for (int i = 1; i <= n; ++i) {
    prefactor += (i - 1) * exps[i - 1];
    // The prefactor only grows with i.
    if (cap_ && prefactor > *cap_) return;
    std::vector<int> child = r1_merge(exps, i);
    saturate(child, cap_);
    if (!child.empty()) child[0] = 0;
    out.push_back({prefactor, 0, refine_q_ ? i - 1 : 0, encode(child)});
  }
}

Cycle2341Scheme::Cycle2341Scheme(Cap r, bool refine_q) : cap_(r), refine_q_(refine_q) {}

StateKey Cycle2341Scheme::encode(const LowerTriangle& cmat,
                                 std::span<const int> dvec) {
  StateKey key;
  for (int e : cmat.entries()) append_exponent(key, e);
  for (int e : dvec) append_exponent(key, e);
  return key;
}

int Cycle2341Scheme::length(const StateKey& state) const {
  // n(n+1)/2 triangle slots plus n vector slots.
  const std::size_t slots = exponent_slots(state);
  int n = 0;
  while (static_cast<std::size_t>(n) * (n + 3) / 2 < slots) ++n;
  if (static_cast<std::size_t>(n) * (n + 3) / 2 != slots) {
    throw InvalidInput("malformed 2341 state key");
  }
  return n;
}

void Cycle2341Scheme::decode(const StateKey& key, LowerTriangle& cmat,
                             std::vector<int>& dvec) {
  const int n = Cycle2341Scheme(kFull, false).length(key);
  cmat = LowerTriangle(n);
  std::size_t slot = 0;
  for (int& e : cmat.entries()) e = read_exponent(key, slot++);
  dvec.resize(n);
  for (int& e : dvec) e = read_exponent(key, slot++);
}

StateKey Cycle2341Scheme::root(int n) const {
  return encode(LowerTriangle(n), std::vector<int>(n, 0));
}

void Cycle2341Scheme::expand(const StateKey& key, std::vector<Branch>& out) const {
  out.clear();
  LowerTriangle cmat;
  std::vector<int> dvec;
  decode(key, cmat, dvec);
  const int n = cmat.size();
  for (int i = 1; i <= n; ++i) {
    int prefactor = 0;
    for (int j = 2; j <= i; ++j) prefactor += (j - 1) * cmat.at(i, j);
    if (cap_ && prefactor > *cap_) continue;
    LowerTriangle child = r2_merge(cmat, dvec, i);
    std::vector<int> child_d = r1_merge(dvec, i);
    saturate(child.entries(), cap_);
    saturate(child_d, cap_);
    // Column 1 and d_1 only ever feed column 1, whose prefactor weight is 0.
    for (int b = 1; b <= child.size(); ++b) child.at(b, 1) = 0;
    if (!child_d.empty()) child_d[0] = 0;
    out.push_back({prefactor, 0, refine_q_ ? i - 1 : 0, encode(child, child_d)});
  }
}

TruncatedPoly evaluate_231(int n, Cap r, bool refine_q,
                           const EvalOptions& options) {
  return evaluate_length(Cycle231Scheme(r, refine_q), n, options);
}

TruncatedPoly evaluate_2341(int n, Cap r, bool refine_q,
                            const EvalOptions& options) {
  return evaluate_length(Cycle2341Scheme(r, refine_q), n, options);
}

}  // namespace permfe
