#include "reference.hpp"

#include <map>

#include "permfe/fe_cycle.hpp"

namespace permfe::testref {

namespace {

bool uses_s(const std::vector<Chain>& chains) {
  for (const auto& c : chains) {
    if (c.var == TrackedVar::s) return true;
  }
  return false;
}

int total_tiers(const std::vector<Chain>& chains) {
  int t = 0;
  for (const auto& c : chains) t += c.tiers;
  return t;
}

struct ChainRef {
  const std::vector<Chain>& chains;
  PolyKind kind;
  Cap t_cap;
  Cap s_cap;
  std::map<std::vector<std::vector<int>>, TruncatedPoly> memo;

  TruncatedPoly eval(const TierState& state) {
    if (state.length() == 0) return TruncatedPoly::one(kind, t_cap, s_cap);
    std::vector<std::vector<int>> key;
    for (int l = 0; l < state.tiers(); ++l) key.push_back(state.tier(l));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    TruncatedPoly acc(kind, t_cap, s_cap);
    for (int i = 1; i <= state.length(); ++i) {
      InsertStep step = insert_front(state, i, chains);
      acc.add_shifted(eval(step.child), step.t_exp, step.s_exp);
    }
    memo.emplace(key, acc);
    return acc;
  }
};

struct Vec231Ref {
  Cap cap;
  std::map<std::vector<int>, TruncatedPoly> memo;

  TruncatedPoly eval(const std::vector<int>& e) {
    const int n = static_cast<int>(e.size());
    if (n == 0) return TruncatedPoly::one(PolyKind::plain(), cap);
    if (auto it = memo.find(e); it != memo.end()) return it->second;
    TruncatedPoly acc(PolyKind::plain(), cap);
    int pre = 0;
    for (int i = 1; i <= n; ++i) {
      pre += (i - 1) * e[i - 1];
      acc.add_shifted(eval(r1_merge(e, i)), pre);
    }
    memo.emplace(e, acc);
    return acc;
  }
};

struct Tri2341Ref {
  Cap cap;
  std::map<std::pair<std::vector<int>, std::vector<int>>, TruncatedPoly> memo;

  TruncatedPoly eval(const LowerTriangle& c, const std::vector<int>& d) {
    const int n = c.size();
    if (n == 0) return TruncatedPoly::one(PolyKind::plain(), cap);
    auto key = std::make_pair(c.entries(), d);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    TruncatedPoly acc(PolyKind::plain(), cap);
    for (int i = 1; i <= n; ++i) {
      int pre = 0;
      for (int j = 1; j <= i; ++j) pre += (j - 1) * c.at(i, j);
      acc.add_shifted(eval(r2_merge(c, d, i), r1_merge(d, i)), pre);
    }
    memo.emplace(key, acc);
    return acc;
  }
};

Matrix square(int n) { return Matrix(n, std::vector<int>(n, 0)); }

int row_prefactor(const Matrix& x, int i) {
  int pre = 0;
  for (int j = 1; j <= i; ++j) pre += (j - 1) * x[i - 1][j - 1];
  return pre;
}

struct Full231Ref {
  std::map<Matrix, TruncatedPoly> memo;

  TruncatedPoly eval(const Matrix& x) {
    const int n = static_cast<int>(x.size());
    if (n == 0) return TruncatedPoly::one(PolyKind::plain(), kFull);
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    TruncatedPoly acc(PolyKind::plain(), kFull);
    for (int i = 1; i <= n; ++i) acc.add_shifted(eval(r1_full(x, i)), row_prefactor(x, i));
    memo.emplace(x, acc);
    return acc;
  }
};

struct Full2341Ref {
  std::map<std::pair<Matrix, Matrix>, TruncatedPoly> memo;

  TruncatedPoly eval(const Matrix& x, const Matrix& y) {
    const int n = static_cast<int>(x.size());
    if (n == 0) return TruncatedPoly::one(PolyKind::plain(), kFull);
    auto key = std::make_pair(x, y);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    TruncatedPoly acc(PolyKind::plain(), kFull);
    for (int i = 1; i <= n; ++i) {
      acc.add_shifted(eval(r2_full(x, y, i), r1_full(y, i)), row_prefactor(x, i));
    }
    memo.emplace(key, acc);
    return acc;
  }
};

}  // namespace

TruncatedPoly unsaturated_chain(const std::vector<Chain>& chains, int n,
                                Cap t_cap, Cap s_cap) {
  const bool with_s = uses_s(chains);
  ChainRef ref{chains, with_s ? PolyKind::bidegree() : PolyKind::plain(), t_cap,
               with_s ? s_cap : kFull, {}};
  return ref.eval(TierState::zeros(total_tiers(chains), n));
}

TruncatedPoly unsaturated_231(int n, Cap r) {
  Vec231Ref ref{r, {}};
  return ref.eval(std::vector<int>(n, 0));
}

TruncatedPoly unsaturated_2341(int n, Cap r) {
  Tri2341Ref ref{r, {}};
  return ref.eval(LowerTriangle(n), std::vector<int>(n, 0));
}

Matrix r1_full(const Matrix& x, int i) {
  const int n = static_cast<int>(x.size());
  Matrix out;
  for (int b = 1; b <= n; ++b) {
    if (b == i) continue;
    std::vector<int> row;
    for (int c = 1; c <= n; ++c) {
      if (i == n && c == n) continue;
      if (c == i && i < n) {
        row.push_back(x[b - 1][c - 1] + x[b - 1][c] + 1);
        ++c;
        continue;
      }
      row.push_back(x[b - 1][c - 1]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

Matrix r2_full(const Matrix& x, const Matrix& y, int i) {
  const int n = static_cast<int>(x.size());
  Matrix out;
  for (int b = 1; b <= n; ++b) {
    if (b == i) continue;
    std::vector<int> row;
    for (int c = 1; c <= n; ++c) {
      if (i == n && c == n) continue;
      if (c == i && i < n) {
        row.push_back(x[b - 1][c - 1] + x[b - 1][c] + y[i - 1][i - 1]);
        ++c;
        continue;
      }
      int v = x[b - 1][c - 1];
      if (b > i && c < i) v += y[i - 1][c - 1];
      row.push_back(v);
    }
    out.push_back(std::move(row));
  }
  return out;
}

TruncatedPoly full_matrix_231(int n) {
  Full231Ref ref;
  return ref.eval(square(n));
}

TruncatedPoly full_matrix_2341(int n) {
  Full2341Ref ref;
  return ref.eval(square(n), square(n));
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
  return b;
}

std::vector<BigInt> mahonian(int n) {
  std::vector<BigInt> p{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next(p.size() + i - 1, 0);
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (int b = 0; b < i; ++b) next[a + b] += p[a];
    }
    p = std::move(next);
  }
  return p;
}

}  // namespace permfe::testref
