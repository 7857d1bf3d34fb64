#pragma once

#include <memory>
#include <span>
#include <vector>

#include "permfe/evaluator.hpp"

namespace permfe {

// Engines for the cycle patterns 231 and 2341.
//
// 231 works on one exponent vector c (the common row of an identical-rows
// matrix of catalytic variables); inserting i in front contributes
// c_1^0 c_2^1 ... c_i^{i-1} and merges entries i and i+1 into t c_i c_{i+1}.
//
// 2341 keeps a lower-triangular exponent matrix C plus the vector d that
// stands for an identical-rows matrix D. Inserting i contributes
// C_{i,1}^0 ... C_{i,i}^{i-1}, merges C by R2 and d by R1.

// (e_1..e_{i-1}, e_i + e_{i+1} + 1, e_{i+2}..e_n); for i = n the last entry
// is dropped. Unsaturated. Throws InvalidInput if i is outside 1..n.
std::vector<int> r1_merge(std::span<const int> exps, int i);

// Lower-triangular exponent matrix, rows 1..n, row b holding columns 1..b.
class LowerTriangle {
 public:
  LowerTriangle() = default;
  explicit LowerTriangle(int n);
  // Rows given explicitly; row b must have exactly b entries.
  static LowerTriangle from_rows(const std::vector<std::vector<int>>& rows);

  int size() const { return n_; }
  int& at(int row, int col) { return e_[offset(row) + col - 1]; }
  int at(int row, int col) const { return e_[offset(row) + col - 1]; }
  const std::vector<int>& entries() const { return e_; }
  std::vector<int>& entries() { return e_; }

  friend bool operator==(const LowerTriangle&, const LowerTriangle&) = default;

 private:
  static std::size_t offset(int row) {
    return static_cast<std::size_t>(row - 1) * row / 2;
  }
  int n_ = 0;
  std::vector<int> e_;
};

// R2 on the triangle: row i is deleted, columns i and i+1 merge as
// C_{b,i} + C_{b,i+1} + d_i, and entries C_{b,c} with b > i, c < i gain
// d_c. For i = n the last row is dropped. Unsaturated.
LowerTriangle r2_merge(const LowerTriangle& cmat, std::span<const int> dvec,
                       int i);

class Cycle231Scheme : public RecursionScheme {
 public:
  Cycle231Scheme(Cap r, bool refine_q);

  PolyKind kind() const override { return {false, refine_q_}; }
  Cap t_cap() const override { return cap_; }
  StateKey root(int n) const override;
  int length(const StateKey& state) const override;
  void expand(const StateKey& state, std::vector<Branch>& out) const override;

  static StateKey encode(std::span<const int> exps);
  static std::vector<int> decode(const StateKey& key);

 private:
  Cap cap_;
  bool refine_q_;
};

class Cycle2341Scheme : public RecursionScheme {
 public:
  Cycle2341Scheme(Cap r, bool refine_q);

  PolyKind kind() const override { return {false, refine_q_}; }
  Cap t_cap() const override { return cap_; }
  StateKey root(int n) const override;
  int length(const StateKey& state) const override;
  void expand(const StateKey& state, std::vector<Branch>& out) const override;

  static StateKey encode(const LowerTriangle& cmat, std::span<const int> dvec);
  static void decode(const StateKey& key, LowerTriangle& cmat,
                     std::vector<int>& dvec);

 private:
  Cap cap_;
  bool refine_q_;
};

TruncatedPoly evaluate_231(int n, Cap r, bool refine_q = false,
                           const EvalOptions& options = {});
TruncatedPoly evaluate_2341(int n, Cap r, bool refine_q = false,
                            const EvalOptions& options = {});

}  // namespace permfe
