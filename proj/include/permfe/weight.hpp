#pragma once

#include <compare>
#include <map>
#include <string>

#include "permfe/permutation.hpp"

namespace permfe {

// Catalytic variable identifier: a tier letter with one index (x_i) or an
// index pair (x_{i,j}). `col` is 0 for single-index variables.
struct VarId {
  char tier = 'x';
  int row = 0;
  int col = 0;

  friend auto operator<=>(const VarId&, const VarId&) = default;
  std::string to_string() const;
};

struct WeightMonomial {
  int t_exponent = 0;
  // Absent keys have exponent 0; stored exponents are always positive.
  std::map<VarId, int> vars;

  int exponent(VarId v) const;
  void bump(VarId v, int by = 1);
  std::string to_string() const;

  friend bool operator==(const WeightMonomial&, const WeightMonomial&) =
      default;
};

// The catalytic weight of `pi` for one of the engine families:
// TailSwap(3..5), Cycle(3..4), Increasing(3..4). Throws NotImplemented for
// anything else.
//
// Variable conventions, all counts over positions a < b < c < d:
//   TailSwap  x_i  21-pairs whose smaller value is i
//             y_i  132-triples whose "1" is i          (k >= 4)
//             z_i  1243-quadruples whose "1" is i      (k == 5)
//   Increasing x_i 12-pairs whose "1" is i
//             y_i  123-triples whose "1" is i          (k == 4)
//   Cycle     x_{i,j}  21-pairs (i, v) with v < j, j <= i
//             y_{i,j}  231-triples (i, w, v) with v < j, j <= i  (k == 4)
WeightMonomial weight_monomial(const Permutation& pi, const PatternSpec& family);

}  // namespace permfe
