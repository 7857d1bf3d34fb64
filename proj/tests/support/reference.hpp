#pragma once

#include <vector>

#include "permfe/bigint.hpp"
#include "permfe/tier_state.hpp"
#include "permfe/truncated_poly.hpp"

// Slow, independent recursions the engines are checked against.
namespace permfe::testref {

// The chain recursion without exponent saturation or branch pruning; only
// the resulting polynomials are chopped at the caps.
TruncatedPoly unsaturated_chain(const std::vector<Chain>& chains, int n,
                                Cap t_cap, Cap s_cap = kFull);

// The vector / triangle recursions for 231 and 2341 without saturation.
TruncatedPoly unsaturated_231(int n, Cap r);
TruncatedPoly unsaturated_2341(int n, Cap r);

// The same recursions on full n x n exponent matrices (no identical-rows
// reduction, no triangle restriction), in full mode.
TruncatedPoly full_matrix_231(int n);
TruncatedPoly full_matrix_2341(int n);

using Matrix = std::vector<std::vector<int>>;
// Row i deleted, columns i and i+1 merged with an extra +1 (i < n); for
// i = n the last row and column are dropped.
Matrix r1_full(const Matrix& x, int i);
// Row i deleted, columns i and i+1 merged plus y_{i,i}, and entries below
// row i left of column i raised by y_{i,c}.
Matrix r2_full(const Matrix& x, const Matrix& y, int i);

BigInt factorial(int n);
BigInt binomial(int n, int k);
// Coefficients of prod_{i=1..n} (1 + q + ... + q^{i-1}).
std::vector<BigInt> mahonian(int n);

}  // namespace permfe::testref
