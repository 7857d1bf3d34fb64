#pragma once

#include <memory>

#include "permfe/tier_state.hpp"

namespace permfe {

// Increasing patterns 123 and 1234.
//
// Tiers: x (12-pairs by their "1"), y (123-triples by their "1"). Inserting
// i in front of a length-(n-1) permutation contributes x_i^{n-i} and maps,
// for positions j >= i, x_j -> y_i x_{j+1} and top_j -> t top_{j+1}.
// With one tier this is the classical first-entry recursion for 123.

std::unique_ptr<ChainScheme> make_increasing_scheme(int k, Cap r,
                                                    bool refine_q = false);

TruncatedPoly evaluate_123(int n, Cap r, bool refine_q = false,
                           const EvalOptions& options = {});
TruncatedPoly evaluate_1234(int n, Cap r, bool refine_q = false,
                            const EvalOptions& options = {});

}  // namespace permfe
