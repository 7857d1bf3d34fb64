#pragma once

#include <memory>

#include "permfe/tier_state.hpp"

namespace permfe {

// Engines for 12...(k-2)(k)(k-1), k = 3 (132), 4 (1243), 5 (12354).
//
// Tiers, bottom to top: x (21-pairs by smaller value), y (132-triples by
// their "1"), z (1243-quadruples by their "1"). Inserting i in front
// contributes x_1...x_{i-1} and maps, for positions j >= i,
//   x_j -> y_i x_{j+1},  y_j -> z_i y_{j+1},  top_j -> t top_{j+1}.

struct TailSwapStep {
  int prefactor_t_exponent = 0;
  TierState state;
};

// Unsaturated single branch. Throws InvalidInput if i or k is out of range.
TailSwapStep step_insert_tailswap(const TierState& state, int i, int k);

std::unique_ptr<ChainScheme> make_tailswap_scheme(int k, Cap r,
                                                  bool refine_q = false);

// f_n(t) (g_n(t,q) when refine_q) chopped at r; r = kFull for the whole
// polynomial.
TruncatedPoly evaluate_tailswap(int k, int n, Cap r, bool refine_q = false,
                                const EvalOptions& options = {});

}  // namespace permfe
