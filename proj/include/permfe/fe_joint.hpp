#pragma once

#include <memory>

#include "permfe/tier_state.hpp"

namespace permfe {

// Simultaneous tracking of an increasing pattern (variable s) and the
// tail-swap pattern of the same length (variable t): (123, 132) and
// (1234, 1243). The state concatenates both tier chains per position, and
// one insertion drives both:
//   prefactor  s^{(n-i) w_i} * t^{u_1 + ... + u_{i-1}}
// where w is the increasing chain's bottom tier and u the tail-swap chain's.
// The result's coefficient of s^a t^b counts permutations with a
// occurrences of the first pattern and b of the second.

std::unique_ptr<ChainScheme> make_joint_scheme(int k, Cap r1, Cap r2,
                                               bool refine_q = false);

TruncatedPoly evaluate_joint_123_132(int n, Cap r1, Cap r2,
                                     bool refine_q = false,
                                     const EvalOptions& options = {});
TruncatedPoly evaluate_joint_1234_1243(int n, Cap r1, Cap r2,
                                       bool refine_q = false,
                                       const EvalOptions& options = {});

}  // namespace permfe
