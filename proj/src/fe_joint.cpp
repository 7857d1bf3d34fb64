#include "permfe/fe_joint.hpp"

#include "permfe/errors.hpp"

namespace permfe {

std::unique_ptr<ChainScheme> make_joint_scheme(int k, Cap r1, Cap r2,
                                               bool refine_q) {
  if (k != 3 && k != 4) {
    throw NotImplemented("joint engines exist for (123,132) and (1234,1243)");
  }
  std::vector<Chain> chains{{Chain::Kind::Increasing, k - 2, TrackedVar::s},
                            {Chain::Kind::TailSwap, k - 2, TrackedVar::t}};
  return std::make_unique<ChainScheme>(std::move(chains), r2, r1, refine_q);
}

TruncatedPoly evaluate_joint_123_132(int n, Cap r1, Cap r2, bool refine_q,
                                     const EvalOptions& options) {
  return evaluate_length(*make_joint_scheme(3, r1, r2, refine_q), n, options);
}

TruncatedPoly evaluate_joint_1234_1243(int n, Cap r1, Cap r2, bool refine_q,
                                       const EvalOptions& options) {
  return evaluate_length(*make_joint_scheme(4, r1, r2, refine_q), n, options);
}

}  // namespace permfe
