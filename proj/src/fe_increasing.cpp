#include "permfe/fe_increasing.hpp"

#include "permfe/errors.hpp"

namespace permfe {

std::unique_ptr<ChainScheme> make_increasing_scheme(int k, Cap r, bool refine_q) {
  if (k != 3 && k != 4) {
    throw NotImplemented("increasing engine supports k = 3, 4 (got " +
                         std::to_string(k) + ")");
  }
  return std::make_unique<ChainScheme>(
      std::vector<Chain>{{Chain::Kind::Increasing, k - 2, TrackedVar::t}}, r,
      kFull, refine_q);
}

TruncatedPoly evaluate_123(int n, Cap r, bool refine_q,
                           const EvalOptions& options) {
  return evaluate_length(*make_increasing_scheme(3, r, refine_q), n, options);
}

TruncatedPoly evaluate_1234(int n, Cap r, bool refine_q,
                            const EvalOptions& options) {
  return evaluate_length(*make_increasing_scheme(4, r, refine_q), n, options);
}

}  // namespace permfe
