#include "permfe/fe_tailswap.hpp"

#include "permfe/errors.hpp"

namespace permfe {

namespace {

Chain tailswap_chain(int k) {
  if (k < 3 || k > 5) {
    throw NotImplemented("tail-swap engine supports k = 3, 4, 5 (got " +
                         std::to_string(k) + ")");
  }
  return Chain{Chain::Kind::TailSwap, k - 2, TrackedVar::t};
}

}  // namespace

TailSwapStep step_insert_tailswap(const TierState& state, int i, int k) {
  const Chain chain[] = {tailswap_chain(k)};
  InsertStep step = insert_front(state, i, chain);
  return {step.t_exp, std::move(step.child)};
}

std::unique_ptr<ChainScheme> make_tailswap_scheme(int k, Cap r, bool refine_q) {
  return std::make_unique<ChainScheme>(std::vector<Chain>{tailswap_chain(k)}, r,
                                       kFull, refine_q);
}

TruncatedPoly evaluate_tailswap(int k, int n, Cap r, bool refine_q,
                                const EvalOptions& options) {
  const auto scheme = make_tailswap_scheme(k, r, refine_q);
  return evaluate_length(*scheme, n, options);
}

}  // namespace permfe
