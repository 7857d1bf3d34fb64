#include <gtest/gtest.h>

#include <vector>

#include "permfe/engines.hpp"
#include "permfe/errors.hpp"
#include "permfe/evaluator.hpp"

using namespace permfe;

TEST(StateKey, ExponentRoundTrip) {
  StateKey key;
  append_exponent(key, 0);
  append_exponent(key, 7);
  append_exponent(key, 65535);
  ASSERT_EQ(exponent_slots(key), 3u);
  EXPECT_EQ(read_exponent(key, 0), 0);
  EXPECT_EQ(read_exponent(key, 1), 7);
  EXPECT_EQ(read_exponent(key, 2), 65535);
  EXPECT_THROW(append_exponent(key, 65536), LimitExceeded);
  EXPECT_THROW(append_exponent(key, -1), LimitExceeded);
}

TEST(Evaluator, SerialAndLayeredAgree) {
  for (Engine e : all_engines()) {
    for (Cap r : {Cap(0), Cap(2), kFull}) {
      auto scheme = make_scheme(e, r, true);
      const std::vector<int> lengths{0, 1, 4, 7};
      const auto layered = evaluate_lengths(*scheme, lengths, {EvalMode::Layered, 0});
      const auto serial = evaluate_lengths(*scheme, lengths, {EvalMode::Serial, 0});
      for (std::size_t k = 0; k < lengths.size(); ++k) {
        EXPECT_EQ(layered[k], serial[k]) << engine_pattern(e) << " n=" << lengths[k];
      }
    }
  }
}

TEST(Evaluator, MemoLimitDoesNotChangeResults) {
  auto scheme = make_scheme(Engine::P1243, 2, false);
  const TruncatedPoly unbounded = evaluate_length(*scheme, 9, {EvalMode::Serial, 0});
  for (std::size_t limit : {1u, 5u, 50u}) {
    SerialEvaluator ev(*scheme, limit);
    EXPECT_EQ(ev.evaluate_root(9), unbounded);
    EXPECT_LE(ev.memo_size(), limit);
  }
}

TEST(Evaluator, MemoKeysAreReachableStates) {
  auto scheme = make_scheme(Engine::P132, 1, false);
  SerialEvaluator ev(*scheme);
  ev.evaluate_root(8);
  const StateKey root = scheme->root(8);
  const auto layers = discover_states(*scheme, std::span(&root, 1));
  std::size_t discovered = 0;
  for (const auto& layer : layers) discovered += layer.size();
  // The serial memo skips the empty state, which is the base case.
  EXPECT_EQ(ev.memo_size() + 1, discovered);
}

TEST(Evaluator, DiscoverGroupsByLength) {
  auto scheme = make_scheme(Engine::P231, 1, false);
  const std::vector<StateKey> roots{scheme->root(5), scheme->root(3)};
  const auto layers = discover_states(*scheme, roots);
  ASSERT_EQ(layers.size(), 6u);
  for (std::size_t len = 0; len < layers.size(); ++len) {
    for (const auto& key : layers[len]) EXPECT_EQ(scheme->length(key), static_cast<int>(len));
  }
  const auto results = evaluate_layered(*scheme, roots);
  ASSERT_EQ(results.size(), 2u);
  EXPECT_EQ(results[1], evaluate_length(*scheme, 3, {EvalMode::Serial, 0}));
}

TEST(Evaluator, LengthZeroIsOne) {
  for (Engine e : all_engines()) {
    auto scheme = make_scheme(e, 3, false);
    EXPECT_EQ(evaluate_length(*scheme, 0).to_string(), "1");
    EXPECT_EQ(evaluate_length(*scheme, 1).to_string(), "1");
  }
}
