#include <gtest/gtest.h>

#include "permfe/engines.hpp"
#include "permfe/errors.hpp"
#include "permfe/fe_increasing.hpp"
#include "permfe/oracle.hpp"
#include "support/reference.hpp"

using namespace permfe;

TEST(Increasing123, Examples) {
  EXPECT_EQ(evaluate_123(3, kFull).to_string(), "5 + t");
  EXPECT_EQ(evaluate_123(0, kFull).to_string(), "1");
  const std::vector<int> catalan{1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  const auto avoiders = single_sequence(Engine::P123, 0, 10);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(avoiders[n - 1], catalan[n - 1]);
  const auto one = single_sequence(Engine::P123, 1, 6);
  EXPECT_EQ(one[3], 6);
  EXPECT_EQ(one[4], 27);
  EXPECT_EQ(one[5], 110);
}

TEST(Increasing123, NoonanFormula) {
  const auto seq = single_sequence(Engine::P123, 1, 20);
  for (int n = 4; n <= 20; ++n) {
    EXPECT_EQ(seq[n - 1], 3 * testref::binomial(2 * n, n - 3) / n) << n;
  }
}

TEST(Increasing1234, Examples) {
  EXPECT_EQ(evaluate_1234(0, kFull).to_string(), "1");
  const std::vector<int> want{1, 2, 6, 23, 103, 513, 2761, 15767};
  const auto got = single_sequence(Engine::P1234, 0, 8);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(got[n - 1], want[n - 1]);
}

TEST(Increasing, MatchesOracle) {
  for (int k = 3; k <= 4; ++k) {
    const std::vector<Permutation> tau{PatternSpec::increasing(k).permutation()};
    for (int n = 0; n <= 8; ++n) {
      const TruncatedPoly p = k == 3 ? evaluate_123(n, kFull) : evaluate_1234(n, kFull);
      EXPECT_EQ(p, to_truncated(brute_force_distribution(n, tau))) << k << " " << n;
    }
  }
}

TEST(Increasing, UnsupportedLength) {
  EXPECT_THROW(make_increasing_scheme(5, 1), NotImplemented);
  EXPECT_THROW(make_increasing_scheme(2, 1), NotImplemented);
}
