#include <gtest/gtest.h>

#include "permfe/engines.hpp"
#include "permfe/errors.hpp"
#include "permfe/fe_joint.hpp"
#include "permfe/oracle.hpp"
#include "support/reference_data.hpp"

using namespace permfe;

TEST(Joint123132, ReferenceSequences) {
  const auto a = joint_sequence(JointEngine::P123_132, 2, 2, 15);
  const auto b = joint_sequence(JointEngine::P123_132, 4, 2, 15);
  for (int k = 0; k < 15; ++k) {
    EXPECT_EQ(a[k], refdata::joint_2_2[k]) << k + 1;
    EXPECT_EQ(b[k], refdata::joint_4_2[k]) << k + 1;
  }
}

TEST(Joint123132, DoubleAvoiders) {
  const auto seq = joint_sequence(JointEngine::P123_132, 0, 0, 16);
  for (int n = 1; n <= 16; ++n) EXPECT_EQ(seq[n - 1], BigInt(1) << (n - 1)) << n;
}

TEST(Joint12341243, SchroderNumbers) {
  const std::vector<long> schroder{1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098};
  const auto seq = joint_sequence(JointEngine::P1234_1243, 0, 0, 10);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(seq[n - 1], schroder[n - 1]) << n;
  EXPECT_EQ(evaluate_joint_1234_1243(0, kFull, kFull).to_string(), "1");
}

TEST(Joint, MatchesOracle) {
  for (JointEngine e : all_joint_engines()) {
    const auto names = joint_patterns(e);
    const std::vector<Permutation> taus{Permutation::parse(names[0]),
                                        Permutation::parse(names[1])};
    auto scheme = make_joint_scheme(e, kFull, kFull, false);
    for (int n = 0; n <= 7; ++n) {
      EXPECT_EQ(evaluate_length(*scheme, n), to_truncated(brute_force_distribution(n, taus)))
          << names[0] << "+" << names[1] << " n=" << n;
    }
  }
}

TEST(Joint, Marginals) {
  const struct {
    JointEngine joint;
    Engine first;
    Engine second;
  } cases[] = {{JointEngine::P123_132, Engine::P123, Engine::P132},
               {JointEngine::P1234_1243, Engine::P1234, Engine::P1243}};
  for (const auto& c : cases) {
    auto joint = make_joint_scheme(c.joint, kFull, kFull, false);
    for (int n = 0; n <= 7; ++n) {
      const TruncatedPoly p = evaluate_length(*joint, n);
      EXPECT_EQ(p.sum_over_s(), evaluate_length(*make_scheme(c.second, kFull, false), n));
      EXPECT_EQ(p.sum_over_t_as_t(), evaluate_length(*make_scheme(c.first, kFull, false), n));
    }
  }
}

TEST(Joint, BidegreeCaps) {
  const TruncatedPoly p = evaluate_joint_123_132(7, 1, 2);
  EXPECT_EQ(p.kind(), PolyKind::bidegree());
  EXPECT_EQ(p.s_cap(), Cap(1));
  EXPECT_EQ(p.t_cap(), Cap(2));
  const TruncatedPoly full = evaluate_joint_123_132(7, kFull, kFull);
  for (int s = 0; s <= 1; ++s) {
    for (int t = 0; t <= 2; ++t) EXPECT_EQ(p.coeff(t, s), full.coeff(t, s));
  }
  EXPECT_EQ(p.coeff(3, 0), 0);
  EXPECT_THROW(make_joint_scheme(5, 1, 1), NotImplemented);
}
