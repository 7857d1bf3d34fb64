#include "permfe/verify.hpp"

#include <algorithm>
#include <sstream>

#include "permfe/engines.hpp"
#include "permfe/errors.hpp"

namespace permfe {

std::string VerifyMismatch::to_string() const {
  std::ostringstream out;
  out << "mismatch: " << target << " n=" << n << " coefficient " << coefficient
      << ": engine=" << engine_value << " oracle=" << oracle_value;
  return out.str();
}

std::vector<VerifyTarget> standard_targets(int single_n_max, int joint_n_max,
                                           bool refine_q,
                                           const EvalOptions& options) {
  std::vector<VerifyTarget> targets;
  for (Engine e : all_engines()) {
    targets.push_back({engine_pattern(e),
                       {engine_permutation(e)},
                       [e, refine_q, options](int n) {
                         return evaluate_length(*make_scheme(e, kFull, refine_q),
                                                n, options);
                       },
                       refine_q, single_n_max});
  }
  for (JointEngine e : all_joint_engines()) {
    const auto names = joint_patterns(e);
    targets.push_back({names[0] + "+" + names[1],
                       {Permutation::parse(names[0]), Permutation::parse(names[1])},
                       [e, refine_q, options](int n) {
                         return evaluate_length(
                             *make_joint_scheme(e, kFull, kFull, refine_q), n,
                             options);
                       },
                       refine_q, joint_n_max});
  }
  return targets;
}

std::optional<std::string> first_difference(const TruncatedPoly& a,
                                            const TruncatedPoly& b,
                                            BigInt* a_value, BigInt* b_value) {
  if (!(a.kind() == b.kind())) return "kind";
  const int nt = std::max(a.t_extent(), b.t_extent());
  const int ns = std::max(a.s_extent(), b.s_extent());
  const int nq = std::max(a.q_extent(), b.q_extent());
  for (int t = 0; t < nt; ++t) {
    for (int s = 0; s < ns; ++s) {
      for (int q = 0; q < nq; ++q) {
        if (a.coeff(t, s, q) == b.coeff(t, s, q)) continue;
        if (a_value) *a_value = a.coeff(t, s, q);
        if (b_value) *b_value = b.coeff(t, s, q);
        std::ostringstream label;
        label << '[';
        if (a.kind().has_s) label << "s^" << s << ' ';
        label << "t^" << t;
        if (a.kind().has_q) label << " q^" << q;
        label << ']';
        return label.str();
      }
    }
  }
  return std::nullopt;
}

VerifyReport verify_targets(std::span<const VerifyTarget> targets,
                            const OracleOptions& oracle) {
  for (const auto& target : targets) {
    if (target.n_max > oracle.limit) {
      throw LimitExceeded("verification up to n=" + std::to_string(target.n_max) +
                          " exceeds the oracle limit " +
                          std::to_string(oracle.limit) +
                          " (raise it with --oracle-limit)");
    }
  }
  VerifyReport report;
  for (const auto& target : targets) {
    OracleOptions opts = oracle;
    opts.track_inversions = target.refine_q;
    for (int n = 1; n <= target.n_max; ++n) {
      const TruncatedPoly expected =
          to_truncated(brute_force_distribution(n, target.patterns, opts));
      const TruncatedPoly got = target.engine(n);
      VerifyMismatch m{target.name, n, {}, 0, 0};
      if (auto where = first_difference(got, expected, &m.engine_value,
                                        &m.oracle_value)) {
        m.coefficient = *where;
        report.lines.push_back(m.to_string());
        report.mismatch = std::move(m);
        return report;
      }
    }
    report.lines.push_back("ok: " + target.name + " n=1.." +
                           std::to_string(target.n_max));
  }
  return report;
}

}  // namespace permfe
