#include "properties.hpp"

#include <random>
#include <sstream>

#include "permfe/engines.hpp"
#include "permfe/seqtools.hpp"
#include "permfe/tier_state.hpp"
#include "reference.hpp"

namespace permfe::testprops {

namespace {

std::string where(const std::string& what, int n, const std::string& params) {
  std::ostringstream out;
  out << what << " n=" << n << " " << params;
  return out.str();
}

BigInt total(const TruncatedPoly& p) {
  BigInt sum = 0;
  for (int t = 0; t < p.t_extent(); ++t) {
    for (int s = 0; s < p.s_extent(); ++s) {
      for (int q = 0; q < p.q_extent(); ++q) sum += p.coeff(t, s, q);
    }
  }
  return sum;
}

bool low_order_agree(const TruncatedPoly& truncated, const TruncatedPoly& full,
                     int t_max, int s_max) {
  for (int t = 0; t <= t_max; ++t) {
    for (int s = 0; s <= s_max; ++s) {
      if (truncated.coeff(t, s) != full.coeff(t, s)) return false;
    }
  }
  return true;
}

}  // namespace

std::string truncation_consistency() {
  for (Engine e : all_engines()) {
    for (int n = 0; n <= 9; ++n) {
      const TruncatedPoly full = evaluate_length(*make_scheme(e, kFull, false), n);
      for (int r = 0; r <= 3; ++r) {
        const TruncatedPoly cut = evaluate_length(*make_scheme(e, r, false), n);
        if (!low_order_agree(cut, full, r, 0)) {
          return where("truncation mismatch " + engine_pattern(e), n,
                       "r=" + std::to_string(r));
        }
      }
    }
  }
  for (JointEngine e : all_joint_engines()) {
    for (int n = 0; n <= 7; ++n) {
      const TruncatedPoly full =
          evaluate_length(*make_joint_scheme(e, kFull, kFull, false), n);
      for (int r1 = 0; r1 <= 2; ++r1) {
        for (int r2 = 0; r2 <= 2; ++r2) {
          const TruncatedPoly cut =
              evaluate_length(*make_joint_scheme(e, r1, r2, false), n);
          if (!low_order_agree(cut, full, r2, r1)) {
            return where("joint truncation mismatch", n,
                         "caps=" + std::to_string(r1) + "," + std::to_string(r2));
          }
        }
      }
    }
  }
  return {};
}

std::string state_monotonicity() {
  std::vector<std::unique_ptr<RecursionScheme>> schemes;
  std::vector<int> max_n;
  for (Cap r : {Cap(0), Cap(1), Cap(2), Cap(3), kFull}) {
    const int n = r ? 11 : 8;
    for (Engine e : all_engines()) {
      schemes.push_back(make_scheme(e, r, false));
      max_n.push_back(n);
    }
    for (JointEngine e : all_joint_engines()) {
      schemes.push_back(make_joint_scheme(e, r, r, false));
      max_n.push_back(r ? 9 : 7);
    }
  }
  for (std::size_t k = 0; k < schemes.size(); ++k) {
    const auto* chain = dynamic_cast<const ChainScheme*>(schemes[k].get());
    if (!chain) continue;
    const StateKey root = chain->root(max_n[k]);
    const auto layers = discover_states(*chain, std::span(&root, 1));
    for (const auto& layer : layers) {
      for (const auto& key : layer) {
        const TierState st = TierState::from_key(chain->tiers(), key);
        if (!st.is_monotone()) {
          return where("non-monotone state", st.length(),
                       "tiers=" + std::to_string(chain->tiers()));
        }
      }
    }
  }
  return {};
}

std::string saturation_safety() {
  for (Engine e : all_engines()) {
    for (int r = 0; r <= 2; ++r) {
      auto scheme = make_scheme(e, r, false);
      for (int n = 0; n <= 8; ++n) {
        TruncatedPoly reference;
        if (e == Engine::P231) {
          reference = testref::unsaturated_231(n, r);
        } else if (e == Engine::P2341) {
          reference = testref::unsaturated_2341(n, r);
        } else {
          reference = testref::unsaturated_chain(
              dynamic_cast<ChainScheme&>(*scheme).chains(), n, r);
        }
        if (!(evaluate_length(*scheme, n) == reference)) {
          return where("saturation changed " + engine_pattern(e), n,
                       "r=" + std::to_string(r));
        }
      }
    }
  }
  for (JointEngine e : all_joint_engines()) {
    for (int r1 = 0; r1 <= 2; ++r1) {
      for (int r2 = 0; r2 <= 2; ++r2) {
        auto scheme = make_joint_scheme(e, r1, r2, false);
        const auto& chains = dynamic_cast<ChainScheme&>(*scheme).chains();
        for (int n = 0; n <= 7; ++n) {
          if (!(evaluate_length(*scheme, n) ==
                testref::unsaturated_chain(chains, n, r2, r1))) {
            return where("joint saturation changed", n,
                         "caps=" + std::to_string(r1) + "," + std::to_string(r2));
          }
        }
      }
    }
  }
  return {};
}

std::string coefficient_sums() {
  for (Engine e : all_engines()) {
    auto scheme = make_scheme(e, kFull, false);
    for (int n = 0; n <= 9; ++n) {
      if (total(evaluate_length(*scheme, n)) != testref::factorial(n)) {
        return where("coefficient sum != n! for " + engine_pattern(e), n, "");
      }
    }
  }
  for (JointEngine e : all_joint_engines()) {
    auto scheme = make_joint_scheme(e, kFull, kFull, false);
    for (int n = 0; n <= 8; ++n) {
      if (total(evaluate_length(*scheme, n)) != testref::factorial(n)) {
        return where("joint coefficient sum != n!", n, "");
      }
    }
  }
  return {};
}

std::string emit_parse_roundtrip(unsigned seed, int iterations) {
  std::mt19937 rng(seed);
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  for (int it = 0; it < iterations; ++it) {
    SequenceRecord rec;
    rec.engine = engine_pattern(all_engines()[pick(0, 6)]);
    rec.patterns = {rec.engine};
    if (pick(0, 1)) {
      rec.r = pick(0, 9);
    } else {
      rec.r1 = pick(0, 9);
      rec.r2 = pick(0, 9);
    }
    rec.refine_q = pick(0, 1);
    if (pick(0, 3) == 0) rec.note = "note " + std::to_string(pick(0, 99));
    rec.offset = pick(0, 5);
    const int len = pick(0, 20);
    for (int k = 0; k < len; ++k) {
      BigInt v = pick(0, 1000);
      for (int w = pick(0, 4); w > 0; --w) v = v * 4294967296 + pick(0, 1 << 30);
      rec.values.push_back(v);
    }
    if (!(parse_json(emit(rec, Format::json)) == rec)) {
      return "json round trip failed at iteration " + std::to_string(it);
    }
    const SequenceRecord back = parse_bfile(emit(rec, Format::bfile));
    if (back.values != rec.values || (len > 0 && back.offset != rec.offset)) {
      return "bfile round trip failed at iteration " + std::to_string(it);
    }
  }
  return {};
}

}  // namespace permfe::testprops
