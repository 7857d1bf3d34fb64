#include "permfe/engines.hpp"

#include <numeric>

#include "permfe/errors.hpp"
#include "permfe/fe_cycle.hpp"
#include "permfe/fe_increasing.hpp"
#include "permfe/fe_joint.hpp"
#include "permfe/fe_tailswap.hpp"

namespace permfe {

std::vector<Engine> all_engines() {
  return {Engine::P123, Engine::P1234, Engine::P132, Engine::P1243,
          Engine::P12354, Engine::P231, Engine::P2341};
}

std::vector<JointEngine> all_joint_engines() {
  return {JointEngine::P123_132, JointEngine::P1234_1243};
}

std::string engine_pattern(Engine e) {
  switch (e) {
    case Engine::P123: return "123";
    case Engine::P1234: return "1234";
    case Engine::P132: return "132";
    case Engine::P1243: return "1243";
    case Engine::P12354: return "12354";
    case Engine::P231: return "231";
    case Engine::P2341: return "2341";
  }
  return {};
}

std::vector<std::string> joint_patterns(JointEngine e) {
  if (e == JointEngine::P123_132) return {"123", "132"};
  return {"1234", "1243"};
}

Permutation engine_permutation(Engine e) {
  return Permutation::parse(engine_pattern(e));
}

std::optional<Engine> engine_for_pattern(std::string_view name,
                                         std::string* note) {
  for (Engine e : all_engines()) {
    if (engine_pattern(e) == name) return e;
  }
  if (name == "1432") {
    if (note) {
      *note = "1432 served by the 2341 engine (reverse-complement symmetry)";
    }
    return Engine::P2341;
  }
  return std::nullopt;
}

std::optional<JointEngine> joint_engine_for(std::string_view first,
                                            std::string_view second) {
  for (JointEngine e : all_joint_engines()) {
    const auto p = joint_patterns(e);
    if (p[0] == first && p[1] == second) return e;
  }
  return std::nullopt;
}

std::unique_ptr<RecursionScheme> make_scheme(Engine e, Cap r, bool refine_q) {
  switch (e) {
    case Engine::P123: return make_increasing_scheme(3, r, refine_q);
    case Engine::P1234: return make_increasing_scheme(4, r, refine_q);
    case Engine::P132: return make_tailswap_scheme(3, r, refine_q);
    case Engine::P1243: return make_tailswap_scheme(4, r, refine_q);
    case Engine::P12354: return make_tailswap_scheme(5, r, refine_q);
    case Engine::P231: return std::make_unique<Cycle231Scheme>(r, refine_q);
    case Engine::P2341: return std::make_unique<Cycle2341Scheme>(r, refine_q);
  }
  throw NotImplemented("unknown engine");
}

std::unique_ptr<RecursionScheme> make_joint_scheme(JointEngine e, Cap r1,
                                                   Cap r2, bool refine_q) {
  return make_joint_scheme(e == JointEngine::P123_132 ? 3 : 4, r1, r2, refine_q);
}

namespace {

std::vector<int> lengths_up_to(int n_max) {
  if (n_max < 1) throw InvalidInput("n_max must be >= 1");
  std::vector<int> ns(n_max);
  std::iota(ns.begin(), ns.end(), 1);
  return ns;
}

}  // namespace

std::vector<BigInt> single_sequence(Engine e, int r, int n_max,
                                    const EvalOptions& options) {
  if (r < 0) throw InvalidInput("r must be >= 0");
  const auto scheme = make_scheme(e, r, false);
  std::vector<BigInt> out;
  for (const auto& p : evaluate_lengths(*scheme, lengths_up_to(n_max), options)) {
    out.push_back(p.coeff(r));
  }
  return out;
}

std::vector<BigInt> joint_sequence(JointEngine e, int r1, int r2, int n_max,
                                   const EvalOptions& options) {
  if (r1 < 0 || r2 < 0) throw InvalidInput("caps must be >= 0");
  const auto scheme = make_joint_scheme(e, r1, r2, false);
  std::vector<BigInt> out;
  for (const auto& p : evaluate_lengths(*scheme, lengths_up_to(n_max), options)) {
    out.push_back(p.coeff(r2, r1));
  }
  return out;
}

}  // namespace permfe
