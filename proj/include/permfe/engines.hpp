#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permfe/bigint.hpp"
#include "permfe/evaluator.hpp"
#include "permfe/permutation.hpp"

namespace permfe {

enum class Engine { P123, P1234, P132, P1243, P12354, P231, P2341 };
enum class JointEngine { P123_132, P1234_1243 };

std::vector<Engine> all_engines();
std::vector<JointEngine> all_joint_engines();

// Pattern the engine counts, in one-line notation.
std::string engine_pattern(Engine e);
std::vector<std::string> joint_patterns(JointEngine e);
Permutation engine_permutation(Engine e);

// Looks up the engine for a pattern name. "1432" resolves to the 2341
// engine (reverse-complement of 2341 is 1432, which preserves occurrence
// counts); `note` receives a remark when an alias was used.
std::optional<Engine> engine_for_pattern(std::string_view name,
                                         std::string* note = nullptr);
std::optional<JointEngine> joint_engine_for(std::string_view first,
                                            std::string_view second);

std::unique_ptr<RecursionScheme> make_scheme(Engine e, Cap r, bool refine_q);
std::unique_ptr<RecursionScheme> make_joint_scheme(JointEngine e, Cap r1,
                                                   Cap r2, bool refine_q);

// s_n(pattern, r) for n = 1..n_max.
std::vector<BigInt> single_sequence(Engine e, int r, int n_max,
                                    const EvalOptions& options = {});
// Number of length-n permutations with r1 occurrences of the first pattern
// and r2 of the second, n = 1..n_max.
std::vector<BigInt> joint_sequence(JointEngine e, int r1, int r2, int n_max,
                                   const EvalOptions& options = {});

}  // namespace permfe
