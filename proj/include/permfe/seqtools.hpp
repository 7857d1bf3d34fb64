#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permfe/bigint.hpp"
#include "permfe/evaluator.hpp"

namespace permfe {

// An integer sequence a(offset), a(offset+1), ... together with the
// parameters that produced it.
struct SequenceRecord {
  std::string engine;
  std::vector<std::string> patterns;
  std::optional<int> r;
  std::optional<int> r1;
  std::optional<int> r2;
  bool refine_q = false;
  std::string note;
  int offset = 1;
  std::vector<BigInt> values;

  friend bool operator==(const SequenceRecord&, const SequenceRecord&) = default;
};

enum class Format { bfile, json, csv, plain };

std::optional<Format> parse_format(std::string_view name);

// bfile: "n a(n)" per line. json: object with parameters and values as
// decimal strings. csv: header "n,value". plain: "a, b, c" (no newline).
std::string emit(const SequenceRecord& seq, Format format);

// bfile input carries only offset and values.
SequenceRecord parse_bfile(std::string_view text);
SequenceRecord parse_json(std::string_view text);

std::vector<BigRational> finite_difference(std::span<const BigRational> seq);

// Value of sum_k coeffs[k] n^k.
BigRational evaluate_polynomial(std::span<const BigRational> coeffs,
                                const BigRational& n);

struct FitResult {
  enum class Verdict { fits, fails_at, insufficient_data };

  Verdict verdict = Verdict::insufficient_data;
  // First n at which the data leaves every polynomial of the fitted degree.
  int failing_n = 0;
  // p(n) = sum_k poly_coeffs[k] n^k, trailing zeros trimmed; fits only.
  std::vector<BigRational> poly_coeffs;
  int valid_from = 0;

  int degree() const { return static_cast<int>(poly_coeffs.size()) - 1; }
  std::string to_string() const;
};

// Tests whether a(n) = p(n) 2^n with deg p <= degree for every supplied n
// >= valid_from, using the (degree+1)-th finite difference of a(n)/2^n.
// Needs at least degree+3 points from valid_from on.
FitResult fit_poly_times_2n(int offset, std::span<const BigInt> values,
                            int degree, int valid_from);

inline int default_conjecture_n_max(int r, int s) { return r + s + 12; }

// a(n) = #{pi in S_n : N_123(pi) = r, N_132(pi) = s} from the joint engine
// for n in [r+s+1, n_max], fitted against p(n) 2^n with deg p = r+s.
// Returns insufficient_data when n_max < 2(r+s)+3.
FitResult check_poly_times_2n(int r, int s, int n_max,
                              const EvalOptions& options = {});

}  // namespace permfe
