#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permfe/bigint.hpp"

namespace permfe {

// Degree bound on one variable; nullopt means unbounded (full mode).
using Cap = std::optional<int>;
inline constexpr Cap kFull = std::nullopt;

inline Cap min_cap(Cap a, Cap b) {
  if (!a) return b;
  if (!b) return a;
  return *a < *b ? a : b;
}

std::string cap_to_string(Cap c);

// Which auxiliary variables the coefficients of t carry. `s` is a second
// tracked pattern (bidegree mode, truncated at its own cap); `q` tracks
// inversions and is never truncated.
struct PolyKind {
  bool has_s = false;
  bool has_q = false;

  static constexpr PolyKind plain() { return {}; }
  static constexpr PolyKind q_refined() { return {false, true}; }
  static constexpr PolyKind bidegree(bool q = false) { return {true, q}; }

  friend bool operator==(const PolyKind&, const PolyKind&) = default;
};

// Exact polynomial in t (optionally with s and q) with every t-power above
// `t_cap` discarded and every s-power above `s_cap` discarded.
//
// Storage is a dense (t, s, q) grid of BigInt. With a finite cap the t-extent
// is exactly cap+1; in full mode extents grow as terms are added. Equality
// compares values only; caps are metadata.
class TruncatedPoly {
 public:
  TruncatedPoly() : TruncatedPoly(PolyKind::plain(), kFull) {}
  TruncatedPoly(PolyKind kind, Cap t_cap, Cap s_cap = kFull);

  static TruncatedPoly one(PolyKind kind, Cap t_cap, Cap s_cap = kFull);
  // Plain polynomial from ascending t-coefficients; terms above the cap
  // are dropped.
  static TruncatedPoly from_coeffs(std::vector<BigInt> coeffs, Cap t_cap = kFull);

  PolyKind kind() const { return kind_; }
  Cap t_cap() const { return t_cap_; }
  Cap s_cap() const { return s_cap_; }
  int t_extent() const { return nt_; }
  int s_extent() const { return ns_; }
  int q_extent() const { return nq_; }

  const BigInt& coeff(int t, int s = 0, int q = 0) const;
  // Adds `v` at t^t s^s q^q; silently dropped if beyond a cap.
  void add_term(int t, int s, int q, const BigInt& v);

  // *this += t^dt s^ds q^dq * src, discarding terms beyond this poly's caps.
  // Throws KindMismatch if the kinds differ.
  void add_shifted(const TruncatedPoly& src, int dt, int ds = 0, int dq = 0);

  bool is_zero() const;
  // Highest t-power with a nonzero coefficient, -1 for the zero polynomial.
  int t_degree() const;

  // Ascending t-coefficients of a plain polynomial, without trailing zeros.
  std::vector<BigInt> t_coeffs() const;
  // Coefficient of t^t as a q-polynomial (ascending), summed over s.
  std::vector<BigInt> q_coeffs(int t) const;
  // All t-powers (and s-powers) summed: the q-polynomial obtained at t:=1.
  std::vector<BigInt> q_coeffs_at_t_one() const;

  // Sets q := 1.
  TruncatedPoly at_q_one() const;
  // Sums out s, leaving a polynomial in t (q kept).
  TruncatedPoly sum_over_s() const;
  // Sums out t and renames s to t (q kept); caps follow.
  TruncatedPoly sum_over_t_as_t() const;

  // Ascending canonical text, e.g. "1430 + 1287*t + 1950*t^2".
  std::string to_string() const;
  // JSON array of decimal coefficient strings indexed by t-power; nested
  // arrays (s, then q) when auxiliary variables are present.
  std::string to_json() const;

  friend bool operator==(const TruncatedPoly& a, const TruncatedPoly& b);

 private:
  int index(int t, int s, int q) const { return (t * ns_ + s) * nq_ + q; }
  void grow(int nt, int ns, int nq);

  PolyKind kind_;
  Cap t_cap_;
  Cap s_cap_;
  int nt_ = 0;
  int ns_ = 1;
  int nq_ = 1;
  std::vector<BigInt> c_;
};

// Drops every t-power above r; the cap becomes min(cap, r).
TruncatedPoly chop(const TruncatedPoly& p, int r);
// Drops every s-power above r.
TruncatedPoly chop_s(const TruncatedPoly& p, int r);

// Coefficient-wise sum; the result cap is the smaller of the two.
TruncatedPoly add(const TruncatedPoly& a, const TruncatedPoly& b);
TruncatedPoly operator+(const TruncatedPoly& a, const TruncatedPoly& b);

// Multiplies by t^t_exp and by s^aux_exp or q^aux_exp (whichever auxiliary
// variable the kind carries, q taking precedence), then chops at the caps.
TruncatedPoly shift_mul(const TruncatedPoly& p, int t_exp, int aux_exp = 0);
TruncatedPoly shift_mul(const TruncatedPoly& p, int t_exp, int s_exp, int q_exp);

// Exact convolution chopped at the smaller caps.
TruncatedPoly mul(const TruncatedPoly& a, const TruncatedPoly& b);
TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b);

}  // namespace permfe
