#include "permfe/truncated_poly.hpp"

#include <algorithm>
#include <sstream>

#include "permfe/errors.hpp"

namespace permfe {

namespace {

const BigInt kZero = 0;

int extent_for(Cap cap) { return cap ? *cap + 1 : 0; }

void require_same_kind(const TruncatedPoly& a, const TruncatedPoly& b) {
  if (!(a.kind() == b.kind())) {
    throw KindMismatch("polynomials carry different auxiliary variables");
  }
}

}  // namespace

std::string cap_to_string(Cap c) { return c ? std::to_string(*c) : "full"; }

TruncatedPoly::TruncatedPoly(PolyKind kind, Cap t_cap, Cap s_cap)
    : kind_(kind), t_cap_(t_cap), s_cap_(kind.has_s ? s_cap : kFull) {
  if ((t_cap_ && *t_cap_ < 0) || (s_cap_ && *s_cap_ < 0)) {
    throw InvalidInput("degree caps must be >= 0");
  }
  nt_ = extent_for(t_cap_);
  ns_ = kind_.has_s ? std::max(extent_for(s_cap_), 1) : 1;
  nq_ = 1;
  c_.assign(static_cast<std::size_t>(nt_) * ns_ * nq_, BigInt(0));
}

TruncatedPoly TruncatedPoly::one(PolyKind kind, Cap t_cap, Cap s_cap) {
  TruncatedPoly p(kind, t_cap, s_cap);
  p.add_term(0, 0, 0, 1);
  return p;
}

TruncatedPoly TruncatedPoly::from_coeffs(std::vector<BigInt> coeffs, Cap t_cap) {
  TruncatedPoly p(PolyKind::plain(), t_cap);
  for (int t = 0; t < static_cast<int>(coeffs.size()); ++t) {
    p.add_term(t, 0, 0, coeffs[t]);
  }
  return p;
}

const BigInt& TruncatedPoly::coeff(int t, int s, int q) const {
  if (t < 0 || s < 0 || q < 0 || t >= nt_ || s >= ns_ || q >= nq_) return kZero;
  return c_[index(t, s, q)];
}

void TruncatedPoly::grow(int nt, int ns, int nq) {
  nt = std::max(nt, nt_);
  ns = std::max(ns, ns_);
  nq = std::max(nq, nq_);
  if (nt == nt_ && ns == ns_ && nq == nq_) return;
  std::vector<BigInt> next(static_cast<std::size_t>(nt) * ns * nq, BigInt(0));
  for (int t = 0; t < nt_; ++t) {
    for (int s = 0; s < ns_; ++s) {
      for (int q = 0; q < nq_; ++q) {
        next[(static_cast<std::size_t>(t) * ns + s) * nq + q] =
            std::move(c_[index(t, s, q)]);
      }
    }
  }
  c_ = std::move(next);
  nt_ = nt;
  ns_ = ns;
  nq_ = nq;
}

void TruncatedPoly::add_term(int t, int s, int q, const BigInt& v) {
  if (t < 0 || s < 0 || q < 0) throw InvalidInput("negative exponent");
  if (t_cap_ && t > *t_cap_) return;
  if (s > 0 && !kind_.has_s) throw KindMismatch("term in s on a poly without s");
  if (q > 0 && !kind_.has_q) throw KindMismatch("term in q on a poly without q");
  if (s_cap_ && s > *s_cap_) return;
  if (v == 0) return;
  grow(t + 1, s + 1, q + 1);
  c_[index(t, s, q)] += v;
}

void TruncatedPoly::add_shifted(const TruncatedPoly& src, int dt, int ds,
                                int dq) {
  require_same_kind(*this, src);
  if (dt < 0 || ds < 0 || dq < 0) throw InvalidInput("negative shift");
  if (ds > 0 && !kind_.has_s) throw KindMismatch("s-shift on a poly without s");
  if (dq > 0 && !kind_.has_q) throw KindMismatch("q-shift on a poly without q");
  if (t_cap_ && dt > *t_cap_) return;
  if (s_cap_ && ds > *s_cap_) return;

  int t_hi = src.nt_;
  int s_hi = src.ns_;
  if (t_cap_) t_hi = std::min(t_hi, *t_cap_ + 1 - dt);
  if (s_cap_) s_hi = std::min(s_hi, *s_cap_ + 1 - ds);
  if (t_hi <= 0 || s_hi <= 0) return;
  grow(t_hi + dt, s_hi + ds, src.nq_ + dq);

  for (int t = 0; t < t_hi; ++t) {
    for (int s = 0; s < s_hi; ++s) {
      const BigInt* from = &src.c_[src.index(t, s, 0)];
      BigInt* to = &c_[index(t + dt, s + ds, dq)];
      for (int q = 0; q < src.nq_; ++q) {
        if (!from[q].is_zero()) to[q] += from[q];
      }
    }
  }
}

bool TruncatedPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const BigInt& v) { return v.is_zero(); });
}

int TruncatedPoly::t_degree() const {
  for (int t = nt_ - 1; t >= 0; --t) {
    for (int s = 0; s < ns_; ++s) {
      for (int q = 0; q < nq_; ++q) {
        if (!c_[index(t, s, q)].is_zero()) return t;
      }
    }
  }
  return -1;
}

std::vector<BigInt> TruncatedPoly::t_coeffs() const {
  if (kind_.has_s || kind_.has_q) {
    throw KindMismatch("t_coeffs() needs a plain polynomial");
  }
  std::vector<BigInt> out(t_degree() + 1);
  for (int t = 0; t < static_cast<int>(out.size()); ++t) out[t] = coeff(t);
  return out;
}

std::vector<BigInt> TruncatedPoly::q_coeffs(int t) const {
  std::vector<BigInt> out(nq_, BigInt(0));
  if (t < 0 || t >= nt_) return {};
  for (int s = 0; s < ns_; ++s) {
    for (int q = 0; q < nq_; ++q) out[q] += c_[index(t, s, q)];
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

std::vector<BigInt> TruncatedPoly::q_coeffs_at_t_one() const {
  std::vector<BigInt> out(nq_, BigInt(0));
  for (int t = 0; t < nt_; ++t) {
    for (int s = 0; s < ns_; ++s) {
      for (int q = 0; q < nq_; ++q) out[q] += c_[index(t, s, q)];
    }
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

TruncatedPoly TruncatedPoly::at_q_one() const {
  TruncatedPoly out(PolyKind{kind_.has_s, false}, t_cap_, s_cap_);
  for (int t = 0; t < nt_; ++t) {
    for (int s = 0; s < ns_; ++s) {
      BigInt sum = 0;
      for (int q = 0; q < nq_; ++q) sum += c_[index(t, s, q)];
      out.add_term(t, s, 0, sum);
    }
  }
  return out;
}

TruncatedPoly TruncatedPoly::sum_over_s() const {
  TruncatedPoly out(PolyKind{false, kind_.has_q}, t_cap_);
  for (int t = 0; t < nt_; ++t) {
    for (int s = 0; s < ns_; ++s) {
      for (int q = 0; q < nq_; ++q) out.add_term(t, 0, q, c_[index(t, s, q)]);
    }
  }
  return out;
}

TruncatedPoly TruncatedPoly::sum_over_t_as_t() const {
  if (!kind_.has_s) throw KindMismatch("sum_over_t_as_t() needs an s variable");
  TruncatedPoly out(PolyKind{false, kind_.has_q}, s_cap_);
  for (int t = 0; t < nt_; ++t) {
    for (int s = 0; s < ns_; ++s) {
      for (int q = 0; q < nq_; ++q) out.add_term(s, 0, q, c_[index(t, s, q)]);
    }
  }
  return out;
}

std::string TruncatedPoly::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int t = 0; t < nt_; ++t) {
    for (int s = 0; s < ns_; ++s) {
      for (int q = 0; q < nq_; ++q) {
        const BigInt& c = c_[index(t, s, q)];
        if (c.is_zero()) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
          if (c < 0) out << '-';
        } else {
          out << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        auto power = [&](const char* var, int e) {
          if (e == 1) factors.emplace_back(var);
          if (e > 1) factors.push_back(std::string(var) + "^" + std::to_string(e));
        };
        power("t", t);
        power("s", s);
        power("q", q);
        if (factors.empty() || mag != 1) {
          out << mag;
          if (!factors.empty()) out << '*';
        }
        for (std::size_t f = 0; f < factors.size(); ++f) {
          if (f) out << '*';
          out << factors[f];
        }
      }
    }
  }
  return first ? "0" : out.str();
}

std::string TruncatedPoly::to_json() const {
  const int t_top = t_degree();
  int s_top = 0;
  int q_top = 0;
  for (int t = 0; t < nt_; ++t) {
    for (int s = 0; s < ns_; ++s) {
      for (int q = 0; q < nq_; ++q) {
        if (c_[index(t, s, q)].is_zero()) continue;
        s_top = std::max(s_top, s);
        q_top = std::max(q_top, q);
      }
    }
  }
  std::ostringstream out;
  auto q_array = [&](int t, int s) {
    if (!kind_.has_q) {
      out << '"' << coeff(t, s, 0) << '"';
      return;
    }
    out << '[';
    for (int q = 0; q <= q_top; ++q) {
      if (q) out << ',';
      out << '"' << coeff(t, s, q) << '"';
    }
    out << ']';
  };
  out << '[';
  for (int t = 0; t <= t_top; ++t) {
    if (t) out << ',';
    if (kind_.has_s) {
      out << '[';
      for (int s = 0; s <= s_top; ++s) {
        if (s) out << ',';
        q_array(t, s);
      }
      out << ']';
    } else {
      q_array(t, 0);
    }
  }
  out << ']';
  return out.str();
}

bool operator==(const TruncatedPoly& a, const TruncatedPoly& b) {
  if (!(a.kind_ == b.kind_)) return false;
  const int nt = std::max(a.nt_, b.nt_);
  const int ns = std::max(a.ns_, b.ns_);
  const int nq = std::max(a.nq_, b.nq_);
  for (int t = 0; t < nt; ++t) {
    for (int s = 0; s < ns; ++s) {
      for (int q = 0; q < nq; ++q) {
        if (a.coeff(t, s, q) != b.coeff(t, s, q)) return false;
      }
    }
  }
  return true;
}

TruncatedPoly chop(const TruncatedPoly& p, int r) {
  if (r < 0) throw InvalidInput("chop: r must be >= 0");
  TruncatedPoly out(p.kind(), min_cap(p.t_cap(), r), p.s_cap());
  out.add_shifted(p, 0);
  return out;
}

TruncatedPoly chop_s(const TruncatedPoly& p, int r) {
  if (r < 0) throw InvalidInput("chop_s: r must be >= 0");
  if (!p.kind().has_s) throw KindMismatch("chop_s on a poly without s");
  TruncatedPoly out(p.kind(), p.t_cap(), min_cap(p.s_cap(), r));
  out.add_shifted(p, 0);
  return out;
}

TruncatedPoly add(const TruncatedPoly& a, const TruncatedPoly& b) {
  require_same_kind(a, b);
  TruncatedPoly out(a.kind(), min_cap(a.t_cap(), b.t_cap()),
                    min_cap(a.s_cap(), b.s_cap()));
  out.add_shifted(a, 0);
  out.add_shifted(b, 0);
  return out;
}

TruncatedPoly operator+(const TruncatedPoly& a, const TruncatedPoly& b) {
  return add(a, b);
}

TruncatedPoly shift_mul(const TruncatedPoly& p, int t_exp, int aux_exp) {
  if (p.kind().has_q) return shift_mul(p, t_exp, 0, aux_exp);
  return shift_mul(p, t_exp, aux_exp, 0);
}

TruncatedPoly shift_mul(const TruncatedPoly& p, int t_exp, int s_exp,
                        int q_exp) {
  TruncatedPoly out(p.kind(), p.t_cap(), p.s_cap());
  out.add_shifted(p, t_exp, s_exp, q_exp);
  return out;
}

TruncatedPoly mul(const TruncatedPoly& a, const TruncatedPoly& b) {
  require_same_kind(a, b);
  TruncatedPoly out(a.kind(), min_cap(a.t_cap(), b.t_cap()),
                    min_cap(a.s_cap(), b.s_cap()));
  for (int t = 0; t < a.t_extent(); ++t) {
    for (int s = 0; s < a.s_extent(); ++s) {
      for (int q = 0; q < a.q_extent(); ++q) {
        const BigInt& c = a.coeff(t, s, q);
        if (c.is_zero()) continue;
        TruncatedPoly scaled(b.kind(), b.t_cap(), b.s_cap());
        for (int u = 0; u < b.t_extent(); ++u) {
          for (int v = 0; v < b.s_extent(); ++v) {
            for (int w = 0; w < b.q_extent(); ++w) {
              const BigInt& d = b.coeff(u, v, w);
              if (!d.is_zero()) scaled.add_term(u, v, w, c * d);
            }
          }
        }
        out.add_shifted(scaled, t, s, q);
      }
    }
  }
  return out;
}

TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
  return mul(a, b);
}

}  // namespace permfe
