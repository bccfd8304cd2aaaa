#ifndef LEDC_POLY_HPP
#define LEDC_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ledc/error.hpp"
#include "ledc/field.hpp"

namespace ledc {

/// Dense polynomial over GF(q); coeffs[d] is the coefficient of x^d.
/// Always normalized: no trailing zeros, and the zero polynomial has no coefficients.
class PolyGF {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  explicit PolyGF(const PrimeField& f) : field_(f) {}
  PolyGF(const PrimeField& f, std::vector<Felt> coeffs) : field_(f), coeffs_(std::move(coeffs)) { normalize(); }

  static PolyGF from_ints(const PrimeField& f, const std::vector<long long>& c) {
    std::vector<Felt> v;
    v.reserve(c.size());
    for (long long x : c) v.push_back(f.elem(x));
    return PolyGF(f, std::move(v));
  }

  static PolyGF constant(const PrimeField& f, Felt c) { return PolyGF(f, {c}); }

  /// c * x^d
  static PolyGF monomial(const PrimeField& f, Felt c, std::size_t d) {
    std::vector<Felt> v(d + 1, Felt{0});
    v[d] = c;
    return PolyGF(f, std::move(v));
  }

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<Felt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return is_zero() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of x^d (zero beyond the degree).
  Felt operator[](std::size_t d) const noexcept { return d < coeffs_.size() ? coeffs_[d] : Felt{0}; }
  Felt leading() const noexcept { return is_zero() ? Felt{0} : coeffs_.back(); }

  std::vector<long long> to_ints() const {
    std::vector<long long> out;
    for (Felt c : coeffs_) out.push_back(c.value);
    return out;
  }

  friend bool operator==(const PolyGF& a, const PolyGF& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  PrimeField field_;
  std::vector<Felt> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const PolyGF& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
    Felt c = p.coeffs()[d];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (d == 0) os << c;
    else {
      if (c.value != 1) os << c;
      os << (d == 1 ? "x" : "x^" + std::to_string(d));
    }
  }
  return os;
}

inline PolyGF poly_add(const PolyGF& p, const PolyGF& r) {
  const PrimeField& f = p.field();
  std::vector<Felt> out(std::max(p.coeffs().size(), r.coeffs().size()), Felt{0});
  for (std::size_t d = 0; d < out.size(); ++d) out[d] = f.add(p[d], r[d]);
  return PolyGF(f, std::move(out));
}

inline PolyGF poly_scale(const PolyGF& p, Felt s) {
  const PrimeField& f = p.field();
  std::vector<Felt> out = p.coeffs();
  for (Felt& c : out) c = f.mul(c, s);
  return PolyGF(f, std::move(out));
}

/// p(x) * x^s
inline PolyGF poly_shift(const PolyGF& p, std::size_t s) {
  if (p.is_zero()) return p;
  std::vector<Felt> out(s, Felt{0});
  out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
  return PolyGF(p.field(), std::move(out));
}

inline PolyGF poly_mul(const PolyGF& p, const PolyGF& r) {
  const PrimeField& f = p.field();
  if (p.is_zero() || r.is_zero()) return PolyGF(f);
  std::vector<Felt> out(p.coeffs().size() + r.coeffs().size() - 1, Felt{0});
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    for (std::size_t j = 0; j < r.coeffs().size(); ++j)
      out[i + j] = f.add(out[i + j], f.mul(p.coeffs()[i], r.coeffs()[j]));
  return PolyGF(f, std::move(out));
}

/// Horner evaluation.
inline Felt poly_eval(const PolyGF& p, Felt z) {
  const PrimeField& f = p.field();
  Felt acc{0};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = f.add(f.mul(acc, z), *it);
  return acc;
}

/// Euclidean division: p = quot * r + rem with deg rem < deg r.
inline std::pair<PolyGF, PolyGF> poly_divrem(const PolyGF& p, const PolyGF& r) {
  const PrimeField& f = p.field();
  if (r.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
  if (p.degree() < r.degree()) return {PolyGF(f), p};
  std::vector<Felt> rem = p.coeffs();
  const std::size_t dr = r.coeffs().size() - 1;
  std::vector<Felt> quot(rem.size() - dr, Felt{0});
  const Felt lead_inv = f.inv(r.leading());
  for (std::size_t i = rem.size(); i-- > dr;) {
    Felt c = f.mul(rem[i], lead_inv);
    if (c.is_zero()) continue;
    quot[i - dr] = c;
    for (std::size_t j = 0; j <= dr; ++j) rem[i - dr + j] = f.sub(rem[i - dr + j], f.mul(c, r.coeffs()[j]));
  }
  rem.resize(dr);
  return {PolyGF(f, std::move(quot)), PolyGF(f, std::move(rem))};
}

inline bool poly_divides(const PolyGF& divisor, const PolyGF& p) { return poly_divrem(p, divisor).second.is_zero(); }

/// Monic product of (x - root) over the given roots.
inline PolyGF linear_factor_product(const PrimeField& f, std::span<const Felt> roots) {
  PolyGF acc = PolyGF::constant(f, f.one());
  for (Felt root : roots) acc = poly_mul(acc, PolyGF(f, {f.neg(root), f.one()}));
  return acc;
}

/// Polynomial x^shift * p(x) as a length-`width` coefficient vector.
inline std::vector<Felt> coeffs_to_row(const PolyGF& p, std::size_t shift, std::size_t width) {
  std::vector<Felt> row(width, Felt{0});
  if (p.is_zero()) return row;
  if (shift + p.coeffs().size() > width)
    throw Error(ErrorKind::Overflow, "shifted polynomial of degree " + std::to_string(p.degree()) + " + " +
                                         std::to_string(shift) + " exceeds width " + std::to_string(width));
  for (std::size_t d = 0; d < p.coeffs().size(); ++d) row[shift + d] = p.coeffs()[d];
  return row;
}

/// The polynomial sum_j row[j] x^j.
inline PolyGF row_to_poly(const PrimeField& f, std::span<const Felt> row) {
  return PolyGF(f, std::vector<Felt>(row.begin(), row.end()));
}

}  // namespace ledc

#endif  // LEDC_POLY_HPP
