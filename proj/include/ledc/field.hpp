#ifndef LEDC_FIELD_HPP
#define LEDC_FIELD_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ledc/error.hpp"

namespace ledc {

/// Canonical residue in [0, q-1]. The owning field is implied by context.
struct Felt {
  std::uint32_t value = 0;

  constexpr Felt() = default;
  constexpr explicit Felt(std::uint32_t v) : value(v) {}

  constexpr bool is_zero() const noexcept { return value == 0; }
  friend constexpr auto operator<=>(Felt, Felt) = default;
};

inline std::ostream& operator<<(std::ostream& os, Felt a) { return os << a.value; }

namespace detail {

constexpr bool is_prime_trial(std::uint64_t q) noexcept {
  if (q < 2) return false;
  if (q % 2 == 0) return q == 2;
  for (std::uint64_t d = 3; d * d <= q; d += 2)
    if (q % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      out.push_back(d);
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) out.push_back(x);
  return out;
}

}  // namespace detail

/// Arithmetic context for GF(q), q prime, 2 <= q <= 2^31 - 1.
///
/// Immutable once built. The smallest primitive element is computed eagerly so
/// every copy answers primitive() without synchronization.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxOrder = (std::uint64_t{1} << 31) - 1;

  explicit PrimeField(std::uint64_t q) : q_(checked_order(q)) {
    factors_ = detail::distinct_prime_factors(q_ - 1);
    primitive_ = search_primitive();
  }

  std::uint32_t order() const noexcept { return q_; }

  Felt zero() const noexcept { return Felt{0}; }
  Felt one() const noexcept { return Felt{1}; }

  /// Reduces any signed integer to its canonical residue.
  Felt elem(long long v) const noexcept {
    long long r = v % static_cast<long long>(q_);
    if (r < 0) r += q_;
    return Felt{static_cast<std::uint32_t>(r)};
  }

  bool contains(Felt a) const noexcept { return a.value < q_; }

  Felt add(Felt a, Felt b) const noexcept {
    std::uint32_t s = a.value + b.value;  // both < 2^31
    return Felt{s >= q_ ? s - q_ : s};
  }
  Felt sub(Felt a, Felt b) const noexcept {
    return Felt{a.value >= b.value ? a.value - b.value : a.value + q_ - b.value};
  }
  Felt neg(Felt a) const noexcept { return Felt{a.value == 0 ? 0 : q_ - a.value}; }
  Felt mul(Felt a, Felt b) const noexcept {
    return Felt{static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % q_)};
  }

  /// Extended Euclid.
  Felt inv(Felt a) const {
    if (a.value == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in GF(" + std::to_string(q_) + ")");
    long long r0 = q_, r1 = a.value, s0 = 0, s1 = 1;
    while (r1 != 0) {
      long long quot = r0 / r1;
      long long tmp = r0 - quot * r1;
      r0 = r1;
      r1 = tmp;
      tmp = s0 - quot * s1;
      s0 = s1;
      s1 = tmp;
    }
    return elem(s0);
  }

  Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }

  /// Square-and-multiply; 0^0 = 1.
  Felt pow(Felt a, std::uint64_t e) const noexcept {
    std::uint64_t base = a.value, acc = 1 % q_;
    while (e > 0) {
      if (e & 1) acc = acc * base % q_;
      base = base * base % q_;
      e >>= 1;
    }
    return Felt{static_cast<std::uint32_t>(acc)};
  }

  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(Felt a) const {
    if (a.value == 0) throw Error(ErrorKind::InvalidArgument, "order of 0 is undefined");
    std::uint64_t ord = q_ - 1;
    for (std::uint64_t p : factors_) {
      while (ord % p == 0 && pow(a, ord / p).value == 1) ord /= p;
    }
    return ord;
  }

  bool is_primitive(Felt a) const {
    return a.value != 0 && contains(a) && multiplicative_order(a) == q_ - 1;
  }

  /// Smallest element of multiplicative order q - 1.
  Felt primitive() const noexcept { return primitive_; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.q_ == b.q_; }

 private:
  static std::uint32_t checked_order(std::uint64_t q) {
    if (q < 2) throw Error(ErrorKind::InvalidArgument, "field order must be >= 2, got " + std::to_string(q));
    if (q > kMaxOrder) throw Error(ErrorKind::InvalidArgument, "field order exceeds 2^31-1: " + std::to_string(q));
    if (!detail::is_prime_trial(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not prime");
    return static_cast<std::uint32_t>(q);
  }

  Felt search_primitive() const {
    for (std::uint32_t g = 1; g < q_; ++g) {
      Felt cand{g};
      if (multiplicative_order(cand) == q_ - 1) return cand;
    }
    return Felt{1};  // unreachable for prime q
  }

  std::uint32_t q_;
  std::vector<std::uint64_t> factors_;
  Felt primitive_;
};

inline PrimeField make_field(std::uint64_t q) { return PrimeField(q); }

inline Felt inv(const PrimeField& f, Felt a) { return f.inv(a); }
inline Felt pow(const PrimeField& f, Felt a, std::uint64_t e) { return f.pow(a, e); }
inline Felt find_primitive(const PrimeField& f) { return f.primitive(); }

/// Smallest prime >= n (n >= 2).
inline std::uint64_t next_prime(std::uint64_t n) {
  if (n < 2) n = 2;
  while (!detail::is_prime_trial(n)) ++n;
  return n;
}

}  // namespace ledc

#endif  // LEDC_FIELD_HPP
