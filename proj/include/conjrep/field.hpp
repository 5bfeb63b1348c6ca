// Exact scalars for the algebra layer: arbitrary-precision rationals and
// prime fields. No floating point is used anywhere; every rank, commutant
// and homomorphism check is an exact certificate.
//
// Field objects (RationalField, PrimeField) carry the construction context
// (the modulus for GF(p)) and are passed by value where scalars are built.

#ifndef CONJREP_FIELD_HPP_
#define CONJREP_FIELD_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

#include "conjrep/error.hpp"
#include "conjrep/util.hpp"

namespace conjrep {

using Rational = boost::multiprecision::cpp_rational;

// num/den with the sign moved onto the numerator; the underlying rational
// backend rejects negative denominators.
Rational make_fraction(boost::multiprecision::cpp_int num,
                       boost::multiprecision::cpp_int den);

std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& text);

struct RationalField {
  using Scalar = Rational;

  Scalar zero() const { return Rational(0); }
  Scalar one() const { return Rational(1); }
  Scalar from_int(std::int64_t v) const { return Rational(v); }
  bool is_zero(const Scalar& s) const { return s == 0; }
  Scalar inverse(const Scalar& s) const {
    if (s == 0) throw InputError("division by zero");
    return 1 / s;
  }
  std::string str(const Scalar& s) const { return rational_str(s); }
  std::string name() const { return "Q"; }
  std::uint64_t characteristic() const { return 0; }
  // Rationals embed in any field of characteristic 0.
  Scalar from_rational(const Rational& r) const { return r; }
  // The rationals contain n-th roots of unity for n <= 2 only.
  std::optional<Scalar> primitive_nth_root(std::uint32_t n) const {
    if (n == 1) return Rational(1);
    if (n == 2) return Rational(-1);
    return std::nullopt;
  }
};

// An element of GF(p) carrying its modulus.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  friend Fp operator+(const Fp& a, const Fp& b) { return Fp(a.v_ + b.v_, a.p_); }
  friend Fp operator-(const Fp& a, const Fp& b) {
    return Fp(a.v_ + a.p_ - b.v_, a.p_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    return Fp(static_cast<std::uint64_t>(
                  static_cast<unsigned __int128>(a.v_) * b.v_ % a.p_),
              a.p_);
  }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

 private:
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

struct PrimeField {
  std::uint64_t p = 0;

  explicit PrimeField(std::uint64_t modulus) : p(modulus) {
    if (!is_prime(p)) {
      throw InputError("field modulus " + std::to_string(p) + " is not prime");
    }
  }

  using Scalar = Fp;

  Scalar zero() const { return Fp(0, p); }
  Scalar one() const { return Fp(1, p); }
  Scalar from_int(std::int64_t v) const {
    const std::int64_t m = v % static_cast<std::int64_t>(p);
    return Fp(static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p) : m), p);
  }
  bool is_zero(const Scalar& s) const { return s.value() == 0; }
  Scalar inverse(const Scalar& s) const {
    if (s.value() == 0) throw InputError("division by zero in GF(p)");
    return Fp(mod_inverse(s.value(), p), p);
  }
  std::string str(const Scalar& s) const { return std::to_string(s.value()); }
  std::string name() const { return "GF(" + std::to_string(p) + ")"; }
  std::uint64_t characteristic() const { return p; }

  // Reduce num/den mod p; the denominator must be a unit, which holds for
  // every matrix produced under a passing characteristic guard.
  Scalar from_rational(const Rational& r) const;

  // GF(p)* is cyclic of order p-1, so an n-th root exists iff n | p-1.
  std::optional<Scalar> primitive_nth_root(std::uint32_t n) const {
    if (n == 0 || (p - 1) % n != 0) return std::nullopt;
    return Fp(mod_pow(primitive_root(p), (p - 1) / n, p), p);
  }
};

}  // namespace conjrep

#endif  // CONJREP_FIELD_HPP_
