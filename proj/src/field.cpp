#include "conjrep/field.hpp"

namespace conjrep {

namespace mp = boost::multiprecision;

Rational make_fraction(mp::cpp_int num, mp::cpp_int den) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string rational_str(const Rational& r) {
  const mp::cpp_int num = numerator(r);
  const mp::cpp_int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      return Rational(mp::cpp_int(text));
    }
    const mp::cpp_int num(text.substr(0, slash));
    const mp::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw InputError("rational with zero denominator: " + text);
    return make_fraction(num, den);
  } catch (const std::runtime_error&) {
    throw InputError("cannot parse rational number: '" + text + "'");
  }
}

Fp PrimeField::from_rational(const Rational& r) const {
  const mp::cpp_int num = numerator(r);
  const mp::cpp_int den = denominator(r);
  const mp::cpp_int pm(p);
  mp::cpp_int n = num % pm;
  if (n < 0) n += pm;
  mp::cpp_int d = den % pm;
  if (d < 0) d += pm;
  if (d == 0) {
    throw GuardError("denominator " + den.str() + " vanishes in " + name());
  }
  const auto nv = static_cast<std::uint64_t>(n);
  const auto dv = static_cast<std::uint64_t>(d);
  return Fp(nv, p) * Fp(mod_inverse(dv, p), p);
}

}  // namespace conjrep
