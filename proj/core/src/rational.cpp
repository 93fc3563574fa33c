#include "hamcurve/rational.hpp"

#include <cctype>
#include <cmath>

namespace hamcurve {

Rational make_rational(long num, long den) {
  if (den == 0) throw PolyError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

mpz_class parse_integer_digits(std::string_view digits) {
  if (digits.empty()) return 0;
  return mpz_class(std::string(digits), 10);
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw PolyError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw PolyError("division by zero in number '" + std::string(text) + "'");
    return num / den;
  }

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string exp_text(text.substr(e + 1));
    try {
      std::size_t used = 0;
      exponent = std::stol(exp_text, &used);
      if (used != exp_text.size()) throw PolyError("bad exponent");
    } catch (const std::logic_error&) {
      throw PolyError("bad number '" + std::string(text) + "'");
    }
  }

  std::string_view int_part = mantissa;
  std::string_view frac_part;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw PolyError("bad number '" + std::string(text) + "'");
  for (char c : int_part)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw PolyError("bad number '" + std::string(text) + "'");
  for (char c : frac_part)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw PolyError("bad number '" + std::string(text) + "'");

  mpz_class digits = parse_integer_digits(std::string(int_part) + std::string(frac_part));
  long scale = exponent - static_cast<long>(frac_part.size());
  Rational r(digits);
  if (scale > 0) {
    r *= Rational(pow10(static_cast<unsigned long>(scale)));
  } else if (scale < 0) {
    r /= Rational(pow10(static_cast<unsigned long>(-scale)));
  }
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

Rational from_double(double v) {
  if (!std::isfinite(v)) throw PolyError("non-finite value cannot be made exact");
  return Rational(v);
}

// mpq_get_d truncates; pick the nearest of the truncated value and its
// neighbours so conversions are correctly rounded.
double to_double(const Rational& r) {
  const double d = r.get_d();
  if (!std::isfinite(d)) return d;
  double best = d;
  Rational best_err = abs(Rational(d) - r);
  for (double c : {std::nextafter(d, -INFINITY), std::nextafter(d, INFINITY)}) {
    if (!std::isfinite(c)) continue;
    Rational err = abs(Rational(c) - r);
    if (err < best_err) {
      best = c;
      best_err = err;
    }
  }
  return best;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace hamcurve
