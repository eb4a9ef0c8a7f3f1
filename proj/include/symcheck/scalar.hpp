#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symcheck {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Malformed user input (scalar text, element files, unknown ids).
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A broken invariant inside the tool itself; never caused by user input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Gaussian rational a + b*i. The ground field of every computation in this
/// library; all arithmetic is exact and there are no tolerances anywhere.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() = default;
  Scalar(int v) : re(v) {}             // NOLINT(google-explicit-constructor)
  Scalar(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar unit_i() { return Scalar{Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Scalar conj() const { return Scalar{re, -im}; }

  /// |z|^2 as a rational; zero iff z = 0.
  Rational norm() const { return re * re + im * im; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar{a.re + b.re, a.im + b.im};
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar{a.re - b.re, a.im - b.im};
  }
  Scalar operator-() const { return Scalar{-re, -im}; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Scalar inverse() const {
    Rational n = norm();
    if (n == 0) throw std::domain_error("scalar division by zero");
    return Scalar{re / n, -im / n};
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

inline Scalar rational_scalar(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Scalar{Rational(num) / Rational(den)};
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline bool is_gaussian_integer(const Scalar& s) {
  return is_integer(s.re) && is_integer(s.im);
}

inline std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw InternalError("rational is not an integer");
  return static_cast<std::int64_t>(numerator(r));
}

/// Deterministic total order used only for sorting report output; it is not
/// a field order.
inline bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

inline std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

namespace detail {
inline std::string format_imag_part(const Rational& r) {
  if (r == 1) return "i";
  if (r == -1) return "-i";
  return format_rational(r) + "i";
}
}  // namespace detail

/// Canonical text form; reparses to an equal value via parse_scalar.
/// Grammar: SCALAR := REAL | IMAG | REAL SIGN IMAG with REAL := SIGN? NAT
/// ("/" NAT)? and IMAG := (NAT ("/" NAT)?)? "i".
inline std::string format_scalar(const Scalar& s) {
  if (s.im == 0) return format_rational(s.re);
  if (s.re == 0) return detail::format_imag_part(s.im);
  std::string out = format_rational(s.re);
  out += (s.im > 0) ? "+" : "-";
  Rational a = abs(s.im);
  out += (a == 1) ? "i" : format_rational(a) + "i";
  return out;
}

inline Scalar parse_scalar(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("bad scalar \"" + std::string(text) + "\": " + what);
  };
  auto at_end = [&] { return pos >= text.size(); };
  auto peek = [&] { return text[pos]; };
  auto take_sign = [&]() -> int {
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      int s = (peek() == '-') ? -1 : 1;
      ++pos;
      return s;
    }
    return 1;
  };
  auto take_nat = [&]() -> Integer {
    std::size_t start = pos;
    while (!at_end() && peek() >= '0' && peek() <= '9') ++pos;
    if (pos == start)
      fail(at_end() ? "unexpected end of input"
                    : std::string("unexpected token '") + peek() + "'");
    return Integer(std::string(text.substr(start, pos - start)));
  };
  // NAT ("/" NAT)?; the denominator must be nonzero.
  auto take_ratio = [&]() -> Rational {
    Integer num = take_nat();
    if (!at_end() && peek() == '/') {
      ++pos;
      Integer den = take_nat();
      if (den == 0) fail("zero denominator");
      return Rational(num) / Rational(den);
    }
    return Rational(num);
  };

  if (text.empty()) fail("empty input");
  int sign1 = take_sign();
  if (!at_end() && peek() == 'i') {
    ++pos;
    if (!at_end()) fail(std::string("trailing token '") + peek() + "'");
    return Scalar{Rational(0), Rational(sign1)};
  }
  Rational first = take_ratio() * sign1;
  if (at_end()) return Scalar{first};
  if (peek() == 'i') {
    ++pos;
    if (!at_end()) fail(std::string("trailing token '") + peek() + "'");
    return Scalar{Rational(0), first};
  }
  if (peek() != '+' && peek() != '-')
    fail(std::string("unexpected token '") + peek() + "'");
  int sign2 = take_sign();
  Rational second(1);
  if (at_end()) fail("unexpected end of input");
  if (peek() != 'i') second = take_ratio();
  if (at_end() || peek() != 'i')
    fail(at_end() ? "missing trailing 'i'"
                  : std::string("unexpected token '") + peek() + "'");
  ++pos;
  if (!at_end()) fail(std::string("trailing token '") + peek() + "'");
  return Scalar{first, second * sign2};
}

}  // namespace symcheck
