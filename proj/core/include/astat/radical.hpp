// Copyright 2026 The astat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json_fwd.hpp>

namespace astat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
  explicit GaussianRational(Rational real) : re(std::move(real)) {}
  explicit GaussianRational(long long real) : re(real) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conjugate() const { return {re, -im}; }
  /// Multiplicative inverse; throws std::domain_error on zero.
  GaussianRational inverse() const;
  std::complex<double> to_complex() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  GaussianRational operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/**
 * Exact element of the field Q(i, sqrt(2), sqrt(3), sqrt(5), ...): a finite
 * sum of Gaussian-rational multiples of square roots of square-free positive
 * integers.  Radicand 1 carries the rational part.
 *
 * Canonical form: every radicand is square-free and >= 1, no stored
 * coefficient is zero, and zero is the empty term map.  Every operation maps
 * canonical inputs to canonical outputs, so equality is term-map equality and
 * the zero test is an emptiness test (square roots of distinct square-free
 * integers are linearly independent over the rationals).
 */
class RadicalScalar {
 public:
  using TermMap = std::map<std::int64_t, GaussianRational>;

  RadicalScalar() = default;  // zero

  static RadicalScalar zero() { return {}; }
  static RadicalScalar one() { return from_int(1); }
  static RadicalScalar unit_i();
  static RadicalScalar from_int(long long v);
  static RadicalScalar from_rational(Rational v);
  static RadicalScalar from_gaussian(GaussianRational v);
  /// coeff * sqrt(radicand); radicand need not be square-free (the square
  /// part is extracted), radicand >= 0, where sqrt(0) gives zero.
  static RadicalScalar term(std::int64_t radicand, GaussianRational coeff);
  static RadicalScalar sqrt_of(std::int64_t radicand);
  /// sqrt of a non-negative rational: sqrt(a/b) = sqrt(a*b)/b.  The reduced
  /// product a*b must fit in 64 bits.
  static RadicalScalar sqrt_of(const Rational& value);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// The coefficient of radicand 1 (zero if absent).
  GaussianRational rational_part() const;
  const TermMap& terms() const { return terms_; }

  RadicalScalar conjugate() const;
  /// Exact multiplicative inverse in the radical field; throws
  /// std::domain_error on zero.  Works by successively multiplying with the
  /// sign-flip conjugate of each prime appearing in the radicands, which
  /// clears that prime from the denominator.
  RadicalScalar inverse() const;

  std::complex<double> to_complex() const;
  double to_double_real() const { return to_complex().real(); }
  std::string str() const;

  RadicalScalar& operator+=(const RadicalScalar& o);
  RadicalScalar& operator-=(const RadicalScalar& o);
  RadicalScalar& operator*=(const RadicalScalar& o);
  friend RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) { return a += b; }
  friend RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) { return a -= b; }
  friend RadicalScalar operator*(RadicalScalar a, const RadicalScalar& b) { return a *= b; }
  RadicalScalar operator-() const;
  friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const RadicalScalar& a, const RadicalScalar& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const RadicalScalar& s);

 private:
  // Merges coeff * sqrt(radicand) into the map, reducing the radicand to
  // square-free form and dropping zero coefficients.
  void accumulate(std::int64_t radicand, GaussianRational coeff);

  TermMap terms_;
};

/// Splits n >= 1 as n = square_free * root^2 with square_free square-free.
/// Returns {square_free, root}.  Trial division; intended for the small
/// radicands that occur as transformation amplitudes.
std::pair<std::int64_t, std::int64_t> extract_square(std::int64_t n);

/// Serialized as a list of (radicand, re_num, re_den, im_num, im_den)
/// tuples with the numerators/denominators rendered as decimal strings, so
/// arbitrary-precision values round-trip exactly.
void to_json(nlohmann::json& j, const RadicalScalar& s);
void from_json(const nlohmann::json& j, RadicalScalar& s);

}  // namespace astat
