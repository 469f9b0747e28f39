// Copyright 2026 The astat Authors
// SPDX-License-Identifier: Apache-2.0

#include "astat/radical.hpp"

#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace astat {

namespace {

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

// Coefficient rendering: "3/2", "i", "-2i", "(1/2 + 3i)".
std::string gaussian_str(const GaussianRational& g) {
  if (g.im == 0) return rational_str(g.re);
  std::string im_part;
  if (g.im == 1) {
    im_part = "i";
  } else if (g.im == -1) {
    im_part = "-i";
  } else {
    im_part = rational_str(g.im) + "i";
  }
  if (g.re == 0) return im_part;
  std::string sign = g.im > 0 ? " + " : " - ";
  std::string mag = g.im > 0 ? im_part : (im_part[0] == '-' ? im_part.substr(1) : im_part);
  return "(" + rational_str(g.re) + sign + mag + ")";
}

}  // namespace

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
  Rational norm = re * re + im * im;
  return {re / norm, -im / norm};
}

std::complex<double> GaussianRational::to_complex() const {
  return {to_double(re), to_double(im)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational new_re = re * o.re - im * o.im;
  Rational new_im = re * o.im + im * o.re;
  re = std::move(new_re);
  im = std::move(new_im);
  return *this;
}

std::pair<std::int64_t, std::int64_t> extract_square(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("extract_square: argument must be >= 1");
  std::int64_t square_free = 1;
  std::int64_t root = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    int exponent = 0;
    while (n % d == 0) {
      n /= d;
      ++exponent;
    }
    for (int k = 0; k < exponent / 2; ++k) root *= d;
    if (exponent % 2 != 0) square_free *= d;
  }
  square_free *= n;  // remaining prime
  return {square_free, root};
}

RadicalScalar RadicalScalar::unit_i() {
  return from_gaussian({Rational(0), Rational(1)});
}

RadicalScalar RadicalScalar::from_int(long long v) {
  return from_gaussian(GaussianRational(v));
}

RadicalScalar RadicalScalar::from_rational(Rational v) {
  return from_gaussian(GaussianRational(std::move(v)));
}

RadicalScalar RadicalScalar::from_gaussian(GaussianRational v) {
  RadicalScalar s;
  s.accumulate(1, std::move(v));
  return s;
}

RadicalScalar RadicalScalar::term(std::int64_t radicand, GaussianRational coeff) {
  RadicalScalar s;
  s.accumulate(radicand, std::move(coeff));
  return s;
}

RadicalScalar RadicalScalar::sqrt_of(std::int64_t radicand) {
  if (radicand == 0) return zero();
  return term(radicand, GaussianRational(1));
}

RadicalScalar RadicalScalar::sqrt_of(const Rational& value) {
  if (value < 0) throw std::invalid_argument("sqrt_of: negative rational");
  if (value == 0) return zero();
  BigInt num = numerator(value);
  BigInt den = denominator(value);
  BigInt prod = num * den;
  if (prod > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("sqrt_of: reduced radicand exceeds 64 bits");
  return term(prod.convert_to<std::int64_t>(),
              GaussianRational(Rational(1, den)));
}

bool RadicalScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

GaussianRational RadicalScalar::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void RadicalScalar::accumulate(std::int64_t radicand, GaussianRational coeff) {
  if (coeff.is_zero()) return;
  auto [square_free, root] = extract_square(radicand);
  if (root != 1) coeff *= GaussianRational(root);
  auto it = terms_.find(square_free);
  if (it == terms_.end()) {
    terms_.emplace(square_free, std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RadicalScalar RadicalScalar::conjugate() const {
  RadicalScalar out;
  for (const auto& [r, c] : terms_) out.terms_.emplace(r, c.conjugate());
  return out;
}

RadicalScalar RadicalScalar::inverse() const {
  if (is_zero()) throw std::domain_error("RadicalScalar: division by zero");

  // Primes occurring in any radicand of *this.
  std::set<std::int64_t> primes;
  for (const auto& [r, c] : terms_) {
    std::int64_t m = r;
    for (std::int64_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        primes.insert(d);
        while (m % d == 0) m /= d;
      }
    }
    if (m > 1) primes.insert(m);
  }

  // Flipping the sign of sqrt(q) is a field automorphism; multiplying by the
  // conjugate removes q from every radicand of the running denominator.
  auto conjugate_prime = [](const RadicalScalar& x, std::int64_t q) {
    RadicalScalar out;
    for (const auto& [r, c] : x.terms_) out.terms_.emplace(r, r % q == 0 ? -c : c);
    return out;
  };

  RadicalScalar numerator_acc = one();
  RadicalScalar denominator_acc = *this;
  for (std::int64_t q : primes) {
    RadicalScalar conj = conjugate_prime(denominator_acc, q);
    numerator_acc *= conj;
    denominator_acc *= conj;
  }
  if (!denominator_acc.is_rational())
    throw std::logic_error("RadicalScalar::inverse: denominator not rationalized");
  return numerator_acc * from_gaussian(denominator_acc.rational_part().inverse());
}

std::complex<double> RadicalScalar::to_complex() const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [r, c] : terms_) acc += c.to_complex() * std::sqrt(static_cast<double>(r));
  return acc;
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& o) {
  for (const auto& [r, c] : o.terms_) accumulate(r, c);
  return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& o) {
  for (const auto& [r, c] : o.terms_) accumulate(r, -c);
  return *this;
}

RadicalScalar& RadicalScalar::operator*=(const RadicalScalar& o) {
  RadicalScalar out;
  for (const auto& [r1, c1] : terms_) {
    for (const auto& [r2, c2] : o.terms_) {
      // r1, r2 square-free: sqrt(r1)*sqrt(r2) = g*sqrt((r1/g)*(r2/g)), g = gcd.
      std::int64_t g = std::gcd(r1, r2);
      std::int64_t u = r1 / g;
      std::int64_t v = r2 / g;
      if (u != 0 && v > std::numeric_limits<std::int64_t>::max() / u)
        throw std::overflow_error("RadicalScalar: radicand product exceeds 64 bits");
      GaussianRational coeff = c1 * c2;
      coeff *= GaussianRational(g);
      out.accumulate(u * v, std::move(coeff));
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

RadicalScalar RadicalScalar::operator-() const {
  RadicalScalar out;
  for (const auto& [r, c] : terms_) out.terms_.emplace(r, -c);
  return out;
}

std::string RadicalScalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [r, c] : terms_) {
    std::string piece;
    if (r == 1) {
      piece = gaussian_str(c);
    } else if (c == GaussianRational(1)) {
      piece = "sqrt(" + std::to_string(r) + ")";
    } else if (c == GaussianRational(-1)) {
      piece = "-sqrt(" + std::to_string(r) + ")";
    } else {
      piece = gaussian_str(c) + "*sqrt(" + std::to_string(r) + ")";
    }
    if (!first) out += piece[0] == '-' ? " - " + piece.substr(1) : " + " + piece;
    else out = piece;
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RadicalScalar& s) {
  return os << s.str();
}

void to_json(nlohmann::json& j, const RadicalScalar& s) {
  j = nlohmann::json::array();
  for (const auto& [r, c] : s.terms()) {
    j.push_back({r,
                 numerator(c.re).str(), denominator(c.re).str(),
                 numerator(c.im).str(), denominator(c.im).str()});
  }
}

void from_json(const nlohmann::json& j, RadicalScalar& s) {
  s = RadicalScalar::zero();
  for (const auto& tuple : j) {
    auto radicand = tuple.at(0).get<std::int64_t>();
    Rational re(BigInt(tuple.at(1).get<std::string>()), BigInt(tuple.at(2).get<std::string>()));
    Rational im(BigInt(tuple.at(3).get<std::string>()), BigInt(tuple.at(4).get<std::string>()));
    s += RadicalScalar::term(radicand, {re, im});
  }
}

}  // namespace astat
