// Copyright 2026 The astat Authors
// SPDX-License-Identifier: Apache-2.0

#include "astat/fock.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace astat {

namespace {

BigInt factorial(int n) {
  BigInt acc = 1;
  for (int k = 2; k <= n; ++k) acc *= k;
  return acc;
}

int occupation_sum(const Occupation& occ) {
  int s = 0;
  for (int v : occ) s += v;
  return s;
}

// Sign exponent for the alternating-sign families: theta_1 + ... + theta_{i-1},
// plus theta_i itself under the as-printed variant.
int sign_exponent(const Occupation& occ, int mode, PhaseConvention phase) {
  int e = 0;
  for (int j = 0; j < mode - 1; ++j) e += occ[j];
  if (phase == PhaseConvention::AsPrinted) e += occ[mode - 1];
  return e;
}

void check_mode(const StatisticsFamily& family, int mode) {
  if (mode < 1 || mode > family.n)
    throw std::out_of_range("mode index out of range 1..n");
}

}  // namespace

std::string family_tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::A: return "A";
    case FamilyTag::ASuper: return "ASuper";
    case FamilyTag::Fermi: return "Fermi";
    case FamilyTag::TruncatedBose: return "TruncatedBose";
  }
  return "?";
}

bool StatisticsFamily::admits(const Occupation& occ) const {
  if (static_cast<int>(occ.size()) != n) return false;
  int sum = 0;
  for (int v : occ) {
    if (v < 0) return false;
    sum += v;
    switch (tag) {
      case FamilyTag::A:
        if (v > p) return false;
        break;
      case FamilyTag::ASuper:
      case FamilyTag::Fermi:
        if (v > 1) return false;
        break;
      case FamilyTag::TruncatedBose:
        if (v > p) return false;
        break;
    }
  }
  if (tag == FamilyTag::A && sum > p) return false;
  if (tag == FamilyTag::ASuper && sum > std::min(p, n)) return false;
  return true;
}

FockModule::FockModule(StatisticsFamily family) : family_(family) {
  if (family.n < 1) throw std::invalid_argument("FockModule: n must be >= 1");
  if (family.p < 1) throw std::invalid_argument("FockModule: p must be >= 1");
  if (family.tag == FamilyTag::Fermi && family.p != 1)
    throw std::invalid_argument("FockModule: Fermi family has p = 1");

  // Lexicographic enumeration; the all-zero vacuum comes first.
  Occupation occ(family.n, 0);
  const int per_mode_max =
      (family.tag == FamilyTag::ASuper || family.tag == FamilyTag::Fermi) ? 1 : family.p;
  auto recurse = [&](auto&& self, int mode) -> void {
    if (mode == family.n) {
      if (family_.admits(occ)) {
        index_.emplace(occ, basis_.size());
        basis_.push_back(occ);
      }
      return;
    }
    for (int v = 0; v <= per_mode_max; ++v) {
      occ[mode] = v;
      self(self, mode + 1);
    }
    occ[mode] = 0;
  };
  recurse(recurse, 0);
}

std::optional<std::size_t> FockModule::index_of(const Occupation& occ) const {
  auto it = index_.find(occ);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FockModule::total_occupation(std::size_t index) const {
  return occupation_sum(basis_.at(index));
}

std::shared_ptr<const FockModule> build_module(StatisticsFamily family) {
  return std::make_shared<const FockModule>(family);
}

Parity parity_sum(Parity a, Parity b) {
  return a == b ? Parity::Even : Parity::Odd;
}

Operator::Operator(std::shared_ptr<const FockModule> module, Parity grade)
    : module_(std::move(module)), grade_(grade) {
  if (!module_) throw std::invalid_argument("Operator: null module");
}

Operator Operator::identity(std::shared_ptr<const FockModule> module) {
  Operator out(std::move(module), Parity::Even);
  for (std::size_t k = 0; k < out.module_->dim(); ++k)
    out.entries_.emplace(std::make_pair(k, k), RadicalScalar::one());
  return out;
}

RadicalScalar Operator::entry(std::size_t row, std::size_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? RadicalScalar::zero() : it->second;
}

void Operator::set_entry(std::size_t row, std::size_t col, RadicalScalar value) {
  if (row >= module_->dim() || col >= module_->dim())
    throw std::out_of_range("Operator entry outside module dimension");
  if (value.is_zero()) {
    entries_.erase({row, col});
  } else {
    entries_[{row, col}] = std::move(value);
  }
}

void Operator::add_to_entry(std::size_t row, std::size_t col, const RadicalScalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({row, col}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Operator Operator::adjoint() const {
  Operator out(module_, grade_);
  for (const auto& [rc, v] : entries_)
    out.entries_.emplace(std::make_pair(rc.second, rc.first), v.conjugate());
  return out;
}

std::vector<RadicalScalar> Operator::apply(const std::vector<RadicalScalar>& v) const {
  if (v.size() != module_->dim())
    throw std::invalid_argument("Operator::apply: vector dimension mismatch");
  std::vector<RadicalScalar> out(v.size());
  for (const auto& [rc, value] : entries_) {
    if (!v[rc.second].is_zero()) out[rc.first] += value * v[rc.second];
  }
  return out;
}

std::vector<std::complex<double>> Operator::to_complex_dense() const {
  const std::size_t d = module_->dim();
  std::vector<std::complex<double>> out(d * d, {0.0, 0.0});
  for (const auto& [rc, v] : entries_) out[rc.first * d + rc.second] = v.to_complex();
  return out;
}

namespace {

void check_same_module(const Operator& x, const Operator& y) {
  if (!(x.module()->family() == y.module()->family()))
    throw std::invalid_argument("operators live on different modules");
}

Parity cao_grade(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::ASuper:
    case FamilyTag::Fermi:
    case FamilyTag::TruncatedBose:
      return Parity::Odd;
    case FamilyTag::A:
      return Parity::Even;
  }
  return Parity::Even;
}

}  // namespace

Operator creation(std::shared_ptr<const FockModule> module, int mode, PhaseConvention phase) {
  const StatisticsFamily& family = module->family();
  check_mode(family, mode);
  Operator out(module, cao_grade(family.tag));
  const int i = mode - 1;
  for (std::size_t col = 0; col < module->dim(); ++col) {
    const Occupation& occ = module->state_at(col);
    const int sum = occupation_sum(occ);
    RadicalScalar amplitude;
    switch (family.tag) {
      case FamilyTag::A: {
        if (sum == family.p) continue;  // order saturated: a_i^+ kills the state
        amplitude = RadicalScalar::sqrt_of(
            static_cast<std::int64_t>(occ[i] + 1) * (family.p - sum));
        break;
      }
      case FamilyTag::ASuper: {
        if (occ[i] == 1 || sum == family.p) continue;
        amplitude = RadicalScalar::sqrt_of(static_cast<std::int64_t>(family.p - sum));
        if (sign_exponent(occ, mode, phase) % 2 != 0) amplitude = -amplitude;
        break;
      }
      case FamilyTag::Fermi: {
        if (occ[i] == 1) continue;
        amplitude = sign_exponent(occ, mode, phase) % 2 == 0 ? RadicalScalar::one()
                                                             : -RadicalScalar::one();
        break;
      }
      case FamilyTag::TruncatedBose: {
        if (occ[i] == family.p) continue;  // cutoff: annihilated
        amplitude = RadicalScalar::sqrt_of(static_cast<std::int64_t>(occ[i] + 1));
        break;
      }
    }
    Occupation target = occ;
    target[i] += 1;
    out.set_entry(module->index_of(target).value(), col, std::move(amplitude));
  }
  return out;
}

Operator annihilation(std::shared_ptr<const FockModule> module, int mode, PhaseConvention phase) {
  const StatisticsFamily& family = module->family();
  check_mode(family, mode);
  Operator out(module, cao_grade(family.tag));
  const int i = mode - 1;
  for (std::size_t col = 0; col < module->dim(); ++col) {
    const Occupation& occ = module->state_at(col);
    if (occ[i] == 0) continue;
    const int sum = occupation_sum(occ);
    RadicalScalar amplitude;
    switch (family.tag) {
      case FamilyTag::A:
        amplitude = RadicalScalar::sqrt_of(
            static_cast<std::int64_t>(occ[i]) * (family.p - sum + 1));
        break;
      case FamilyTag::ASuper:
        amplitude = RadicalScalar::sqrt_of(static_cast<std::int64_t>(family.p - sum + 1));
        if (sign_exponent(occ, mode, phase) % 2 != 0) amplitude = -amplitude;
        break;
      case FamilyTag::Fermi:
        amplitude = sign_exponent(occ, mode, phase) % 2 == 0 ? RadicalScalar::one()
                                                             : -RadicalScalar::one();
        break;
      case FamilyTag::TruncatedBose:
        amplitude = RadicalScalar::sqrt_of(static_cast<std::int64_t>(occ[i]));
        break;
    }
    Occupation target = occ;
    target[i] -= 1;
    out.set_entry(module->index_of(target).value(), col, std::move(amplitude));
  }
  return out;
}

Operator gl_generator(std::shared_ptr<const FockModule> module, int a, int b) {
  const StatisticsFamily& family = module->family();
  if (family.tag != FamilyTag::A)
    throw std::invalid_argument("gl_generator: defined for the A family only");
  const int n = family.n;
  if (a < 0 || a > n || b < 0 || b > n)
    throw std::out_of_range("gl_generator: indices must lie in 0..n");

  if (a > 0 && b == 0) return creation(module, a);
  if (a == 0 && b > 0) return annihilation(module, b);
  if (a != b) {
    Operator plus = creation(module, a);
    Operator minus = annihilation(module, b);
    return sub(compose(plus, minus), compose(minus, plus));
  }

  // Diagonal: e_aa - e_00 = [a_a^+, a_a^-] together with sum_c e_cc = p * I.
  Operator trace_part = scale(RadicalScalar::from_int(family.p), Operator::identity(module));
  std::vector<Operator> diffs;
  diffs.reserve(n);
  for (int i = 1; i <= n; ++i) {
    Operator plus = creation(module, i);
    Operator minus = annihilation(module, i);
    diffs.push_back(sub(compose(plus, minus), compose(minus, plus)));
    trace_part = sub(trace_part, diffs.back());
  }
  Operator e00 = scale(RadicalScalar::from_rational(Rational(1, n + 1)), trace_part);
  if (a == 0) return e00;
  return add(e00, diffs[a - 1]);
}

Operator compose(const Operator& x, const Operator& y) {
  check_same_module(x, y);
  Operator out(x.module(), parity_sum(x.grade(), y.grade()));
  std::map<std::size_t, std::vector<std::pair<std::size_t, const RadicalScalar*>>> x_by_col;
  for (const auto& [rc, v] : x.entries()) x_by_col[rc.second].emplace_back(rc.first, &v);
  for (const auto& [rc, v] : y.entries()) {
    auto it = x_by_col.find(rc.first);
    if (it == x_by_col.end()) continue;
    for (const auto& [row, xv] : it->second) out.add_to_entry(row, rc.second, *xv * v);
  }
  return out;
}

Operator add(const Operator& x, const Operator& y) {
  check_same_module(x, y);
  if (!x.is_zero() && !y.is_zero() && x.grade() != y.grade())
    throw std::invalid_argument("operator sum of mixed parity");
  Operator out = x.is_zero() && !y.is_zero() ? Operator(x.module(), y.grade()) : x;
  for (const auto& [rc, v] : y.entries()) out.add_to_entry(rc.first, rc.second, v);
  return out;
}

Operator sub(const Operator& x, const Operator& y) {
  return add(x, scale(-RadicalScalar::one(), y));
}

Operator scale(const RadicalScalar& c, const Operator& x) {
  Operator out(x.module(), x.grade());
  if (c.is_zero()) return out;
  for (const auto& [rc, v] : x.entries()) out.set_entry(rc.first, rc.second, c * v);
  return out;
}

double max_abs_entry(const Operator& x) {
  double acc = 0.0;
  for (const auto& [rc, v] : x.entries()) acc = std::max(acc, std::abs(v.to_complex()));
  return acc;
}

std::vector<RadicalScalar> monomial_state(const std::shared_ptr<const FockModule>& module,
                                          const Occupation& occ, PhaseConvention phase) {
  const StatisticsFamily& family = module->family();
  if (!family.admits(occ))
    throw std::invalid_argument("monomial_state: occupation not admitted by the family");

  std::vector<RadicalScalar> v(module->dim());
  v[module->vacuum_index()] = RadicalScalar::one();
  // (a_1^+)^{l_1} ... (a_n^+)^{l_n} |0>: the mode-n factor acts first.
  for (int mode = family.n; mode >= 1; --mode) {
    Operator raise = creation(module, mode, phase);
    for (int k = 0; k < occ[mode - 1]; ++k) v = raise.apply(v);
  }

  Rational norm_sq;
  switch (family.tag) {
    case FamilyTag::A:
    case FamilyTag::ASuper: {
      const int sum = occupation_sum(occ);
      BigInt den = factorial(family.p);
      for (int l : occ) den *= factorial(l);
      norm_sq = Rational(factorial(family.p - sum), den);
      break;
    }
    case FamilyTag::Fermi:
      norm_sq = 1;
      break;
    case FamilyTag::TruncatedBose: {
      BigInt den = 1;
      for (int l : occ) den *= factorial(l);
      norm_sq = Rational(1, den);
      break;
    }
  }
  RadicalScalar norm = RadicalScalar::sqrt_of(norm_sq);
  for (auto& component : v) component *= norm;
  return v;
}

void to_json(nlohmann::json& j, const StatisticsFamily& f) {
  j = nlohmann::json{{"tag", family_tag_name(f.tag)}, {"n", f.n}, {"p", f.p}};
}

void to_json(nlohmann::json& j, const FockModule& m) {
  j = nlohmann::json{{"family", m.family()}, {"dim", m.dim()}, {"basis", m.basis()}};
}

void to_json(nlohmann::json& j, const Operator& op) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [rc, v] : op.entries()) entries.push_back({rc.first, rc.second, v});
  j = nlohmann::json{{"family", op.module()->family()},
                     {"dim", op.module()->dim()},
                     {"grade", op.grade() == Parity::Even ? "even" : "odd"},
                     {"entries", std::move(entries)}};
}

}  // namespace astat
