// Copyright 2026 The astat Authors
// SPDX-License-Identifier: Apache-2.0

#include "astat/oscillator.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace astat {

namespace {

void check_config(const OscillatorConfig& cfg) {
  if (cfg.p < 1) throw std::invalid_argument("oscillator: p must be >= 1");
  if (cfg.hbar <= 0 || cfg.mass <= 0 || cfg.omega <= 0)
    throw std::invalid_argument("oscillator: physical constants must be positive");
}

int state_q(const Occupation& occ) {
  int q = 0;
  for (int v : occ) q += v;
  return q;
}

std::size_t state_index(const std::shared_ptr<const FockModule>& module, const Occupation& state) {
  auto idx = module->index_of(state);
  if (!idx) throw std::invalid_argument("state is not a basis label of the module");
  return *idx;
}

}  // namespace

double position_unit(const OscillatorConfig& cfg) {
  return std::sqrt(cfg.hbar / (2.0 * cfg.mass * cfg.omega));
}

double momentum_unit(const OscillatorConfig& cfg) {
  return std::sqrt(cfg.mass * cfg.omega * cfg.hbar / 2.0);
}

ObservableSet build_observables(const OscillatorConfig& cfg) {
  check_config(cfg);
  auto module = build_module(StatisticsFamily::a_super(3, cfg.p));
  CaoSet ops = make_cao_set(module);

  // 1/sqrt(2) = (1/2) sqrt(2) and -i/sqrt(2), exact in the radical field.
  const RadicalScalar inv_sqrt2 = RadicalScalar::term(2, GaussianRational(Rational(1, 2)));
  const RadicalScalar minus_i_inv_sqrt2 =
      RadicalScalar::term(2, GaussianRational(Rational(0), Rational(-1, 2)));
  const RadicalScalar half = RadicalScalar::from_rational(Rational(1, 2));

  auto make_axis = [&](int k) {
    Operator r = scale(inv_sqrt2, add(ops.raise[k], ops.lower[k]));
    Operator p = scale(minus_i_inv_sqrt2, sub(ops.raise[k], ops.lower[k]));
    return std::pair{std::move(r), std::move(p)};
  };
  auto [r0, p0] = make_axis(0);
  auto [r1, p1] = make_axis(1);
  auto [r2, p2] = make_axis(2);

  Operator h(module, Parity::Even);
  for (int k = 0; k < 3; ++k) h = add(h, anticommutator(ops.raise[k], ops.lower[k]));
  h = scale(half, h);

  ObservableSet obs{module,
                    {r0, r1, r2},
                    {p0, p1, p2},
                    {compose(r0, r0), compose(r1, r1), compose(r2, r2)},
                    {compose(p0, p0), compose(p1, p1), compose(p2, p2)},
                    std::move(h),
                    Operator(module, Parity::Even),
                    Operator(module, Parity::Even)};
  for (int k = 0; k < 3; ++k) {
    obs.r_squared = add(obs.r_squared, obs.position_sq[k]);
    obs.p_squared = add(obs.p_squared, obs.momentum_sq[k]);
  }
  return obs;
}

std::vector<RelationReport> check_compatibility(const ObservableSet& obs, const CaoSet& ops) {
  std::vector<RelationReport> reports;
  const RadicalScalar i_unit = RadicalScalar::unit_i();
  const RadicalScalar two = RadicalScalar::from_int(2);
  for (int k = 0; k < 3; ++k) {
    // [H, P_k] = i hbar m omega^2 R_k and [H, R_k] = -(i hbar/m) P_k; in
    // natural units the right-hand sides are i R_k and -i P_k.
    reports.push_back(make_report("compat:[H,P]=i*R", {k + 1},
                                  sub(commutator(obs.hamiltonian, obs.momentum[k]),
                                      scale(i_unit, obs.position[k]))));
    reports.push_back(make_report("compat:[H,R]=-i*P", {k + 1},
                                  add(commutator(obs.hamiltonian, obs.position[k]),
                                      scale(i_unit, obs.momentum[k]))));

    // CAO form: sum_i [{a_i^+, a_i^-}, a_k^+] = -2 a_k^+ (and +2 a_k^-).
    Operator sum_plus(obs.module, ops.raise[k].grade());
    Operator sum_minus(obs.module, ops.lower[k].grade());
    for (int i = 0; i < 3; ++i) {
      Operator number_like = anticommutator(ops.raise[i], ops.lower[i]);
      sum_plus = add(sum_plus, commutator(number_like, ops.raise[k]));
      sum_minus = add(sum_minus, commutator(number_like, ops.lower[k]));
    }
    reports.push_back(make_report("compat:sum[{a+,a-},a+]=-2a+", {k + 1},
                                  add(sum_plus, scale(two, ops.raise[k]))));
    reports.push_back(make_report("compat:sum[{a+,a-},a-]=+2a-", {k + 1},
                                  sub(sum_minus, scale(two, ops.lower[k]))));
  }
  return reports;
}

std::vector<RelationReport> check_compatibility(const OscillatorConfig& cfg) {
  ObservableSet obs = build_observables(cfg);
  CaoSet ops = make_cao_set(obs.module);
  return check_compatibility(obs, ops);
}

std::vector<SpectrumLine> spectrum(const OscillatorConfig& cfg) {
  check_config(cfg);
  auto module = build_module(StatisticsFamily::a_super(3, cfg.p));
  std::map<int, int> multiplicity;
  for (std::size_t k = 0; k < module->dim(); ++k) ++multiplicity[module->total_occupation(k)];

  std::vector<SpectrumLine> lines;
  for (const auto& [q, count] : multiplicity) {
    SpectrumLine line;
    line.q = q;
    line.multiplicity = count;
    line.energy_natural = Rational(3 * cfg.p - 2 * q, 2);
    line.energy = cfg.omega * cfg.hbar * line.energy_natural.convert_to<double>();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<RelationReport> check_commuting_family(const OscillatorConfig& cfg) {
  ObservableSet obs = build_observables(cfg);
  std::vector<std::pair<std::string, const Operator*>> named = {
      {"H", &obs.hamiltonian},   {"R^2", &obs.r_squared},
      {"P^2", &obs.p_squared},   {"R1^2", &obs.position_sq[0]},
      {"R2^2", &obs.position_sq[1]}, {"R3^2", &obs.position_sq[2]},
      {"P1^2", &obs.momentum_sq[0]}, {"P2^2", &obs.momentum_sq[1]},
      {"P3^2", &obs.momentum_sq[2]}};

  std::vector<RelationReport> reports;
  for (std::size_t a = 0; a < named.size(); ++a) {
    for (std::size_t b = a + 1; b < named.size(); ++b) {
      reports.push_back(make_report(
          "commute:[" + named[a].first + "," + named[b].first + "]",
          {static_cast<int>(a), static_cast<int>(b)},
          commutator(*named[a].second, *named[b].second)));
    }
  }
  return reports;
}

Operator canonical_commutator_residual(const ObservableSet& obs, int j, int k) {
  if (j < 1 || j > 3 || k < 1 || k > 3)
    throw std::out_of_range("axis indices must lie in 1..3");
  Operator residual = commutator(obs.position[j - 1], obs.momentum[k - 1]);
  if (j == k)
    residual = sub(residual, scale(RadicalScalar::unit_i(), Operator::identity(obs.module)));
  return residual;
}

std::vector<SupportPoint> measurement_support(const OscillatorConfig& cfg,
                                              const Occupation& state) {
  check_config(cfg);
  if (cfg.p <= 2)
    throw std::domain_error(
        "measurement_support: the eight-point support picture requires p > 2");
  auto module = build_module(StatisticsFamily::a_super(3, cfg.p));
  state_index(module, state);

  const int q = state_q(state);
  const double unit = position_unit(cfg);
  std::array<RadicalScalar, 3> radius;
  for (int i = 0; i < 3; ++i)
    radius[i] = RadicalScalar::sqrt_of(static_cast<std::int64_t>(cfg.p - q + state[i]));

  std::vector<SupportPoint> points;
  for (int s1 : {+1, -1})
    for (int s2 : {+1, -1})
      for (int s3 : {+1, -1}) {
        SupportPoint pt;
        const std::array<int, 3> sign = {s1, s2, s3};
        for (int i = 0; i < 3; ++i) {
          pt.exact[i] = sign[i] > 0 ? radius[i] : -radius[i];
          pt.coords[i] = pt.exact[i].to_double_real() * unit;
        }
        bool duplicate = false;
        for (const auto& existing : points) {
          if (existing.exact == pt.exact) {
            duplicate = true;
            break;
          }
        }
        if (!duplicate) points.push_back(std::move(pt));
      }
  return points;
}

UncertaintyRecord uncertainty_report(const OscillatorConfig& cfg, const Occupation& state) {
  ObservableSet obs = build_observables(cfg);
  const std::size_t idx = state_index(obs.module, state);

  UncertaintyRecord rec;
  rec.state = state;
  rec.q = state_q(state);
  rec.window_low_hbar = Rational(cfg.p - 2, 2);
  rec.window_high_hbar = Rational(cfg.p, 2);
  rec.within_window = true;

  const double r_scale = std::sqrt(cfg.hbar / (cfg.mass * cfg.omega));  // natural -> physical
  const double p_scale = std::sqrt(cfg.mass * cfg.omega * cfg.hbar);
  for (int i = 0; i < 3; ++i) {
    // Means and second moments from the exact matrix elements.
    rec.mean_position[i] = obs.position[i].entry(idx, idx).to_double_real() * r_scale;
    rec.mean_momentum[i] = obs.momentum[i].entry(idx, idx).to_double_real() * p_scale;
    const RadicalScalar r2 = obs.position_sq[i].entry(idx, idx);
    const RadicalScalar p2 = obs.momentum_sq[i].entry(idx, idx);
    rec.dev_position[i] = std::sqrt(r2.to_double_real()) * r_scale;
    rec.dev_momentum[i] = std::sqrt(p2.to_double_real()) * p_scale;

    // In natural units <R_i^2> and <P_i^2> coincide, so the product
    // dR_i dP_i equals that rational value in units of hbar; render the
    // float from the exact value rather than multiplying the two roots.
    if (!(r2 == p2) || !r2.is_rational() || r2.rational_part().im != 0)
      throw std::logic_error("uncertainty_report: unexpected squared moments");
    rec.product_hbar[i] = r2.rational_part().re;
    rec.product[i] = cfg.hbar * rec.product_hbar[i].convert_to<double>();
    if (rec.product_hbar[i] < rec.window_low_hbar || rec.product_hbar[i] > rec.window_high_hbar)
      rec.within_window = false;
  }
  return rec;
}

EvolvedObservables evolve(const OscillatorConfig& cfg, double t) {
  check_config(cfg);
  auto module = build_module(StatisticsFamily::a_super(3, cfg.p));
  CaoSet ops = make_cao_set(module);
  const std::size_t d = module->dim();

  EvolvedObservables out;
  out.t = t;
  out.dim = d;
  const std::complex<double> forward = std::exp(std::complex<double>(0.0, -cfg.omega * t));
  const std::complex<double> backward = std::conj(forward);
  const std::complex<double> r_unit(position_unit(cfg), 0.0);
  const std::complex<double> p_unit = std::complex<double>(0.0, -1.0) * momentum_unit(cfg);

  for (int k = 0; k < 3; ++k) {
    ComplexDense plus = ops.raise[k].to_complex_dense();
    ComplexDense minus = ops.lower[k].to_complex_dense();
    ComplexDense r(d * d), p(d * d);
    for (std::size_t idx = 0; idx < d * d; ++idx) {
      r[idx] = r_unit * (plus[idx] * forward + minus[idx] * backward);
      p[idx] = p_unit * (plus[idx] * forward - minus[idx] * backward);
    }
    out.position[k] = std::move(r);
    out.momentum[k] = std::move(p);
  }
  return out;
}

void to_json(nlohmann::json& j, const SpectrumLine& line) {
  j = nlohmann::json{{"q", line.q},
                     {"multiplicity", line.multiplicity},
                     {"energy", line.energy},
                     {"energy_natural", line.energy_natural.str()}};
}

void to_json(nlohmann::json& j, const SupportPoint& pt) {
  j = nlohmann::json{{"exact", {pt.exact[0], pt.exact[1], pt.exact[2]}},
                     {"coords", pt.coords}};
}

void to_json(nlohmann::json& j, const UncertaintyRecord& rec) {
  std::array<std::string, 3> products;
  for (int i = 0; i < 3; ++i) products[i] = rec.product_hbar[i].str();
  j = nlohmann::json{{"state", rec.state},
                     {"q", rec.q},
                     {"mean_position", rec.mean_position},
                     {"mean_momentum", rec.mean_momentum},
                     {"dev_position", rec.dev_position},
                     {"dev_momentum", rec.dev_momentum},
                     {"product", rec.product},
                     {"product_hbar", products},
                     {"window_low_hbar", rec.window_low_hbar.str()},
                     {"window_high_hbar", rec.window_high_hbar.str()},
                     {"within_window", rec.within_window}};
}

}  // namespace astat
