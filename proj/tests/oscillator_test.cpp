// Copyright 2026 The astat Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "astat/oscillator.hpp"

using namespace astat;

namespace {

RadicalScalar nat_half_times(int v) {
  return RadicalScalar::from_rational(Rational(v, 2));
}

std::complex<double> dense_at(const ComplexDense& m, std::size_t dim, std::size_t r,
                              std::size_t c) {
  return m[r * dim + c];
}

double max_abs_diff(const ComplexDense& a, const ComplexDense& b) {
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) acc = std::max(acc, std::abs(a[k] - b[k]));
  return acc;
}

ComplexDense scaled_dense(const Operator& op, double factor) {
  ComplexDense m = op.to_complex_dense();
  for (auto& v : m) v *= factor;
  return m;
}

}  // namespace

TEST_CASE("Hamiltonian is diagonal with eigenvalues (3p-2q)/2") {
  for (int p : {1, 3, 5}) {
    ObservableSet obs = build_observables({p});
    for (std::size_t k = 0; k < obs.module->dim(); ++k) {
      const int q = obs.module->total_occupation(k);
      CHECK(obs.hamiltonian.entry(k, k) == nat_half_times(3 * p - 2 * q));
    }
    // Nothing off the diagonal.
    for (const auto& [rc, v] : obs.hamiltonian.entries()) CHECK(rc.first == rc.second);
  }
}

TEST_CASE("square-commutative geometry: H, R^2 and P^2 coincide in natural units") {
  ObservableSet obs = build_observables({3});
  CHECK(obs.r_squared == obs.hamiltonian);
  CHECK(obs.p_squared == obs.hamiltonian);
}

TEST_CASE("R_i^2 is diagonal with eigenvalues (p-q+theta_i)/2") {
  for (int p : {1, 3, 4}) {
    ObservableSet obs = build_observables({p});
    for (int i = 0; i < 3; ++i) {
      for (std::size_t k = 0; k < obs.module->dim(); ++k) {
        const Occupation& occ = obs.module->state_at(k);
        const int q = obs.module->total_occupation(k);
        CHECK(obs.position_sq[i].entry(k, k) == nat_half_times(p - q + occ[i]));
        CHECK(obs.momentum_sq[i].entry(k, k) == nat_half_times(p - q + occ[i]));
      }
    }
  }
}

TEST_CASE("observables are exactly hermitian") {
  ObservableSet obs = build_observables({4});
  CHECK(obs.hamiltonian.adjoint() == obs.hamiltonian);
  for (int k = 0; k < 3; ++k) {
    CHECK(obs.position[k].adjoint() == obs.position[k]);
    CHECK(obs.momentum[k].adjoint() == obs.momentum[k]);
    CHECK(obs.position_sq[k].adjoint() == obs.position_sq[k]);
  }
}

TEST_CASE("compatibility conditions hold exactly") {
  CHECK(all_pass(check_compatibility({1})));
  CHECK(all_pass(check_compatibility({5})));

  // Heisenberg / Hamiltonian self-consistency spelled out: the Heisenberg
  // forms (i/hbar)[H, R_k] = P_k/m and (i/hbar)[H, P_k] = -m omega^2 R_k
  // reproduce the equations of motion dR/dt = P/m, dP/dt = -m omega^2 R.
  ObservableSet obs = build_observables({2});
  const RadicalScalar i_unit = RadicalScalar::unit_i();
  for (int k = 0; k < 3; ++k) {
    CHECK(scale(i_unit, commutator(obs.hamiltonian, obs.position[k])) == obs.momentum[k]);
    CHECK(scale(i_unit, commutator(obs.hamiltonian, obs.momentum[k])) ==
          scale(-RadicalScalar::one(), obs.position[k]));
  }
}

TEST_CASE("negative control: A-family CAOs of sl(4) break the compatibility identity") {
  auto module = build_module(StatisticsFamily::a(3, 2));
  CaoSet ops = make_cao_set(module);
  const RadicalScalar two = RadicalScalar::from_int(2);
  bool some_failure = false;
  for (int k = 0; k < 3; ++k) {
    Operator sum(module, Parity::Even);
    for (int i = 0; i < 3; ++i)
      sum = add(sum, commutator(anticommutator(ops.raise[i], ops.lower[i]), ops.raise[k]));
    if (!add(sum, scale(two, ops.raise[k])).is_zero()) some_failure = true;
  }
  CHECK(some_failure);
}

TEST_CASE("spectrum: equally spaced levels with binomial multiplicities") {
  auto lines = spectrum({3});
  REQUIRE(lines.size() == 4);
  const double expected_energy[] = {4.5, 3.5, 2.5, 1.5};
  const int expected_mult[] = {1, 3, 3, 1};
  for (int q = 0; q < 4; ++q) {
    CHECK(lines[q].q == q);
    CHECK(lines[q].energy == expected_energy[q]);
    CHECK(lines[q].multiplicity == expected_mult[q]);
  }

  auto low = spectrum({1});
  REQUIRE(low.size() == 2);
  CHECK(low[0].energy == 1.5);
  CHECK(low[0].multiplicity == 1);
  CHECK(low[1].energy == 0.5);
  CHECK(low[1].multiplicity == 3);

  // Linear in omega; spacing exactly omega*hbar.
  auto doubled = spectrum({3, 1.0, 1.0, 2.0});
  for (std::size_t k = 0; k < doubled.size(); ++k)
    CHECK(doubled[k].energy == 2.0 * lines[k].energy);
  for (int p = 1; p <= 6; ++p) {
    auto ls = spectrum({p});
    CHECK(static_cast<int>(ls.size()) == std::min(p, 3) + 1);
    for (std::size_t k = 0; k + 1 < ls.size(); ++k) {
      CHECK(ls[k].energy - ls[k + 1].energy == 1.0);
      CHECK(ls[k].energy_natural - ls[k + 1].energy_natural == Rational(1));
    }
  }
}

TEST_CASE("the nine squared observables commute pairwise") {
  for (int p = 1; p <= 6; ++p) {
    auto reports = check_commuting_family({p});
    CHECK(reports.size() == 36);
    CHECK(all_pass(reports));
  }
}

TEST_CASE("canonical commutation relations fail: the system is noncanonical") {
  ObservableSet obs = build_observables({3});
  for (int j = 1; j <= 3; ++j) {
    CHECK(!canonical_commutator_residual(obs, j, j).is_zero());
  }
}

TEST_CASE("measurement support") {
  auto points = measurement_support({3}, {1, 1, 0});
  REQUIRE(points.size() == 8);
  const RadicalScalar sqrt2 = RadicalScalar::sqrt_of(std::int64_t{2});
  const RadicalScalar one = RadicalScalar::one();
  for (const auto& pt : points) {
    CHECK((pt.exact[0] == sqrt2 || pt.exact[0] == -sqrt2));
    CHECK((pt.exact[1] == sqrt2 || pt.exact[1] == -sqrt2));
    CHECK((pt.exact[2] == one || pt.exact[2] == -one));
  }
  // All 8 sign patterns distinct.
  for (std::size_t x = 0; x < points.size(); ++x)
    for (std::size_t y = x + 1; y < points.size(); ++y)
      CHECK(points[x].exact != points[y].exact);

  auto corner = measurement_support({3}, {0, 0, 0});
  const RadicalScalar sqrt3 = RadicalScalar::sqrt_of(std::int64_t{3});
  for (const auto& pt : corner)
    for (int i = 0; i < 3; ++i) CHECK((pt.exact[i] == sqrt3 || pt.exact[i] == -sqrt3));

  auto inner = measurement_support({3}, {1, 1, 1});
  for (const auto& pt : inner)
    for (int i = 0; i < 3; ++i) CHECK((pt.exact[i] == one || pt.exact[i] == -one));

  // Float coordinates carry the sqrt(hbar/2 m omega) unit.
  auto scaled = measurement_support({3, 2.0, 1.0, 1.0}, {0, 0, 0});
  CHECK(scaled[0].coords[0] == doctest::Approx(std::sqrt(3.0) * std::sqrt(2.0 / 2.0)));

  CHECK_THROWS_AS(measurement_support({2}, {0, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(measurement_support({1}, {0, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(measurement_support({3}, {2, 0, 0}), std::invalid_argument);
}

TEST_CASE("uncertainty products saturate (p-q+theta_i) hbar/2") {
  // p=1, theta=(1,0,0): products (1,0,0) * hbar/2.
  auto rec = uncertainty_report({1}, {1, 0, 0});
  CHECK(rec.product_hbar[0] == Rational(1, 2));
  CHECK(rec.product_hbar[1] == 0);
  CHECK(rec.product_hbar[2] == 0);
  CHECK(rec.product[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rec.within_window);
  for (int i = 0; i < 3; ++i) {
    CHECK(rec.mean_position[i] == 0.0);
    CHECK(rec.mean_momentum[i] == 0.0);
  }

  // p=1, q=1, theta_i=0 gives a vanishing product; q=0 saturates hbar/2.
  auto vac = uncertainty_report({1}, {0, 0, 0});
  for (int i = 0; i < 3; ++i) CHECK(vac.product_hbar[i] == Rational(1, 2));

  // p=4: every basis state sits inside [(p-2)/2, p/2] in units of hbar.
  auto module = build_module(StatisticsFamily::a_super(3, 4));
  bool low_attained = false;
  bool high_attained = false;
  for (const auto& state : module->basis()) {
    auto r = uncertainty_report({4}, state);
    CHECK(r.within_window);
    for (int i = 0; i < 3; ++i) {
      CHECK(r.product_hbar[i] >= Rational(1));      // (p-2)/2 = 1
      CHECK(r.product_hbar[i] <= Rational(2));      // p/2 = 2
      if (r.product_hbar[i] == Rational(1)) low_attained = true;
      if (r.product_hbar[i] == Rational(2)) high_attained = true;
    }
  }
  CHECK(low_attained);
  CHECK(high_attained);

  // Physical scaling: the product picks up exactly one factor of hbar.
  auto phys = uncertainty_report({1, 3.0, 2.0, 5.0}, {0, 0, 0});
  CHECK(phys.product[0] == doctest::Approx(0.5 * 3.0).epsilon(1e-12));
}

TEST_CASE("time evolution matches the exact observables at t = 0") {
  OscillatorConfig cfg{3};
  ObservableSet obs = build_observables(cfg);
  EvolvedObservables frame = evolve(cfg, 0.0);
  // Natural units: the physical render of the exact operators is the
  // operator itself (scale factor sqrt(hbar/m omega) = 1).
  for (int k = 0; k < 3; ++k) {
    CHECK(max_abs_diff(frame.position[k], obs.position[k].to_complex_dense()) < 1e-12);
    CHECK(max_abs_diff(frame.momentum[k], obs.momentum[k].to_complex_dense()) < 1e-12);
  }

  // Non-natural units scale by sqrt(hbar/m omega) and sqrt(m omega hbar).
  OscillatorConfig phys{3, 2.0, 3.0, 0.5};
  EvolvedObservables pframe = evolve(phys, 0.0);
  const double r_scale = std::sqrt(phys.hbar / (phys.mass * phys.omega));
  const double p_scale = std::sqrt(phys.mass * phys.omega * phys.hbar);
  for (int k = 0; k < 3; ++k) {
    CHECK(max_abs_diff(pframe.position[k], scaled_dense(obs.position[k], r_scale)) < 1e-12);
    CHECK(max_abs_diff(pframe.momentum[k], scaled_dense(obs.momentum[k], p_scale)) < 1e-12);
  }
}

TEST_CASE("time evolution is periodic with period 2 pi / omega") {
  OscillatorConfig cfg{2, 1.0, 1.0, 1.0};
  EvolvedObservables start = evolve(cfg, 0.0);
  EvolvedObservables period = evolve(cfg, 2.0 * M_PI / cfg.omega);
  for (int k = 0; k < 3; ++k) {
    CHECK(max_abs_diff(start.position[k], period.position[k]) < 1e-10);
    CHECK(max_abs_diff(start.momentum[k], period.momentum[k]) < 1e-10);
  }
}

TEST_CASE("finite differences recover the Hamiltonian equations of motion") {
  OscillatorConfig cfg{3, 1.0, 1.5, 0.8};
  const double h = 1e-5;
  for (double t : {0.0, 0.7, 2.3}) {
    EvolvedObservables minus = evolve(cfg, t - h);
    EvolvedObservables plus = evolve(cfg, t + h);
    EvolvedObservables mid = evolve(cfg, t);
    for (int k = 0; k < 3; ++k) {
      for (std::size_t idx = 0; idx < mid.position[k].size(); ++idx) {
        // dR/dt = P/m.
        std::complex<double> lhs =
            (plus.position[k][idx] - minus.position[k][idx]) / (2.0 * h);
        std::complex<double> rhs = mid.momentum[k][idx] / cfg.mass;
        CHECK(std::abs(lhs - rhs) <= 1e-6 * std::max(1.0, std::abs(rhs)));
        // dP/dt = -m omega^2 R.
        std::complex<double> lhs_p =
            (plus.momentum[k][idx] - minus.momentum[k][idx]) / (2.0 * h);
        std::complex<double> rhs_p =
            -cfg.mass * cfg.omega * cfg.omega * mid.position[k][idx];
        CHECK(std::abs(lhs_p - rhs_p) <= 1e-6 * std::max(1.0, std::abs(rhs_p)));
      }
    }
  }
}

TEST_CASE("basis-state expectations of R and P vanish for all t") {
  OscillatorConfig cfg{3};
  auto module = build_module(StatisticsFamily::a_super(3, 3));
  for (double t : {0.0, 0.5, 1.7}) {
    EvolvedObservables frame = evolve(cfg, t);
    for (std::size_t k = 0; k < module->dim(); ++k) {
      for (int axis = 0; axis < 3; ++axis) {
        CHECK(std::abs(dense_at(frame.position[axis], frame.dim, k, k)) == 0.0);
        CHECK(std::abs(dense_at(frame.momentum[axis], frame.dim, k, k)) == 0.0);
      }
    }
  }
}

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS(build_observables({0}), std::invalid_argument);
  CHECK_THROWS_AS(build_observables({1, -1.0, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(spectrum({1, 1.0, 0.0, 1.0}), std::invalid_argument);
}
