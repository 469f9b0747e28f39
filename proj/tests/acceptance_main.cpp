// Copyright 2026 The astat Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one line per criterion, exact (zero-residual) oracles
// throughout.  Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "astat/limits.hpp"
#include "astat/oscillator.hpp"

using namespace astat;

namespace {

int failures = 0;

void criterion(int number, const std::string& description, bool pass,
               const std::string& detail = "") {
  std::printf("[%s] criterion %02d: %s%s%s\n", pass ? "PASS" : "FAIL", number,
              description.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

std::vector<RadicalScalar> vacuum_vector(const std::shared_ptr<const FockModule>& m) {
  std::vector<RadicalScalar> v(m->dim());
  v[m->vacuum_index()] = RadicalScalar::one();
  return v;
}

bool vector_is_zero(const std::vector<RadicalScalar>& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

void compositions(int total, int modes, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  if (modes == 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    current.push_back(v);
    compositions(total - v, modes - 1, current, out);
    current.pop_back();
  }
}

int binomial3(int k) { return k == 0 || k == 3 ? 1 : 3; }  // C(3, k), k in 0..3

// --------------------------------------------------------------------------

void criterion_1_relation_suites() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::size_t instances = 0;
  for (int n = 1; n <= 4 && ok; ++n) {
    for (int p = 1; p <= 6 && ok; ++p) {
      auto reports = verify_A_relations(n, p);
      instances += reports.size();
      ok = all_pass(reports);
    }
  }
  for (int p = 1; p <= 6 && ok; ++p) {
    auto reports = verify_ASuper_relations(3, p);
    instances += reports.size();
    ok = all_pass(reports);
  }
  for (int n = 1; n <= 3 && ok; ++n) {
    for (int p = 1; p <= 4 && ok; ++p) {
      auto reports = verify_gl_relations(n, p);
      instances += reports.size();
      ok = all_pass(reports);
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = ok && seconds < 60.0;
  char detail[128];
  std::snprintf(detail, sizeof(detail), "%zu instances, %.2fs (< 60s)", instances, seconds);
  criterion(1, "A (n=1..4, p=1..6), ASuper (n=3, p=1..6) and gl (n=1..3, p=1..4) suites exact",
            ok, detail);
}

void criterion_2_pauli() {
  bool ok = true;
  std::size_t monomial_count = 0;
  for (int p = 1; p <= 4 && ok; ++p) {
    auto module = build_module(StatisticsFamily::a(3, p));
    std::vector<Operator> raise;
    for (int i = 1; i <= 3; ++i) raise.push_back(creation(module, i));
    std::vector<std::vector<int>> monomials;
    std::vector<int> current;
    compositions(p + 1, 3, current, monomials);
    for (const auto& powers : monomials) {
      auto v = vacuum_vector(module);
      for (int i = 3; i >= 1; --i)
        for (int k = 0; k < powers[i - 1]; ++k) v = raise[i - 1].apply(v);
      ok = ok && vector_is_zero(v);
      ++monomial_count;
    }
  }
  criterion(2, "Pauli principle: degree p+1 creation monomials kill the vacuum (n=3, p=1..4)",
            ok, std::to_string(monomial_count) + " monomials");
}

void criterion_3_adjointness() {
  bool ok = true;
  std::vector<StatisticsFamily> families;
  for (int n = 1; n <= 4; ++n)
    for (int p = 1; p <= 6; ++p) families.push_back(StatisticsFamily::a(n, p));
  for (int p = 1; p <= 6; ++p) families.push_back(StatisticsFamily::a_super(3, p));
  for (int n = 1; n <= 3; ++n) families.push_back(StatisticsFamily::fermi(n));
  families.push_back(StatisticsFamily::truncated_bose(2, 6));
  for (const auto& family : families) {
    ok = ok && all_pass(verify_adjointness(make_cao_set(build_module(family))));
  }

  // The as-printed sign exponent must produce at least one reported failure.
  auto printed = verify_adjointness(make_cao_set(
      build_module(StatisticsFamily::a_super(3, 2)), PhaseConvention::AsPrinted));
  const bool printed_fails = count_failures(printed) > 0;
  ok = ok && printed_fails;
  criterion(3, "annihilation = adjoint(creation) entrywise for all families; as-printed variant fails",
            ok, std::to_string(families.size()) + " modules, as-printed failures reported");
}

void criterion_4_spectrum() {
  bool ok = true;
  auto lines = spectrum({3});
  ok = ok && lines.size() == 4;
  const double expected_energy[] = {4.5, 3.5, 2.5, 1.5};
  for (int q = 0; ok && q < 4; ++q) {
    ok = lines[q].q == q && lines[q].energy == expected_energy[q] &&
         lines[q].multiplicity == binomial3(q) &&
         lines[q].energy_natural == Rational(9 - 2 * q, 2);
  }
  for (int p = 1; ok && p <= 6; ++p) {
    auto ls = spectrum({p});
    ok = static_cast<int>(ls.size()) == std::min(p, 3) + 1;
    for (std::size_t k = 0; ok && k + 1 < ls.size(); ++k)
      ok = ls[k].energy_natural - ls[k + 1].energy_natural == Rational(1);
  }
  criterion(4, "spectrum: p=3 levels {4.5,3.5,2.5,1.5} x {1,3,3,1}; min(p,3)+1 equally spaced levels",
            ok);
}

void criterion_5_square_commutative() {
  bool ok = true;
  for (int p = 1; p <= 6 && ok; ++p) {
    auto reports = check_commuting_family({p});
    ok = reports.size() == 36 && all_pass(reports);

    ObservableSet obs = build_observables({p});
    for (int j = 1; j <= 3 && ok; ++j)
      for (int k = 1; k <= 3 && ok; ++k)
        ok = !canonical_commutator_residual(obs, j, k).is_zero();
  }
  criterion(5, "all 36 commutators among {H,R^2,P^2,Ri^2,Pi^2} vanish; [R_j,P_k] - i hbar d_jk I != 0",
            ok);
}

void criterion_6_support() {
  auto points = measurement_support({3}, {1, 1, 0});
  bool ok = points.size() == 8;
  const RadicalScalar sqrt2 = RadicalScalar::sqrt_of(std::int64_t{2});
  const RadicalScalar one = RadicalScalar::one();
  int sign_patterns = 0;
  for (int s1 : {+1, -1})
    for (int s2 : {+1, -1})
      for (int s3 : {+1, -1}) {
        const std::array<RadicalScalar, 3> expected = {
            s1 > 0 ? sqrt2 : -sqrt2, s2 > 0 ? sqrt2 : -sqrt2, s3 > 0 ? one : -one};
        for (const auto& pt : points)
          if (pt.exact == expected) ++sign_patterns;
      }
  ok = ok && sign_patterns == 8;
  criterion(6, "measurement support for p=3, theta=(1,1,0) is exactly {+-sqrt(2)}^2 x {+-1}", ok);
}

void criterion_7_uncertainty_window() {
  bool ok = true;
  for (int p = 1; p <= 6 && ok; ++p) {
    auto module = build_module(StatisticsFamily::a_super(3, p));
    for (const auto& state : module->basis()) {
      auto rec = uncertainty_report({p}, state);
      int q = 0;
      for (int v : state) q += v;
      for (int i = 0; i < 3; ++i) {
        // Closed form (p - q + theta_i)/2 in units of hbar, inside the window.
        ok = ok && rec.product_hbar[i] == Rational(p - q + state[i], 2);
        ok = ok && rec.product_hbar[i] >= Rational(p - 2, 2);
        ok = ok && rec.product_hbar[i] <= Rational(p, 2);
        if (p == 1) ok = ok && rec.product_hbar[i] <= Rational(1, 2);
      }
      ok = ok && rec.within_window;
    }
  }
  criterion(7, "uncertainty products equal (p-q+theta_i) hbar/2 and lie in [(p-2),p] hbar/2; p=1 <= hbar/2",
            ok);
}

void criterion_8_compatibility() {
  bool ok = true;
  std::size_t instances = 0;
  for (int p = 1; p <= 6 && ok; ++p) {
    auto reports = check_compatibility({p});
    instances += reports.size();
    ok = all_pass(reports);
  }
  criterion(8, "[H,P_k] = i hbar m omega^2 R_k and [H,R_k] = -(i hbar/m) P_k exact (natural units), p=1..6",
            ok, std::to_string(instances) + " instances");
}

void criterion_9_boson_limit() {
  const int n = 2, L = 2;
  LimitProbe probe{n, {8, 16, 32, 64}, L};
  auto rows = boson_limit_deviation(probe);
  bool ok = rows.size() == 4;

  for (std::size_t k = 0; ok && k < rows.size(); ++k) {
    const int p = rows[k].p;
    // Independent closed form: max over probed states of (sum_l + l_i)/p.
    auto module = build_module(StatisticsFamily::a(n, p));
    int best = 0;
    for (const auto& occ : module->basis()) {
      int total = 0;
      for (int v : occ) total += v;
      if (total > L) continue;
      for (int v : occ) best = std::max(best, total + v);
    }
    ok = rows[k].deviation_exact == RadicalScalar::from_rational(Rational(best, p));
  }
  // Exact halving when p doubles.
  for (std::size_t k = 0; ok && k + 1 < rows.size(); ++k)
    ok = rows[k].deviation_exact == RadicalScalar::from_int(2) * rows[k + 1].deviation_exact;

  // Scaled creation operators commute exactly at every probed p.
  for (int p : probe.p_list) {
    auto module = build_module(StatisticsFamily::a(n, p));
    const RadicalScalar inv_sqrt_p = RadicalScalar::term(p, GaussianRational(Rational(1, p)));
    for (int i = 1; i <= n && ok; ++i)
      for (int j = 1; j <= n && ok; ++j) {
        Operator bi = scale(inv_sqrt_p, creation(module, i));
        Operator bj = scale(inv_sqrt_p, creation(module, j));
        ok = sub(compose(bi, bj), compose(bj, bi)).is_zero();
      }
  }
  criterion(9, "boson limit (n=2, L=2): deviation = max(sum_l+l_i)/p, halves as p doubles; [b+,b+] = 0",
            ok);
}

void criterion_10_witnesses() {
  bool ok = all_pass(fermi_witness(2)) && all_pass(fermi_witness(3));
  for (int n : {1, 2}) {
    auto module = build_module(StatisticsFamily::truncated_bose(n, 6));
    ok = ok && all_pass(verify_paraBose_relations(make_cao_set(module),
                                                  interior_selector(module->family())));
  }
  criterion(10, "paraFermi relations hold for Fermi n=2,3 with p=1; truncated Bose (cutoff 6) passes on interior",
            ok);
}

void criterion_11_dynamics() {
  OscillatorConfig cfg{3};
  ObservableSet obs = build_observables(cfg);
  bool ok = true;

  // t = 0 reproduces the exact observables to 1e-12.
  EvolvedObservables frame0 = evolve(cfg, 0.0);
  for (int k = 0; k < 3 && ok; ++k) {
    ComplexDense r = obs.position[k].to_complex_dense();
    ComplexDense p = obs.momentum[k].to_complex_dense();
    for (std::size_t idx = 0; idx < r.size(); ++idx) {
      ok = ok && std::abs(frame0.position[k][idx] - r[idx]) <= 1e-12;
      ok = ok && std::abs(frame0.momentum[k][idx] - p[idx]) <= 1e-12;
    }
  }

  // Central finite differences reproduce dR/dt = P/m, dP/dt = -m omega^2 R
  // to 1e-6 relative at step 1e-5.
  const double h = 1e-5;
  for (double t : {0.3, 1.9}) {
    EvolvedObservables minus = evolve(cfg, t - h);
    EvolvedObservables plus = evolve(cfg, t + h);
    EvolvedObservables mid = evolve(cfg, t);
    for (int k = 0; k < 3 && ok; ++k) {
      for (std::size_t idx = 0; idx < mid.position[k].size(); ++idx) {
        auto dr = (plus.position[k][idx] - minus.position[k][idx]) / (2.0 * h);
        auto dp = (plus.momentum[k][idx] - minus.momentum[k][idx]) / (2.0 * h);
        auto rhs_r = mid.momentum[k][idx] / cfg.mass;
        auto rhs_p = -cfg.mass * cfg.omega * cfg.omega * mid.position[k][idx];
        ok = ok && std::abs(dr - rhs_r) <= 1e-6 * std::max(1.0, std::abs(rhs_r));
        ok = ok && std::abs(dp - rhs_p) <= 1e-6 * std::max(1.0, std::abs(rhs_p));
      }
    }
  }

  // Recurrence after one full period to 1e-10.
  EvolvedObservables period = evolve(cfg, 2.0 * M_PI / cfg.omega);
  for (int k = 0; k < 3 && ok; ++k) {
    for (std::size_t idx = 0; idx < period.position[k].size(); ++idx) {
      ok = ok && std::abs(period.position[k][idx] - frame0.position[k][idx]) <= 1e-10;
      ok = ok && std::abs(period.momentum[k][idx] - frame0.momentum[k][idx]) <= 1e-10;
    }
  }
  criterion(11, "evolve: t=0 match to 1e-12, finite-difference equations of motion to 1e-6, period recurrence to 1e-10",
            ok);
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  criterion_1_relation_suites();
  criterion_2_pauli();
  criterion_3_adjointness();
  criterion_4_spectrum();
  criterion_5_square_commutative();
  criterion_6_support();
  criterion_7_uncertainty_window();
  criterion_8_compatibility();
  criterion_9_boson_limit();
  criterion_10_witnesses();
  criterion_11_dynamics();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/11 criteria passed in %.2fs\n", 11 - failures, seconds);
  return failures == 0 ? 0 : 1;
}
