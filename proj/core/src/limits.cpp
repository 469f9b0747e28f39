// Copyright 2026 The astat Authors
// SPDX-License-Identifier: Apache-2.0

#include "astat/limits.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace astat {

namespace {

// The deviation entries are single-term scalars (rational or one radical);
// flip the sign when the single coefficient is negative-real.
RadicalScalar normalize_sign(const RadicalScalar& s) {
  if (s.terms().size() == 1) {
    const auto& coeff = s.terms().begin()->second;
    if (coeff.im == 0 && coeff.re < 0) return -s;
  }
  return s;
}

}  // namespace

std::vector<DeviationRow> boson_limit_deviation(const LimitProbe& probe) {
  if (probe.n < 1) throw std::invalid_argument("boson_limit_deviation: n must be >= 1");
  if (probe.p_list.empty())
    throw std::invalid_argument("boson_limit_deviation: empty p list");
  if (std::adjacent_find(probe.p_list.begin(), probe.p_list.end(),
                         std::greater_equal<int>()) != probe.p_list.end())
    throw std::invalid_argument("boson_limit_deviation: p list must be strictly increasing");
  if (probe.cutoff < 0 || probe.cutoff >= probe.p_list.front())
    throw std::invalid_argument("boson_limit_deviation: cutoff must satisfy L < min(p)");

  std::vector<DeviationRow> rows;
  rows.reserve(probe.p_list.size());
  for (int p : probe.p_list) {
    auto module = build_module(StatisticsFamily::a(probe.n, p));
    CaoSet ops = make_cao_set(module);
    // 1/sqrt(p) = sqrt(p)/p.
    const RadicalScalar inv_sqrt_p = RadicalScalar::term(p, GaussianRational(Rational(1, p)));

    DeviationRow row;
    row.p = p;
    row.dim = module->dim();
    row.bound = 2.0 * probe.cutoff / p;

    Operator id = Operator::identity(module);
    for (int i = 1; i <= probe.n; ++i) {
      for (int j = 1; j <= probe.n; ++j) {
        Operator scaled_minus = scale(inv_sqrt_p, ops.lower[i - 1]);
        Operator scaled_plus = scale(inv_sqrt_p, ops.raise[j - 1]);
        Operator deviation = commutator(scaled_minus, scaled_plus);
        if (i == j) deviation = sub(deviation, id);
        for (const auto& [rc, value] : deviation.entries()) {
          if (module->total_occupation(rc.second) > probe.cutoff) continue;
          if (module->total_occupation(rc.first) > probe.cutoff) continue;
          const double mag = std::abs(value.to_complex());
          if (mag > row.deviation_max) {
            row.deviation_max = mag;
            row.deviation_exact = normalize_sign(value);
          }
        }
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RelationReport> fermi_witness(int n) {
  auto module = build_module(StatisticsFamily::fermi(n));
  return verify_paraFermi_relations(make_cao_set(module), 1);
}

void to_json(nlohmann::json& j, const DeviationRow& row) {
  j = nlohmann::json{{"p", row.p},
                     {"dim", row.dim},
                     {"deviation_max", row.deviation_max},
                     {"bound_2L_over_p", row.bound},
                     {"deviation_exact", row.deviation_exact}};
}

}  // namespace astat
