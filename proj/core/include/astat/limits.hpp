// Copyright 2026 The astat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "astat/verify.hpp"

namespace astat {

/// Probe for the large-p boson limit: modes n, an increasing list of orders
/// p, and a total-occupation cutoff L for the probed subspace (L must stay
/// below every probed p).
struct LimitProbe {
  int n = 1;
  std::vector<int> p_list;
  int cutoff = 0;
};

struct DeviationRow {
  int p = 0;
  std::size_t dim = 0;
  /// max over i, j and over the probed block of |[b_i^-, b_j^+] - d_ij I|,
  /// entrywise, with b = a/sqrt(p).
  double deviation_max = 0.0;
  /// 2L/p: the closed-form bound on the diagonal part.
  double bound = 0.0;
  /// The exact value of the maximal-magnitude entry (sign normalized away
  /// for the single-term entries that occur here).
  RadicalScalar deviation_exact;
};

/// Measures how far the rescaled A-family CAOs b_k = a_k/sqrt(p) are from
/// Bose operators on the fixed subspace of states with total occupation
/// <= L.  The scaled commutators [b^+, b^+] stay exactly zero for every p;
/// the [b^-, b^+] deviation decays like 1/p.
std::vector<DeviationRow> boson_limit_deviation(const LimitProbe& probe);

/// Builds the n-mode Fermi family and checks the paraFermi relations with
/// expected order of statistics p = 1.
std::vector<RelationReport> fermi_witness(int n);

void to_json(nlohmann::json& j, const DeviationRow& row);

}  // namespace astat
