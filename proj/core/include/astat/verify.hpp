// Copyright 2026 The astat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "astat/fock.hpp"

namespace astat {

/// Machine-readable verdict for one identity instance.  exact_pass is true
/// iff the residual operator has an empty sparse entry map; the float
/// residual is recorded for human-readable reports only and plays no role in
/// pass/fail decisions.
struct RelationReport {
  std::string identity;
  std::vector<int> indices;
  StatisticsFamily family;
  double residual_max_abs = 0.0;
  bool exact_pass = false;
};

RelationReport make_report(std::string identity, std::vector<int> indices,
                           const Operator& residual);

Operator commutator(const Operator& x, const Operator& y);
Operator anticommutator(const Operator& x, const Operator& y);
/// Supercommutator: anticommutator if both operands are odd, commutator
/// otherwise.
Operator bracket(const Operator& x, const Operator& y);

/// One family of creation/annihilation operators on a shared module;
/// raise[i-1] is mode i.
struct CaoSet {
  std::shared_ptr<const FockModule> module;
  std::vector<Operator> raise;
  std::vector<Operator> lower;
};

CaoSet make_cao_set(std::shared_ptr<const FockModule> module,
                    PhaseConvention phase = PhaseConvention::Standard);

/// A-statistics triple relations, checked exhaustively over all index
/// tuples:  [[a_i^+,a_j^-],a_k^+] = d_jk a_i^+ + d_ij a_k^+,
///          [[a_i^+,a_j^-],a_k^-] = -d_ik a_j^- - d_ij a_k^-,
///          [a_i^+,a_j^+] = [a_i^-,a_j^-] = 0.
std::vector<RelationReport> verify_A_relations(const CaoSet& ops);
std::vector<RelationReport> verify_A_relations(int n, int p);

/// A-superstatistics triple relations:
///          [{a_i^+,a_j^-},a_k^+] = d_jk a_i^+ - d_ij a_k^+,
///          [{a_i^+,a_j^-},a_k^-] = -d_ik a_j^- + d_ij a_k^-,
///          {a_i^+,a_j^+} = {a_i^-,a_j^-} = 0.
std::vector<RelationReport> verify_ASuper_relations(const CaoSet& ops);
std::vector<RelationReport> verify_ASuper_relations(int n, int p,
                                                    PhaseConvention phase = PhaseConvention::Standard);

/// paraFermi double-commutation relations plus the vacuum/order condition
/// f_i^- f_j^+ |0> = d_ij p |0>.
std::vector<RelationReport> verify_paraFermi_relations(const CaoSet& ops, int p_expected);

using StateSelector = std::function<bool(const Occupation&)>;

/// Selector for basis states at least `margin` quanta below the cutoff in
/// every mode (TruncatedBose); admits everything for the other families.
StateSelector interior_selector(const StatisticsFamily& family, int margin = 2);

/// paraBose triple relations and the Bose commutation relations, with
/// residuals evaluated only on columns selected as interior (truncation
/// corrupts only boundary states).
std::vector<RelationReport> verify_paraBose_relations(const CaoSet& ops,
                                                      const StateSelector& interior);

/// gl(n+1) structure relations [e_ab,e_cd] = d_cb e_ad - d_ad e_cb over all
/// a,b,c,d in 0..n, plus the central-element condition sum_a e_aa = p * I.
std::vector<RelationReport> verify_gl_relations(int n, int p);

/// annihilation(i) == adjoint(creation(i)) for every mode.
std::vector<RelationReport> verify_adjointness(const CaoSet& ops);

/// Exact span-membership test: target = sum_i c_i * generators[i] with
/// radical-scalar coefficients, solved by exact Gaussian elimination.
/// Singular/inconsistent systems report in_span = false rather than erroring.
struct SpanCheck {
  bool in_span = false;
  std::vector<RadicalScalar> coefficients;
};
SpanCheck span_membership(const std::vector<Operator>& generators, const Operator& target);

/// Lie-closure check for the A family: every bracket of two CAOs, and every
/// bracket of a CAO with such a bracket, lies in the linear span of
/// {a_i^+, a_i^-, e_ab}.
std::vector<RelationReport> verify_A_closure(int n, int p);

bool all_pass(const std::vector<RelationReport>& reports);
std::size_t count_failures(const std::vector<RelationReport>& reports);
/// "name: N instances, M failures"
std::string summary_line(std::string_view suite_name,
                         const std::vector<RelationReport>& reports);

void to_json(nlohmann::json& j, const RelationReport& r);

}  // namespace astat
