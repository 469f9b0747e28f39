// Copyright 2026 The astat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "astat/radical.hpp"

namespace astat {

enum class FamilyTag { A, ASuper, Fermi, TruncatedBose };

std::string family_tag_name(FamilyTag tag);

/// Occupation vector (l_1, ..., l_n); one Fock basis label.
using Occupation = std::vector<int>;

/**
 * Statistics family tag plus its two integer parameters: n modes and the
 * order of statistics p.  For TruncatedBose, p is the per-mode occupation
 * cutoff; for Fermi, p is fixed to 1.
 */
struct StatisticsFamily {
  FamilyTag tag = FamilyTag::A;
  int n = 1;
  int p = 1;

  static StatisticsFamily a(int n, int p) { return {FamilyTag::A, n, p}; }
  static StatisticsFamily a_super(int n, int p) { return {FamilyTag::ASuper, n, p}; }
  static StatisticsFamily fermi(int n) { return {FamilyTag::Fermi, n, 1}; }
  static StatisticsFamily truncated_bose(int n, int cutoff) {
    return {FamilyTag::TruncatedBose, n, cutoff};
  }

  /// Occupation constraint of the family:
  ///   A:             l_i >= 0,  sum l_i <= p
  ///   ASuper:        l_i in {0,1},  sum l_i <= min(p, n)
  ///   Fermi:         l_i in {0,1}
  ///   TruncatedBose: 0 <= l_i <= p
  bool admits(const Occupation& occ) const;

  friend bool operator==(const StatisticsFamily& a, const StatisticsFamily& b) {
    return a.tag == b.tag && a.n == b.n && a.p == b.p;
  }
};

/**
 * Enumerated orthonormal Fock basis of a statistics family.  Basis order is
 * lexicographic on the occupation vector, which puts the vacuum at index 0
 * and makes serialization and test fixtures deterministic.
 */
class FockModule {
 public:
  explicit FockModule(StatisticsFamily family);

  const StatisticsFamily& family() const { return family_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Occupation>& basis() const { return basis_; }
  const Occupation& state_at(std::size_t index) const { return basis_.at(index); }
  std::optional<std::size_t> index_of(const Occupation& occ) const;
  std::size_t vacuum_index() const { return 0; }
  /// Total particle number of a basis state (eigenvalue of sum_i e_ii).
  int total_occupation(std::size_t index) const;

 private:
  StatisticsFamily family_;
  std::vector<Occupation> basis_;
  std::map<Occupation, std::size_t> index_;
};

/// Builds the enumerated module; rejects n = 0 or p = 0 (and Fermi with
/// p != 1) with std::invalid_argument.
std::shared_ptr<const FockModule> build_module(StatisticsFamily family);

enum class Parity { Even, Odd };

Parity parity_sum(Parity a, Parity b);

/// Sign convention used in the single-mode transformation amplitudes of the
/// ASuper and Fermi families.  Standard uses the alternating-sign exponent
/// theta_1 + ... + theta_{i-1}; AsPrinted additionally includes theta_i,
/// which breaks adjointness of the creation/annihilation pair and is kept
/// only so the discrepancy can be demonstrated.
enum class PhaseConvention { Standard, AsPrinted };

/**
 * Sparse dim x dim matrix of exact radical scalars over a Fock module, with
 * a parity grade used by the supercommutator.  Entries are keyed (row, col);
 * exact zeros are never stored.
 */
class Operator {
 public:
  using EntryMap = std::map<std::pair<std::size_t, std::size_t>, RadicalScalar>;

  Operator(std::shared_ptr<const FockModule> module, Parity grade);

  static Operator identity(std::shared_ptr<const FockModule> module);

  const std::shared_ptr<const FockModule>& module() const { return module_; }
  Parity grade() const { return grade_; }
  const EntryMap& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  RadicalScalar entry(std::size_t row, std::size_t col) const;
  /// Overwrites one entry; exact zeros are erased rather than stored.
  void set_entry(std::size_t row, std::size_t col, RadicalScalar value);
  void add_to_entry(std::size_t row, std::size_t col, const RadicalScalar& value);

  /// Conjugate transpose; grade is preserved.
  Operator adjoint() const;

  /// Matrix-vector product over exact scalars.
  std::vector<RadicalScalar> apply(const std::vector<RadicalScalar>& v) const;

  /// Dense row-major complex rendering (reports and time evolution only).
  std::vector<std::complex<double>> to_complex_dense() const;

  friend bool operator==(const Operator& a, const Operator& b) {
    return a.module_->family() == b.module_->family() && a.entries_ == b.entries_;
  }

 private:
  std::shared_ptr<const FockModule> module_;
  EntryMap entries_;
  Parity grade_;
};

/// Creation operator a_i^+ for 1 <= i <= n; exact matrix per the family's
/// single-mode transformation rule.  ASuper/Fermi matrices are odd,
/// A/TruncatedBose even.
Operator creation(std::shared_ptr<const FockModule> module, int mode,
                  PhaseConvention phase = PhaseConvention::Standard);

/// Annihilation operator a_i^-, built from its own transformation rule (not
/// as an adjoint, so adjointness is a checkable property).
Operator annihilation(std::shared_ptr<const FockModule> module, int mode,
                      PhaseConvention phase = PhaseConvention::Standard);

/// gl(n+1) generator e_ab, a,b in 0..n, for the A family only:
/// e_i0 = a_i^+, e_0i = a_i^-, e_ij = [a_i^+, a_j^-] for i != j, and the
/// diagonal fixed by e_ii - e_00 = [a_i^+, a_i^-] with sum_a e_aa = p * I.
Operator gl_generator(std::shared_ptr<const FockModule> module, int a, int b);

/// Exact sparse product x*y; grade is the parity sum.  Throws
/// std::invalid_argument if the operators live on different modules.
Operator compose(const Operator& x, const Operator& y);
Operator add(const Operator& x, const Operator& y);
Operator sub(const Operator& x, const Operator& y);
Operator scale(const RadicalScalar& c, const Operator& x);

inline Operator operator*(const Operator& x, const Operator& y) { return compose(x, y); }
inline Operator operator+(const Operator& x, const Operator& y) { return add(x, y); }
inline Operator operator-(const Operator& x, const Operator& y) { return sub(x, y); }

/// Largest |entry| in floating point; 0 for the zero operator.
double max_abs_entry(const Operator& x);

/// Normalized monomial basis state of the A/ASuper families as an explicit
/// vector: norm * (a_1^+)^{l_1} ... (a_n^+)^{l_n} |0>, with the
/// normalization sqrt((p - sum l)! / (p! * prod l_i!)).
std::vector<RadicalScalar> monomial_state(const std::shared_ptr<const FockModule>& module,
                                          const Occupation& occ,
                                          PhaseConvention phase = PhaseConvention::Standard);

void to_json(nlohmann::json& j, const StatisticsFamily& f);
void to_json(nlohmann::json& j, const FockModule& m);
void to_json(nlohmann::json& j, const Operator& op);

}  // namespace astat
