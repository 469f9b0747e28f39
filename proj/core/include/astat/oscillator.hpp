// Copyright 2026 The astat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "astat/verify.hpp"

namespace astat {

/**
 * 3D A-superoscillator configuration.  All exact matrix checks run in
 * natural units hbar = m = omega = 1, which keeps every matrix element in
 * the radical field; the physical constants only scale float-rendered
 * report values.
 */
struct OscillatorConfig {
  int p = 1;
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
};

/// sqrt(hbar / 2 m omega): the length unit of position spectra.
double position_unit(const OscillatorConfig& cfg);
/// sqrt(m omega hbar / 2): the momentum unit.
double momentum_unit(const OscillatorConfig& cfg);

/**
 * Exact observables of the oscillator on the ASuper n=3 module, in natural
 * units:
 *   R_k = (a_k^+ + a_k^-)/sqrt(2),   P_k = -i (a_k^+ - a_k^-)/sqrt(2),
 *   H   = (1/2) sum_k {a_k^+, a_k^-},
 * squares by exact composition.  H and all squares are diagonal in the
 * occupation basis; everything is exactly hermitian.
 */
struct ObservableSet {
  std::shared_ptr<const FockModule> module;
  std::array<Operator, 3> position;
  std::array<Operator, 3> momentum;
  std::array<Operator, 3> position_sq;
  std::array<Operator, 3> momentum_sq;
  Operator hamiltonian;
  Operator r_squared;
  Operator p_squared;
};

ObservableSet build_observables(const OscillatorConfig& cfg);

/// Compatibility (main quantization) conditions, exact:
/// [H, P_k] = i R_k and [H, R_k] = -i P_k in natural units, plus the
/// CAO form sum_i [{a_i^+, a_i^-}, a_k^{+/-}] = -/+ 2 a_k^{+/-}.
std::vector<RelationReport> check_compatibility(const OscillatorConfig& cfg);
std::vector<RelationReport> check_compatibility(const ObservableSet& obs,
                                                const CaoSet& ops);

struct SpectrumLine {
  int q = 0;
  int multiplicity = 0;
  double energy = 0.0;        // (omega hbar / 2)(3p - 2q)
  Rational energy_natural;    // (3p - 2q)/2, exact, hbar = omega = 1
};

/// Energy levels (omega hbar/2)(3p - 2q), q = 0..min(p,3), with the
/// multiplicity counted from the enumerated basis.  Adjacent levels are
/// spaced by exactly omega hbar.
std::vector<SpectrumLine> spectrum(const OscillatorConfig& cfg);

/// All pairwise commutators among {H, R^2, P^2, R_i^2, P_i^2} (36 unordered
/// pairs): the square-commutative geometry.
std::vector<RelationReport> check_commuting_family(const OscillatorConfig& cfg);

/// [R_j, P_k] - i d_jk I in natural units; nonzero for this representation
/// (the canonical commutation relations fail -- the non-canonicity witness).
Operator canonical_commutator_residual(const ObservableSet& obs, int j, int k);

struct SupportPoint {
  std::array<RadicalScalar, 3> exact;  // +/- sqrt(p - q + theta_i), unitless
  std::array<double, 3> coords;        // exact value times position_unit
};

/// The measurement support of a basis state for p > 2: at most 8 points
/// (+/- sqrt(p-q+theta_1), +/- sqrt(p-q+theta_2), +/- sqrt(p-q+theta_3)) in
/// units sqrt(hbar/2 m omega); fewer when a coordinate vanishes.
/// Throws std::domain_error for p <= 2 (support collapses to fewer radii and
/// the eight-point picture needs p > 2) and std::invalid_argument for a
/// state outside the module.
std::vector<SupportPoint> measurement_support(const OscillatorConfig& cfg,
                                              const Occupation& state);

struct UncertaintyRecord {
  Occupation state;
  int q = 0;
  std::array<double, 3> mean_position{};   // exactly zero for basis states
  std::array<double, 3> mean_momentum{};
  std::array<double, 3> dev_position{};    // sqrt(hbar/2m omega (p-q+theta_i))
  std::array<double, 3> dev_momentum{};
  std::array<double, 3> product{};         // dR_i * dP_i, physical units
  std::array<Rational, 3> product_hbar{};  // exact products in units of hbar
  Rational window_low_hbar;                // (p-2)/2
  Rational window_high_hbar;               // p/2
  bool within_window = false;
};

/// Standard deviations and uncertainty products of a basis state, computed
/// from the exact diagonal matrix elements of the squared observables.
UncertaintyRecord uncertainty_report(const OscillatorConfig& cfg, const Occupation& state);

using ComplexDense = std::vector<std::complex<double>>;  // row-major dim x dim

struct EvolvedObservables {
  double t = 0.0;
  std::size_t dim = 0;
  std::array<ComplexDense, 3> position;
  std::array<ComplexDense, 3> momentum;
};

/// Heisenberg-picture solution in floating point:
///   R_k(t) = sqrt(hbar/2m omega) (a_k^+ e^{-i omega t} + a_k^- e^{i omega t})
///   P_k(t) = -i sqrt(m omega hbar/2) (a_k^+ e^{-i omega t} - a_k^- e^{i omega t})
/// At t = 0 this reproduces the exact observables rendered to floats.
EvolvedObservables evolve(const OscillatorConfig& cfg, double t);

void to_json(nlohmann::json& j, const SpectrumLine& line);
void to_json(nlohmann::json& j, const SupportPoint& pt);
void to_json(nlohmann::json& j, const UncertaintyRecord& rec);

}  // namespace astat
