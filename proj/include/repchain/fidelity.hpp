#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "repchain/network.hpp"
#include "repchain/params.hpp"

namespace repchain {

/// Werner parameters of every stage of an ARC-R, worst-case storage.
struct WernerReport {
  double w_elem = 0;
  double w_arc = 0;
  double w_qst = 0;
  double w_qr_qr = 0;      // before router storage
  double w_qr_qr_tau = 0;  // after 13C swap and storage for tau
  double w_arcr = 0;
  double f_arcr = 0;
  double qber = 0;
  double tau_s = 0;
};

/// W = (4F - 1) / 3. Throws std::domain_error outside [0.25, 1].
double fidelity_to_werner(double f);
/// F = (3W + 1) / 4. Throws std::domain_error outside [0, 1].
double werner_to_fidelity(double w);

double w_elem(const ParameterProfile& p);
double w_arc(const ParameterProfile& p, int n);
double w_qst(const ParameterProfile& p, Config config, int n);

/// Depolarizing decay of a stored pair, w exp(-b tau).
double decohere(double w, double tau_s, double b_per_s = 1.0 / 3.0);

/// Two adjacent routers linked by one ARC, before the router memory stage.
double w_qr_qr(const ParameterProfile& p, Config config, int n);
/// Same pair after the 13C swap on both sides and storage for tau_s.
double w_qr_qr_stored(const ParameterProfile& p, Config config, int n, double tau_s);

/// End-to-end Werner parameter over big_n ARCs; the N-1 intermediate routers
/// each add a storage, CNOT and readout stage.
WernerReport w_arcr(const ParameterProfile& p, const NetworkDesign& d, double tau_s);

/// Probability of disagreeing outcomes on a Werner pair, (2/3)(1 - F).
double qber(double f);

// ---------------------------------------------------------------------------
// Density-matrix cross-check

using Matrix4c = Eigen::Matrix<std::complex<double>, 4, 4>;

/// Two-qubit density operator in the basis 00, 01, 10, 11.
class TwoQubitState {
 public:
  /// W |phi+><phi+| + (1 - W) I/4
  static TwoQubitState werner(double w);

  const Matrix4c& matrix() const { return rho_; }

  /// rho -> alpha rho + (1 - alpha) I/4
  void depolarize(double alpha);

  /// <phi+| rho |phi+>
  double bell_fidelity() const;
  double trace() const;
  double hermiticity_error() const;
  double min_eigenvalue() const;

 private:
  explicit TwoQubitState(const Matrix4c& rho) : rho_(rho) {}
  Matrix4c rho_;
};

/// Starts from the pair-source Werner state and applies every stage as an
/// explicit depolarizing channel on the 4x4 matrix. Throws std::logic_error
/// if trace or Hermiticity drift beyond 1e-10 after any stage.
double compose_channels(double w_initial, std::span<const double> alphas);

/// The ordered list of channel parameters (Werner parameters) an ARC-R
/// applies to one end-to-end pair, excluding the first source: every stage
/// of the scalar pipeline expanded into individual channels.
std::vector<double> pipeline_channels(const ParameterProfile& p, int n, int big_n, Config config,
                                      double tau_s);

/// Matrix evaluation of the end-to-end fidelity. Independent of the scalar
/// product formulas; must agree with w_arcr(...).f_arcr.
double compose_oracle(const ParameterProfile& p, double tau_s, int n, int big_n, Config config);

}  // namespace repchain
