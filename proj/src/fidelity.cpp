#include "repchain/fidelity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace repchain {
namespace {

// Werner parameter of a profile fidelity; profiles are validated to [0.25, 1].
double w(double f) { return (4.0 * f - 1.0) / 3.0; }

double router_storage(const ParameterProfile& p, double tau_s) {
  return decohere(w(p.f_c13), tau_s, p.decoherence_b_per_s);
}

}  // namespace

double fidelity_to_werner(double f) {
  if (!(f >= 0.25 && f <= 1.0))
    throw std::domain_error("fidelity " + std::to_string(f) + " outside [0.25, 1]");
  return (4.0 * f - 1.0) / 3.0;
}

double werner_to_fidelity(double w) {
  if (!(w >= 0.0 && w <= 1.0))
    throw std::domain_error("Werner parameter " + std::to_string(w) + " outside [0, 1]");
  return (3.0 * w + 1.0) / 4.0;
}

double w_elem(const ParameterProfile& p) {
  const double half = w(p.f_epps) * w(p.f_afc) * w(p.f_ffsmm);
  return w(p.f_bsm) * half * half;
}

double w_arc(const ParameterProfile& p, int n) {
  return std::pow(w(p.f_bsm), n - 1) * std::pow(w_elem(p), n);
}

double w_qst(const ParameterProfile& p, Config config, int n) {
  double out = w(p.f_buff) * w(p.f_qfc) * w(p.f_tb_pol) * w(p.f_map);
  if (config == Config::A) out *= std::pow(w(p.f_afc), n - 1);
  return out;
}

double decohere(double w, double tau_s, double b_per_s) { return w * std::exp(-b_per_s * tau_s); }

double w_qr_qr(const ParameterProfile& p, Config config, int n) {
  const double qst = w_qst(p, config, n);
  return w_arc(p, n) * qst * qst;
}

double w_qr_qr_stored(const ParameterProfile& p, Config config, int n, double tau_s) {
  const double stored = router_storage(p, tau_s);
  return w_qr_qr(p, config, n) * stored * stored;
}

WernerReport w_arcr(const ParameterProfile& p, const NetworkDesign& d, double tau_s) {
  WernerReport r;
  r.tau_s = tau_s;
  r.w_elem = w_elem(p);
  r.w_arc = w_arc(p, d.n);
  r.w_qst = w_qst(p, d.config, d.n);
  r.w_qr_qr = w_qr_qr(p, d.config, d.n);
  r.w_qr_qr_tau = w_qr_qr_stored(p, d.config, d.n, tau_s);
  const double stored = router_storage(p, tau_s);
  const double swap = stored * stored * w(p.f_cnot) * w(p.f_rout);
  r.w_arcr = std::pow(r.w_qr_qr_tau, d.big_n) * std::pow(swap, d.big_n - 1);
  r.f_arcr = (3.0 * r.w_arcr + 1.0) / 4.0;
  r.qber = qber(r.f_arcr);
  return r;
}

double qber(double f) {
  if (!(f >= 0.25 && f <= 1.0))
    throw std::domain_error("fidelity " + std::to_string(f) + " outside [0.25, 1]");
  return 2.0 / 3.0 * (1.0 - f);
}

// ---------------------------------------------------------------------------

TwoQubitState TwoQubitState::werner(double w) {
  Matrix4c phi = Matrix4c::Zero();
  // |phi+><phi+| with |phi+> = (|00> + |11>)/sqrt2
  phi(0, 0) = phi(0, 3) = phi(3, 0) = phi(3, 3) = 0.5;
  return TwoQubitState(w * phi + (1.0 - w) / 4.0 * Matrix4c::Identity());
}

void TwoQubitState::depolarize(double alpha) {
  rho_ = alpha * rho_ + (1.0 - alpha) / 4.0 * Matrix4c::Identity();
}

double TwoQubitState::bell_fidelity() const {
  Eigen::Matrix<std::complex<double>, 4, 1> phi = Eigen::Matrix<std::complex<double>, 4, 1>::Zero();
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  return (phi.adjoint() * rho_ * phi)(0, 0).real();
}

double TwoQubitState::trace() const { return rho_.trace().real(); }

double TwoQubitState::hermiticity_error() const {
  return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

double TwoQubitState::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(rho_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double compose_channels(double w_initial, std::span<const double> alphas) {
  TwoQubitState state = TwoQubitState::werner(w_initial);
  for (const double alpha : alphas) {
    state.depolarize(alpha);
    if (std::abs(state.trace() - 1.0) > 1e-10 || state.hermiticity_error() > 1e-10)
      throw std::logic_error("density matrix lost unit trace or Hermiticity");
  }
  return state.bell_fidelity();
}

std::vector<double> pipeline_channels(const ParameterProfile& p, int n, int big_n, Config config,
                                      double tau_s) {
  const auto ch = [](double f) { return (4.0 * f - 1.0) / 3.0; };
  const double storage = std::exp(-p.decoherence_b_per_s * tau_s);

  std::vector<double> out;
  bool first_source = true;
  for (int arc = 0; arc < big_n; ++arc) {
    for (int link = 0; link < n; ++link) {
      // two sources, two memories, two mode mappers, one midpoint BSM
      for (int side = 0; side < 2; ++side) {
        if (first_source) {
          first_source = false;  // this source is the initial state
        } else {
          out.push_back(ch(p.f_epps));
        }
        out.push_back(ch(p.f_afc));
        out.push_back(ch(p.f_ffsmm));
      }
      out.push_back(ch(p.f_bsm));
    }
    for (int bsm = 0; bsm < n - 1; ++bsm) out.push_back(ch(p.f_bsm));

    for (int side = 0; side < 2; ++side) {
      out.push_back(ch(p.f_buff));
      out.push_back(ch(p.f_qfc));
      out.push_back(ch(p.f_tb_pol));
      out.push_back(ch(p.f_map));
      if (config == Config::A) {
        for (int extra = 0; extra < n - 1; ++extra) out.push_back(ch(p.f_afc));
      }
      out.push_back(ch(p.f_c13));
      out.push_back(storage);
    }
  }
  for (int router = 0; router < big_n - 1; ++router) {
    for (int side = 0; side < 2; ++side) {
      out.push_back(ch(p.f_c13));
      out.push_back(storage);
    }
    out.push_back(ch(p.f_cnot));
    out.push_back(ch(p.f_rout));
  }
  return out;
}

double compose_oracle(const ParameterProfile& p, double tau_s, int n, int big_n, Config config) {
  const auto channels = pipeline_channels(p, n, big_n, config, tau_s);
  return compose_channels((4.0 * p.f_epps - 1.0) / 3.0, channels);
}

}  // namespace repchain
