#include "repchain/rates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace repchain {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 1 - (1-p)^k for real k, accurate for small p and for p = 1.
double at_least_one(double p, double k) {
  if (k <= 0.0) return 0.0;
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  return -std::expm1(k * std::log1p(-p));
}

// tau = (scale / omega) log(1 - (1-eps)^(1/m)) / log(1 - p) + offset, clamped
// to [offset, t_nv]. The upper clamp wins when the two bounds cross.
CutoffTime cutoff(double scale, double omega, double eps, int m, double p, double offset,
                  double t_nv) {
  double raw = 0.0;
  if (p >= 1.0 || eps >= 1.0) {
    raw = offset;
  } else if (p <= 0.0 || omega <= 0.0 || eps <= 0.0) {
    raw = kInf;
  } else {
    // 1 - (1-eps)^(1/m) without cancellation for small eps
    const double miss = -std::expm1(std::log1p(-eps) / m);
    raw = scale / omega * std::log(miss) / std::log1p(-p) + offset;
  }
  CutoffTime out;
  out.clamped = !(raw <= t_nv);
  out.tau_s = std::min(std::max(raw, offset), t_nv);
  return out;
}

// omega may be infinite for a zero-length link
double attempts_in(double omega, double window_s) {
  return window_s > 0.0 ? omega * window_s : 0.0;
}

double clamp_override(double tau, double lower, double upper) {
  return std::min(std::max(tau, lower), upper);
}

RateReport windowed(Scenario s, double tau, bool clamped, double p_link, double p_attempt,
                    double attempts, int segments) {
  RateReport r;
  r.scenario = s;
  r.tau_s = tau;
  r.tau_clamped = clamped;
  r.p_link = p_link;
  r.p_attempt = p_attempt;
  r.attempts_per_window = std::max(attempts, 0.0);
  r.no_attempt_window = !(attempts > 0.0);
  r.p_segment = at_least_one(p_attempt, attempts);
  r.p_window = window_success(p_attempt, attempts, segments);
  r.rate_hz = tau > 0.0 ? r.p_window / tau : 0.0;
  return r;
}

}  // namespace

std::string_view scenario_name(Scenario s) {
  switch (s) {
    case Scenario::ArcLemma1: return "lemma1_arc";
    case Scenario::NvChainLemma2: return "lemma2_nv_chain";
    case Scenario::ArcRLemma3: return "lemma3_arcr";
    case Scenario::ArcRNoBufferLemma4: return "lemma4_arcr_nobuffer";
  }
  return "?";
}

double fiber_transmittance(const ParameterProfile& p, double ell_km) {
  return std::pow(10.0, -p.alpha_db_per_km * ell_km / 10.0);
}

double p_afc_gen(const ParameterProfile& p, double ell_km) {
  const double per_mode = fiber_transmittance(p, ell_km) * p.eta_bsm * p.eta_det * p.eta_det;
  const double retrieve = p.eta_afc * p.eta_shift;
  return at_least_one(per_mode, p.gamma_f) * retrieve * retrieve;
}

double p_nv_gen(const ParameterProfile& p, double ell_km) {
  const double per_mode =
      p.eta_qfc_1588 * p.eta_qfc_1588 * fiber_transmittance(p, ell_km) * p.eta_bsm;
  return at_least_one(per_mode, p.gamma_t);
}

double eta_qr(const ParameterProfile& p, Config config, int n, bool include_buffer) {
  double eta = p.eta_qfc_637 * p.eta_pol * p.eta_map * p.eta_c13;
  if (include_buffer) eta *= p.eta_buff;
  if (config == Config::A) eta *= std::pow(p.eta_afc, n - 1);
  return eta;
}

namespace {

double arc_gen(const ParameterProfile& p, const NetworkDesign& d, bool include_buffer) {
  const double qr = eta_qr(p, d.config, d.n, include_buffer);
  return qr * qr * std::pow(p_afc_gen(p, d.ell_km), d.n) * std::pow(p.eta_bsm, d.n - 1);
}

}  // namespace

double p_arc_gen(const ParameterProfile& p, const NetworkDesign& d) { return arc_gen(p, d, true); }

double p_arc_gen_no_buffer(const ParameterProfile& p, const NetworkDesign& d) {
  return arc_gen(p, d, false);
}

double omega_epps(const ParameterProfile& p) { return p.eta_epps * p.r_epps_hz; }

double omega_nv(double ell_km) {
  return ell_km > 0.0 ? signal_velocity_km_per_s() / ell_km : kInf;
}

RateReport rate_arc(const ParameterProfile& p, const NetworkDesign& d) {
  RateReport r;
  r.scenario = Scenario::ArcLemma1;
  r.p_link = p_afc_gen(p, d.ell_km);
  r.p_attempt = p_arc_gen(p, d);
  r.p_segment = r.p_attempt;
  r.p_window = r.p_attempt;
  r.rate_hz = omega_epps(p) * r.p_attempt;
  return r;
}

CutoffTime tau_nv(const ParameterProfile& p, const NetworkDesign& d) {
  const TimingReport t = timings(d, p);
  return cutoff(2.0, omega_nv(d.ell_km), d.epsilon, d.n, p_nv_gen(p, d.ell_km),
                t.t_trans_tilde_s, p.t_nv_s);
}

RateReport rate_nv_chain(const ParameterProfile& p, const NetworkDesign& d,
                         std::optional<double> tau_override_s) {
  const TimingReport t = timings(d, p);
  CutoffTime c;
  if (tau_override_s) {
    c.tau_s = clamp_override(*tau_override_s, t.t_trans_tilde_s, p.t_nv_s);
  } else {
    c = tau_nv(p, d);
  }
  const double pl = p_nv_gen(p, d.ell_km);
  const double attempts = attempts_in(omega_nv(d.ell_km), c.tau_s / 2.0 - t.t_trans_tilde_s);
  return windowed(Scenario::NvChainLemma2, c.tau_s, c.clamped, pl, pl, attempts, d.n);
}

CutoffTime tau_arcr(const ParameterProfile& p, const NetworkDesign& d) {
  const TimingReport t = timings(d, p);
  return cutoff(1.0, omega_epps(p), d.epsilon, d.big_n, p_arc_gen(p, d), t.t_trans_s, p.t_nv_s);
}

RateReport rate_arcr(const ParameterProfile& p, const NetworkDesign& d,
                     std::optional<double> tau_override_s) {
  const TimingReport t = timings(d, p);
  CutoffTime c;
  if (tau_override_s) {
    c.tau_s = clamp_override(*tau_override_s, t.t_trans_s, p.t_nv_s);
  } else {
    c = tau_arcr(p, d);
  }
  const double attempts = attempts_in(omega_epps(p), c.tau_s - t.t_trans_s);
  return windowed(Scenario::ArcRLemma3, c.tau_s, c.clamped, p_afc_gen(p, d.ell_km),
                  p_arc_gen(p, d), attempts, d.big_n);
}

CutoffTime tau_arcr_no_buffer(const ParameterProfile& p, const NetworkDesign& d) {
  const TimingReport t = timings(d, p);
  return cutoff(2.0, omega_epps(p), d.epsilon, d.big_n, p_arc_gen_no_buffer(p, d), t.t_trans_s,
                p.t_nv_s);
}

RateReport rate_arcr_no_buffer(const ParameterProfile& p, const NetworkDesign& d,
                               std::optional<double> tau_override_s) {
  const TimingReport t = timings(d, p);
  CutoffTime c;
  if (tau_override_s) {
    c.tau_s = clamp_override(*tau_override_s, t.t_trans_s, p.t_nv_s);
  } else {
    c = tau_arcr_no_buffer(p, d);
  }
  const double attempts = attempts_in(omega_epps(p), c.tau_s / 2.0 - t.t_trans_s);
  return windowed(Scenario::ArcRNoBufferLemma4, c.tau_s, c.clamped, p_afc_gen(p, d.ell_km),
                  p_arc_gen_no_buffer(p, d), attempts, d.big_n);
}

RateReport rate_for(Scenario s, const ParameterProfile& p, const NetworkDesign& d,
                    std::optional<double> tau_override_s) {
  switch (s) {
    case Scenario::ArcLemma1: return rate_arc(p, d);
    case Scenario::NvChainLemma2: return rate_nv_chain(p, d, tau_override_s);
    case Scenario::ArcRLemma3: return rate_arcr(p, d, tau_override_s);
    case Scenario::ArcRNoBufferLemma4: return rate_arcr_no_buffer(p, d, tau_override_s);
  }
  return {};
}

double window_success(double p_attempt, double attempts, int segments) {
  return std::pow(at_least_one(p_attempt, attempts), segments);
}

}  // namespace repchain
