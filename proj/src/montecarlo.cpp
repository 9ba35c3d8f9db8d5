#include "repchain/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "repchain/philox.hpp"
#include "repchain/rates.hpp"

namespace repchain {
namespace {

struct LinkModel {
  double per_mode;  // one spectral mode heralded at the midpoint
  int modes;
  double retrieve;  // one memory read-out through the mode mapper
};

LinkModel afc_link(const ParameterProfile& p, double ell_km) {
  return {fiber_transmittance(p, ell_km) * p.eta_bsm * p.eta_det * p.eta_det, p.gamma_f,
          p.eta_afc * p.eta_shift};
}

bool sample_link(Philox4x32& rng, const LinkModel& m) {
  bool heralded = false;
  for (int mode = 0; mode < m.modes && !heralded; ++mode) heralded = rng.bernoulli(m.per_mode);
  return heralded && rng.bernoulli(m.retrieve) && rng.bernoulli(m.retrieve);
}

struct SegmentModel {
  LinkModel link;
  int n;
  double eta_bsm;
  std::vector<double> transfer;  // Bernoulli stages on each router side
};

SegmentModel segment_model(const ParameterProfile& p, const NetworkDesign& d, bool buffered) {
  SegmentModel m{afc_link(p, d.ell_km), d.n, p.eta_bsm, {}};
  if (d.config == Config::A) m.transfer.assign(d.n - 1, p.eta_afc);
  if (buffered) m.transfer.push_back(p.eta_buff);
  m.transfer.push_back(p.eta_qfc_637);
  m.transfer.push_back(p.eta_pol);
  m.transfer.push_back(p.eta_map);
  m.transfer.push_back(p.eta_c13);
  return m;
}

bool sample_segment(Philox4x32& rng, const SegmentModel& m) {
  for (int link = 0; link < m.n; ++link) {
    if (!sample_link(rng, m.link)) return false;
  }
  for (int swap = 0; swap < m.n - 1; ++swap) {
    if (!rng.bernoulli(m.eta_bsm)) return false;
  }
  for (int side = 0; side < 2; ++side) {
    for (const double eta : m.transfer) {
      if (!rng.bernoulli(eta)) return false;
    }
  }
  return true;
}

bool sample_nv_attempt(Philox4x32& rng, double per_mode, int modes) {
  for (int mode = 0; mode < modes; ++mode) {
    if (rng.bernoulli(per_mode)) return true;
  }
  return false;
}

// Index of the first success of a Bernoulli(p) sequence, by inversion.
bool first_success_within(Philox4x32& rng, double p, long long attempts) {
  if (attempts <= 0 || p <= 0.0) return false;
  if (p >= 1.0) return true;
  const double u = 1.0 - rng.uniform();  // (0, 1]
  const double failures = std::floor(std::log(u) / std::log1p(-p));
  return failures < static_cast<double>(attempts);
}

template <class Attempt>
bool any_attempt(Philox4x32& rng, long long attempts, Attempt attempt) {
  for (long long a = 0; a < attempts; ++a) {
    if (attempt(rng)) return true;
  }
  return false;
}

McEstimate probability_estimate(std::uint64_t successes, const McConfig& cfg) {
  McEstimate e;
  e.trials = cfg.trials;
  e.successes = successes;
  e.seed = cfg.master_seed;
  const double n = static_cast<double>(cfg.trials);
  e.mean = successes / n;
  e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / n);
  return e;
}

McEstimate rate_estimate(std::uint64_t successes, const McConfig& cfg, double tau_s,
                         long long attempts) {
  McEstimate e = probability_estimate(successes, cfg);
  e.mean /= tau_s;
  e.std_error /= tau_s;
  e.attempts_per_window = attempts;
  return e;
}

void require(const McConfig& cfg, McMode mode) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (cfg.mode != mode)
    throw std::invalid_argument("simulator invoked with mode " + std::string(mc_mode_name(cfg.mode)) +
                                ", expected " + std::string(mc_mode_name(mode)));
}

void require_tau(double tau_s) {
  if (!(tau_s > 0.0) || !std::isfinite(tau_s))
    throw std::invalid_argument("window length tau must be finite and > 0");
}

// Shared window loop for the ARC-R scenarios.
McEstimate simulate_arc_windows(const ParameterProfile& p, const NetworkDesign& d, double tau_s,
                                const McConfig& cfg, bool buffered, double window_s) {
  require_tau(tau_s);
  const long long attempts = floored_attempts(omega_epps(p), window_s);
  const SegmentModel model = segment_model(p, d, buffered);
  const double p_attempt = buffered ? p_arc_gen(p, d) : p_arc_gen_no_buffer(p, d);

  const auto successes = detail::parallel_count(cfg.trials, cfg.threads, [&](std::uint64_t w) {
    Philox4x32 rng(cfg.master_seed, w);
    for (int seg = 0; seg < d.big_n; ++seg) {
      const bool ok = cfg.sampling == Sampling::Conditional
                          ? first_success_within(rng, p_attempt, attempts)
                          : any_attempt(rng, attempts,
                                        [&](Philox4x32& r) { return sample_segment(r, model); });
      if (!ok) return false;
    }
    return true;
  });
  return rate_estimate(successes, cfg, tau_s, attempts);
}

}  // namespace

std::string_view mc_mode_name(McMode m) {
  switch (m) {
    case McMode::MicroLink: return "micro-link";
    case McMode::MicroSegment: return "micro-segment";
    case McMode::WindowArcR: return "window-arcr";
    case McMode::WindowNvChain: return "window-nv";
    case McMode::WindowArcRNoBuffer: return "window-nobuffer";
  }
  return "?";
}

McMode parse_mc_mode(std::string_view name) {
  for (auto m : {McMode::MicroLink, McMode::MicroSegment, McMode::WindowArcR, McMode::WindowNvChain,
                 McMode::WindowArcRNoBuffer}) {
    if (mc_mode_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown simulation mode '" + std::string(name) + "'");
}

McEstimate simulate_link(const ParameterProfile& p, double ell_km, const McConfig& cfg) {
  require(cfg, McMode::MicroLink);
  const LinkModel model = afc_link(p, ell_km);
  const auto successes = detail::parallel_count(cfg.trials, cfg.threads, [&](std::uint64_t i) {
    Philox4x32 rng(cfg.master_seed, i);
    return sample_link(rng, model);
  });
  return probability_estimate(successes, cfg);
}

McEstimate simulate_segment(const ParameterProfile& p, const NetworkDesign& d,
                            const McConfig& cfg) {
  require(cfg, McMode::MicroSegment);
  const SegmentModel model = segment_model(p, d, true);
  const auto successes = detail::parallel_count(cfg.trials, cfg.threads, [&](std::uint64_t i) {
    Philox4x32 rng(cfg.master_seed, i);
    return sample_segment(rng, model);
  });
  return probability_estimate(successes, cfg);
}

McEstimate simulate_arcr(const ParameterProfile& p, const NetworkDesign& d, double tau_s,
                         const McConfig& cfg) {
  require(cfg, McMode::WindowArcR);
  return simulate_arc_windows(p, d, tau_s, cfg, true, tau_s - timings(d, p).t_trans_s);
}

McEstimate simulate_arcr_no_buffer(const ParameterProfile& p, const NetworkDesign& d,
                                   double tau_s, const McConfig& cfg) {
  require(cfg, McMode::WindowArcRNoBuffer);
  return simulate_arc_windows(p, d, tau_s, cfg, false, tau_s / 2.0 - timings(d, p).t_trans_s);
}

McEstimate simulate_nv_chain(const ParameterProfile& p, const NetworkDesign& d, double tau_s,
                             const McConfig& cfg) {
  require(cfg, McMode::WindowNvChain);
  require_tau(tau_s);
  const long long attempts =
      floored_attempts(omega_nv(d.ell_km), tau_s / 2.0 - timings(d, p).t_trans_tilde_s);
  const double per_mode =
      p.eta_qfc_1588 * p.eta_qfc_1588 * fiber_transmittance(p, d.ell_km) * p.eta_bsm;
  const double p_attempt = p_nv_gen(p, d.ell_km);

  const auto successes = detail::parallel_count(cfg.trials, cfg.threads, [&](std::uint64_t w) {
    Philox4x32 rng(cfg.master_seed, w);
    for (int link = 0; link < d.n; ++link) {
      const bool ok = cfg.sampling == Sampling::Conditional
                          ? first_success_within(rng, p_attempt, attempts)
                          : any_attempt(rng, attempts, [&](Philox4x32& r) {
                              return sample_nv_attempt(r, per_mode, p.gamma_t);
                            });
      if (!ok) return false;
    }
    return true;
  });
  return rate_estimate(successes, cfg, tau_s, attempts);
}

long long floored_attempts(double omega, double window_s) {
  if (!(window_s > 0.0)) return 0;
  const double a = std::floor(omega * window_s);
  if (!(a < 9.0e18)) throw std::overflow_error("attempt count does not fit a 64-bit integer");
  return static_cast<long long>(a);
}

double floored_rate_arcr(const ParameterProfile& p, const NetworkDesign& d, double tau_s) {
  const auto k = floored_attempts(omega_epps(p), tau_s - timings(d, p).t_trans_s);
  return window_success(p_arc_gen(p, d), static_cast<double>(k), d.big_n) / tau_s;
}

double floored_rate_nv_chain(const ParameterProfile& p, const NetworkDesign& d, double tau_s) {
  const auto k =
      floored_attempts(omega_nv(d.ell_km), tau_s / 2.0 - timings(d, p).t_trans_tilde_s);
  return window_success(p_nv_gen(p, d.ell_km), static_cast<double>(k), d.n) / tau_s;
}

double floored_rate_arcr_no_buffer(const ParameterProfile& p, const NetworkDesign& d,
                                   double tau_s) {
  const auto k = floored_attempts(omega_epps(p), tau_s / 2.0 - timings(d, p).t_trans_s);
  return window_success(p_arc_gen_no_buffer(p, d), static_cast<double>(k), d.big_n) / tau_s;
}

}  // namespace repchain
