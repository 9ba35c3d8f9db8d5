#pragma once

#include <optional>
#include <string_view>

#include "repchain/network.hpp"
#include "repchain/params.hpp"

namespace repchain {

enum class Scenario { ArcLemma1, NvChainLemma2, ArcRLemma3, ArcRNoBufferLemma4 };

std::string_view scenario_name(Scenario s);

struct CutoffTime {
  double tau_s = 0;
  bool clamped = false;  // the closed form exceeded t_nv
};

/// Lower-bound rate of one scenario plus the quantities it was built from.
struct RateReport {
  Scenario scenario = Scenario::ArcLemma1;
  std::optional<double> tau_s;  // absent for Lemma 1
  bool tau_clamped = false;
  bool no_attempt_window = false;  // attempt time inside the window was <= 0
  double p_link = 0;               // P_gen of one elementary link (AFC or NV)
  double p_attempt = 0;            // per-attempt success of one segment
  double p_segment = 0;            // one segment succeeding within the window
  double p_window = 0;             // every segment succeeding within the window
  double attempts_per_window = 0;  // real-valued attempt count; 0 for Lemma 1
  double rate_hz = 0;
};

/// Fibre transmittance over ell_km for an attenuation given in dB/km.
double fiber_transmittance(const ParameterProfile& p, double ell_km);

/// Heralded entanglement within one multiplexed AFC elementary link:
/// (1 - [1 - T eta_bsm eta_det^2]^gamma_f) (eta_afc eta_shift)^2.
double p_afc_gen(const ParameterProfile& p, double ell_km);

/// One NV elementary link attempt over gamma_t temporal modes:
/// 1 - [1 - eta_qfc_1588^2 T eta_bsm]^gamma_t.
double p_nv_gen(const ParameterProfile& p, double ell_km);

/// Transfer efficiency from the ARC edge into the router memory. Config A
/// pays (eta_afc)^(n-1) for the extra edge memories. With include_buffer
/// false the buffer stage is left out (the no-buffer network).
double eta_qr(const ParameterProfile& p, Config config, int n, bool include_buffer = true);

/// Per-attempt success of a whole ARC including both transfers into routers:
/// eta_qr^2 P_afc^n eta_bsm^(n-1).
double p_arc_gen(const ParameterProfile& p, const NetworkDesign& d);

/// Same as p_arc_gen without the two buffer stages; equals
/// p_arc_gen / eta_buff^2 whenever eta_buff > 0.
double p_arc_gen_no_buffer(const ParameterProfile& p, const NetworkDesign& d);

/// Effective pair-source attempts per second, eta_epps R_epps.
double omega_epps(const ParameterProfile& p);
/// NV attempts per second, one heralding round trip per attempt: v / ell.
double omega_nv(double ell_km);

RateReport rate_arc(const ParameterProfile& p, const NetworkDesign& d);

CutoffTime tau_nv(const ParameterProfile& p, const NetworkDesign& d);
RateReport rate_nv_chain(const ParameterProfile& p, const NetworkDesign& d,
                         std::optional<double> tau_override_s = std::nullopt);

CutoffTime tau_arcr(const ParameterProfile& p, const NetworkDesign& d);
RateReport rate_arcr(const ParameterProfile& p, const NetworkDesign& d,
                     std::optional<double> tau_override_s = std::nullopt);

CutoffTime tau_arcr_no_buffer(const ParameterProfile& p, const NetworkDesign& d);
RateReport rate_arcr_no_buffer(const ParameterProfile& p, const NetworkDesign& d,
                               std::optional<double> tau_override_s = std::nullopt);

/// Dispatches on the scenario; d.buffered is ignored for Lemma 3/4.
RateReport rate_for(Scenario s, const ParameterProfile& p, const NetworkDesign& d,
                    std::optional<double> tau_override_s = std::nullopt);

/// Probability that at least one of `attempts` independent tries succeeds,
/// raised to the number of segments that must all succeed. Real-valued
/// attempts are accepted; attempts <= 0 gives 0.
double window_success(double p_attempt, double attempts, int segments);

}  // namespace repchain
