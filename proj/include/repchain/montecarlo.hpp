#pragma once

#include <cstdint>
#include <string_view>

#include "repchain/network.hpp"
#include "repchain/params.hpp"

namespace repchain {

enum class McMode { MicroLink, MicroSegment, WindowArcR, WindowNvChain, WindowArcRNoBuffer };

std::string_view mc_mode_name(McMode m);  // micro-link, micro-segment, window-arcr, ...
McMode parse_mc_mode(std::string_view name);

/// How a window decides whether a segment succeeded within its attempts.
///  Explicit: every attempt runs the mode-level pipeline until the first
///    success or until the attempts run out.
///  Conditional: the per-attempt probability comes from the closed form and
///    only the index of the first success is sampled. Use it when a window
///    holds millions of attempts.
enum class Sampling { Explicit, Conditional };

struct McConfig {
  std::uint64_t master_seed = 1;
  std::uint64_t trials = 100000;  // windows, or attempts for the micro modes
  McMode mode = McMode::MicroLink;
  Sampling sampling = Sampling::Explicit;
  unsigned threads = 0;  // 0: hardware concurrency; never changes the result
};

struct McEstimate {
  double mean = 0;       // probability (micro modes) or rate in Hz (window modes)
  double std_error = 0;  // same units as mean
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;
  long long attempts_per_window = 0;  // floored; 0 for micro modes
};

/// One attempt of a multiplexed AFC elementary link.
McEstimate simulate_link(const ParameterProfile& p, double ell_km, const McConfig& cfg);

/// One attempt of a whole ARC: n links, n-1 linear-optic swaps, and the
/// component-by-component transfer into both routers.
McEstimate simulate_segment(const ParameterProfile& p, const NetworkDesign& d,
                            const McConfig& cfg);

/// Windows of length tau: big_n buffered ARCs each get
/// floor(omega_epps (tau - t_trans)) attempts.
McEstimate simulate_arcr(const ParameterProfile& p, const NetworkDesign& d, double tau_s,
                         const McConfig& cfg);

/// Windows of length tau: n NV links each get floor(omega_nv (tau/2 - t~_trans))
/// attempts over gamma_t temporal modes.
McEstimate simulate_nv_chain(const ParameterProfile& p, const NetworkDesign& d, double tau_s,
                             const McConfig& cfg);

/// As simulate_arcr without buffers: floor(omega_epps (tau/2 - t_trans))
/// attempts per ARC and no buffer stage in the transfer.
McEstimate simulate_arcr_no_buffer(const ParameterProfile& p, const NetworkDesign& d,
                                   double tau_s, const McConfig& cfg);

// Closed forms with the attempt count floored the way the simulator does.

long long floored_attempts(double omega, double window_s);
double floored_rate_arcr(const ParameterProfile& p, const NetworkDesign& d, double tau_s);
double floored_rate_nv_chain(const ParameterProfile& p, const NetworkDesign& d, double tau_s);
double floored_rate_arcr_no_buffer(const ParameterProfile& p, const NetworkDesign& d,
                                   double tau_s);

}  // namespace repchain
