#include "repchain/network.hpp"

#include <cmath>
#include <stdexcept>

namespace repchain {
namespace {

// Boundary counts as satisfied; tabulated products such as 10 * (20 km / v)
// land one ulp away from the exact decimal value.
bool at_least(double lhs, double rhs) { return lhs >= rhs * (1.0 - 1e-12); }

}  // namespace

std::string_view config_name(Config c) { return c == Config::A ? "A" : "B"; }

Config parse_config(std::string_view name) {
  if (name == "A" || name == "a") return Config::A;
  if (name == "B" || name == "b") return Config::B;
  throw std::invalid_argument("unknown configuration '" + std::string(name) + "' (expected A|B)");
}

void validate_design(const NetworkDesign& d) {
  if (!(d.ell_km >= 0.0) || !std::isfinite(d.ell_km))
    throw std::invalid_argument("ell_km must be finite and >= 0");
  if (d.n < 1) throw std::invalid_argument("n must be >= 1");
  if (d.big_n < 1) throw std::invalid_argument("big_n must be >= 1");
  if (!(d.epsilon > 0.0 && d.epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (d.config == Config::B) {
    if (d.xi < 2) throw std::invalid_argument("xi must be >= 2");
    if (d.n > d.xi) throw std::invalid_argument("configuration B requires n <= xi");
  }
}

double max_link_length_km(const ParameterProfile& p) {
  return p.t_afc_s * signal_velocity_km_per_s();
}

TimingReport timings(const NetworkDesign& d, const ParameterProfile& p) {
  TimingReport t;
  t.t_rt_s = d.ell_km / signal_velocity_km_per_s();
  t.t_arc_s = d.n * t.t_rt_s;
  t.t_trans_tilde_s = p.t_c13_s + p.t_cnot_s;
  t.t_trans_s = p.t_c13_s + t.t_arc_s + p.t_cnot_s;
  return t;
}

ResourceCount resources(const NetworkDesign& d) {
  ResourceCount r;
  if (d.config == Config::A) {
    r.qms = 4 * d.n - 2;
    r.qrs = 0;  // depends on ARC length, not fixed per reference span
  } else {
    r.qms = 2 * d.xi * d.n;
    r.qrs = d.xi * d.n - 1;
  }
  r.total_km = d.big_n * d.n * d.ell_km;
  return r;
}

std::vector<Violation> check_feasibility(const NetworkDesign& d, const ParameterProfile& p) {
  std::vector<Violation> out;
  const TimingReport t = timings(d, p);
  if (!at_least(p.t_nv_s, t.t_trans_s)) {
    out.push_back({ViolationKind::CutoffRegime,
                   "router storage t_nv = " + std::to_string(p.t_nv_s) +
                       " s is shorter than t_trans = " + std::to_string(t.t_trans_s) + " s"});
  }
  const double needed = (d.n - 1) * t.t_rt_s;
  if (!at_least(p.t_buff_spin_s, needed)) {
    out.push_back({ViolationKind::BufferStorage,
                   "buffer storage t_buff_spin = " + std::to_string(p.t_buff_spin_s) +
                       " s is shorter than (n-1) t_rt = " + std::to_string(needed) + " s"});
  }
  return out;
}

long long buffer_mode_capacity(const ParameterProfile& p) {
  // 30 ns * 1e8 Hz evaluates to 2.9999999999999996
  const double modes = p.t_buff_opt_s * p.r_epps_hz;
  return static_cast<long long>(std::floor(modes * (1.0 + 1e-12)));
}

}  // namespace repchain
