#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "repchain/params.hpp"

namespace repchain {

/// Synchronisation scheme of an ARC.
///  A: full-length elementary links, n-1 extra AFC memories per ARC edge.
///  B: links shortened by xi so a single edge memory covers the ARC.
enum class Config { A, B };

std::string_view config_name(Config c);
Config parse_config(std::string_view name);

/// One-dimensional chain: big_n ARCs, each of n elementary links of ell_km,
/// joined by quantum routers.
struct NetworkDesign {
  Config config = Config::A;
  double ell_km = 20.0;
  int n = 1;
  int big_n = 1;
  int xi = 2;
  double epsilon = 0.05;
  bool buffered = true;

  bool operator==(const NetworkDesign&) const = default;
};

/// Throws std::invalid_argument on a malformed design.
void validate_design(const NetworkDesign& d);

struct TimingReport {
  double t_rt_s = 0;           // one elementary link, l / (c / n_r)
  double t_arc_s = 0;          // n * t_rt
  double t_trans_s = 0;        // t_c13 + t_arc + t_cnot
  double t_trans_tilde_s = 0;  // t_c13 + t_cnot
};

struct ResourceCount {
  int qms = 0;
  int qrs = 0;
  double total_km = 0;
};

enum class ViolationKind { CutoffRegime, BufferStorage };

struct Violation {
  ViolationKind kind;
  std::string message;
};

/// Speed of light in fibre, c / n_r with n_r = 1.5.
constexpr double signal_velocity_km_per_s() { return 2.0e5; }

/// Longest elementary link the AFC storage time allows.
double max_link_length_km(const ParameterProfile& p);

TimingReport timings(const NetworkDesign& d, const ParameterProfile& p);

ResourceCount resources(const NetworkDesign& d);

/// Non-fatal checks: t_nv >= t_trans and t_buff_spin >= (n-1) t_rt.
std::vector<Violation> check_feasibility(const NetworkDesign& d, const ParameterProfile& p);

/// Temporal modes the buffer can hold, floor(t_buff_opt * R_epps).
long long buffer_mode_capacity(const ParameterProfile& p);

}  // namespace repchain
