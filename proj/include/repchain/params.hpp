#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace repchain {

enum class Era { NearTerm, LongTerm, Ideal };

std::string_view era_name(Era era);  // "near", "long", "ideal"
Era parse_era(std::string_view name);

/// Scalar hardware description of one network era: efficiencies, times,
/// rates and mode counts of every platform, plus per-operation fidelities.
///
/// Units are carried in the field names where they are not dimensionless.
/// Field names double as the keys of the profile file format.
struct ParameterProfile {
  // NV router
  double eta_nv = 0;        // emission efficiency (stored, not used by the rate model)
  double t_nv_s = 0;        // storage time of the router's internal memory
  double t_c13_s = 0;       // electron -> 13C swap time
  double eta_c13 = 0;
  double t_cnot_s = 0;
  double eta_qfc_1588 = 0;  // NV -> telecom conversion
  int gamma_t = 0;          // temporal modes per NV attempt

  // AFC memories and pair sources
  double eta_epps = 0;
  double eta_afc = 0;
  double t_afc_s = 0;
  double r_epps_hz = 0;
  int gamma_f = 0;          // spectral modes
  double eta_shift = 0;     // shift + filter

  // channel
  double eta_bsm = 0;
  double eta_det = 0;
  double alpha_db_per_km = 0;

  // buffer and state transfer
  double eta_buff = 0;
  double t_buff_opt_s = 0;
  double t_buff_spin_s = 0;
  double eta_map = 0;
  double eta_pol = 0;
  double eta_qfc_637 = 0;

  // per-operation fidelities w.r.t. |phi+>
  double f_epps = 1;
  double f_afc = 1;
  double f_bsm = 1;
  double f_ffsmm = 1;
  double f_buff = 1;
  double f_qfc = 1;
  double f_tb_pol = 1;
  double f_map = 1;
  double f_c13 = 1;
  double f_cnot = 1;
  double f_rout = 1;

  // depolarizing rate of the router memory, per second
  double decoherence_b_per_s = 1.0 / 3.0;

  bool operator==(const ParameterProfile&) const = default;
};

/// Tabulated values for an era. The ideal era has no tabulated fidelities
/// and reuses the long-term ones.
ParameterProfile builtin_profile(Era era);

class ProfileParseError : public std::runtime_error {
 public:
  ProfileParseError(int line, const std::string& what);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class ProfileValidationError : public std::invalid_argument {
 public:
  ProfileValidationError(std::string key, const std::string& what);
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Throws ProfileValidationError naming the first offending field.
void validate_profile(const ParameterProfile& p);

/// Parses the `key = value` profile format. A `base = near|long|ideal` line is
/// mandatory; every other key overrides a field of the base era, which is
/// stored in *base_out when given.
ParameterProfile parse_profile(std::string_view text, Era* base_out = nullptr);
ParameterProfile load_profile(const std::filesystem::path& path, Era* base_out = nullptr);

/// Writes every field explicitly, relative to `base`. parse_profile of the
/// result reproduces `p` exactly.
std::string serialize_profile(const ParameterProfile& p, Era base = Era::NearTerm);

}  // namespace repchain
