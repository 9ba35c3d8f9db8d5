#include "repchain/params.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <variant>
#include <vector>

#include "format.hpp"

namespace repchain {
namespace {

enum class Kind { Efficiency, Fidelity, Time, Rate, Count, NonNegative };

struct Field {
  std::string_view key;
  std::variant<double ParameterProfile::*, int ParameterProfile::*> member;
  Kind kind;
};

using P = ParameterProfile;

// Order here is the order of serialize_profile.
constexpr std::array<Field, 34> kFields{{
    {"eta_nv", &P::eta_nv, Kind::Efficiency},
    {"t_nv_s", &P::t_nv_s, Kind::Time},
    {"t_c13_s", &P::t_c13_s, Kind::Time},
    {"eta_c13", &P::eta_c13, Kind::Efficiency},
    {"t_cnot_s", &P::t_cnot_s, Kind::Time},
    {"eta_qfc_1588", &P::eta_qfc_1588, Kind::Efficiency},
    {"gamma_t", &P::gamma_t, Kind::Count},
    {"eta_epps", &P::eta_epps, Kind::Efficiency},
    {"eta_afc", &P::eta_afc, Kind::Efficiency},
    {"t_afc_s", &P::t_afc_s, Kind::Time},
    {"r_epps_hz", &P::r_epps_hz, Kind::Rate},
    {"gamma_f", &P::gamma_f, Kind::Count},
    {"eta_shift", &P::eta_shift, Kind::Efficiency},
    {"eta_bsm", &P::eta_bsm, Kind::Efficiency},
    {"eta_det", &P::eta_det, Kind::Efficiency},
    {"alpha_db_per_km", &P::alpha_db_per_km, Kind::NonNegative},
    {"eta_buff", &P::eta_buff, Kind::Efficiency},
    {"t_buff_opt_s", &P::t_buff_opt_s, Kind::Time},
    {"t_buff_spin_s", &P::t_buff_spin_s, Kind::Time},
    {"eta_map", &P::eta_map, Kind::Efficiency},
    {"eta_pol", &P::eta_pol, Kind::Efficiency},
    {"eta_qfc_637", &P::eta_qfc_637, Kind::Efficiency},
    {"f_epps", &P::f_epps, Kind::Fidelity},
    {"f_afc", &P::f_afc, Kind::Fidelity},
    {"f_bsm", &P::f_bsm, Kind::Fidelity},
    {"f_ffsmm", &P::f_ffsmm, Kind::Fidelity},
    {"f_buff", &P::f_buff, Kind::Fidelity},
    {"f_qfc", &P::f_qfc, Kind::Fidelity},
    {"f_tb_pol", &P::f_tb_pol, Kind::Fidelity},
    {"f_map", &P::f_map, Kind::Fidelity},
    {"f_c13", &P::f_c13, Kind::Fidelity},
    {"f_cnot", &P::f_cnot, Kind::Fidelity},
    {"f_rout", &P::f_rout, Kind::Fidelity},
    {"decoherence_b_per_s", &P::decoherence_b_per_s, Kind::NonNegative},
}};

const Field* find_field(std::string_view key) {
  for (const auto& f : kFields) {
    if (f.key == key) return &f;
  }
  return nullptr;
}

void set_fidelities(P& p, double epps, double afc, double bsm, double ffsmm, double buff,
                    double qfc, double tb_pol, double map, double c13, double cnot,
                    double rout) {
  p.f_epps = epps;
  p.f_afc = afc;
  p.f_bsm = bsm;
  p.f_ffsmm = ffsmm;
  p.f_buff = buff;
  p.f_qfc = qfc;
  p.f_tb_pol = tb_pol;
  p.f_map = map;
  p.f_c13 = c13;
  p.f_cnot = cnot;
  p.f_rout = rout;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string_view era_name(Era era) {
  switch (era) {
    case Era::NearTerm: return "near";
    case Era::LongTerm: return "long";
    case Era::Ideal: return "ideal";
  }
  return "?";
}

Era parse_era(std::string_view name) {
  if (name == "near") return Era::NearTerm;
  if (name == "long") return Era::LongTerm;
  if (name == "ideal") return Era::Ideal;
  throw std::invalid_argument("unknown era '" + std::string(name) + "' (expected near|long|ideal)");
}

ParameterProfile builtin_profile(Era era) {
  P p;
  switch (era) {
    case Era::NearTerm:
      p.eta_nv = 0.05;
      p.t_nv_s = 1.0;
      p.t_c13_s = 500e-6;
      p.eta_c13 = 0.90;
      p.t_cnot_s = 500e-6;
      p.eta_qfc_1588 = 0.43;
      p.gamma_t = 27;
      p.eta_epps = 0.10;
      p.eta_afc = 0.40;
      p.t_afc_s = 100e-6;
      p.r_epps_hz = 1e8;
      p.gamma_f = 30;
      p.eta_shift = 0.70;
      p.eta_bsm = 0.50;
      p.eta_det = 0.95;
      p.alpha_db_per_km = 0.2;
      p.eta_buff = 0.30;
      p.t_buff_opt_s = 30e-9;
      p.t_buff_spin_s = 1e-3;
      p.eta_map = 0.06;
      p.eta_pol = 0.90;
      p.eta_qfc_637 = 0.43;
      set_fidelities(p, 0.933, 0.968, 0.972, 0.970, 0.996, 0.998, 0.974, 0.944, 0.997, 0.972,
                     0.945);
      break;
    case Era::LongTerm:
      p.eta_nv = 0.40;
      p.t_nv_s = 10.0;
      p.t_c13_s = 100e-6;
      p.eta_c13 = 0.99;
      p.t_cnot_s = 100e-6;
      p.eta_qfc_1588 = 0.70;
      p.gamma_t = 100;
      p.eta_epps = 0.10;
      p.eta_afc = 0.75;
      p.t_afc_s = 300e-6;
      p.r_epps_hz = 1e9;
      p.gamma_f = 300;
      p.eta_shift = 0.95;
      p.eta_bsm = 0.50;
      p.eta_det = 0.99;
      p.alpha_db_per_km = 0.146;
      p.eta_buff = 0.90;
      p.t_buff_opt_s = 100e-9;
      p.t_buff_spin_s = 100e-3;
      p.eta_map = 0.50;
      p.eta_pol = 0.99;
      p.eta_qfc_637 = 0.70;
      set_fidelities(p, 0.990, 0.990, 0.990, 0.990, 0.999, 0.999, 0.990, 0.990, 0.999, 0.990,
                     0.990);
      break;
    case Era::Ideal:
      p = builtin_profile(Era::LongTerm);  // fidelities carried over
      p.eta_nv = 1.0;
      p.t_nv_s = 20.0;
      p.t_c13_s = 10e-6;
      p.eta_c13 = 0.999;
      p.t_cnot_s = 10e-6;
      p.eta_qfc_1588 = 0.99;
      p.gamma_t = 1000;
      p.eta_epps = 0.10;
      p.eta_afc = 0.99;
      p.t_afc_s = 500e-6;
      p.r_epps_hz = 2e9;
      p.gamma_f = 3000;
      p.eta_shift = 0.99;
      p.eta_bsm = 0.75;
      p.eta_det = 0.999;
      p.alpha_db_per_km = 0.146;
      p.eta_buff = 0.99;
      p.t_buff_opt_s = 500e-6;
      p.t_buff_spin_s = 500e-3;
      p.eta_map = 0.99;
      p.eta_pol = 0.99;
      p.eta_qfc_637 = 0.99;
      break;
  }
  return p;
}

ProfileParseError::ProfileParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

ProfileValidationError::ProfileValidationError(std::string key, const std::string& what)
    : std::invalid_argument(key + ": " + what), key_(std::move(key)) {}

void validate_profile(const ParameterProfile& p) {
  for (const auto& f : kFields) {
    const std::string key(f.key);
    if (const auto* m = std::get_if<int P::*>(&f.member)) {
      if (p.*(*m) < 0) throw ProfileValidationError(key, "mode count must be >= 0");
      continue;
    }
    const double v = p.*std::get<double P::*>(f.member);
    if (!std::isfinite(v)) throw ProfileValidationError(key, "value must be finite");
    switch (f.kind) {
      case Kind::Efficiency:
        if (v < 0.0 || v > 1.0) throw ProfileValidationError(key, "efficiency outside [0, 1]");
        break;
      case Kind::Fidelity:
        if (v < 0.25 || v > 1.0) throw ProfileValidationError(key, "fidelity outside [0.25, 1]");
        break;
      case Kind::Time:
        if (v <= 0.0) throw ProfileValidationError(key, "time must be > 0");
        break;
      case Kind::Rate:
        if (v <= 0.0) throw ProfileValidationError(key, "rate must be > 0");
        break;
      case Kind::NonNegative:
        if (v < 0.0) throw ProfileValidationError(key, "value must be >= 0");
        break;
      case Kind::Count:
        break;
    }
  }
}

ParameterProfile parse_profile(std::string_view text, Era* base_out) {
  struct Entry {
    const Field* field;
    std::string_view value;
    int line;
  };
  std::vector<Entry> entries;
  std::optional<Era> base;

  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ProfileParseError(line_no, "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ProfileParseError(line_no, "expected 'key = value'");

    if (key == "base") {
      if (base) throw ProfileParseError(line_no, "duplicate 'base'");
      try {
        base = parse_era(value);
      } catch (const std::invalid_argument& e) {
        throw ProfileParseError(line_no, e.what());
      }
      continue;
    }
    const Field* field = find_field(key);
    if (!field) throw ProfileParseError(line_no, "unknown key '" + std::string(key) + "'");
    for (const auto& e : entries) {
      if (e.field == field) throw ProfileParseError(line_no, "duplicate key '" + std::string(key) + "'");
    }
    entries.push_back({field, value, line_no});
  }
  if (!base) throw ProfileParseError(line_no, "missing mandatory 'base = near|long|ideal' line");

  ParameterProfile p = builtin_profile(*base);
  for (const auto& e : entries) {
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    if (const auto* m = std::get_if<int P::*>(&e.field->member)) {
      int v = 0;
      const auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc{} || ptr != last)
        throw ProfileParseError(e.line, "'" + std::string(e.field->key) + "' expects an integer");
      p.*(*m) = v;
    } else {
      double v = 0;
      const auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc{} || ptr != last)
        throw ProfileParseError(e.line, "'" + std::string(e.field->key) + "' expects a number");
      p.*std::get<double P::*>(e.field->member) = v;
    }
  }
  validate_profile(p);
  if (base_out) *base_out = *base;
  return p;
}

ParameterProfile load_profile(const std::filesystem::path& path, Era* base_out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProfileParseError(0, "cannot open profile '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_profile(buf.str(), base_out);
}

std::string serialize_profile(const ParameterProfile& p, Era base) {
  std::string out = "base = " + std::string(era_name(base)) + "\n";
  for (const auto& f : kFields) {
    out += f.key;
    out += " = ";
    if (const auto* m = std::get_if<int P::*>(&f.member)) {
      out += std::to_string(p.*(*m));
    } else {
      out += format_double(p.*std::get<double P::*>(f.member));
    }
    out += '\n';
  }
  return out;
}

}  // namespace repchain
