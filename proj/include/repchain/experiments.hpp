#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "repchain/montecarlo.hpp"
#include "repchain/network.hpp"
#include "repchain/params.hpp"
#include "repchain/rates.hpp"

namespace repchain {

enum class Figure { Fig6, Fig7, Fig8, Fig9L, Fig9R, Fig10L, Fig10R, Custom };

enum class Axis { LinksPerArc, Arcs, LinkLengthKm };  // n, N, ell_km

std::string_view axis_name(Axis a);  // "n", "N", "ell_km"
Axis parse_axis(std::string_view name);

struct AxisRange {
  Axis axis = Axis::LinksPerArc;
  double from = 1;
  double to = 1;
  double step = 1;
};

/// A profile together with the era it is labelled with in the output.
struct EraProfile {
  Era era = Era::NearTerm;
  ParameterProfile profile;
};

struct SweepSpec {
  Figure figure = Figure::Custom;
  std::vector<EraProfile> eras;
  AxisRange axis;
  NetworkDesign fixed;
  Scenario scenario = Scenario::ArcLemma1;
  bool include_mc = false;
  McConfig mc;
};

/// One CSV row. Empty optionals become empty fields.
struct SweepRow {
  std::string scenario;
  Era era = Era::NearTerm;
  std::optional<Config> config;
  int n = 1;
  int big_n = 1;
  double ell_km = 0;
  double total_km = 0;
  std::optional<double> tau_s;
  std::optional<bool> tau_clamped;
  std::optional<double> rate_hz;
  std::optional<double> fidelity;
  std::optional<double> qber;
  std::optional<double> mc_rate_hz;
  std::optional<double> mc_std_error;
  std::optional<std::uint64_t> seed;
};

/// A postcondition of a runner. Invariants must hold for any valid profile;
/// claims restate the qualitative statements a figure is meant to show.
struct Check {
  enum class Kind { Invariant, Claim };
  Kind kind = Kind::Invariant;
  std::string name;
  bool passed = true;
  std::string detail;
};

struct FigureResult {
  std::vector<SweepRow> rows;
  std::vector<Check> checks;

  bool invariants_hold() const;
  bool claims_hold() const;
};

inline constexpr const char* kCsvHeader =
    "scenario,era,config,n,N,ell_km,total_km,tau_s,tau_clamped,rate_hz,fidelity,qber,"
    "mc_rate_hz,mc_std_error,seed";

void write_csv(std::ostream& out, std::span<const SweepRow> rows);
std::string to_csv(std::span<const SweepRow> rows);

/// Monte Carlo settings for the runners; mode is chosen per row.
using McOptions = std::optional<McConfig>;

/// Lemma 1 against Lemma 2 for n = 1..8 at the era's longest link.
FigureResult run_fig6(std::span<const EraProfile> eras, const McOptions& mc = std::nullopt);

/// Lemma 3, Lemma 4 and an NV chain of the same total length for N = 1..10.
FigureResult run_fig7(std::span<const EraProfile> eras, const McOptions& mc = std::nullopt);

/// Configuration A against configuration B at matched total length.
FigureResult run_fig8(std::span<const EraProfile> eras, const McOptions& mc = std::nullopt);

/// Cut-off time against N (left) and against ell 10..100 km (right), plus a
/// row at epsilon = 1 per era.
FigureResult run_fig9(std::span<const EraProfile> eras, double epsilon = 0.05,
                      const McOptions& mc = std::nullopt);

/// Fidelity of one ARC between routers against n (left) and end-to-end
/// fidelity against N with tau from the Lemma 3 cut-off (right).
FigureResult run_fig10(std::span<const EraProfile> eras);

/// Generic sweep of one scenario over one axis. Throws std::invalid_argument
/// for an empty or malformed range.
FigureResult run_custom(const SweepSpec& spec);

/// Expands a range into its points; throws std::invalid_argument if empty,
/// if step <= 0, or if an integer axis gets non-integer values.
std::vector<double> axis_points(const AxisRange& range);

/// Links per ARC of the figure operating points: 1 near-term, 2 otherwise.
int operating_links_per_arc(Era era);

/// Seed used for row `index` of a run with `master_seed`.
std::uint64_t row_seed(std::uint64_t master_seed, std::uint64_t index);

}  // namespace repchain
