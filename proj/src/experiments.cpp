#include "repchain/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "format.hpp"
#include "parallel.hpp"
#include "repchain/fidelity.hpp"

namespace repchain {
namespace {

enum class Quantity { Rate, FidelityQrQr, FidelityArcR };

struct Point {
  std::string label;
  Quantity quantity = Quantity::Rate;
  Scenario scenario = Scenario::ArcLemma1;
  const EraProfile* era = nullptr;
  NetworkDesign design;
};

struct Evaluated {
  SweepRow row;
  std::string violation;  // empty when the row satisfies its range invariants
};

bool rate_has_tau(Scenario s) { return s != Scenario::ArcLemma1; }

double tau_floor(Scenario s, const NetworkDesign& d, const ParameterProfile& p) {
  const TimingReport t = timings(d, p);
  return s == Scenario::NvChainLemma2 ? t.t_trans_tilde_s : t.t_trans_s;
}

void fill_mc(SweepRow& row, const Point& pt, const McConfig& base, std::uint64_t index) {
  const ParameterProfile& p = pt.era->profile;
  McConfig cfg = base;
  cfg.master_seed = row_seed(base.master_seed, index);
  McEstimate e;
  double scale = 1.0;
  switch (pt.scenario) {
    case Scenario::ArcLemma1:
      cfg.mode = McMode::MicroSegment;
      e = simulate_segment(p, pt.design, cfg);
      scale = omega_epps(p);
      break;
    case Scenario::NvChainLemma2:
      cfg.mode = McMode::WindowNvChain;
      e = simulate_nv_chain(p, pt.design, *row.tau_s, cfg);
      break;
    case Scenario::ArcRLemma3:
      cfg.mode = McMode::WindowArcR;
      e = simulate_arcr(p, pt.design, *row.tau_s, cfg);
      break;
    case Scenario::ArcRNoBufferLemma4:
      cfg.mode = McMode::WindowArcRNoBuffer;
      e = simulate_arcr_no_buffer(p, pt.design, *row.tau_s, cfg);
      break;
  }
  row.mc_rate_hz = e.mean * scale;
  row.mc_std_error = e.std_error * scale;
  row.seed = cfg.master_seed;
}

Evaluated evaluate(const Point& pt, const McOptions& mc, std::uint64_t index) {
  const ParameterProfile& p = pt.era->profile;
  const NetworkDesign& d = pt.design;
  Evaluated out;
  SweepRow& row = out.row;
  row.scenario = pt.label;
  row.era = pt.era->era;
  row.n = d.n;
  row.big_n = d.big_n;
  row.ell_km = d.ell_km;
  row.total_km = resources(d).total_km;

  std::ostringstream bad;
  switch (pt.quantity) {
    case Quantity::Rate: {
      const RateReport r = rate_for(pt.scenario, p, d);
      if (pt.scenario != Scenario::NvChainLemma2) row.config = d.config;
      row.rate_hz = r.rate_hz;
      if (rate_has_tau(pt.scenario)) {
        row.tau_s = r.tau_s;
        row.tau_clamped = r.tau_clamped;
        const double lo = std::min(tau_floor(pt.scenario, d, p), p.t_nv_s);
        if (!(*r.tau_s >= lo * (1 - 1e-12) && *r.tau_s <= p.t_nv_s))
          bad << "tau " << *r.tau_s << " outside [" << lo << ", " << p.t_nv_s << "]";
      }
      if (pt.scenario == Scenario::ArcRLemma3) {
        const WernerReport w = w_arcr(p, d, *r.tau_s);
        row.fidelity = w.f_arcr;
        row.qber = w.qber;
      }
      if (!(std::isfinite(r.rate_hz) && r.rate_hz >= 0)) bad << "rate " << r.rate_hz;
      if (mc) fill_mc(row, pt, *mc, index);
      break;
    }
    case Quantity::FidelityQrQr: {
      row.config = d.config;
      row.fidelity = werner_to_fidelity(w_qr_qr(p, d.config, d.n));
      row.qber = qber(*row.fidelity);
      break;
    }
    case Quantity::FidelityArcR: {
      row.config = d.config;
      const CutoffTime tau = tau_arcr(p, d);
      const WernerReport w = w_arcr(p, d, tau.tau_s);
      row.tau_s = tau.tau_s;
      row.tau_clamped = tau.clamped;
      row.fidelity = w.f_arcr;
      row.qber = w.qber;
      const double oracle = compose_oracle(p, tau.tau_s, d.n, d.big_n, d.config);
      if (std::abs(oracle - w.f_arcr) > 1e-12)
        bad << "scalar fidelity " << w.f_arcr << " vs density matrix " << oracle;
      break;
    }
  }
  if (row.fidelity && !(*row.fidelity >= 0.25 && *row.fidelity <= 1.0))
    bad << "fidelity " << *row.fidelity;
  if (std::abs(row.total_km - row.big_n * row.n * row.ell_km) > 1e-9 * std::max(1.0, row.total_km))
    bad << "total_km " << row.total_km;
  out.violation = bad.str();
  return out;
}

std::string describe(const SweepRow& r) {
  std::ostringstream s;
  s << r.scenario << " " << era_name(r.era) << " n=" << r.n << " N=" << r.big_n
    << " ell=" << r.ell_km;
  return s.str();
}

FigureResult run_points(const std::vector<Point>& points, const McOptions& mc) {
  const unsigned threads = mc ? mc->threads : 0;
  McOptions inner = mc;
  if (inner && points.size() > 1) inner->threads = 1;
  auto evaluated = detail::parallel_map<Evaluated>(
      points.size(), threads, [&](std::size_t i) { return evaluate(points[i], inner, i); });

  FigureResult result;
  Check ranges{Check::Kind::Invariant, "row_ranges", true, ""};
  for (auto& e : evaluated) {
    if (!e.violation.empty() && ranges.passed) {
      ranges.passed = false;
      ranges.detail = describe(e.row) + ": " + e.violation;
    }
    result.rows.push_back(std::move(e.row));
  }
  result.checks.push_back(ranges);
  return result;
}

using RowPred = std::function<bool(const SweepRow&)>;

std::vector<const SweepRow*> select(const FigureResult& r, const RowPred& pred) {
  std::vector<const SweepRow*> out;
  for (const auto& row : r.rows) {
    if (pred(row)) out.push_back(&row);
  }
  return out;
}

const SweepRow* find_row(const FigureResult& r, std::string_view label, Era era, int n, int big_n) {
  for (const auto& row : r.rows) {
    if (row.scenario == label && row.era == era && row.n == n && row.big_n == big_n) return &row;
  }
  return nullptr;
}

// Collects pass/fail over a sequence of comparisons and remembers the first
// failure for the report.
class CheckBuilder {
 public:
  CheckBuilder(Check::Kind kind, std::string name) : check_{kind, std::move(name), true, ""} {}

  void expect(bool ok, const std::string& what) {
    if (!ok && check_.passed) {
      check_.passed = false;
      check_.detail = what;
    }
  }
  Check done() && { return std::move(check_); }

 private:
  Check check_;
};

std::string cmp(const SweepRow& a, const SweepRow& b, double va, double vb) {
  std::ostringstream s;
  s << describe(a) << " = " << va << " vs " << describe(b) << " = " << vb;
  return s.str();
}

bool is_tabulated_era(Era e) { return e == Era::NearTerm || e == Era::LongTerm; }

NetworkDesign base_design(const ParameterProfile& p) {
  NetworkDesign d;
  d.ell_km = max_link_length_km(p);
  return d;
}

void require_eras(std::span<const EraProfile> eras) {
  if (eras.empty()) throw std::invalid_argument("at least one era is required");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

bool FigureResult::invariants_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.kind != Check::Kind::Invariant || c.passed; });
}

bool FigureResult::claims_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.kind != Check::Kind::Claim || c.passed; });
}

std::string_view axis_name(Axis a) {
  switch (a) {
    case Axis::LinksPerArc: return "n";
    case Axis::Arcs: return "N";
    case Axis::LinkLengthKm: return "ell_km";
  }
  return "?";
}

Axis parse_axis(std::string_view name) {
  for (auto a : {Axis::LinksPerArc, Axis::Arcs, Axis::LinkLengthKm}) {
    if (axis_name(a) == name) return a;
  }
  throw std::invalid_argument("unknown axis '" + std::string(name) + "' (expected n, N or ell_km)");
}

std::vector<double> axis_points(const AxisRange& r) {
  if (!(r.step > 0) || !std::isfinite(r.step)) throw std::invalid_argument("axis step must be > 0");
  if (!std::isfinite(r.from) || !std::isfinite(r.to) || r.from > r.to)
    throw std::invalid_argument("axis range is empty");
  const bool integral = r.axis != Axis::LinkLengthKm;
  if (integral && (r.from != std::floor(r.from) || r.step != std::floor(r.step)))
    throw std::invalid_argument("axis " + std::string(axis_name(r.axis)) + " takes integer values");
  if (integral && r.from < 1) throw std::invalid_argument("axis values must be >= 1");
  if (!integral && r.from < 0) throw std::invalid_argument("link length must be >= 0");

  const auto count = static_cast<long long>(std::floor((r.to - r.from) / r.step * (1 + 1e-12))) + 1;
  if (count > 1000000) throw std::invalid_argument("axis range has too many points");
  std::vector<double> out;
  out.reserve(count);
  for (long long i = 0; i < count; ++i) out.push_back(r.from + static_cast<double>(i) * r.step);
  return out;
}

int operating_links_per_arc(Era era) { return era == Era::NearTerm ? 1 : 2; }

std::uint64_t row_seed(std::uint64_t master_seed, std::uint64_t index) {
  return splitmix64(master_seed ^ splitmix64(index));
}

// ---------------------------------------------------------------------------

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  const auto num = [](const std::optional<double>& v) { return v ? format_double(*v) : ""; };
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.scenario << ',' << era_name(r.era) << ',' << (r.config ? config_name(*r.config) : "")
        << ',' << r.n << ',' << r.big_n << ',' << format_double(r.ell_km) << ','
        << format_double(r.total_km) << ',' << num(r.tau_s) << ','
        << (r.tau_clamped ? (*r.tau_clamped ? "true" : "false") : "") << ',' << num(r.rate_hz)
        << ',' << num(r.fidelity) << ',' << num(r.qber) << ',' << num(r.mc_rate_hz) << ','
        << num(r.mc_std_error) << ',' << (r.seed ? std::to_string(*r.seed) : "") << '\n';
  }
}

std::string to_csv(std::span<const SweepRow> rows) {
  std::ostringstream s;
  write_csv(s, rows);
  return s.str();
}

// ---------------------------------------------------------------------------

FigureResult run_fig6(std::span<const EraProfile> eras, const McOptions& mc) {
  require_eras(eras);
  std::vector<Point> points;
  for (const auto& e : eras) {
    for (int n = 1; n <= 8; ++n) {
      NetworkDesign d = base_design(e.profile);
      d.n = n;
      points.push_back({"lemma1_arc", Quantity::Rate, Scenario::ArcLemma1, &e, d});
      points.push_back({"lemma2_nv_chain", Quantity::Rate, Scenario::NvChainLemma2, &e, d});
    }
  }
  FigureResult r = run_points(points, mc);

  CheckBuilder decreasing(Check::Kind::Invariant, "lemma1_nonincreasing_in_n");
  for (const auto& e : eras) {
    for (int n = 2; n <= 8; ++n) {
      const auto* a = find_row(r, "lemma1_arc", e.era, n - 1, 1);
      const auto* b = find_row(r, "lemma1_arc", e.era, n, 1);
      decreasing.expect(*b->rate_hz <= *a->rate_hz, cmp(*b, *a, *b->rate_hz, *a->rate_hz));
    }
  }
  r.checks.push_back(std::move(decreasing).done());

  for (const auto& e : eras) {
    if (!is_tabulated_era(e.era)) continue;
    const int last_arc_win = e.era == Era::NearTerm ? 1 : 3;
    CheckBuilder crossover(Check::Kind::Claim,
                           std::string("crossover_") + std::string(era_name(e.era)));
    for (int n = 1; n <= 8; ++n) {
      const auto* arc = find_row(r, "lemma1_arc", e.era, n, 1);
      const auto* nv = find_row(r, "lemma2_nv_chain", e.era, n, 1);
      const bool ok = n <= last_arc_win ? *arc->rate_hz > *nv->rate_hz : *arc->rate_hz < *nv->rate_hz;
      crossover.expect(ok, cmp(*arc, *nv, *arc->rate_hz, *nv->rate_hz));
    }
    r.checks.push_back(std::move(crossover).done());
  }
  return r;
}

FigureResult run_fig7(std::span<const EraProfile> eras, const McOptions& mc) {
  require_eras(eras);
  std::vector<Point> points;
  for (const auto& e : eras) {
    const int n = operating_links_per_arc(e.era);
    for (int big_n = 1; big_n <= 10; ++big_n) {
      NetworkDesign d = base_design(e.profile);
      d.n = n;
      d.big_n = big_n;
      points.push_back({"lemma3_arcr", Quantity::Rate, Scenario::ArcRLemma3, &e, d});
      points.push_back({"lemma4_arcr_nobuffer", Quantity::Rate, Scenario::ArcRNoBufferLemma4, &e, d});
      NetworkDesign nv = base_design(e.profile);
      nv.n = n * big_n;
      points.push_back({"lemma2_nv_chain", Quantity::Rate, Scenario::NvChainLemma2, &e, nv});
    }
  }
  FigureResult r = run_points(points, mc);

  CheckBuilder mono(Check::Kind::Invariant, "lemma3_nonincreasing_in_N");
  for (const auto& e : eras) {
    const int n = operating_links_per_arc(e.era);
    for (int big_n = 2; big_n <= 10; ++big_n) {
      const auto* a = find_row(r, "lemma3_arcr", e.era, n, big_n - 1);
      const auto* b = find_row(r, "lemma3_arcr", e.era, n, big_n);
      mono.expect(*b->rate_hz <= *a->rate_hz * (1 + 1e-12), cmp(*b, *a, *b->rate_hz, *a->rate_hz));
    }
  }
  r.checks.push_back(std::move(mono).done());

  for (const auto& e : eras) {
    if (!is_tabulated_era(e.era)) continue;
    const int n = operating_links_per_arc(e.era);
    const bool buffer_wins = e.era == Era::LongTerm;
    CheckBuilder buffer(Check::Kind::Claim, std::string("buffer_ordering_") +
                                                std::string(era_name(e.era)));
    CheckBuilder versus_nv(Check::Kind::Claim, std::string("arcr_beats_nv_chain_") +
                                                   std::string(era_name(e.era)));
    for (int big_n = 1; big_n <= 10; ++big_n) {
      const auto* l3 = find_row(r, "lemma3_arcr", e.era, n, big_n);
      const auto* l4 = find_row(r, "lemma4_arcr_nobuffer", e.era, n, big_n);
      const auto* nv = find_row(r, "lemma2_nv_chain", e.era, n * big_n, 1);
      const bool ok = buffer_wins ? *l3->rate_hz > *l4->rate_hz : *l4->rate_hz > *l3->rate_hz;
      buffer.expect(ok, cmp(*l3, *l4, *l3->rate_hz, *l4->rate_hz));
      versus_nv.expect(*l3->rate_hz > *nv->rate_hz, cmp(*l3, *nv, *l3->rate_hz, *nv->rate_hz));
    }
    r.checks.push_back(std::move(buffer).done());
    r.checks.push_back(std::move(versus_nv).done());
  }
  return r;
}

FigureResult run_fig8(std::span<const EraProfile> eras, const McOptions& mc) {
  require_eras(eras);
  std::vector<Point> points;
  for (const auto& e : eras) {
    const int n = operating_links_per_arc(e.era);
    for (int big_n = 1; big_n <= 10; ++big_n) {
      NetworkDesign a = base_design(e.profile);
      a.n = n;
      a.big_n = big_n;
      NetworkDesign b = a;
      b.config = Config::B;
      b.n = 1;
      b.ell_km = a.ell_km / a.xi;
      b.big_n = a.xi * n * big_n;
      points.push_back({"lemma3_arcr", Quantity::Rate, Scenario::ArcRLemma3, &e, a});
      points.push_back({"lemma3_arcr", Quantity::Rate, Scenario::ArcRLemma3, &e, b});
    }
  }
  FigureResult r = run_points(points, mc);

  // rows alternate A, B
  CheckBuilder lengths(Check::Kind::Invariant, "matched_total_km");
  for (std::size_t i = 0; i + 1 < r.rows.size(); i += 2) {
    const auto& a = r.rows[i];
    const auto& b = r.rows[i + 1];
    lengths.expect(std::abs(a.total_km - b.total_km) <= 1e-9 * a.total_km,
                   cmp(a, b, a.total_km, b.total_km));
  }
  r.checks.push_back(std::move(lengths).done());

  for (const auto& e : eras) {
    if (!is_tabulated_era(e.era)) continue;
    CheckBuilder order(Check::Kind::Claim,
                       std::string("config_ordering_") + std::string(era_name(e.era)));
    for (std::size_t i = 0; i + 1 < r.rows.size(); i += 2) {
      const auto& a = r.rows[i];
      const auto& b = r.rows[i + 1];
      if (a.era != e.era) continue;
      const bool ok = e.era == Era::NearTerm ? *a.rate_hz > *b.rate_hz : *b.rate_hz > *a.rate_hz;
      order.expect(ok, cmp(a, b, *a.rate_hz, *b.rate_hz));
    }
    r.checks.push_back(std::move(order).done());
  }
  return r;
}

FigureResult run_fig9(std::span<const EraProfile> eras, double epsilon, const McOptions& mc) {
  require_eras(eras);
  if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  std::vector<Point> points;
  for (const auto& e : eras) {
    const int n = operating_links_per_arc(e.era);
    for (int big_n = 1; big_n <= 10; ++big_n) {
      NetworkDesign d = base_design(e.profile);
      d.n = n;
      d.big_n = big_n;
      d.epsilon = epsilon;
      points.push_back({"tau_vs_N", Quantity::Rate, Scenario::ArcRLemma3, &e, d});
    }
    for (int n_right : {1, 2}) {
      for (int ell = 10; ell <= 100; ell += 10) {
        NetworkDesign d;
        d.n = n_right;
        d.ell_km = ell;
        d.epsilon = epsilon;
        points.push_back({"tau_vs_ell", Quantity::Rate, Scenario::ArcRLemma3, &e, d});
      }
    }
    NetworkDesign limit = base_design(e.profile);
    limit.n = n;
    limit.epsilon = 1.0;
    points.push_back({"tau_epsilon_limit", Quantity::Rate, Scenario::ArcRLemma3, &e, limit});
  }
  FigureResult r = run_points(points, mc);

  CheckBuilder mono(Check::Kind::Invariant, "tau_nondecreasing_in_ell");
  CheckBuilder limit(Check::Kind::Invariant, "tau_equals_t_trans_at_epsilon_1");
  for (const auto& e : eras) {
    for (int n_right : {1, 2}) {
      const auto rows = select(r, [&](const SweepRow& row) {
        return row.scenario == "tau_vs_ell" && row.era == e.era && row.n == n_right;
      });
      for (std::size_t i = 1; i < rows.size(); ++i)
        mono.expect(*rows[i]->tau_s >= *rows[i - 1]->tau_s,
                    cmp(*rows[i], *rows[i - 1], *rows[i]->tau_s, *rows[i - 1]->tau_s));
    }
    const auto* row = find_row(r, "tau_epsilon_limit", e.era, operating_links_per_arc(e.era), 1);
    NetworkDesign d = base_design(e.profile);
    d.n = row->n;
    const double t_trans = std::min(timings(d, e.profile).t_trans_s, e.profile.t_nv_s);
    limit.expect(*row->tau_s == t_trans, cmp(*row, *row, *row->tau_s, t_trans));
  }
  r.checks.push_back(std::move(mono).done());
  r.checks.push_back(std::move(limit).done());

  for (const auto& e : eras) {
    if (e.era != Era::NearTerm) continue;
    CheckBuilder clamp(Check::Kind::Claim, "tau_clamped_near");
    for (const auto* row : select(r, [&](const SweepRow& x) {
           return x.scenario == "tau_vs_N" && x.era == e.era;
         })) {
      clamp.expect(*row->tau_clamped && *row->tau_s == e.profile.t_nv_s,
                   describe(*row) + ": tau = " + format_double(*row->tau_s));
    }
    r.checks.push_back(std::move(clamp).done());
  }
  return r;
}

FigureResult run_fig10(std::span<const EraProfile> eras) {
  require_eras(eras);
  std::vector<Point> points;
  for (const auto& e : eras) {
    for (int n = 1; n <= 8; ++n) {
      NetworkDesign d = base_design(e.profile);
      d.n = n;
      points.push_back({"fidelity_qr_qr", Quantity::FidelityQrQr, Scenario::ArcLemma1, &e, d});
    }
    for (int big_n = 1; big_n <= 10; ++big_n) {
      NetworkDesign d = base_design(e.profile);
      d.n = operating_links_per_arc(e.era);
      d.big_n = big_n;
      points.push_back({"fidelity_arcr", Quantity::FidelityArcR, Scenario::ArcRLemma3, &e, d});
    }
  }
  FigureResult r = run_points(points, std::nullopt);

  CheckBuilder mono(Check::Kind::Invariant, "fidelity_nonincreasing");
  CheckBuilder qber_rel(Check::Kind::Invariant, "qber_matches_fidelity");
  for (const auto& e : eras) {
    for (const char* label : {"fidelity_qr_qr", "fidelity_arcr"}) {
      const auto rows = select(r, [&](const SweepRow& x) {
        return x.scenario == label && x.era == e.era;
      });
      for (std::size_t i = 1; i < rows.size(); ++i)
        mono.expect(*rows[i]->fidelity <= *rows[i - 1]->fidelity,
                    cmp(*rows[i], *rows[i - 1], *rows[i]->fidelity, *rows[i - 1]->fidelity));
    }
  }
  for (const auto& row : r.rows)
    qber_rel.expect(std::abs(*row.qber - 2.0 / 3.0 * (1.0 - *row.fidelity)) < 1e-15,
                    describe(row));
  r.checks.push_back(std::move(mono).done());
  r.checks.push_back(std::move(qber_rel).done());

  for (const auto& e : eras) {
    if (e.era == Era::LongTerm) {
      const auto* row = find_row(r, "fidelity_arcr", e.era, 2, 1);
      CheckBuilder anchor(Check::Kind::Claim, "fidelity_long_120km_at_least_0.8");
      anchor.expect(*row->fidelity >= 0.80, describe(*row) + ": F = " + format_double(*row->fidelity));
      r.checks.push_back(std::move(anchor).done());
    }
    if (e.era == Era::NearTerm) {
      CheckBuilder useless(Check::Kind::Claim, "fidelity_near_below_0.5_beyond_one_arc");
      for (const auto* row : select(r, [&](const SweepRow& x) {
             return x.scenario == "fidelity_arcr" && x.era == e.era && x.big_n >= 2;
           }))
        useless.expect(*row->fidelity < 0.5, describe(*row) + ": F = " + format_double(*row->fidelity));
      r.checks.push_back(std::move(useless).done());
    }
  }
  CheckBuilder q(Check::Kind::Claim, "qber_at_0.8");
  q.expect(std::abs(qber(0.8) - 0.1333) <= 1e-4, "qber(0.8) = " + format_double(qber(0.8)));
  r.checks.push_back(std::move(q).done());
  return r;
}

FigureResult run_custom(const SweepSpec& spec) {
  require_eras(spec.eras);
  validate_design(spec.fixed);
  const auto values = axis_points(spec.axis);
  std::vector<Point> points;
  for (const auto& e : spec.eras) {
    for (const double v : values) {
      NetworkDesign d = spec.fixed;
      switch (spec.axis.axis) {
        case Axis::LinksPerArc: d.n = static_cast<int>(v); break;
        case Axis::Arcs: d.big_n = static_cast<int>(v); break;
        case Axis::LinkLengthKm: d.ell_km = v; break;
      }
      validate_design(d);
      points.push_back({std::string(scenario_name(spec.scenario)), Quantity::Rate, spec.scenario,
                        &e, d});
    }
  }
  McOptions mc;
  if (spec.include_mc) mc = spec.mc;
  return run_points(points, mc);
}

}  // namespace repchain
