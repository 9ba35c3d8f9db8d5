// repchain: rates, fidelities, simulations and figure sweeps for
// router-assisted repeater chains.
//
// Exit codes: 0 success, 1 usage error, 2 validation error,
// 3 internal invariant failure.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "repchain/experiments.hpp"
#include "repchain/fidelity.hpp"
#include "repchain/montecarlo.hpp"
#include "repchain/network.hpp"
#include "repchain/params.hpp"
#include "repchain/rates.hpp"
#include "format.hpp"

using namespace repchain;

namespace {

constexpr int kUsage = 1;
constexpr int kValidation = 2;
constexpr int kInvariant = 3;

struct InvariantFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

EraProfile resolve_profile(const std::string& spec) {
  if (spec == "near" || spec == "long" || spec == "ideal") {
    const Era era = parse_era(spec);
    return {era, builtin_profile(era)};
  }
  EraProfile out;
  out.profile = load_profile(spec, &out.era);
  return out;
}

struct DesignFlags {
  std::string config = "A";
  std::optional<double> ell_km;
  int n = 1;
  int big_n = 1;
  int xi = 2;
  double epsilon = 0.05;
  bool no_buffer = false;

  void attach(CLI::App* app) {
    app->add_option("--config", config, "synchronisation scheme")->check(CLI::IsMember({"A", "B"}));
    app->add_option("--ell-km", ell_km, "elementary link length (default: longest the AFC allows)");
    app->add_option("--n", n, "elementary links per ARC");
    app->add_option("--big-n", big_n, "number of ARCs");
    app->add_option("--xi", xi, "link shortening factor of configuration B");
    app->add_option("--epsilon", epsilon, "allowed window failure probability");
    app->add_flag("--no-buffer", no_buffer, "leave the buffers out");
  }

  NetworkDesign design(const ParameterProfile& p) const {
    NetworkDesign d;
    d.config = parse_config(config);
    d.ell_km = ell_km ? *ell_km : max_link_length_km(p);
    d.n = n;
    d.big_n = big_n;
    d.xi = xi;
    d.epsilon = epsilon;
    d.buffered = !no_buffer;
    validate_design(d);
    return d;
  }
};

struct McFlags {
  std::uint64_t seed = 1;
  std::uint64_t trials = 100000;
  unsigned threads = 0;
  std::string sampling;

  void attach(CLI::App* app, const std::string& default_sampling) {
    sampling = default_sampling;
    app->add_option("--seed", seed, "master seed");
    app->add_option("--trials", trials, "windows or attempts to simulate");
    app->add_option("--threads", threads, "worker threads, 0 for all cores");
    app->add_option("--sampling", sampling, "explicit or conditional")
        ->check(CLI::IsMember({"explicit", "conditional"}));
  }

  McConfig config(McMode mode) const {
    McConfig c;
    c.master_seed = seed;
    c.trials = trials;
    c.threads = threads;
    c.mode = mode;
    c.sampling = sampling == "conditional" ? Sampling::Conditional : Sampling::Explicit;
    return c;
  }
};

Scenario lemma_scenario(int lemma) {
  switch (lemma) {
    case 1: return Scenario::ArcLemma1;
    case 2: return Scenario::NvChainLemma2;
    case 3: return Scenario::ArcRLemma3;
    default: return Scenario::ArcRNoBufferLemma4;
  }
}

void warn_feasibility(const NetworkDesign& d, const ParameterProfile& p) {
  for (const auto& v : check_feasibility(d, p)) std::cerr << "warning: " << v.message << '\n';
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

void print(const char* key, double v) { std::cout << key << ' ' << format_double(v) << '\n'; }

// ---------------------------------------------------------------------------

struct RateCmd {
  int lemma = 1;
  std::string profile = "near";
  std::optional<double> tau_s;
  DesignFlags design;

  int run() const {
    const EraProfile ep = resolve_profile(profile);
    const NetworkDesign d = design.design(ep.profile);
    warn_feasibility(d, ep.profile);
    const RateReport r = rate_for(lemma_scenario(lemma), ep.profile, d, tau_s);
    std::cout << "scenario " << scenario_name(r.scenario) << '\n';
    std::cout << "era " << era_name(ep.era) << '\n';
    print("rate_hz", r.rate_hz);
    if (r.tau_s) {
      print("tau_s", *r.tau_s);
      std::cout << "tau_clamped " << (r.tau_clamped ? "true" : "false") << '\n';
      std::cout << "no_attempt_window " << (r.no_attempt_window ? "true" : "false") << '\n';
      print("attempts_per_window", r.attempts_per_window);
    }
    print("p_link", r.p_link);
    print("p_attempt", r.p_attempt);
    print("p_segment", r.p_segment);
    print("p_window", r.p_window);
    return 0;
  }
};

struct FidelityCmd {
  std::string profile = "near";
  std::optional<double> tau_s;
  DesignFlags design;

  int run() const {
    const EraProfile ep = resolve_profile(profile);
    const NetworkDesign d = design.design(ep.profile);
    warn_feasibility(d, ep.profile);
    const double tau = tau_s ? *tau_s : tau_arcr(ep.profile, d).tau_s;
    if (!(tau >= 0)) throw std::invalid_argument("tau must be >= 0");
    const WernerReport w = w_arcr(ep.profile, d, tau);
    print("tau_s", w.tau_s);
    print("w_elem", w.w_elem);
    print("w_arc", w.w_arc);
    print("w_qst", w.w_qst);
    print("w_qr_qr", w.w_qr_qr);
    print("f_qr_qr", werner_to_fidelity(w.w_qr_qr));
    print("w_qr_qr_tau", w.w_qr_qr_tau);
    print("w_arcr", w.w_arcr);
    print("f_arcr", w.f_arcr);
    print("qber", w.qber);
    return 0;
  }
};

struct SimulateCmd {
  std::string mode = "micro-link";
  std::string profile = "near";
  std::optional<double> tau_s;
  std::string out;
  DesignFlags design;
  McFlags mc;

  int run() const {
    const EraProfile ep = resolve_profile(profile);
    const ParameterProfile& p = ep.profile;
    const NetworkDesign d = design.design(p);
    const McMode m = parse_mc_mode(mode);
    const McConfig cfg = mc.config(m);
    if (cfg.trials < 1) throw std::invalid_argument("--trials must be >= 1");

    McEstimate e;
    double closed = 0;
    std::optional<double> tau;
    switch (m) {
      case McMode::MicroLink:
        e = simulate_link(p, d.ell_km, cfg);
        closed = p_afc_gen(p, d.ell_km);
        break;
      case McMode::MicroSegment:
        e = simulate_segment(p, d, cfg);
        closed = p_arc_gen(p, d);
        break;
      case McMode::WindowArcR:
        tau = tau_s ? *tau_s : tau_arcr(p, d).tau_s;
        e = simulate_arcr(p, d, *tau, cfg);
        closed = floored_rate_arcr(p, d, *tau);
        break;
      case McMode::WindowNvChain:
        tau = tau_s ? *tau_s : tau_nv(p, d).tau_s;
        e = simulate_nv_chain(p, d, *tau, cfg);
        closed = floored_rate_nv_chain(p, d, *tau);
        break;
      case McMode::WindowArcRNoBuffer:
        tau = tau_s ? *tau_s : tau_arcr_no_buffer(p, d).tau_s;
        e = simulate_arcr_no_buffer(p, d, *tau, cfg);
        closed = floored_rate_arcr_no_buffer(p, d, *tau);
        break;
    }
    std::string csv =
        "mode,era,config,n,N,ell_km,tau_s,trials,successes,attempts_per_window,mean,std_error,"
        "closed_form,seed\n";
    csv += std::string(mc_mode_name(m)) + ',' + std::string(era_name(ep.era)) + ',' +
           std::string(config_name(d.config)) + ',' + std::to_string(d.n) + ',' +
           std::to_string(d.big_n) + ',' + format_double(d.ell_km) + ',' +
           (tau ? format_double(*tau) : "") + ',' + std::to_string(e.trials) + ',' +
           std::to_string(e.successes) + ',' + std::to_string(e.attempts_per_window) + ',' +
           format_double(e.mean) + ',' + format_double(e.std_error) + ',' +
           format_double(closed) + ',' + std::to_string(e.seed) + '\n';
    write_output(out, csv);
    return 0;
  }
};

int report_checks(const FigureResult& r, bool strict) {
  for (const auto& c : r.checks) {
    std::cerr << (c.kind == Check::Kind::Invariant ? "invariant " : "claim ") << c.name << ": "
              << (c.passed ? "ok" : "FAILED");
    if (!c.passed) std::cerr << " (" << c.detail << ')';
    std::cerr << '\n';
  }
  if (!r.invariants_hold()) throw InvariantFailure("figure invariants failed");
  if (strict && !r.claims_hold()) throw InvariantFailure("figure claims failed under --strict");
  return 0;
}

struct ReproduceCmd {
  std::string figure;
  std::string era = "both";
  std::string out;
  std::string near_profile = "near";
  std::string long_profile = "long";
  double epsilon = 0.05;
  bool with_mc = false;
  bool strict = false;
  McFlags mc;

  int run() const {
    std::vector<EraProfile> eras;
    if (era == "near" || era == "both") eras.push_back(resolve_profile(near_profile));
    if (era == "long" || era == "both") eras.push_back(resolve_profile(long_profile));
    if (era == "ideal") eras.push_back(resolve_profile("ideal"));

    McOptions opts;
    if (with_mc) opts = mc.config(McMode::MicroLink);

    FigureResult r;
    if (figure == "fig6") r = run_fig6(eras, opts);
    else if (figure == "fig7") r = run_fig7(eras, opts);
    else if (figure == "fig8") r = run_fig8(eras, opts);
    else if (figure == "fig9") r = run_fig9(eras, epsilon, opts);
    else r = run_fig10(eras);

    write_output(out, to_csv(r.rows));
    return report_checks(r, strict);
  }
};

struct SweepCmd {
  int lemma = 1;
  std::string profile = "near";
  std::string axis = "n";
  double from = 1;
  double to = 8;
  double step = 1;
  std::string out;
  bool with_mc = false;
  DesignFlags design;
  McFlags mc;

  int run() const {
    SweepSpec spec;
    spec.eras.push_back(resolve_profile(profile));
    spec.fixed = design.design(spec.eras.front().profile);
    spec.axis = {parse_axis(axis), from, to, step};
    spec.scenario = lemma_scenario(lemma);
    spec.include_mc = with_mc;
    spec.mc = mc.config(McMode::MicroLink);
    const FigureResult r = run_custom(spec);
    write_output(out, to_csv(r.rows));
    return report_checks(r, false);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement distribution rates and fidelities of router-assisted repeater chains"};
  app.require_subcommand(1);

  RateCmd rate;
  auto* rate_app = app.add_subcommand("rate", "closed-form rate of one scenario");
  rate_app->add_option("--lemma", rate.lemma, "1 ARC, 2 NV chain, 3 ARC-R, 4 ARC-R without buffer")
      ->required()
      ->check(CLI::Range(1, 4));
  rate_app->add_option("--profile", rate.profile, "near, long, ideal or a profile file");
  rate_app->add_option("--tau-s", rate.tau_s, "cut-off time override");
  rate.design.attach(rate_app);

  FidelityCmd fid;
  auto* fid_app = app.add_subcommand("fidelity", "Werner pipeline of an ARC-R");
  fid_app->add_option("--profile", fid.profile, "near, long, ideal or a profile file");
  fid_app->add_option("--tau-s", fid.tau_s, "storage time (default: the ARC-R cut-off)");
  fid.design.attach(fid_app);

  SimulateCmd sim;
  auto* sim_app = app.add_subcommand("simulate", "Monte Carlo estimate of one scenario");
  sim_app->add_option("--mode", sim.mode, "simulation mode")
      ->check(CLI::IsMember(
          {"micro-link", "micro-segment", "window-arcr", "window-nv", "window-nobuffer"}));
  sim_app->add_option("--profile", sim.profile, "near, long, ideal or a profile file");
  sim_app->add_option("--tau-s", sim.tau_s, "window length (default: the scenario's cut-off)");
  sim_app->add_option("--out", sim.out, "CSV output path, stdout when omitted");
  sim.design.attach(sim_app);
  sim.mc.attach(sim_app, "explicit");

  ReproduceCmd rep;
  auto* rep_app = app.add_subcommand("reproduce", "regenerate a figure as CSV");
  rep_app->add_option("--figure", rep.figure)
      ->required()
      ->check(CLI::IsMember({"fig6", "fig7", "fig8", "fig9", "fig10"}));
  rep_app->add_option("--era", rep.era)->check(CLI::IsMember({"near", "long", "both", "ideal"}));
  rep_app->add_option("--out", rep.out, "CSV output path")->required();
  rep_app->add_option("--near-profile", rep.near_profile, "profile used for the near-term era");
  rep_app->add_option("--long-profile", rep.long_profile, "profile used for the long-term era");
  rep_app->add_option("--epsilon", rep.epsilon, "window failure probability for fig9");
  rep_app->add_flag("--with-mc", rep.with_mc, "add Monte Carlo columns");
  rep_app->add_flag("--strict", rep.strict, "exit 3 when a figure claim does not hold");
  rep.mc.attach(rep_app, "conditional");

  SweepCmd sweep;
  auto* sweep_app = app.add_subcommand("sweep", "sweep one scenario over n, N or ell_km");
  sweep_app->add_option("--lemma", sweep.lemma)->required()->check(CLI::Range(1, 4));
  sweep_app->add_option("--profile", sweep.profile, "near, long, ideal or a profile file");
  sweep_app->add_option("--axis", sweep.axis)->check(CLI::IsMember({"n", "N", "ell_km"}));
  sweep_app->add_option("--from", sweep.from);
  sweep_app->add_option("--to", sweep.to);
  sweep_app->add_option("--step", sweep.step);
  sweep_app->add_option("--out", sweep.out, "CSV output path, stdout when omitted");
  sweep_app->add_flag("--with-mc", sweep.with_mc, "add Monte Carlo columns");
  sweep.design.attach(sweep_app);
  sweep.mc.attach(sweep_app, "conditional");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*rate_app) return rate.run();
    if (*fid_app) return fid.run();
    if (*sim_app) return sim.run();
    if (*rep_app) return rep.run();
    if (*sweep_app) return sweep.run();
  } catch (const InvariantFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvariant;
  } catch (const ProfileParseError& e) {
    std::cerr << "error: profile line " << e.line() << ": " << e.what() << '\n';
    return kValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kUsage;
}
