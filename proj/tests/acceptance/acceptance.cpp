// Acceptance checks 1-10. One PASS/FAIL line per criterion.
//
//   acceptance               run every criterion
//   acceptance --criterion K run criterion K only
//
// Exit status is non-zero when any selected criterion fails.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "repchain/experiments.hpp"
#include "repchain/fidelity.hpp"
#include "repchain/montecarlo.hpp"
#include "repchain/rates.hpp"

#ifndef REPCHAIN_CLI
#define REPCHAIN_CLI "repchain"
#endif

using namespace repchain;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Log {
 public:
  // Keeps the first few failures; the rest are only counted.
  void fail(const std::string& what) {
    if (out_.pass) out_.detail.clear();
    out_.pass = false;
    if (++failures_ <= 3) out_.detail += (failures_ > 1 ? "; " : "") + what;
    else if (failures_ == 4) out_.detail += "; ...";
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void note(const std::string& what) {
    if (out_.pass) out_.detail = what;
  }
  Outcome done() const {
    Outcome o = out_;
    if (failures_ > 3) o.detail += " (" + std::to_string(failures_) + " failures)";
    return o;
  }

 private:
  Outcome out_;
  int failures_ = 0;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

const ParameterProfile& near_p() {
  static const auto p = builtin_profile(Era::NearTerm);
  return p;
}
const ParameterProfile& long_p() {
  static const auto p = builtin_profile(Era::LongTerm);
  return p;
}

NetworkDesign at(double ell, int n, int big_n = 1, Config c = Config::A) {
  NetworkDesign d;
  d.ell_km = ell;
  d.n = n;
  d.big_n = big_n;
  d.config = c;
  return d;
}

// ---------------------------------------------------------------------------

Outcome crossover() {
  Log log;
  for (const auto* p : {&near_p(), &long_p()}) {
    const bool near = p == &near_p();
    const int last_arc_win = near ? 1 : 3;
    const double ell = max_link_length_km(*p);
    for (int n = 1; n <= 8; ++n) {
      const double arc = rate_arc(*p, at(ell, n)).rate_hz;
      const double nv = rate_nv_chain(*p, at(ell, n)).rate_hz;
      const bool ok = n <= last_arc_win ? arc > nv : arc < nv;
      log.expect(ok, std::string(near ? "near" : "long") + " n=" + std::to_string(n) +
                         ": ARC " + fmt(arc) + " Hz vs NV chain " + fmt(nv) + " Hz");
    }
  }
  log.note("crossover at n=1 (near) and n=3 (long)");
  return log.done();
}

Outcome buffer_ordering() {
  Log log;
  for (int big_n = 1; big_n <= 10; ++big_n) {
    const auto dn = at(20, 1, big_n);
    const double l3n = rate_arcr(near_p(), dn).rate_hz;
    const double l4n = rate_arcr_no_buffer(near_p(), dn).rate_hz;
    log.expect(l4n > l3n, "near N=" + std::to_string(big_n) + ": buffered " + fmt(l3n) +
                              " vs unbuffered " + fmt(l4n));
    const auto dl = at(60, 2, big_n);
    const double l3l = rate_arcr(long_p(), dl).rate_hz;
    const double l4l = rate_arcr_no_buffer(long_p(), dl).rate_hz;
    log.expect(l3l > l4l, "long N=" + std::to_string(big_n) + ": buffered " + fmt(l3l) +
                              " vs unbuffered " + fmt(l4l));
  }
  log.note("near unbuffered > buffered, long buffered > unbuffered, N=1..10");
  return log.done();
}

Outcome config_ordering() {
  Log log;
  const std::vector<EraProfile> eras{{Era::NearTerm, near_p()}, {Era::LongTerm, long_p()}};
  const auto r = run_fig8(eras);
  for (std::size_t i = 0; i + 1 < r.rows.size(); i += 2) {
    const auto& a = r.rows[i];
    const auto& b = r.rows[i + 1];
    log.expect(std::abs(a.total_km - b.total_km) <= 1e-9 * a.total_km, "lengths differ");
    const bool ok = a.era == Era::NearTerm ? *a.rate_hz > *b.rate_hz : *b.rate_hz > *a.rate_hz;
    log.expect(ok, std::string(era_name(a.era)) + " " + fmt(a.total_km) + " km: A " +
                       fmt(*a.rate_hz) + " vs B " + fmt(*b.rate_hz));
  }
  log.note("near A > B, long B > A at every matched length");
  return log.done();
}

Outcome tau_clamping() {
  Log log;
  for (int big_n = 1; big_n <= 10; ++big_n) {
    const auto c = tau_arcr(near_p(), at(20, 1, big_n));
    log.expect(c.clamped && c.tau_s == near_p().t_nv_s,
               "near N=" + std::to_string(big_n) + ": tau = " + fmt(c.tau_s) + " s, clamped = " +
                   (c.clamped ? "true" : "false"));
  }
  log.note("tau = 1 s (clamped) for N=1..10");
  return log.done();
}

Outcome fidelity_anchor() {
  Log log;
  const auto d = at(60, 2);
  const double tau = tau_arcr(long_p(), d).tau_s;
  const double f = w_arcr(long_p(), d, tau).f_arcr;
  const double q = qber(0.8);
  log.expect(f >= 0.80, "F = " + fmt(f));
  log.expect(std::abs(q - 0.1333) <= 1e-4, "QBER(0.8) = " + fmt(q));
  log.note("F = " + fmt(f) + " at tau = " + fmt(tau) + " s, QBER(0.8) = " + fmt(q));
  return log.done();
}

Outcome near_single_arc() {
  Log log;
  const double r = rate_arc(near_p(), at(20, 1)).rate_hz;
  const double f = werner_to_fidelity(w_qr_qr(near_p(), Config::A, 1));
  log.expect(r >= 1 && r <= 100, "rate " + fmt(r) + " Hz");
  log.expect(f >= 0.60 && f <= 0.75, "F " + fmt(f));
  log.note("rate " + fmt(r) + " Hz, F " + fmt(f));
  return log.done();
}

Outcome monte_carlo() {
  constexpr std::uint64_t kTrials = 100000;
  constexpr int kSeeds = 20;
  Log log;

  struct Case {
    std::string name;
    std::function<McEstimate(std::uint64_t)> run;
    double truth;
    double success;  // per-window or per-trial success probability
  };
  std::vector<Case> cases;
  const auto cfg = [&](McMode m, std::uint64_t seed) {
    McConfig c;
    c.mode = m;
    c.trials = kTrials;
    c.master_seed = seed;
    return c;
  };

  {
    const auto& p = near_p();
    cases.push_back({"micro-link near 20 km",
                     [&, p](std::uint64_t s) { return simulate_link(p, 20, cfg(McMode::MicroLink, s)); },
                     p_afc_gen(p, 20), p_afc_gen(p, 20)});
  }
  {
    const auto p = builtin_profile(Era::Ideal);
    const auto d = at(max_link_length_km(p), 2);
    cases.push_back({"micro-segment ideal n=2",
                     [&, p, d](std::uint64_t s) { return simulate_segment(p, d, cfg(McMode::MicroSegment, s)); },
                     p_arc_gen(p, d), p_arc_gen(p, d)});
  }
  {
    const auto& p = long_p();
    const auto d = at(60, 2);
    const double tau = tau_arcr(p, d).tau_s;
    cases.push_back({"window-arcr long n=2 N=1",
                     [&, p, d, tau](std::uint64_t s) { return simulate_arcr(p, d, tau, cfg(McMode::WindowArcR, s)); },
                     floored_rate_arcr(p, d, tau), floored_rate_arcr(p, d, tau) * tau});
  }
  {
    const auto& p = near_p();
    const auto d = at(20, 3);
    const double tau = 2.45e-3;
    cases.push_back({"window-nv near n=3",
                     [&, p, d, tau](std::uint64_t s) { return simulate_nv_chain(p, d, tau, cfg(McMode::WindowNvChain, s)); },
                     floored_rate_nv_chain(p, d, tau), floored_rate_nv_chain(p, d, tau) * tau});
  }
  {
    const auto& p = long_p();
    const auto d = at(60, 1, 2);
    const double tau = 2 * (timings(d, p).t_trans_s + 1.05e-7);
    cases.push_back({"window-nobuffer long n=1 N=2",
                     [&, p, d, tau](std::uint64_t s) {
                       return simulate_arcr_no_buffer(p, d, tau, cfg(McMode::WindowArcRNoBuffer, s));
                     },
                     floored_rate_arcr_no_buffer(p, d, tau), floored_rate_arcr_no_buffer(p, d, tau) * tau});
  }

  std::ostringstream summary;
  for (const auto& c : cases) {
    log.expect(c.success >= 0.05, c.name + ": success probability " + fmt(c.success) + " < 0.05");
    int exceed = 0;
    double worst = 0;
    for (int s = 1; s <= kSeeds; ++s) {
      const auto e = c.run(static_cast<std::uint64_t>(s));
      const double z = std::abs(e.mean - c.truth) / e.std_error;
      worst = std::max(worst, z);
      if (!(z <= 3.0)) ++exceed;
    }
    log.expect(exceed <= 1, c.name + ": " + std::to_string(exceed) + " of " + std::to_string(kSeeds) +
                                " seeds beyond 3 sigma");
    summary << (summary.tellp() > 0 ? "; " : "") << c.name << " max|z|=" << fmt(worst);
  }
  log.note(summary.str());
  return log.done();
}

Outcome oracle_equivalence() {
  Log log;
  oracle::Gen g(20240601);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const auto p = g.profile();
    const auto d = g.design(p);
    const double tau = tau_arcr(p, d).tau_s;
    const double diff = std::abs(w_arcr(p, d, tau).f_arcr - compose_oracle(p, tau, d.n, d.big_n, d.config));
    worst = std::max(worst, diff);
    log.expect(diff < 1e-12, "set " + std::to_string(i) + ": difference " + fmt(diff));
  }
  log.note("max difference " + fmt(worst) + " over 100 parameter sets");
  return log.done();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  Log log;
  const auto dir = std::filesystem::temp_directory_path() / "repchain_acceptance_determinism";
  std::filesystem::create_directories(dir);
  const std::string cli = REPCHAIN_CLI;

  struct Invocation {
    std::string name;
    std::string args;
  };
  const std::vector<Invocation> runs{
      {"reproduce fig7", "reproduce --figure fig7 --era both --with-mc --seed 99 --trials 20000"},
      {"reproduce fig6", "reproduce --figure fig6 --era long --with-mc --seed 7 --trials 20000"},
      {"simulate window-arcr",
       "simulate --mode window-arcr --profile long --n 2 --seed 5 --trials 20000"},
      {"simulate micro-link", "simulate --mode micro-link --profile near --seed 5 --trials 200000"},
  };
  int k = 0;
  for (const auto& r : runs) {
    std::vector<std::string> outputs;
    for (const char* threads : {"1", "1", "4", "0"}) {
      const auto path = dir / ("run" + std::to_string(k++) + ".csv");
      const std::string cmd = "\"" + cli + "\" " + r.args + " --threads " + threads + " --out \"" +
                              path.string() + "\" 2>/dev/null";
      const int rc = std::system(cmd.c_str());
      log.expect(rc == 0, r.name + ": exit status " + std::to_string(rc));
      outputs.push_back(slurp(path));
    }
    for (const auto& o : outputs)
      log.expect(!o.empty() && o == outputs.front(), r.name + ": output differs between runs");
  }
  std::filesystem::remove_all(dir);
  log.note("4 invocations x 4 runs (threads 1, 1, 4, all) byte-identical");
  return log.done();
}

Outcome properties() {
  constexpr int kCases = 1000;
  Log log;
  oracle::Gen g(4242);
  const auto le = [](double a, double b) {
    return a <= b + 1e-12 * std::max(std::abs(a), std::abs(b));
  };
  const auto unit = [](double x) { return x >= 0.0 && x <= 1.0; };

  for (int i = 0; i < kCases; ++i) {
    const auto p = g.profile();
    auto d = g.design(p);
    const std::string tag = "case " + std::to_string(i) + ": ";

    // ranges
    log.expect(unit(p_afc_gen(p, d.ell_km)) && unit(p_nv_gen(p, d.ell_km)) && unit(p_arc_gen(p, d)),
               tag + "probability outside [0, 1]");
    const double tau_w = g.uniform(0.0, 10.0);
    const auto w = w_arcr(p, d, tau_w);
    for (double x : {w.w_elem, w.w_arc, w.w_qst, w.w_qr_qr, w.w_qr_qr_tau, w.w_arcr})
      log.expect(unit(x), tag + "Werner parameter outside [0, 1]");

    // cut-off range
    const auto t = timings(d, p);
    for (const auto& [c, lo] : {std::pair{tau_arcr(p, d), t.t_trans_s},
                                std::pair{tau_arcr_no_buffer(p, d), t.t_trans_s},
                                std::pair{tau_nv(p, d), t.t_trans_tilde_s}}) {
      const bool ok = c.tau_s <= p.t_nv_s && (lo > p.t_nv_s ? c.tau_s == p.t_nv_s : c.tau_s >= lo);
      log.expect(ok, tag + "tau " + fmt(c.tau_s) + " outside [" + fmt(lo) + ", " + fmt(p.t_nv_s) + "]");
    }

    // rate in N
    double prev = INFINITY;
    auto dn = d;
    for (int big_n = 1; big_n <= 10; ++big_n) {
      dn.big_n = big_n;
      const double r = rate_arcr(p, dn).rate_hz;
      log.expect(le(r, prev), tag + "ARC-R rate rises with N");
      prev = r;
    }

    // AFC link in modes and length
    auto more = p;
    more.gamma_f += g.integer(1, 100);
    log.expect(le(p_afc_gen(p, d.ell_km), p_afc_gen(more, d.ell_km)), tag + "p_afc falls with modes");
    log.expect(le(p_afc_gen(p, d.ell_km + g.uniform(0.0, 50.0)), p_afc_gen(p, d.ell_km)),
               tag + "p_afc rises with length");

    // Werner parameter in n, N, tau
    d.config = Config::A;
    const double w0 = w_arcr(p, d, tau_w).w_arcr;
    auto dn1 = d;
    dn1.n += 1;
    auto dN1 = d;
    dN1.big_n += 1;
    log.expect(le(w_arcr(p, dn1, tau_w).w_arcr, w0), tag + "W rises with n");
    log.expect(le(w_arcr(p, dN1, tau_w).w_arcr, w0), tag + "W rises with N");
    log.expect(le(w_arcr(p, d, tau_w + g.uniform(0.0, 5.0)).w_arcr, w0), tag + "W rises with tau");
  }
  log.note(std::to_string(kCases) + " randomized cases per property");
  return log.done();
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"crossover of ARC and NV chain rates", crossover},
      {"buffer ordering", buffer_ordering},
      {"configuration ordering", config_ordering},
      {"near-term cut-off clamped at t_nv", tau_clamping},
      {"fidelity anchor and QBER", fidelity_anchor},
      {"near-term single ARC", near_single_arc},
      {"Monte Carlo against floored closed form", monte_carlo},
      {"scalar and density-matrix fidelity", oracle_equivalence},
      {"determinism of simulate and reproduce", determinism},
      {"property suite", properties},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion K]\n";
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "criterion must be 1.." << criteria.size() << '\n';
    return 2;
  }

  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only != 0 && static_cast<int>(k + 1) != only) continue;
    const Outcome o = criteria[k].second();
    all = all && o.pass;
    std::cout << "criterion " << k + 1 << " (" << criteria[k].first << "): "
              << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
