#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "repchain/fidelity.hpp"
#include "repchain/rates.hpp"

using namespace repchain;
using doctest::Approx;

namespace {

const ParameterProfile kNear = builtin_profile(Era::NearTerm);
const ParameterProfile kLong = builtin_profile(Era::LongTerm);

ParameterProfile perfect() {
  auto p = kNear;
  for (double* f : {&p.f_epps, &p.f_afc, &p.f_bsm, &p.f_ffsmm, &p.f_buff, &p.f_qfc, &p.f_tb_pol,
                    &p.f_map, &p.f_c13, &p.f_cnot, &p.f_rout})
    *f = 1.0;
  return p;
}

// Stage list of one ARC between two routers before any router memory, built
// independently of pipeline_channels.
std::vector<double> qr_qr_channels(const ParameterProfile& p, int n, Config c) {
  using oracle::w_of;
  std::vector<double> out;
  for (int i = 0; i < 2 * n - 1; ++i) out.push_back(w_of(p.f_epps));  // first source is the state
  for (int i = 0; i < 2 * n; ++i) {
    out.push_back(w_of(p.f_afc));
    out.push_back(w_of(p.f_ffsmm));
  }
  for (int i = 0; i < 2 * n - 1; ++i) out.push_back(w_of(p.f_bsm));
  for (int side = 0; side < 2; ++side) {
    for (double f : {p.f_buff, p.f_qfc, p.f_tb_pol, p.f_map}) out.push_back(w_of(f));
    if (c == Config::A)
      for (int i = 0; i < n - 1; ++i) out.push_back(w_of(p.f_afc));
  }
  return out;
}

}  // namespace

TEST_CASE("fidelity and Werner parameter conversions") {
  CHECK(fidelity_to_werner(1.0) == 1.0);
  CHECK(fidelity_to_werner(0.25) == 0.0);
  CHECK(fidelity_to_werner(0.933) == Approx(0.910666666666667).epsilon(1e-14));
  CHECK(werner_to_fidelity(0.0) == 0.25);
  CHECK(werner_to_fidelity(1.0) == 1.0);
  CHECK(werner_to_fidelity(0.5295) == Approx(0.6471).epsilon(1e-4));
  for (double f = 0.25; f <= 1.0; f += 0.0123)
    CHECK(std::abs(werner_to_fidelity(fidelity_to_werner(f)) - f) < 1e-15);
  CHECK_THROWS_AS(fidelity_to_werner(0.2), std::domain_error);
  CHECK_THROWS_AS(fidelity_to_werner(1.01), std::domain_error);
  CHECK_THROWS_AS(werner_to_fidelity(-0.1), std::domain_error);
  CHECK_THROWS_AS(werner_to_fidelity(1.1), std::domain_error);
}

TEST_CASE("elementary link and ARC") {
  CHECK(w_elem(perfect()) == 1.0);
  CHECK(w_elem(kNear) == Approx(0.6743).epsilon(1e-4));
  CHECK(w_elem(kLong) == Approx(0.9103).epsilon(1e-4));
  CHECK(w_arc(kNear, 1) == w_elem(kNear));
  CHECK(w_arc(kLong, 2) == Approx(0.8176).epsilon(1e-4));
  CHECK(w_arc(kNear, 3) == Approx(0.2841).epsilon(1e-3));
}

TEST_CASE("state transfer") {
  CHECK(w_qst(kNear, Config::A, 1) == Approx(0.8861).epsilon(1e-4));
  CHECK(w_qst(kLong, Config::A, 2) == Approx(0.9580).epsilon(1e-4));
  CHECK(w_qst(kNear, Config::B, 3) == w_qst(kNear, Config::A, 1));
}

TEST_CASE("storage decay") {
  CHECK(decohere(0.7, 0) == 0.7);
  CHECK(decohere(1.0, 3.0) == Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(decohere(0.75036, 8.04e-4) == Approx(0.75016).epsilon(1e-5));
}

TEST_CASE("ARC between two routers") {
  CHECK(w_qr_qr(kNear, Config::A, 1) == Approx(0.5295).epsilon(1e-4));
  CHECK(werner_to_fidelity(w_qr_qr(kNear, Config::A, 1)) == Approx(0.647).epsilon(1e-3));
  CHECK(w_qr_qr(kLong, Config::A, 2) == Approx(0.7504).epsilon(1e-4));
  CHECK(w_qr_qr(perfect(), Config::A, 3) == 1.0);

  for (const auto* p : {&kNear, &kLong}) {
    for (int n = 1; n <= 8; ++n) {
      for (auto c : {Config::A, Config::B}) {
        const auto ch = qr_qr_channels(*p, n, c);
        const double f = compose_channels(oracle::w_of(p->f_epps), ch);
        CHECK(werner_to_fidelity(w_qr_qr(*p, c, n)) == Approx(f).epsilon(1e-12));
      }
    }
  }
  const double stored = oracle::w_of(kNear.f_c13) * std::exp(-0.1 / 3);
  CHECK(w_qr_qr_stored(kNear, Config::A, 1, 0.1) ==
        Approx(w_qr_qr(kNear, Config::A, 1) * stored * stored).epsilon(1e-14));
}

TEST_CASE("end-to-end fidelity") {
  NetworkDesign d;
  d.ell_km = 60;
  d.n = 2;
  const double tau = tau_arcr(kLong, d).tau_s;
  const auto r = w_arcr(kLong, d, tau);
  CHECK(r.f_arcr == Approx(0.811).epsilon(1e-3));
  CHECK(r.f_arcr >= 0.80);
  CHECK(r.w_arcr == r.w_qr_qr_tau);
  CHECK(r.f_arcr == Approx(compose_oracle(kLong, tau, 2, 1, Config::A)).epsilon(1e-12));

  NetworkDesign one;
  CHECK(w_arcr(perfect(), one, 0).f_arcr == 1.0);

  NetworkDesign two;
  two.big_n = 2;
  CHECK(w_arcr(kNear, two, 1.0).f_arcr < 0.5);
}

TEST_CASE("bit error rate") {
  CHECK(qber(0.8) == Approx(0.1333).epsilon(1e-3));
  CHECK(std::abs(qber(0.8) - 0.1333) < 1e-4);
  CHECK(qber(1.0) == 0.0);
  CHECK(qber(0.25) == 0.5);
  CHECK_THROWS_AS(qber(0.1), std::domain_error);
}

TEST_CASE("density matrix channels") {
  const auto s = TwoQubitState::werner(0.6);
  CHECK(s.trace() == Approx(1.0).epsilon(1e-15));
  CHECK(s.hermiticity_error() == 0.0);
  CHECK(s.bell_fidelity() == Approx(werner_to_fidelity(0.6)).epsilon(1e-15));
  CHECK(s.min_eigenvalue() == Approx(0.1).epsilon(1e-12));

  const std::vector<double> identity{1.0};
  CHECK(compose_channels(0.6, identity) == Approx(werner_to_fidelity(0.6)).epsilon(1e-15));
  const std::vector<double> erase{0.0};
  CHECK(compose_channels(0.6, erase) == Approx(0.25).epsilon(1e-15));
}

TEST_CASE("oracle pipeline matches the scalar chain") {
  for (const auto* p : {&kNear, &kLong}) {
    for (int n = 1; n <= 4; ++n) {
      for (int big_n = 1; big_n <= 5; ++big_n) {
        for (auto c : {Config::A, Config::B}) {
          for (double tau : {0.0, 1e-3, 0.7}) {
            NetworkDesign d;
            d.n = n;
            d.big_n = big_n;
            d.config = c;
            CHECK(std::abs(w_arcr(*p, d, tau).f_arcr - compose_oracle(*p, tau, n, big_n, c)) < 1e-12);
          }
        }
      }
    }
  }
  // stage count: initial source excluded
  const auto ch = pipeline_channels(kNear, 1, 1, Config::A, 0.0);
  CHECK(ch.size() == 1 + 2 + 2 + 1 + 2 * 6);
}
