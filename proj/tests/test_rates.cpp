#include <stdexcept>
#include <cmath>
#include <set>
#include <vector>

#include "bicm/constellation.hpp"
#include "bicm/oracle.hpp"
#include "bicm/rates.hpp"
#include "doctest.h"

using namespace bicm;

namespace {

std::vector<Pattern> canonical_patterns(int M) {
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<Pattern> out;
  std::vector<std::uint8_t> bits(std::size_t(M), 0);
  for (int k = M / 2; k < M; ++k) bits[std::size_t(k)] = 1;
  std::sort(bits.begin(), bits.end());
  do {
    auto canon = canonical_pattern(Pattern(bits));
    if (seen.insert(canon.bits()).second) out.push_back(canon);
  } while (std::next_permutation(bits.begin(), bits.end()));
  return out;
}

const std::vector<double> kDbGrid{-10.0, -5.0, 0.0, 5.0, 10.0, 15.0};

}  // namespace

TEST_CASE("GMI objective at s = 0 is exactly one") {
  auto c4 = make_equally_spaced_pam(2);
  Pattern pII({0, 1, 1, 0});
  for (LValueKind k : {LValueKind::exact, LValueKind::maxlog, LValueKind::corrected}) {
    CHECK(gmi_objective(c4, pII, Snr::from_db(0.0), k, 0.0) ==
          doctest::Approx(1.0).epsilon(1e-13));
  }
  CHECK_THROWS_AS(gmi_objective(c4, pII, Snr(1.0), LValueKind::exact, -0.5),
                  std::invalid_argument);
}

TEST_CASE("BPSK objective at s = 1 reproduces the mutual information") {
  auto c2 = make_equally_spaced_pam(1);
  Pattern p({0, 1});
  Snr snr = Snr::from_db(0.0);
  const double obj = gmi_objective(c2, p, snr, LValueKind::exact, 1.0);
  const double mi = bit_mi_exact(c2, p, snr).value;
  CHECK(1.0 - obj == doctest::Approx(mi).epsilon(1e-10));

  auto mc = mc_gmi_objective(c2, p, snr, LValueKind::exact, 1.0, 10'000'000, 11);
  CHECK(std::abs(mc.mean - obj) <= 3.0 * mc.std_error);
}

TEST_CASE("max-log objective matches Monte Carlo") {
  auto c4 = make_equally_spaced_pam(2);
  Pattern pII({0, 1, 1, 0});
  Snr snr = Snr::from_db(0.0);
  const double obj = gmi_objective(c4, pII, snr, LValueKind::maxlog, 1.0);
  auto mc = mc_gmi_objective(c4, pII, snr, LValueKind::maxlog, 1.0, 10'000'000, 12);
  CHECK(std::abs(mc.mean - obj) <= 3.0 * mc.std_error);
}

TEST_CASE("exact L-values minimize the GMI at s = 1") {
  auto c4 = make_equally_spaced_pam(2);
  auto c_asym = normalize({-2, -1, 1, 4});
  for (const auto& c : {c4, c_asym}) {
    for (const auto& p : canonical_patterns(4)) {
      for (double db : {-5.0, 0.0, 6.0}) {
        auto rv = bit_gmi(c, p, Snr::from_db(db), LValueKind::exact);
        REQUIRE(rv.s_star.has_value());
        CHECK(std::abs(*rv.s_star - 1.0) <= 1e-3);
        CHECK(!rv.s_at_boundary);
      }
    }
  }
}

TEST_CASE("correcting max-log L-values attains the max-log MI") {
  auto c4 = make_equally_spaced_pam(2);
  Snr snr = Snr::from_db(0.0);
  for (const auto& p : canonical_patterns(4)) {
    const double gmi_corr = bit_gmi(c4, p, snr, LValueKind::corrected).value;
    const double mi_ml = bit_mi_maxlog(c4, p, snr).value;
    CHECK(gmi_corr == doctest::Approx(mi_ml).epsilon(1e-6));
  }
}

TEST_CASE("rates vanish as the SNR goes to zero") {
  auto c4 = make_equally_spaced_pam(2);
  CHECK(bit_gmi(c4, Pattern({0, 1, 1, 0}), Snr::from_db(-40.0), LValueKind::maxlog)
            .value <= 1e-4);
  CHECK(bit_gmi(c4, Pattern({0, 0, 1, 1}), Snr::from_db(-50.0), LValueKind::exact)
            .value <= 1e-4);
  CHECK(bit_mi_exact(c4, Pattern({0, 1, 0, 1}), Snr::from_db(-40.0)).value <= 1e-4);
  CHECK(harmonized_gmi(c4, nbc(2), Snr::from_db(-50.0), LValueKind::maxlog).value <=
        1e-4);
}

TEST_CASE("bit-level MI saturates at one bit") {
  auto c4 = make_equally_spaced_pam(2);
  const double mi = bit_mi_exact(c4, Pattern({0, 0, 1, 1}), Snr::from_db(30.0)).value;
  CHECK(mi > 1.0 - 1e-6);
  CHECK(mi <= 1.0);
}

TEST_CASE("bit-level exact MI matches Monte Carlo") {
  auto c4 = make_equally_spaced_pam(2);
  Pattern pI({0, 0, 1, 1});
  Snr snr = Snr::from_db(0.0);
  const double mi = bit_mi_exact(c4, pI, snr).value;
  auto mc = mc_rate(c4, pI, snr, RateKind::mi_exact, 10'000'000, 13);
  CHECK(std::abs(mc.mean - mi) <= 3.0 * mc.std_error);
}

TEST_CASE("losslessness of the max-log MI per pattern") {
  auto c4 = make_equally_spaced_pam(2);
  Snr snr = Snr::from_db(0.0);
  for (const auto& bits : {std::vector<std::uint8_t>{0, 0, 1, 1},
                           std::vector<std::uint8_t>{0, 1, 1, 0}}) {
    Pattern p(bits);
    CHECK(std::abs(bit_mi_exact(c4, p, snr).value -
                   bit_mi_maxlog(c4, p, snr).value) <= 1e-6);
  }
  Pattern pIII({0, 1, 0, 1});
  CHECK(bit_mi_exact(c4, pIII, snr).value - bit_mi_maxlog(c4, pIII, snr).value >
        1e-4);

  // 2-PAM: the two L-values coincide, so both MI routes must agree
  auto c2 = make_equally_spaced_pam(1);
  Pattern p2({0, 1});
  for (double db : {-5.0, 0.0, 6.0}) {
    CHECK(std::abs(bit_mi_exact(c2, p2, Snr::from_db(db)).value -
                   bit_mi_maxlog(c2, p2, Snr::from_db(db)).value) <= 1e-9);
  }
}

TEST_CASE("BICM MI sums the bit-level MIs") {
  auto c4 = make_equally_spaced_pam(2);
  auto lab = brgc(2);
  Snr snr = Snr::from_db(0.0);
  double expect = 0.0;
  for (const auto& row : lab.rows()) expect += bit_mi_exact(c4, row, snr).value;
  CHECK(bicm_mi(c4, lab, snr, LValueKind::exact).value ==
        doctest::Approx(expect).epsilon(1e-12));

  // symmetric 4-PAM with the Gray labeling is max-log lossless
  for (double db : kDbGrid) {
    CHECK(std::abs(bicm_mi(c4, lab, Snr::from_db(db), LValueKind::exact).value -
                   bicm_mi(c4, lab, Snr::from_db(db), LValueKind::maxlog).value) <=
          1e-6);
  }

  // 8-PAM Gray labeling is not
  auto c8 = make_equally_spaced_pam(3);
  CHECK(bicm_mi(c8, brgc(3), Snr::from_db(0.0), LValueKind::exact).value -
            bicm_mi(c8, brgc(3), Snr::from_db(0.0), LValueKind::maxlog).value >
        1e-4);
}

TEST_CASE("exact L-values collapse the labeling-level rates") {
  auto c4 = make_equally_spaced_pam(2);
  for (const auto& lab : {brgc(2), nbc(2)}) {
    for (double db : {-5.0, 0.0, 6.0}) {
      Snr snr = Snr::from_db(db);
      const double mi = bicm_mi(c4, lab, snr, LValueKind::exact).value;
      const double gmi = bicm_gmi(c4, lab, snr, LValueKind::exact).value;
      const double harm = harmonized_gmi(c4, lab, snr, LValueKind::exact).value;
      CHECK(gmi == doctest::Approx(mi).epsilon(1e-6));
      CHECK(harm == doctest::Approx(mi).epsilon(1e-6));
    }
  }
}

TEST_CASE("labeling-level inequality chain for max-log L-values") {
  auto c4 = make_equally_spaced_pam(2);
  auto c8 = make_equally_spaced_pam(3);
  struct Case {
    Constellation c;
    Labeling lab;
  };
  std::vector<Case> cases{{c4, brgc(2)}, {c4, nbc(2)}, {c8, brgc(3)}, {c8, nbc(3)}};
  for (const auto& [c, lab] : cases) {
    for (double db : kDbGrid) {
      Snr snr = Snr::from_db(db);
      const double mi_ex = bicm_mi(c, lab, snr, LValueKind::exact).value;
      const double mi_ml = bicm_mi(c, lab, snr, LValueKind::maxlog).value;
      const double harm = harmonized_gmi(c, lab, snr, LValueKind::maxlog).value;
      const double gmi = bicm_gmi(c, lab, snr, LValueKind::maxlog).value;
      CHECK(mi_ex - mi_ml >= -1e-6);
      CHECK(mi_ml - harm >= -1e-6);
      CHECK(harm - gmi >= -1e-6);
    }
  }
}

TEST_CASE("bit-level inequality chain across the SNR grid") {
  auto c4 = make_equally_spaced_pam(2);
  for (const auto& p : canonical_patterns(4)) {
    for (double db : kDbGrid) {
      Snr snr = Snr::from_db(db);
      const double gmi_ex = bit_gmi(c4, p, snr, LValueKind::exact).value;
      const double mi_ex = bit_mi_exact(c4, p, snr).value;
      const double mi_ml = bit_mi_maxlog(c4, p, snr).value;
      const double gmi_corr = bit_gmi(c4, p, snr, LValueKind::corrected).value;
      const double gmi_ml = bit_gmi(c4, p, snr, LValueKind::maxlog).value;
      CHECK(std::abs(gmi_ex - mi_ex) <= 1e-6);
      CHECK(mi_ex - mi_ml >= -1e-6);
      CHECK(std::abs(mi_ml - gmi_corr) <= 1e-6);
      CHECK(mi_ml - gmi_ml >= -1e-6);
    }
  }
}

TEST_CASE("golden-section minimum matches a dense grid scan") {
  auto c4 = make_equally_spaced_pam(2);
  Pattern pIII({0, 1, 0, 1});
  Snr snr = Snr::from_db(0.0);
  auto rv = bit_gmi(c4, pIII, snr, LValueKind::maxlog);
  double best = 1e9;
  for (int i = 0; i <= 1000; ++i) {
    const double s = 1e-4 + (8.0 - 1e-4) * i / 1000.0;
    best = std::min(best, gmi_objective(c4, pIII, snr, LValueKind::maxlog, s));
  }
  CHECK(std::abs((1.0 - rv.value) - best) <= 1e-6);
}

TEST_CASE("rates increase with SNR") {
  auto c4 = make_equally_spaced_pam(2);
  auto lab = nbc(2);
  double prev_mi = -1.0, prev_gmi = -1.0, prev_harm = -1.0;
  for (double db : kDbGrid) {
    Snr snr = Snr::from_db(db);
    const double mi = bicm_mi(c4, lab, snr, LValueKind::maxlog).value;
    const double gmi = bicm_gmi(c4, lab, snr, LValueKind::maxlog).value;
    const double harm = harmonized_gmi(c4, lab, snr, LValueKind::maxlog).value;
    CHECK(mi > prev_mi);
    CHECK(gmi > prev_gmi);
    CHECK(harm > prev_harm);
    prev_mi = mi;
    prev_gmi = gmi;
    prev_harm = harm;
  }
}

TEST_CASE("doubling the quadrature order leaves rates unchanged") {
  auto c8 = make_equally_spaced_pam(3);
  auto lab = brgc(3);
  Snr snr = Snr::from_db(6.0);
  QuadratureConfig q64, q128;
  q128.nodes_per_point = 128;
  CHECK(std::abs(bicm_mi(c8, lab, snr, LValueKind::maxlog, q64).value -
                 bicm_mi(c8, lab, snr, LValueKind::maxlog, q128).value) <= 1e-7);
  CHECK(std::abs(bicm_gmi(c8, lab, snr, LValueKind::maxlog, q64).value -
                 bicm_gmi(c8, lab, snr, LValueKind::maxlog, q128).value) <= 1e-7);
  CHECK(std::abs(bicm_mi(c8, lab, snr, LValueKind::exact, q64).value -
                 bicm_mi(c8, lab, snr, LValueKind::exact, q128).value) <= 1e-7);
}

TEST_CASE("argument validation") {
  auto c4 = make_equally_spaced_pam(2);
  auto lab = brgc(2);
  Snr snr(1.0);
  CHECK_THROWS_AS(bicm_mi(c4, lab, snr, LValueKind::corrected), std::invalid_argument);
  CHECK_THROWS_AS(bicm_gmi(c4, lab, snr, LValueKind::corrected), std::invalid_argument);
  CHECK_THROWS_AS(harmonized_gmi(c4, lab, snr, LValueKind::corrected),
                  std::invalid_argument);
  QuadratureConfig bad;
  bad.nodes_per_point = 4;
  CHECK_THROWS_AS(bit_mi_exact(c4, Pattern({0, 0, 1, 1}), snr, bad),
                  std::invalid_argument);
  CHECK_THROWS_AS(Snr(0.0), std::invalid_argument);
  CHECK_THROWS_AS(Snr(-1.0), std::invalid_argument);
}
