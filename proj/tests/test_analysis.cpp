#include <stdexcept>
#include <cmath>
#include <set>
#include <vector>

#include "bicm/analysis.hpp"
#include "bicm/constellation.hpp"
#include "bicm/oracle.hpp"
#include "bicm/rates.hpp"
#include "doctest.h"

using namespace bicm;

namespace {

std::vector<Pattern> all_patterns(int M) {
  std::vector<Pattern> out;
  std::vector<std::uint8_t> bits(std::size_t(M), 0);
  for (int k = M / 2; k < M; ++k) bits[std::size_t(k)] = 1;
  std::sort(bits.begin(), bits.end());
  do {
    out.emplace_back(bits);
  } while (std::next_permutation(bits.begin(), bits.end()));
  return out;
}

std::vector<double> db_range(double lo, double hi, double step) {
  std::vector<double> g;
  for (double x = lo; x <= hi + 1e-9; x += step) g.push_back(x);
  return g;
}

}  // namespace

TEST_CASE("pattern classification") {
  auto c_sym = make_equally_spaced_pam(2);
  auto c_asym = normalize({-2, -1, 1, 4});

  for (const auto& c : {c_sym, c_asym}) {
    CHECK(classify_pattern(c, Pattern({1, 1, 0, 0})).verdict == LosslessCase::case_i);
    CHECK(classify_pattern(c, Pattern({0, 0, 1, 1})).verdict == LosslessCase::case_i);
  }
  CHECK(classify_pattern(c_sym, Pattern({0, 1, 1, 0})).verdict ==
        LosslessCase::case_ii);
  CHECK(classify_pattern(c_asym, Pattern({0, 1, 1, 0})).verdict ==
        LosslessCase::lossy);
  CHECK(classify_pattern(c_sym, Pattern({0, 1, 0, 1})).verdict ==
        LosslessCase::lossy);
  CHECK(classify_pattern(c_sym, Pattern({0, 1, 0, 1})).reason == "p_III");

  // M = 2: only the single-crossing class exists
  auto c2 = make_equally_spaced_pam(1);
  CHECK(classify_pattern(c2, Pattern({0, 1})).verdict == LosslessCase::case_i);
  CHECK(classify_pattern(c2, Pattern({1, 0})).verdict == LosslessCase::case_i);
}

TEST_CASE("labeling classification") {
  auto c4 = make_equally_spaced_pam(2);
  auto res = classify_labeling(c4, brgc(2));
  CHECK(res.all_lossless);

  res = classify_labeling(c4, nbc(2));
  CHECK(!res.all_lossless);
  CHECK(res.rows[0].verdict == LosslessCase::case_i);
  CHECK(res.rows[1].verdict == LosslessCase::lossy);
  CHECK(res.rows[1].reason == "p_III");

  // any labeling with more than two bit positions has a lossy row; for the
  // 8-point Gray labeling that is the third row, since the second row is
  // exactly the symmetric two-crossing pattern
  auto c8 = make_equally_spaced_pam(3);
  auto res8 = classify_labeling(c8, brgc(3));
  CHECK(!res8.all_lossless);
  CHECK(res8.rows[0].verdict == LosslessCase::case_i);
  CHECK(res8.rows[1].verdict == LosslessCase::case_ii);
  CHECK(!res8.rows[2].lossless());
}

TEST_CASE("classification agrees with the numerical losslessness oracle") {
  auto c_sym = make_equally_spaced_pam(2);
  auto c_shift = normalize({0, 1, 2, 3});  // symmetric around a nonzero center
  auto c_asym = normalize({-2, -1, 1, 4});
  for (const auto& c : {c_sym, c_shift, c_asym}) {
    for (const auto& p : all_patterns(4)) {
      const bool predicted = classify_pattern(c, p).lossless();
      for (double db : {0.0, 6.0}) {
        Snr snr = Snr::from_db(db);
        const double gap =
            bit_mi_exact(c, p, snr).value - bit_mi_maxlog(c, p, snr).value;
        if (predicted) {
          CHECK(std::abs(gap) <= 1e-6);
        } else {
          CHECK(gap > 1e-6);
        }
      }
    }
  }
}

TEST_CASE("8-point canonical classes classify as the theorem dictates") {
  auto c8 = make_equally_spaced_pam(3);
  std::set<std::vector<std::uint8_t>> classes;
  for (const auto& p : all_patterns(8)) classes.insert(canonical_pattern(p).bits());
  int lossless_count = 0;
  for (const auto& bits : classes) {
    if (classify_pattern(c8, Pattern(bits)).lossless()) ++lossless_count;
  }
  // exactly the single-crossing class and the symmetric two-crossing class
  CHECK(lossless_count == 2);
  CHECK(classify_pattern(c8, Pattern({0, 0, 0, 0, 1, 1, 1, 1})).verdict ==
        LosslessCase::case_i);
  CHECK(classify_pattern(c8, Pattern({0, 0, 1, 1, 1, 1, 0, 0})).verdict ==
        LosslessCase::case_ii);
}

TEST_CASE("rate curve construction and inversion") {
  auto c2 = make_equally_spaced_pam(1);
  Pattern p({0, 1});
  auto grid = db_range(-20.0, 20.0, 1.0);
  auto rate_fn = [&](double db) {
    return bit_mi_exact(c2, p, Snr::from_db(db)).value;
  };
  auto curve = build_curve(rate_fn, grid, 1.0, "2pam mi exact");

  // strictly increasing until the rate saturates at the ceiling
  for (std::size_t i = 1; i < curve.rates().size(); ++i) {
    if (curve.rates()[i - 1] < 1.0 - 1e-9) {
      CHECK(curve.rates()[i] > curve.rates()[i - 1]);
    } else {
      CHECK(curve.rates()[i] >= curve.rates()[i - 1] - 1e-12);
    }
  }
  CHECK(curve.min_rate() < 0.02);
  CHECK(curve.max_rate() > 0.999);

  // the small low-SNR endpoint agrees with a Monte Carlo estimate
  auto mc = mc_rate(c2, p, Snr::from_db(-20.0), RateKind::mi_exact, 1'000'000, 5);
  CHECK(std::abs(curve.rates().front() - mc.mean) <= 3.0 * mc.std_error);

  // identical rebuild is deterministic
  auto again = build_curve(rate_fn, grid, 1.0, "again");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(curve.rates()[i] == again.rates()[i]);
  }

  // knot round trips below saturation
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    if (curve.rates()[i] >= 1.0 - 1e-9) break;
    CHECK(std::abs(curve.invert(curve.rates()[i]) - grid[i]) <= 1e-6);
  }

  // inversion preserves order
  CHECK(curve.invert(0.2) < curve.invert(0.3));
  CHECK(curve.invert(0.3) < curve.invert(0.8));

  // inversion against a Monte Carlo built curve
  std::vector<double> mc_rates(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    mc_rates[i] =
        mc_rate(c2, p, Snr::from_db(grid[i]), RateKind::mi_exact, 1'000'000, 99).mean;
  }
  RateCurve mc_curve(grid, std::move(mc_rates), 1.0, "mc");
  CHECK(std::abs(curve.invert(0.5) - mc_curve.invert(0.5)) <= 0.02);

  CHECK_THROWS_AS(curve.invert(1.5), std::out_of_range);
  try {
    curve.invert(1.5);
  } catch (const std::out_of_range& e) {
    CHECK(std::string(e.what()).find("range") != std::string::npos);
  }
}

TEST_CASE("curve construction rejects non-monotone samples") {
  auto flat = [](double) { return 0.5; };
  auto grid = db_range(0.0, 5.0, 1.0);
  CHECK_THROWS_AS(build_curve(flat, grid, 1.0, "flat"), std::runtime_error);
  std::vector<double> two{0.0};
  CHECK_THROWS_AS(build_curve(flat, two, 1.0, "short"), std::invalid_argument);
}

TEST_CASE("harmonized GMI curve sits between the MI and BICM GMI curves") {
  auto c4 = make_equally_spaced_pam(2);
  auto lab = nbc(2);
  auto grid = db_range(-8.0, 8.0, 1.0);
  auto mk = [&](RateKind kind) {
    return build_curve(
        [&, kind](double db) {
          Snr snr = Snr::from_db(db);
          switch (kind) {
            case RateKind::mi_bicm:
              return bicm_mi(c4, lab, snr, LValueKind::maxlog).value;
            case RateKind::gmi_bicm:
              return bicm_gmi(c4, lab, snr, LValueKind::maxlog).value;
            default:
              return harmonized_gmi(c4, lab, snr, LValueKind::maxlog).value;
          }
        },
        grid, 2.0, "curve");
  };
  auto mi = mk(RateKind::mi_bicm);
  auto harm = mk(RateKind::gmi_harmonized);
  auto gmi = mk(RateKind::gmi_bicm);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(harm.rates()[i] <= mi.rates()[i] + 1e-9);
    CHECK(gmi.rates()[i] <= harm.rates()[i] + 1e-9);
  }
}

TEST_CASE("loss in dB between curves") {
  auto c4 = make_equally_spaced_pam(2);
  Pattern pII({0, 1, 1, 0});
  auto grid = db_range(-22.0, 10.0, 0.5);
  auto mi_ex = build_curve(
      [&](double db) { return bit_mi_exact(c4, pII, Snr::from_db(db)).value; },
      grid, 1.0, "mi exact");
  auto gmi_ml = build_curve(
      [&](double db) {
        return bit_gmi(c4, pII, Snr::from_db(db), LValueKind::maxlog).value;
      },
      grid, 1.0, "gmi maxlog");

  CHECK(std::abs(loss_db(mi_ex, mi_ex, 0.5)) <= 1e-6);

  // the two-crossing GMI loss grows without bound as the rate goes to zero
  const double l001 = loss_db(mi_ex, gmi_ml, 0.01);
  const double l01 = loss_db(mi_ex, gmi_ml, 0.1);
  const double l05 = loss_db(mi_ex, gmi_ml, 0.5);
  CHECK(l001 > l01);
  CHECK(l01 > l05);
  CHECK(l05 > -0.001);

  // only curves over the same rate range can be compared
  auto label_curve = build_curve(
      [&](double db) {
        return bicm_mi(c4, brgc(2), Snr::from_db(db), LValueKind::exact).value;
      },
      db_range(-10.0, 10.0, 1.0), 2.0, "label level");
  CHECK_THROWS_AS(loss_db(mi_ex, label_curve, 0.5), std::invalid_argument);
}
