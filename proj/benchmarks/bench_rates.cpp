#include <benchmark/benchmark.h>

#include "bicm/constellation.hpp"
#include "bicm/lvalue.hpp"
#include "bicm/oracle.hpp"
#include "bicm/rates.hpp"
#include "bicm/transforms.hpp"

using namespace bicm;

namespace {

void ExactLValue(benchmark::State& state) {
  auto c = make_equally_spaced_pam(int(state.range(0)));
  std::vector<std::uint8_t> bits(std::size_t(c.size()), 0);
  for (int k = c.size() / 2; k < c.size(); ++k) bits[std::size_t(k)] = 1;
  Pattern p(bits);
  const auto s0 = subconstellation(c, p, 0);
  const auto s1 = subconstellation(c, p, 1);
  double y = -1.7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_lvalue(s0, s1, 1.0, y));
    y += 1e-6;
  }
}
BENCHMARK(ExactLValue)->Arg(2)->Arg(3)->Arg(6);

void MaxLogDensityEval(benchmark::State& state) {
  auto c = make_equally_spaced_pam(int(state.range(0)));
  ConditionalLValueDensity d(c, brgc(int(state.range(0))).row(1), Snr(1.0));
  double l = -2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d.log_eval(l, 0));
    l += 1e-6;
  }
}
BENCHMARK(MaxLogDensityEval)->Arg(2)->Arg(3);

void BitMiMaxlog(benchmark::State& state) {
  auto c = make_equally_spaced_pam(int(state.range(0)));
  Pattern p = brgc(int(state.range(0))).row(1);
  Snr snr = Snr::from_db(0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bit_mi_maxlog(c, p, snr).value);
  }
}
BENCHMARK(BitMiMaxlog)->Arg(2)->Arg(3);

void BicmGmiMaxlog(benchmark::State& state) {
  auto c = make_equally_spaced_pam(int(state.range(0)));
  auto lab = brgc(int(state.range(0)));
  Snr snr = Snr::from_db(6.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bicm_gmi(c, lab, snr, LValueKind::maxlog).value);
  }
}
BENCHMARK(BicmGmiMaxlog)->Arg(2)->Arg(3);

void SymmetrizedChannelGmi(benchmark::State& state) {
  auto c = make_equally_spaced_pam(2);
  auto ch = symmetrize(make_maxlog_channel(c, Pattern({0, 1, 1, 0}), Snr(1.0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gmi_of_channel(ch).value);
  }
}
BENCHMARK(SymmetrizedChannelGmi);

void McMiMaxlog(benchmark::State& state) {
  auto c = make_equally_spaced_pam(2);
  Pattern p({0, 1, 1, 0});
  Snr snr = Snr::from_db(0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mc_rate(c, p, snr, RateKind::mi_maxlog, 100'000, 1).mean);
  }
  state.SetItemsProcessed(state.iterations() * 100'000);
}
BENCHMARK(McMiMaxlog);

}  // namespace

BENCHMARK_MAIN();
