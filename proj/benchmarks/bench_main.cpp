#include <benchmark/benchmark.h>

#include "vertexlab/asm.hpp"
#include "vertexlab/matrix.hpp"
#include "vertexlab/partition.hpp"
#include "vertexlab/rational.hpp"
#include "vertexlab/sov.hpp"
#include "vertexlab/transfer.hpp"

using namespace vertexlab;
using exact::ExactScalar;
using exact::Rational;

namespace {

void BM_DetRational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  exact::RationalSampler s(1, 1000);
  exact::RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = s.draw();
  for (auto _ : state) benchmark::DoNotOptimize(exact::det(m));
}
BENCHMARK(BM_DetRational)->Arg(4)->Arg(8)->Arg(16);

void BM_Transfer1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = vertex::ModelParams::from_q(Rational(3, 2));
  transfer::Inhom in;
  for (int k = 0; k < n; ++k) in.w.emplace_back(Rational(k + 2, 3));
  for (auto _ : state)
    benchmark::DoNotOptimize(transfer::transfer(1, ExactScalar(Rational(7, 5)), transfer::Twist::AntiDiagonal, p, in));
}
BENCHMARK(BM_Transfer1)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_FusionCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = vertex::ModelParams::from_q(Rational(3, 2));
  transfer::Inhom in;
  for (int k = 0; k < n; ++k) in.w.emplace_back(Rational(k + 2, 3));
  for (auto _ : state)
    benchmark::DoNotOptimize(transfer::check_fusion(ExactScalar(Rational(7, 5)), transfer::Twist::Diagonal, p, in));
}
BENCHMARK(BM_FusionCheck)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_PsiAdSov(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = vertex::ModelParams::from_q(Rational(2));
  transfer::Inhom in;
  for (int k = 0; k < n; ++k) in.w.emplace_back(Rational(2 * k + 3, k + 2));
  for (auto _ : state) benchmark::DoNotOptimize(sov::psi_ad(p, in, sov::Method::Sov));
}
BENCHMARK(BM_PsiAdSov)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_PhiHomogeneous(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = vertex::ModelParams::from_q(Rational(2));
  for (auto _ : state) benchmark::DoNotOptimize(sov::phi(transfer::Twist::AntiDiagonal, n, p));
}
BENCHMARK(BM_PhiHomogeneous)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ZikBruteForce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = vertex::ModelParams::from_q(Rational(2));
  partition::DomainSpec d{partition::Domain::DWBC, {}, {}};
  for (int k = 0; k < n; ++k) {
    d.rows.emplace_back(Rational(k + 3, 2));
    d.cols.emplace_back(Rational(2 * k + 5, 3));
  }
  for (auto _ : state) benchmark::DoNotOptimize(partition::z_bruteforce(d, p));
}
BENCHMARK(BM_ZikBruteForce)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const auto c = static_cast<asms::AsmClass>(state.range(0));
  const int size = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(asms::enumerate(c, size));
}
BENCHMARK(BM_Enumerate)
    ->Args({static_cast<long>(asms::AsmClass::Plain), 6})
    ->Args({static_cast<long>(asms::AsmClass::HT), 8})
    ->Args({static_cast<long>(asms::AsmClass::UU), 4})
    ->Unit(benchmark::kMillisecond);

void BM_ClosedForm(benchmark::State& state) {
  const auto f = static_cast<asms::ClosedForm>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(asms::closed_form(f, 4));
}
BENCHMARK(BM_ClosedForm)
    ->Arg(static_cast<long>(asms::ClosedForm::ZADhom))
    ->Arg(static_cast<long>(asms::ClosedForm::AQT1))
    ->Arg(static_cast<long>(asms::ClosedForm::AUU2))
    ->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
