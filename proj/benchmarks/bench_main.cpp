#include <benchmark/benchmark.h>

#include "yblab/comb/trans.hpp"
#include "yblab/qmat/rewrite.hpp"
#include "yblab/quantum/family.hpp"
#include "yblab/uqsl2/uqsl2.hpp"

using namespace yblab;

static void BM_EnumerateArrays(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    BigInt c = count_transitive_arrays(n, k);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_EnumerateArrays)->Args({5, 3})->Args({6, 3})->Args({6, 4});

static void BM_EnumerateMatrices(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    BigInt c = count_transitive_matrices(n, 2);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_EnumerateMatrices)->Arg(4)->Arg(5);

static void BM_RatFuncMul(benchmark::State& state) {
  RatFuncQ a = RatFuncQ::q_pow(3) - RatFuncQ::q_pow(-2);
  RatFuncQ b = (RatFuncQ::q() - RatFuncQ(1)).inverse();
  for (auto _ : state) {
    RatFuncQ c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_RatFuncMul);

static void BM_CyclotomicMul(benchmark::State& state) {
  auto F = CycField::get(12);
  Cyclotomic a = Cyclotomic::zeta(F, 5) + Cyclotomic(F, Rational(2, 3));
  Cyclotomic b = Cyclotomic::zeta(F, 7) - Cyclotomic(F, Rational(1, 2));
  for (auto _ : state) {
    Cyclotomic c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CyclotomicMul);

static void BM_NormalForm(benchmark::State& state) {
  RewriteSystem rs(2, 1);
  NCWord w{{1, 2, 2}, {1, 2, 1}, {1, 1, 2}, {1, 1, 1}};
  for (auto _ : state) {
    NCPoly p = normal_form(NCPoly(w), rs);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_NormalForm);

static void BM_QybeColumn(benchmark::State& state) {
  auto fam = pair_family(standard_qR(2), "bench");
  TransMatrix a(3, kColorPlus);
  TensorOp<RatFuncQ> R = build_R_product(fam, a);
  LegShape big = LegShape::uniform(9, 2);
  std::vector<Placed<RatFuncQ>> lhs{{R, two_block_legs(1, 2, 3)},
                                    {R, two_block_legs(1, 3, 3)},
                                    {R, two_block_legs(2, 3, 3)}};
  std::uint64_t col = 0;
  for (auto _ : state) {
    SparseVec<RatFuncQ> v{{col % big.total(), RatFuncQ(1)}};
    v = apply_product(lhs, big, std::move(v));
    benchmark::DoNotOptimize(v);
    ++col;
  }
}
BENCHMARK(BM_QybeColumn);

BENCHMARK_MAIN();
