#include "doctest.h"

#include "yblab/tensor/op.hpp"
#include "yblab/util/ratfunc.hpp"
#include "yblab/util/rng.hpp"

using namespace yblab;

namespace {

TensorOp<Rational> rnd_op(Rng& rng, const LegShape& sh, int nnz) {
  TensorOp<Rational> op(sh);
  for (int t = 0; t < nnz; ++t)
    op.add(rng.below(sh.total()), rng.below(sh.total()), rng.rational(5));
  return op;
}

TensorOp<Rational> single_leg(const LegShape& one, int r, int c) {
  TensorOp<Rational> op(one);
  op.set(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(c), Rational(1));
  return op;
}

}  // namespace

TEST_CASE("embed basics") {
  LegShape big = LegShape::uniform(3, 2);
  LegShape small = LegShape::uniform(1, 2);
  TensorOp<Rational> id1 = TensorOp<Rational>::identity(small, Rational(1));
  CHECK(embed(id1, {2}, big) == TensorOp<Rational>::identity(big, Rational(1)));

  Rng rng(7);
  TensorOp<Rational> a = rnd_op(rng, LegShape::uniform(2, 2), 6);
  TensorOp<Rational> b = rnd_op(rng, small, 3);
  // disjoint legs commute
  TensorOp<Rational> ab = embed(a, {1, 2}, big) * embed(b, {3}, big);
  TensorOp<Rational> ba = embed(b, {3}, big) * embed(a, {1, 2}, big);
  CHECK(ab == ba);
  // embed respects composition
  TensorOp<Rational> c = rnd_op(rng, LegShape::uniform(2, 2), 6);
  CHECK(embed(a * c, {3, 1}, big) == embed(a, {3, 1}, big) * embed(c, {3, 1}, big));
  CHECK_THROWS_AS(embed(a, {1, 1}, big), std::invalid_argument);
  CHECK_THROWS_AS(embed(a, {1, 4}, big), std::invalid_argument);
}

TEST_CASE("embed with permuted positions matches the Sweedler-leg example") {
  // X = x1 (x) x2 (x) x3 placed at (2,6,4) puts x1 on leg 2, x3 on leg 4, x2 on leg 6
  LegShape big = LegShape::uniform(6, 2);
  LegShape one = LegShape::uniform(1, 2);
  TensorOp<Rational> x1 = single_leg(one, 0, 1), x2 = single_leg(one, 1, 0), x3 = single_leg(one, 1, 1);
  TensorOp<Rational> X = kron(kron(x1, x2), x3);
  TensorOp<Rational> placed = embed(X, {2, 6, 4}, big);
  TensorOp<Rational> expect =
      embed(x1, {2}, big) * embed(x2, {6}, big) * embed(x3, {4}, big);
  CHECK(placed == expect);
}

TEST_CASE("compose associativity on random sparse operators") {
  Rng rng(99);
  LegShape sh = LegShape::uniform(2, 3);
  for (int t = 0; t < 5; ++t) {
    auto a = rnd_op(rng, sh, 10), b = rnd_op(rng, sh, 10), c = rnd_op(rng, sh, 10);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("inverse is exact and certified") {
  LegShape sh = LegShape::uniform(2, 2);
  CHECK(invert(TensorOp<Rational>::identity(sh, Rational(1))) == TensorOp<Rational>::identity(sh, Rational(1)));

  // invertible random-ish operator: identity plus strictly lower noise
  Rng rng(123);
  TensorOp<Rational> a = TensorOp<Rational>::identity(sh, Rational(1));
  for (std::uint64_t c = 0; c < sh.total(); ++c)
    for (std::uint64_t r = c + 1; r < sh.total(); ++r)
      if (rng.below(2)) a.add(r, c, rng.rational(4));
  TensorOp<Rational> ainv = invert(a);
  CHECK(a * ainv == TensorOp<Rational>::identity(sh, Rational(1)));
  CHECK(ainv * a == TensorOp<Rational>::identity(sh, Rational(1)));

  TensorOp<Rational> sing(sh);
  sing.set(0, 0, Rational(1));
  CHECK_THROWS_AS(invert(sing), std::domain_error);
}

TEST_CASE("perm_op composition convention and block swap") {
  LegShape sh = LegShape::uniform(3, 2);
  Permutation s({2, 3, 1}), r({2, 1, 3});
  // sigma rho-hat = rho-hat after sigma-hat
  std::vector<int> sr(3);
  for (int i = 1; i <= 3; ++i) sr[static_cast<std::size_t>(i - 1)] = s(r(i));
  CHECK(perm_op<Rational>(Permutation(sr), sh, Rational(1)) ==
        perm_op<Rational>(r, sh, Rational(1)) * perm_op<Rational>(s, sh, Rational(1)));

  LegShape sh4 = LegShape::uniform(4, 2);
  CHECK(block_swap(TensorOp<Rational>::identity(sh4, Rational(1))) == TensorOp<Rational>::identity(sh4, Rational(1)));

  Rng rng(5);
  auto x = rnd_op(rng, sh4, 12);
  CHECK(block_swap(block_swap(x)) == x);

  // block_swap(A kron B) = B kron A for 1-leg-pair factors
  auto a2 = rnd_op(rng, LegShape::uniform(2, 2), 5);
  auto b2 = rnd_op(rng, LegShape::uniform(2, 2), 5);
  CHECK(block_swap(kron(a2, b2)) == kron(b2, a2));

  CHECK_THROWS_AS(grassmann_swap(3), std::invalid_argument);
}

TEST_CASE("apply_product order: rightmost factor acts first") {
  LegShape sh = LegShape::uniform(1, 2);
  TensorOp<Rational> e01 = single_leg(sh, 0, 1);  // e_1 -> e_0
  TensorOp<Rational> e10 = single_leg(sh, 1, 0);  // e_0 -> e_1
  SparseVec<Rational> v{{0, Rational(1)}};
  // product e01 e10 maps e_0 -> e_0
  auto out = apply_product<Rational>({{e01, {1}}, {e10, {1}}}, sh, v);
  CHECK(out == SparseVec<Rational>{{0, Rational(1)}});
  // product e10 e01 kills e_0
  out = apply_product<Rational>({{e10, {1}}, {e01, {1}}}, sh, v);
  CHECK(out.empty());
}

TEST_CASE("rational function scalars in operators") {
  LegShape sh = LegShape::uniform(2, 2);
  TensorOp<RatFuncQ> d(sh);
  RatFuncQ q = RatFuncQ::q();
  for (std::uint64_t i = 0; i < 4; ++i) d.set(i, i, (i == 0 || i == 3) ? q : RatFuncQ(1));
  d.set(2, 1, q - q.inverse());
  TensorOp<RatFuncQ> dinv = invert(d);
  CHECK(d * dinv == TensorOp<RatFuncQ>::identity(sh, RatFuncQ(1)));
}
