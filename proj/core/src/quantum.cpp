#include "yblab/quantum/family.hpp"

namespace yblab {

TensorOp<RatFuncQ> standard_qR(int m) {
  if (m < 1) throw std::invalid_argument("standard_qR: m >= 1");
  LegShape sh = LegShape::uniform(2, m);
  TensorOp<RatFuncQ> R(sh);
  RatFuncQ q = RatFuncQ::q();
  RatFuncQ qm = q - q.inverse();
  for (int k = 1; k <= m; ++k)
    for (int kp = 1; kp <= m; ++kp) {
      std::uint64_t row = sh.pack({k - 1, kp - 1});
      // diagonal part q^{delta_{kk'}}
      R.add(row, row, k == kp ? q : RatFuncQ(1));
      // (q - q^{-1}) Y(k-k') at column (l,l') = (k',k)
      if (k > kp) R.add(row, sh.pack({kp - 1, k - 1}), qm);
    }
  return R;
}

}  // namespace yblab
