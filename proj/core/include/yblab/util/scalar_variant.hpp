#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "yblab/util/cyclotomic.hpp"
#include "yblab/util/ratfunc.hpp"
#include "yblab/util/rational.hpp"

namespace yblab {

// Dynamically typed scalar for CLI-level plumbing; the compute kernels are
// statically typed on one of the three domains.
using AnyScalar = std::variant<Rational, RatFuncQ, Cyclotomic>;

enum class FieldOp { add, sub, mul };

struct DomainMismatch : std::domain_error {
  DomainMismatch() : std::domain_error("scalar domains differ") {}
};

inline AnyScalar field_arith(const AnyScalar& a, const AnyScalar& b, FieldOp op) {
  if (a.index() != b.index()) throw DomainMismatch();
  auto apply = [op](const auto& x, const auto& y) {
    switch (op) {
      case FieldOp::add: return x + y;
      case FieldOp::sub: return x - y;
      case FieldOp::mul: return x * y;
    }
    throw std::logic_error("unreachable");
  };
  return std::visit(
      [&](const auto& x) -> AnyScalar {
        using T = std::decay_t<decltype(x)>;
        return AnyScalar(apply(x, std::get<T>(b)));
      },
      a);
}

inline AnyScalar invert(const AnyScalar& a) {
  return std::visit([](const auto& x) -> AnyScalar { return AnyScalar(x.inverse()); }, a);
}

inline std::string to_string(const AnyScalar& a) {
  return std::visit([](const auto& x) { return x.str(); }, a);
}

}  // namespace yblab
