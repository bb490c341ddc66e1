#include "mucb/extended_real.hpp"

#include <cmath>

#include "mucb/errors.hpp"

namespace mucb {

ExtendedReal::ExtendedReal(double value) : value_(value) {
  if (std::isnan(value)) throw InvalidArgument("ExtendedReal: NaN is not an extended real");
  if (value == -std::numeric_limits<double>::infinity())
    throw InvalidArgument("ExtendedReal: -infinity is not representable");
}

double ExtendedReal::finite_value() const {
  if (is_infinite()) throw InvalidArgument("ExtendedReal: value is +infinity");
  return value_;
}

std::ostream& operator<<(std::ostream& os, ExtendedReal x) {
  if (x.is_infinite()) return os << "+inf";
  return os << x.value();
}

}  // namespace mucb
