#include "gpi/rational.hpp"

#include <stdexcept>

namespace gpi {

Scalar parse_scalar(const std::string& s) {
  auto bad = [&] { throw std::invalid_argument("malformed rational: '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Scalar(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) bad();
    return Scalar(num, den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Scalar(0);  // unreachable
}

std::string scalar_str(const Scalar& x) {
  Int num = boost::multiprecision::numerator(x);
  Int den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace gpi
