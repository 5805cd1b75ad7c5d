#ifndef GPI_RATIONAL_HPP
#define GPI_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace gpi {

using Int = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" (decimal, optional sign). Throws std::invalid_argument.
Scalar parse_scalar(const std::string& s);

/// Renders as "p" or "p/q" with positive denominator.
std::string scalar_str(const Scalar& x);

}  // namespace gpi

#endif
