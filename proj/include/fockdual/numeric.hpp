// Exact arbitrary-precision scalars used throughout the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fockdual {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const Int& v) { return v.str(); }

} // namespace fockdual
