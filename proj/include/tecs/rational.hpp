#pragma once

#include <cstdint>

#include <boost/rational.hpp>

namespace tecs {

/// Exact rational used on oracle paths and for documented fractional points.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& q) { return boost::rational_cast<double>(q); }

}  // namespace tecs
