#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace grpiso {

/// Exact unbounded integer used for group orders and map counts.
using Count = boost::multiprecision::cpp_int;

} // namespace grpiso
