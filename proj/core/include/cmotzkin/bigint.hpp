#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cmotzkin {

// All counting is exact; no floating point anywhere near a count.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

}  // namespace cmotzkin
