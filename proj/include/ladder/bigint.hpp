#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ladder {

// All counting and coefficient arithmetic is exact; nothing in this library
// ever rounds.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace ladder
