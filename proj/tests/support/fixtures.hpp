#pragma once

#include "ladder/shape.hpp"

namespace fixtures {

// the worked shapes used across the suites
inline ladder::LadderShape two_block() {  // 17 join-irreducibles, two components
  return ladder::parse_shape("1-5,3-7,4-8,9-11,10-13");
}
inline ladder::LadderShape wide_gorenstein() {  // 1769 generators, Gorenstein
  return ladder::parse_shape("1-8,4-9,5-10,7-14,9-15");
}
inline ladder::LadderShape small_non_gorenstein() {  // |L| = 12, dim 7
  return ladder::parse_shape("1-5,4-6");
}
inline ladder::LadderShape generic_2x4() { return ladder::parse_shape("1-3,2-4"); }
inline ladder::LadderShape generic_2x3() { return ladder::parse_shape("1-2,2-3"); }
inline ladder::LadderShape generic_3x5() { return ladder::parse_shape("1-3,2-4,3-5"); }
inline ladder::LadderShape single_row() { return ladder::parse_shape("1-2"); }
inline ladder::LadderShape chain_shape() { return ladder::parse_shape("1-2,2-3"); }

}  // namespace fixtures
