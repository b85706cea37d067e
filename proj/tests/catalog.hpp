#pragma once

#include <vector>

#include "lehmer/quadring.hpp"

namespace testdata {

// All units 1 < u <= 6 of norm +1 and 1 < u <= 13 of norm -1.
inline std::vector<lehmer::QuadInt> norm_plus_units() {
  using lehmer::QuadInt;
  return {QuadInt::make(3, 4, 2), QuadInt::make(2, 6, 4), QuadInt::make(5, 3, 1), QuadInt::make(21, 5, 1)};
}

inline std::vector<lehmer::QuadInt> norm_minus_units() {
  using lehmer::QuadInt;
  return {QuadInt::make(2, 2, 2),   QuadInt::make(5, 1, 1),   QuadInt::make(5, 4, 2),
          QuadInt::make(5, 11, 5),  QuadInt::make(10, 6, 2),  QuadInt::make(13, 3, 1),
          QuadInt::make(17, 8, 2),  QuadInt::make(26, 10, 2), QuadInt::make(29, 5, 1),
          QuadInt::make(37, 12, 2), QuadInt::make(53, 7, 1),  QuadInt::make(85, 9, 1)};
}

inline std::vector<lehmer::QuadInt> all_units() {
  auto v = norm_plus_units();
  for (auto& u : norm_minus_units()) v.push_back(u);
  return v;
}

}  // namespace testdata
