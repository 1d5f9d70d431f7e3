#pragma once

// Exceptional angle lists (units of π) as published, typed in by hand.

#include <utility>
#include <vector>

#include "univgate/rational.h"

namespace univgate::testing {

inline std::vector<Rational> parse_list(std::initializer_list<std::pair<int, int>> items) {
  std::vector<Rational> out;
  for (auto [p, q] : items) out.emplace_back(p, q);
  return out;
}

inline const std::vector<Rational>& published_su2() {
  static const auto v = parse_list({{0, 1}, {1, 2}, {1, 1}, {3, 2}, {1, 3}, {2, 3}, {4, 3},
                                    {5, 3}, {1, 4}, {3, 4}, {5, 4}, {7, 4}, {1, 5}, {2, 5},
                                    {3, 5}, {4, 5}, {6, 5}, {7, 5}, {8, 5}, {9, 5}, {1, 6},
                                    {5, 6}, {7, 6}, {11, 6}});
  return v;
}

inline const std::vector<Rational> published_so3_extra = parse_list(
    {{2, 7}, {4, 7}, {6, 7}, {8, 7}, {10, 7}, {12, 7}, {2, 9}, {4, 9}, {8, 9}, {10, 9},
     {14, 9}, {16, 9}, {2, 11}, {4, 11}, {6, 11}, {8, 11}, {10, 11}, {12, 11}, {14, 11},
     {16, 11}, {18, 11}, {20, 11}});

}  // namespace univgate::testing
