#pragma once

#include <vector>

#include "bulkcc/union_find.hpp"

namespace fixture {

// The sample tree of the bulk-find walkthrough: paths from 1 and 3 meet at 2,
// paths from 2 and 7 meet at 4, and everything drains into root 19.
inline std::vector<bulkcc::vertex> sample_tree_parents() {
  std::vector<bulkcc::vertex> p(20);
  for (bulkcc::vertex v = 0; v < 20; ++v) p[v] = v;
  p[1] = 2;
  p[3] = 2;
  p[2] = 4;
  p[7] = 8;
  p[8] = 9;
  p[9] = 4;
  p[4] = 5;
  p[5] = 19;
  p[6] = 19;
  return p;
}

inline bulkcc::union_find_forest sample_tree(bulkcc::find_mode mode = bulkcc::find_mode::plain) {
  return bulkcc::union_find_forest::from_parents(sample_tree_parents(), mode);
}

}  // namespace fixture
