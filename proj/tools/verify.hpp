#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag::cli {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerifyOptions {
  unsigned series_order = 10;   // univariate series
  unsigned magnus_order = 6;    // PCSeries truncation
  std::size_t lie_degree = 4;
  std::size_t radius = 2;
};

/// The invariant suite for one graph, in a fixed order.
std::vector<CheckResult> verify_all(GraphPtr graph, const VerifyOptions& options);

}  // namespace raag::cli
