#pragma once

#include <array>
#include <vector>

#include "specgames/geometry.hpp"

namespace specgames {

/// One Monte-Carlo realization: per-operator loads and user positions.
struct Deployment {
  std::array<std::vector<Point>, 2> users;

  int load(int op) const { return static_cast<int>(users[op].size()); }
};

}  // namespace specgames
