#pragma once

#include <array>
#include <cstddef>
#include <random>
#include <vector>

namespace specgames {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(const Point& a, const Point& b);

/// Axis-aligned rectangular room owned by exactly one operator.
struct RoomSpec {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
  int owner = 0;  // operator index, 0 or 1

  double area() const { return (x1 - x0) * (y1 - y0); }
  bool contains(const Point& p) const {
    return p.x >= x0 && p.x < x1 && p.y >= y0 && p.y < y1;
  }
};

struct BsSpec {
  Point pos;
  int owner = 0;
};

/// Single-floor layout: rooms, base stations and the operator ownership map.
/// Walls are the distinct room-boundary segments; a link crossing a wall
/// picks up the configured per-wall attenuation.
class FloorLayout {
 public:
  FloorLayout() = default;
  FloorLayout(std::vector<RoomSpec> rooms, std::vector<BsSpec> stations);

  /// 2x2 grid of 10 m x 10 m rooms, one BS at each room centre, operators
  /// owning diagonal room pairs.
  static FloorLayout default_layout();

  const std::vector<RoomSpec>& rooms() const { return rooms_; }
  const std::vector<BsSpec>& stations() const { return stations_; }

  /// Index of the room containing p, or -1.
  int room_of(const Point& p) const;

  /// Number of distinct room-boundary segments crossed by the straight
  /// line a -> b. Same room gives 0.
  int wall_count(const Point& a, const Point& b) const;

  std::vector<int> rooms_owned_by(int op) const;
  std::vector<int> stations_owned_by(int op) const;

  /// Uniform position over the union of the operator's rooms (area-weighted).
  Point sample_position(int op, std::mt19937_64& rng) const;

  /// Throws std::invalid_argument when a structural invariant is violated:
  /// every BS inside exactly one room, both operators own at least one room
  /// and one BS.
  void validate() const;

 private:
  struct Edge {
    // Axis-aligned segment. vertical: x==c fixed, span [lo, hi) in y.
    bool vertical = false;
    double c = 0.0, lo = 0.0, hi = 0.0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  void rebuild_edges();

  std::vector<RoomSpec> rooms_;
  std::vector<BsSpec> stations_;
  std::vector<Edge> edges_;
};

}  // namespace specgames
