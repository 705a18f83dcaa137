#include "specgames/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specgames {

double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

FloorLayout::FloorLayout(std::vector<RoomSpec> rooms, std::vector<BsSpec> stations)
    : rooms_(std::move(rooms)), stations_(std::move(stations)) {
  rebuild_edges();
}

FloorLayout FloorLayout::default_layout() {
  std::vector<RoomSpec> rooms = {
      {0.0, 0.0, 10.0, 10.0, 0},
      {10.0, 0.0, 20.0, 10.0, 1},
      {0.0, 10.0, 10.0, 20.0, 1},
      {10.0, 10.0, 20.0, 20.0, 0},
  };
  std::vector<BsSpec> stations = {
      {{5.0, 5.0}, 0},
      {{15.0, 5.0}, 1},
      {{5.0, 15.0}, 1},
      {{15.0, 15.0}, 0},
  };
  return FloorLayout(std::move(rooms), std::move(stations));
}

void FloorLayout::rebuild_edges() {
  edges_.clear();
  for (const RoomSpec& r : rooms_) {
    edges_.push_back({true, r.x0, r.y0, r.y1});
    edges_.push_back({true, r.x1, r.y0, r.y1});
    edges_.push_back({false, r.y0, r.x0, r.x1});
    edges_.push_back({false, r.y1, r.x0, r.x1});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

int FloorLayout::room_of(const Point& p) const {
  for (std::size_t i = 0; i < rooms_.size(); ++i) {
    if (rooms_[i].contains(p)) return static_cast<int>(i);
  }
  return -1;
}

int FloorLayout::wall_count(const Point& a, const Point& b) const {
  int crossings = 0;
  for (const Edge& e : edges_) {
    const double pa = e.vertical ? a.x : a.y;
    const double pb = e.vertical ? b.x : b.y;
    const double da = pa - e.c;
    const double db = pb - e.c;
    if (da == 0.0 || db == 0.0) continue;  // touching a wall is not a crossing
    if ((da < 0.0) == (db < 0.0)) continue;
    const double t = da / (da - db);
    const double q = e.vertical ? a.y + t * (b.y - a.y) : a.x + t * (b.x - a.x);
    if (q >= e.lo && q < e.hi) ++crossings;
  }
  return crossings;
}

std::vector<int> FloorLayout::rooms_owned_by(int op) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < rooms_.size(); ++i) {
    if (rooms_[i].owner == op) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> FloorLayout::stations_owned_by(int op) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < stations_.size(); ++i) {
    if (stations_[i].owner == op) out.push_back(static_cast<int>(i));
  }
  return out;
}

Point FloorLayout::sample_position(int op, std::mt19937_64& rng) const {
  const std::vector<int> owned = rooms_owned_by(op);
  if (owned.empty()) throw std::logic_error("operator owns no rooms");
  double total = 0.0;
  for (int i : owned) total += rooms_[i].area();
  std::uniform_real_distribution<double> pick(0.0, total);
  double u = pick(rng);
  int chosen = owned.back();
  for (int i : owned) {
    if (u < rooms_[i].area()) {
      chosen = i;
      break;
    }
    u -= rooms_[i].area();
  }
  const RoomSpec& r = rooms_[chosen];
  std::uniform_real_distribution<double> ux(r.x0, r.x1);
  std::uniform_real_distribution<double> uy(r.y0, r.y1);
  const double x = ux(rng);
  const double y = uy(rng);
  return {x, y};
}

void FloorLayout::validate() const {
  if (rooms_.empty()) throw std::invalid_argument("floor_layout: no rooms");
  if (stations_.empty()) throw std::invalid_argument("floor_layout: no base stations");
  for (const RoomSpec& r : rooms_) {
    if (!(r.x1 > r.x0) || !(r.y1 > r.y0))
      throw std::invalid_argument("floor_layout: degenerate room rectangle");
    if (r.owner != 0 && r.owner != 1)
      throw std::invalid_argument("floor_layout: room owner must be operator 0 or 1");
  }
  for (const BsSpec& s : stations_) {
    if (s.owner != 0 && s.owner != 1)
      throw std::invalid_argument("floor_layout: bs owner must be operator 0 or 1");
    int inside = 0;
    for (const RoomSpec& r : rooms_) {
      if (r.contains(s.pos)) ++inside;
    }
    if (inside != 1)
      throw std::invalid_argument("floor_layout: every BS must lie inside exactly one room");
  }
  for (int op : {0, 1}) {
    if (rooms_owned_by(op).empty())
      throw std::invalid_argument("floor_layout: each operator needs at least one room");
    if (stations_owned_by(op).empty())
      throw std::invalid_argument("floor_layout: each operator needs at least one BS");
  }
}

}  // namespace specgames
