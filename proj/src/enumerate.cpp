#include "latcov/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace latcov {

namespace {

struct Dir {
  Coord x, y;
};

int half_plane(Dir d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

Coord cross(Dir a, Dir b) { return a.x * b.y - a.y * b.x; }

/// Strict angular order on [0, 2pi) measured from the positive x axis.
bool angle_less(Dir a, Dir b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

struct Point {
  Coord x, y;
};

class ChainSearch {
 public:
  ChainSearch(int width, int height, const std::function<void(const LatticeSet&)>& visit)
      : w_(width), h_(height), visit_(visit) {}

  /// Polygons whose lowest-leftmost vertex is p0 and whose second vertex is p1.
  void run_shard(Point p0, Point p1) {
    p0_ = p0;
    chain_.assign({p0, p1});
    Dir d{p1.x - p0.x, p1.y - p0.y};
    first_ = d;
    extend(d);
  }

  /// All admissible second vertices for a given p0, in scan order.
  std::vector<Point> second_vertices(Point p0) const {
    std::vector<Point> out;
    for (Coord y = 0; y < h_; ++y) {
      for (Coord x = 0; x < w_; ++x) {
        Point v{x, y};
        if (!above(v, p0)) continue;
        Dir d{v.x - p0.x, v.y - p0.y};
        Dir back{p0.x - v.x, p0.y - v.y};
        if (angle_less(d, back)) out.push_back(v);
      }
    }
    return out;
  }

 private:
  static bool above(Point v, Point p0) { return v.y > p0.y || (v.y == p0.y && v.x > p0.x); }

  void extend(Dir prev) {
    const Point c = chain_.back();
    for (Coord y = 0; y < h_; ++y) {
      for (Coord x = 0; x < w_; ++x) {
        Point v{x, y};
        if (!above(v, p0_)) continue;
        Dir d{v.x - c.x, v.y - c.y};
        if (!(cross(prev, d) > 0 && angle_less(prev, d))) continue;
        Dir back{p0_.x - v.x, p0_.y - v.y};
        // The rest of the boundary turns further left, so the chord back to
        // p0 must come strictly later in angle.
        if (!angle_less(d, back)) continue;
        chain_.push_back(v);
        if (cross(d, back) > 0 && cross(back, first_) > 0) emit();
        extend(d);
        chain_.pop_back();
      }
    }
  }

  void emit() {
    Coord minx = chain_[0].x;
    for (const auto& p : chain_) minx = std::min(minx, p.x);
    if (minx != 0) return;
    std::vector<LatticeVector> verts;
    verts.reserve(chain_.size());
    for (const auto& p : chain_) verts.push_back({p.x, p.y});
    visit_(lattice_points(hull_from_vertices(std::move(verts))));
  }

  Coord w_, h_;
  const std::function<void(const LatticeSet&)>& visit_;
  Point p0_{0, 0};
  Dir first_{1, 0};
  std::vector<Point> chain_;
};

struct Shard {
  Point p0, p1;
};

std::vector<Shard> make_shards(int width, int height) {
  std::vector<Shard> shards;
  if (width < 1 || height < 1) return shards;
  static const std::function<void(const LatticeSet&)> none = [](const LatticeSet&) {};
  ChainSearch probe(width, height, none);
  for (Coord x = 0; x < width; ++x) {
    Point p0{x, 0};
    for (Point p1 : probe.second_vertices(p0)) shards.push_back({p0, p1});
  }
  return shards;
}

}  // namespace

void for_each_lattice_convex(int width, int height,
                             const std::function<void(const LatticeSet&)>& visit) {
  ChainSearch search(width, height, visit);
  for (const Shard& s : make_shards(width, height)) search.run_shard(s.p0, s.p1);
}

std::vector<LatticeSet> enumerate_lattice_convex(int width, int height, unsigned jobs) {
  const auto shards = make_shards(width, height);
  std::vector<std::vector<LatticeSet>> results(shards.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < shards.size(); i = next++) {
      std::vector<LatticeSet>& out = results[i];
      const std::function<void(const LatticeSet&)> collect = [&out](const LatticeSet& k) {
        out.push_back(k);
      };
      ChainSearch search(width, height, collect);
      search.run_shard(shards[i].p0, shards[i].p1);
    }
  };

  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  std::vector<LatticeSet> all;
  for (auto& r : results) {
    for (auto& k : r) all.push_back(std::move(k));
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace latcov
