#include "latcov/covariogram.hpp"

#include <algorithm>
#include <unordered_map>

namespace latcov {

namespace {

bool offset_less(const CovEntry& a, const CovEntry& b) { return a.offset < b.offset; }

std::vector<CovEntry> entries_from_map(
    std::unordered_map<LatticeVector, std::int64_t, LatticeVectorHash>&& m) {
  std::vector<CovEntry> out;
  out.reserve(m.size());
  for (auto& [u, c] : m) out.push_back({u, c});
  std::sort(out.begin(), out.end(), offset_less);
  return out;
}

}  // namespace

Covariogram::Covariogram(Trusted, std::size_t dim, std::vector<CovEntry> sorted)
    : dim_(dim), entries_(std::move(sorted)) {}

Covariogram Covariogram::from_entries(std::size_t dim, std::vector<CovEntry> entries) {
  if (entries.empty()) throw Error("invalid covariogram: no entries");
  for (const auto& e : entries) {
    if (e.offset.dim() != dim) throw Error("invalid covariogram: dimension mismatch");
    if (e.count <= 0) throw Error("invalid covariogram: nonpositive count");
  }
  std::sort(entries.begin(), entries.end(), offset_less);
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i - 1].offset == entries[i].offset) {
      throw Error("invalid covariogram: repeated offset " + to_string(entries[i].offset));
    }
  }
  Covariogram g(Trusted{}, dim, std::move(entries));
  const std::int64_t origin = g.at(LatticeVector(dim));
  if (origin == 0) throw Error("invalid covariogram: missing origin entry");
  for (const auto& e : g.entries_) {
    if (g.at(-e.offset) != e.count) {
      throw Error("invalid covariogram: asymmetric at " + to_string(e.offset));
    }
    if (e.count > origin) throw Error("invalid covariogram: origin entry is not maximal");
  }
  return g;
}

std::int64_t Covariogram::at(const LatticeVector& u) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), CovEntry{u, 0}, offset_less);
  return (it != entries_.end() && it->offset == u) ? it->count : 0;
}

std::int64_t Covariogram::at_origin() const { return at(LatticeVector(dim_)); }

Wide Covariogram::mass() const {
  Wide m = 0;
  for (const auto& e : entries_) m += e.count;
  return m;
}

bool Covariogram::mass_matches_origin() const {
  const Wide o = at_origin();
  return mass() == o * o;
}

Covariogram compute_covariogram(const LatticeSet& k) {
  if (k.empty()) throw Error("compute_covariogram: empty set");
  const auto pts = k.points();

  if (k.dim() == 2) {
    // Dense accumulation over the offset box of the bounding box.
    const LatticeVector lo = k.min_corner(), hi = k.max_corner();
    const Wide w = Wide{hi.x()} - lo.x(), h = Wide{hi.y()} - lo.y();
    const Wide cells = (2 * w + 1) * (2 * h + 1);
    if (cells <= Wide{1} << 22) {
      const Coord cols = static_cast<Coord>(2 * w + 1);
      std::vector<std::int64_t> grid(static_cast<std::size_t>(cells), 0);
      for (const auto& p : pts) {
        for (const auto& q : pts) {
          Coord dx = p.x() - q.x() + static_cast<Coord>(w);
          Coord dy = p.y() - q.y() + static_cast<Coord>(h);
          ++grid[static_cast<std::size_t>(dy * cols + dx)];
        }
      }
      std::vector<CovEntry> out;
      // Row-major would sort by y first; walk columns to get (x, y) order.
      for (Coord dx = 0; dx < cols; ++dx) {
        for (Coord dy = 0; dy <= 2 * static_cast<Coord>(h); ++dy) {
          std::int64_t c = grid[static_cast<std::size_t>(dy * cols + dx)];
          if (c) out.push_back({{dx - static_cast<Coord>(w), dy - static_cast<Coord>(h)}, c});
        }
      }
      return Covariogram(Covariogram::Trusted{}, 2, std::move(out));
    }
  }

  std::unordered_map<LatticeVector, std::int64_t, LatticeVectorHash> m;
  m.reserve(pts.size() * pts.size());
  for (const auto& p : pts) {
    for (const auto& q : pts) ++m[p - q];
  }
  return Covariogram(Covariogram::Trusted{}, k.dim(), entries_from_map(std::move(m)));
}

bool covariogram_equal(const Covariogram& g1, const Covariogram& g2) {
  if (g1.dim() != g2.dim()) throw Error("covariogram_equal: dimension mismatch");
  return g1 == g2;
}

LatticeSet support_of(const Covariogram& g) {
  std::vector<LatticeVector> out;
  out.reserve(g.size());
  for (const auto& e : g.entries()) out.push_back(e.offset);
  return LatticeSet(std::move(out));
}

Covariogram convolve(const Covariogram& g1, const Covariogram& g2) {
  if (g1.dim() != g2.dim()) throw Error("convolve: dimension mismatch");
  std::unordered_map<LatticeVector, std::int64_t, LatticeVectorHash> m;
  for (const auto& a : g1.entries()) {
    for (const auto& b : g2.entries()) m[a.offset + b.offset] += a.count * b.count;
  }
  return Covariogram(Covariogram::Trusted{}, g1.dim(), entries_from_map(std::move(m)));
}

std::uint64_t fingerprint(const Covariogram& g) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(g.dim());
  for (const auto& e : g.entries()) {
    for (Coord c : e.offset.coords()) mix(static_cast<std::uint64_t>(c));
    mix(static_cast<std::uint64_t>(e.count));
  }
  return h;
}

}  // namespace latcov
