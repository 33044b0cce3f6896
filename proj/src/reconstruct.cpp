#include "latcov/reconstruct.hpp"

#include <algorithm>

#include "latcov/enumerate.hpp"

namespace latcov {

namespace {

void require_planar(const Covariogram& g, const char* op) {
  if (g.dim() != 2) throw Error(std::string(op) + ": dimension must be 2");
}

/// Primitive direction of the line orthogonal to u, lexicographically positive.
LatticeVector line_step(const LatticeVector& u) {
  LatticeVector d{-u.y(), u.x()};
  if (d.x() < 0 || (d.x() == 0 && d.y() < 0)) d = -d;
  return d;
}

}  // namespace

LatticeSet EdgePairSketch::combined() const {
  std::vector<LatticeVector> pts(long_row.begin(), long_row.end());
  pts.insert(pts.end(), short_row.begin(), short_row.end());
  return LatticeSet::collect(std::move(pts));
}

LatticeSet diffset_from_covariogram(const Covariogram& g) {
  require_planar(g, "diffset_from_covariogram");
  if (g.at_origin() == 0) throw Error("invalid covariogram");
  return support_of(g);
}

EdgePairSketch edge_pair_from_covariogram(const Covariogram& g, const LatticeVector& u) {
  require_planar(g, "edge_pair_from_covariogram");
  if (u.dim() != 2) throw Error("edge_pair_from_covariogram: direction must be planar");
  if (u.is_zero()) throw Error("zero direction");
  if (!is_primitive(u)) throw Error("non-primitive direction " + to_string(u));

  const LatticeSet diff = support_of(g);
  const LatticeSet edge = support_set(diff, u);

  EdgePairSketch out;
  out.normal = u;
  if (edge.size() == 1) {
    out.long_row = edge;
    out.short_row = LatticeSet{LatticeVector(2)};
    return out;
  }

  // tau(k) = anchor + k*step runs over the supporting line; g vanishes on it
  // outside the edge, so k1 = 0 and k4 = |edge| - 1.
  const LatticeVector step = line_step(u);
  const LatticeVector anchor = edge[0];
  const auto n = static_cast<std::int64_t>(edge.size());
  auto tau = [&](std::int64_t k) { return anchor + k * step; };

  std::vector<std::int64_t> values(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    values[static_cast<std::size_t>(k)] = g.at(tau(k));
    if (values[static_cast<std::size_t>(k)] == 0) {
      throw Error("not realizable: covariogram support on the line is not an interval");
    }
  }
  const std::int64_t peak = *std::max_element(values.begin(), values.end());
  std::int64_t k2 = -1, k3 = -1;
  for (std::int64_t k = 0; k < n; ++k) {
    if (values[static_cast<std::size_t>(k)] != peak) continue;
    if (k2 < 0) k2 = k;
    if (k3 >= 0 && k != k3 + 1) {
      throw Error("not realizable: maxima on the line do not form an interval");
    }
    k3 = k;
  }

  std::vector<LatticeVector> short_row, long_row;
  for (std::int64_t k = 0; k <= k2; ++k) short_row.push_back(tau(k) - tau(k2));
  for (std::int64_t k = 0; k <= k3; ++k) long_row.push_back(tau(k));
  out.short_row = LatticeSet(std::move(short_row));
  out.long_row = LatticeSet(std::move(long_row));
  return out;
}

InvariantRecord invariants_from_covariogram(const Covariogram& g) {
  const LatticeSet diff = diffset_from_covariogram(g);
  const Hull2 hull = convex_hull(diff);
  if (!hull.is_polygon()) throw Error("invariants_from_covariogram: support does not span the plane");

  InvariantRecord r;
  for (const auto& e : hull.edges) r.normals.push_back({e.direction.y(), -e.direction.x()});
  std::sort(r.normals.begin(), r.normals.end());

  for (const auto& u : r.normals) {
    const EdgePairSketch s = edge_pair_from_covariogram(g, u);
    const auto a = static_cast<std::int64_t>(s.long_row.size());
    const auto b = static_cast<std::int64_t>(s.short_row.size());
    if (a == 1 && b == 1) continue;
    r.m_prime = min(r.m_prime, ExtCount(b >= 2 ? b : a));
    if (a > b && b > 1) r.m_doubleprime = min(r.m_doubleprime, ExtCount(a - b + 1));
  }
  r.m = min(r.m_prime, r.m_doubleprime);
  r.det_set = nonzero_dets(r.normals);
  r.delta = discrepancy(r.normals);
  r.certified = uniqueness_certified(r.m, r.delta);
  return r;
}

std::pair<int, int> default_box(const Covariogram& g) {
  require_planar(g, "default_box");
  const LatticeSet diff = support_of(g);
  const LatticeVector hi = diff.max_corner();
  return {static_cast<int>(hi.x() + 1), static_cast<int>(hi.y() + 1)};
}

std::vector<LatticeSet> reconstruct_all(const Covariogram& g, int box_width, int box_height,
                                        unsigned jobs) {
  require_planar(g, "reconstruct_all");
  std::vector<LatticeSet> classes;
  if (!g.mass_matches_origin()) return classes;

  const LatticeSet diff = support_of(g);
  const LatticeVector extent = diff.max_corner();  // supp g is symmetric
  const auto [need_w, need_h] = default_box(g);
  if (box_width < need_w || box_height < need_h) return classes;

  const auto size = static_cast<std::size_t>(g.at_origin());
  // Any realization has tight bounding box need_w x need_h, so the clipped
  // box yields the same candidates as the requested one.
  for (const LatticeSet& k : enumerate_lattice_convex(need_w, need_h, jobs)) {
    if (k.size() != size || k.max_corner() != extent) continue;
    if (difference_set(k) != diff) continue;
    if (compute_covariogram(k) != g) continue;
    classes.push_back(canonical_form(k));
  }
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

const char* to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::unique: return "unique";
    case Verdict::Kind::ambiguous: return "ambiguous";
    case Verdict::Kind::unrealizable: return "unrealizable";
  }
  return "?";
}

Verdict determination_verdict(const Covariogram& g, int box_width, int box_height,
                              unsigned jobs) {
  Verdict v;
  v.classes = reconstruct_all(g, box_width, box_height, jobs);
  if (v.classes.empty()) {
    v.kind = Verdict::Kind::unrealizable;
  } else if (v.classes.size() == 1) {
    v.kind = Verdict::Kind::unique;
  } else {
    v.kind = Verdict::Kind::ambiguous;
  }
  return v;
}

}  // namespace latcov
