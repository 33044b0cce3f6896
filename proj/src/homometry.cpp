#include "latcov/homometry.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace latcov {

namespace {

void require_planar(const LatticeSet& s, const char* op) {
  if (s.empty()) throw Error(std::string(op) + ": empty set");
  if (s.dim() != 2) throw Error(std::string(op) + ": dimension must be 2");
}

/// Sublattice coordinates of every point of S, or nullopt if one is outside.
std::optional<LatticeSet> to_sublattice(const LatticeSet& s, const SublatticeBasis& basis) {
  std::vector<LatticeVector> coords;
  coords.reserve(s.size());
  for (const auto& p : s) {
    auto c = basis.coordinates(p);
    if (!c) return std::nullopt;
    coords.push_back(*c);
  }
  return LatticeSet(std::move(coords));
}

bool admissible_direction(const LatticeVector& d, bool diagonal) {
  // In sublattice coordinates w1 -> (1,0), w2 -> (0,1), w1 + w2 -> (1,1).
  const Coord x = d.x(), y = d.y();
  if ((x == 0 && (y == 1 || y == -1)) || (y == 0 && (x == 1 || x == -1))) return true;
  return diagonal && x == y && (x == 1 || x == -1);
}

}  // namespace

WidthOneParams::WidthOneParams(std::int64_t k, std::int64_t ell) : k_(k), ell_(ell) {
  if (!(k > ell && ell >= 0)) throw Error("width-one parameters need k > l >= 0");
}

SublatticeBasis::SublatticeBasis(const WidthOneParams& p)
    : w1{-p.k() - 1, 1}, w2{p.ell() + 1, 1} {
  if (index() != p.k() + p.ell() + 2) throw Error("sublattice basis has the wrong index");
}

std::int64_t SublatticeBasis::index() const {
  Wide d = det(w1, w2);
  return static_cast<std::int64_t>(d < 0 ? -d : d);
}

std::optional<LatticeVector> SublatticeBasis::coordinates(const LatticeVector& p) const {
  const Wide d = det(w1, w2);
  const Wide ni = det(p, w2), nj = det(w1, p);
  if (ni % d != 0 || nj % d != 0) return std::nullopt;
  return LatticeVector{static_cast<Coord>(ni / d), static_cast<Coord>(nj / d)};
}

void HexagonParams::validate() const {
  if (a1 > a2 || b1 > b2 || g1 > g2) throw Error("hexagon bounds must satisfy lo <= hi");
  // i - j takes every integer value in [a1 - b2, a2 - b1].
  if (std::max(g1, a1 - b2) > std::min(g2, a2 - b1)) throw Error("hexagon region is empty");
}

std::string to_string(const HexagonParams& h) {
  std::ostringstream os;
  os << h.a1 << ',' << h.a2 << ',' << h.b1 << ',' << h.b2 << ',' << h.g1 << ',' << h.g2;
  return os.str();
}

LatticeSet width_one_T(const WidthOneParams& p) {
  std::vector<LatticeVector> pts;
  for (Coord x = 0; x <= p.k(); ++x) pts.push_back({x, 0});
  for (Coord x = 0; x <= p.ell(); ++x) pts.push_back({x, 1});
  return LatticeSet(std::move(pts));
}

bool sum_is_direct(const LatticeSet& s, const LatticeSet& t) {
  if (s.empty() || t.empty()) throw Error("sum_is_direct: empty set");
  if (s.dim() != t.dim()) throw Error("sum_is_direct: dimension mismatch");
  return minkowski_sum(s, t).size() == s.size() * t.size();
}

LatticeSet direct_sum(const LatticeSet& s, const LatticeSet& t) {
  if (!sum_is_direct(s, t)) throw Error("sum not direct");
  return minkowski_sum(s, t);
}

MirrorPairReport mirror_pair(const LatticeSet& s, const LatticeSet& t) {
  MirrorPairReport r;
  r.s = s;
  r.t = t;
  r.k = direct_sum(s, t);
  r.l = direct_sum(s, t.negated());
  r.homometric = covariogram_equal(compute_covariogram(r.k), compute_covariogram(r.l));
  r.nontrivial = r.homometric && !is_centrally_symmetric(s) && !is_centrally_symmetric(t);
  const bool distinct = canonical_form(r.k) != canonical_form(r.l);
  if (r.homometric && distinct != r.nontrivial) {
    throw Error("mirror pair: symmetry prediction disagrees with canonical forms");
  }
  return r;
}

PlaneDecomposition decompose_plane(const LatticeVector& p, const WidthOneParams& params) {
  if (p.dim() != 2) throw Error("decompose_plane: point must be planar");
  const SublatticeBasis basis(params);
  std::optional<PlaneDecomposition> found;
  for (const auto& t : width_one_T(params)) {
    const LatticeVector lambda = p - t;
    if (!basis.coordinates(lambda)) continue;
    if (found) throw Error("decompose_plane: decomposition is not unique");
    found = PlaneDecomposition{lambda, t};
  }
  if (!found) throw Error("decompose_plane: no decomposition");
  return *found;
}

bool condition_i(const LatticeSet& s, const WidthOneParams& params) {
  require_planar(s, "condition_i");
  const LatticeSet t = width_one_T(params);
  return sum_is_direct(s, t) && is_lattice_convex(minkowski_sum(s, t));
}

bool condition_ii(const LatticeSet& s, const WidthOneParams& params) {
  require_planar(s, "condition_ii");
  const SublatticeBasis basis(params);
  // Put the lexicographically smallest point at o.
  const auto coords = to_sublattice(s.translated(-s[0]), basis);
  if (!coords) return false;
  if (!is_lattice_convex(*coords)) return false;
  const Hull2 hull = convex_hull(*coords);
  for (const auto& e : hull.edges) {
    if (!admissible_direction(e.direction, params.diagonal_case())) return false;
  }
  return true;
}

bool gs_graph_connected(const LatticeSet& s, const WidthOneParams& params) {
  require_planar(s, "gs_graph_connected");
  const SublatticeBasis basis(params);
  if (!to_sublattice(s, basis)) throw Error("gs_graph_connected: set is not in the sublattice");

  std::vector<LatticeVector> steps{basis.w1, -basis.w1, basis.w2, -basis.w2};
  if (params.diagonal_case()) {
    steps.push_back(basis.w1 + basis.w2);
    steps.push_back(-(basis.w1 + basis.w2));
  }
  std::vector<bool> seen(s.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  auto index_of = [&](const LatticeVector& p) {
    auto it = std::lower_bound(s.begin(), s.end(), p);
    return static_cast<std::size_t>(it - s.begin());
  };
  while (!queue.empty()) {
    const LatticeVector p = s[queue.front()];
    queue.pop_front();
    for (const auto& st : steps) {
      const LatticeVector q = p + st;
      if (!s.contains(q)) continue;
      const std::size_t j = index_of(q);
      if (seen[j]) continue;
      seen[j] = true;
      ++reached;
      queue.push_back(j);
    }
  }
  return reached == s.size();
}

MirrorPairReport product_pair(const LatticeSet& k, const LatticeSet& l) {
  if (k.empty() || l.empty()) throw Error("product_pair: empty set");
  MirrorPairReport r;
  r.s = k;
  r.t = l;
  r.k = cartesian_product(k, l);
  r.l = cartesian_product(k, l.negated());
  r.homometric = covariogram_equal(compute_covariogram(r.k), compute_covariogram(r.l));
  r.nontrivial = r.homometric && !is_centrally_symmetric(k) && !is_centrally_symmetric(l);
  const bool distinct = canonical_form(r.k) != canonical_form(r.l);
  if (r.homometric && distinct != r.nontrivial) {
    throw Error("product pair: symmetry prediction disagrees with canonical forms");
  }
  return r;
}

LatticeSet hexagon_set(const WidthOneParams& params, const HexagonParams& hex) {
  hex.validate();
  const SublatticeBasis basis(params);
  std::vector<LatticeVector> pts;
  for (std::int64_t i = hex.a1; i <= hex.a2; ++i) {
    for (std::int64_t j = hex.b1; j <= hex.b2; ++j) {
      if (hex.contains(i, j)) pts.push_back(basis.at(i, j));
    }
  }
  return LatticeSet(std::move(pts));
}

MirrorPairReport corollary_pair(const WidthOneParams& params, const HexagonParams& hex) {
  if (!params.diagonal_case()) throw Error("corollary pair requires k = l + 1");
  const LatticeSet s = hexagon_set(params, hex);
  if (!condition_ii(s, params)) throw Error("generator verification failed: S violates condition (ii)");
  MirrorPairReport r = mirror_pair(s, width_one_T(params));
  if (!r.homometric) throw Error("generator verification failed: pair is not homometric");
  for (const LatticeSet* m : {&r.k, &r.l}) {
    if (!spans_plane(*m) || !is_lattice_convex(*m)) {
      throw Error("generator verification failed: member is not a spanning lattice-convex set");
    }
  }
  return r;
}

}  // namespace latcov
