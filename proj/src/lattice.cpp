#include "latcov/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace latcov {

namespace {

Coord narrow(Wide v, const char* what) {
  if (v > Wide{INT64_MAX} || v < Wide{INT64_MIN}) throw Error(std::string("overflow in ") + what);
  return static_cast<Coord>(v);
}

Wide cross(const LatticeVector& o, const LatticeVector& a, const LatticeVector& b) {
  return det(a - o, b - o);
}

void require_planar(const LatticeSet& k, const char* op) {
  if (k.empty()) throw Error(std::string(op) + ": empty set");
  if (k.dim() != 2) throw Error(std::string(op) + ": dimension must be 2");
}

}  // namespace

// ---------------------------------------------------------------- vector

LatticeVector::LatticeVector(std::size_t dim) {
  if (dim > kMaxDim) throw Error("dimension exceeds " + std::to_string(kMaxDim));
  dim_ = static_cast<std::uint8_t>(dim);
}

LatticeVector::LatticeVector(std::initializer_list<Coord> coords) : LatticeVector(coords.size()) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

LatticeVector LatticeVector::from_span(std::span<const Coord> coords) {
  LatticeVector v(coords.size());
  std::copy(coords.begin(), coords.end(), v.c_.begin());
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + dim_, [](Coord c) { return c == 0; });
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r.c_[i] = -c_[i];
  return r;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  for (std::size_t i = 0; i < dim_; ++i) c_[i] += o.c_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  for (std::size_t i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
  return *this;
}

LatticeVector operator*(Coord s, LatticeVector v) {
  for (std::size_t i = 0; i < v.dim_; ++i) v.c_[i] *= s;
  return v;
}

std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  for (std::size_t i = 0; i < a.dim_; ++i) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t LatticeVectorHash::operator()(const LatticeVector& v) const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ v.dim();
  for (Coord c : v.coords()) {
    h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

Wide dot(const LatticeVector& a, const LatticeVector& b) {
  Wide s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += Wide{a[i]} * b[i];
  return s;
}

Wide det(const LatticeVector& a, const LatticeVector& b) {
  return Wide{a[0]} * b[1] - Wide{a[1]} * b[0];
}

Coord gcd_of(const LatticeVector& v) {
  Coord g = 0;
  for (Coord c : v.coords()) g = std::gcd(g, c);
  return g;
}

bool is_primitive(const LatticeVector& v) { return gcd_of(v) == 1; }

LatticeVector primitive_part(const LatticeVector& v) {
  Coord g = gcd_of(v);
  if (g == 0) throw Error("zero direction");
  LatticeVector r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = v[i] / g;
  return r;
}

Wide floor_div(Wide n, Wide d) {
  Wide q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

Wide ceil_div(Wide n, Wide d) {
  Wide q = n / d;
  if ((n % d != 0) && ((n < 0) == (d < 0))) ++q;
  return q;
}

// ---------------------------------------------------------------- set

LatticeSet::LatticeSet(std::vector<LatticeVector> points) : pts_(std::move(points)) {
  if (!pts_.empty()) dim_ = pts_.front().dim();
  for (const auto& p : pts_) {
    if (p.dim() != dim_) throw Error("mixed dimensions in lattice set");
  }
  std::sort(pts_.begin(), pts_.end());
  if (std::adjacent_find(pts_.begin(), pts_.end()) != pts_.end()) {
    throw Error("duplicate point in lattice set");
  }
}

LatticeSet::LatticeSet(std::initializer_list<LatticeVector> points)
    : LatticeSet(std::vector<LatticeVector>(points)) {}

LatticeSet::LatticeSet(Sorted, std::vector<LatticeVector> points, std::size_t dim)
    : pts_(std::move(points)), dim_(dim) {}

LatticeSet LatticeSet::collect(std::vector<LatticeVector> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return LatticeSet(std::move(points));
}

bool LatticeSet::contains(const LatticeVector& p) const {
  return std::binary_search(pts_.begin(), pts_.end(), p);
}

LatticeVector LatticeSet::min_corner() const {
  if (pts_.empty()) throw Error("empty set");
  LatticeVector m = pts_.front();
  for (const auto& p : pts_) {
    for (std::size_t i = 0; i < dim_; ++i) m[i] = std::min(m[i], p[i]);
  }
  return m;
}

LatticeVector LatticeSet::max_corner() const {
  if (pts_.empty()) throw Error("empty set");
  LatticeVector m = pts_.front();
  for (const auto& p : pts_) {
    for (std::size_t i = 0; i < dim_; ++i) m[i] = std::max(m[i], p[i]);
  }
  return m;
}

LatticeSet LatticeSet::translated(const LatticeVector& t) const {
  std::vector<LatticeVector> out(pts_);
  for (auto& p : out) p += t;
  return LatticeSet(Sorted{}, std::move(out), dim_);
}

LatticeSet LatticeSet::negated() const {
  std::vector<LatticeVector> out;
  out.reserve(pts_.size());
  for (auto it = pts_.rbegin(); it != pts_.rend(); ++it) out.push_back(-*it);
  return LatticeSet(Sorted{}, std::move(out), dim_);
}

std::string to_string(const LatticeSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += to_string(s[i]);
  }
  return out + "}";
}

LatticeSet minkowski_sum(const LatticeSet& a, const LatticeSet& b) {
  if (a.dim() != b.dim()) throw Error("minkowski_sum: dimension mismatch");
  std::vector<LatticeVector> out;
  out.reserve(a.size() * b.size());
  for (const auto& p : a) {
    for (const auto& q : b) out.push_back(p + q);
  }
  return LatticeSet::collect(std::move(out));
}

LatticeSet cartesian_product(const LatticeSet& a, const LatticeSet& b) {
  if (a.dim() + b.dim() > kMaxDim) throw Error("cartesian_product: dimension exceeds limit");
  std::vector<LatticeVector> out;
  out.reserve(a.size() * b.size());
  for (const auto& p : a) {
    for (const auto& q : b) {
      LatticeVector r(a.dim() + b.dim());
      for (std::size_t i = 0; i < a.dim(); ++i) r[i] = p[i];
      for (std::size_t i = 0; i < b.dim(); ++i) r[a.dim() + i] = q[i];
      out.push_back(r);
    }
  }
  return LatticeSet(std::move(out));
}

LatticeSet difference_set(const LatticeSet& k) {
  if (k.empty()) throw Error("difference_set: empty set");
  std::vector<LatticeVector> out;
  out.reserve(k.size() * k.size());
  for (const auto& p : k) {
    for (const auto& q : k) out.push_back(p - q);
  }
  return LatticeSet::collect(std::move(out));
}

LatticeSet support_set(const LatticeSet& k, const LatticeVector& u) {
  if (k.empty()) throw Error("support_set: empty set");
  if (u.dim() != k.dim()) throw Error("support_set: dimension mismatch");
  if (u.is_zero()) throw Error("zero direction");
  Wide best = dot(k[0], u);
  for (const auto& p : k) best = std::max(best, dot(p, u));
  std::vector<LatticeVector> out;
  for (const auto& p : k) {
    if (dot(p, u) == best) out.push_back(p);
  }
  return LatticeSet(std::move(out));
}

LatticeSet translation_normal_form(const LatticeSet& k) {
  if (k.empty()) throw Error("empty set");
  return k.translated(-k.min_corner());
}

LatticeSet canonical_form(const LatticeSet& k) {
  LatticeSet a = translation_normal_form(k);
  LatticeSet b = translation_normal_form(k.negated());
  return std::min(a, b);
}

bool is_centrally_symmetric(const LatticeSet& k) {
  return translation_normal_form(k) == translation_normal_form(k.negated());
}

// ---------------------------------------------------------------- hulls

Wide Hull2::twice_area() const {
  Wide s = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    s += det(vertices[i], vertices[(i + 1) % vertices.size()]);
  }
  return s;
}

Hull2 hull_from_vertices(std::vector<LatticeVector> ccw) {
  Hull2 h;
  h.vertices = std::move(ccw);
  const std::size_t n = h.vertices.size();
  auto edge = [&](const LatticeVector& a, const LatticeVector& b) {
    LatticeVector d = b - a;
    Coord g = gcd_of(d);
    h.edges.push_back({a, primitive_part(d), g + 1});
  };
  if (n == 2) {
    edge(h.vertices[0], h.vertices[1]);
  } else if (n >= 3) {
    for (std::size_t i = 0; i < n; ++i) edge(h.vertices[i], h.vertices[(i + 1) % n]);
  }
  return h;
}

Hull2 convex_hull(const LatticeSet& k) {
  require_planar(k, "convex_hull");
  const auto pts = k.points();  // sorted by x, then y
  if (pts.size() == 1) return hull_from_vertices({pts[0]});

  std::vector<LatticeVector> hull(2 * pts.size());
  std::size_t n = 0;
  for (const auto& p : pts) {
    while (n >= 2 && cross(hull[n - 2], hull[n - 1], p) <= 0) --n;
    hull[n++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = n + 1; i-- > 0;) {
    while (n >= lower && cross(hull[n - 2], hull[n - 1], pts[i]) <= 0) --n;
    hull[n++] = pts[i];
  }
  hull.resize(n - 1);
  if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
  return hull_from_vertices(std::move(hull));
}

namespace {

/// Calls row(y, x_lo, x_hi) for every nonempty row of Z^2 inside a polygon.
template <class Fn>
void for_each_row(const Hull2& hull, Fn&& row) {
  Coord ylo = hull.vertices[0].y(), yhi = ylo;
  for (const auto& v : hull.vertices) {
    ylo = std::min(ylo, v.y());
    yhi = std::max(yhi, v.y());
  }
  const std::size_t n = hull.vertices.size();
  for (Coord y = ylo; y <= yhi; ++y) {
    Wide lo = INT64_MIN, hi = INT64_MAX;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const auto& p = hull.vertices[i];
      const auto& q = hull.vertices[(i + 1) % n];
      Wide dx = q.x() - p.x(), dy = q.y() - p.y();
      Wide rhs = dx * (y - p.y());
      // interior: dy * (x - px) <= dx * (y - py)
      if (dy > 0) {
        hi = std::min(hi, p.x() + floor_div(rhs, dy));
      } else if (dy < 0) {
        lo = std::max(lo, p.x() + ceil_div(rhs, dy));
      } else if (rhs < 0) {
        ok = false;
      }
    }
    if (ok && lo <= hi) row(y, narrow(lo, "row bounds"), narrow(hi, "row bounds"));
  }
}

std::int64_t count_lattice_points(const Hull2& hull) {
  if (hull.is_point()) return 1;
  if (hull.is_segment()) return hull.edges[0].lattice_points;
  std::int64_t count = 0;
  for_each_row(hull, [&](Coord, Coord lo, Coord hi) { count += hi - lo + 1; });
  return count;
}

}  // namespace

LatticeSet lattice_points(const Hull2& hull) {
  if (hull.vertices.empty()) throw Error("lattice_points: empty hull");
  std::vector<LatticeVector> out;
  if (hull.is_point()) {
    out.push_back(hull.vertices[0]);
  } else if (hull.is_segment()) {
    const auto& e = hull.edges[0];
    for (std::int64_t i = 0; i < e.lattice_points; ++i) out.push_back(e.start + i * e.direction);
  } else {
    for_each_row(hull, [&](Coord y, Coord lo, Coord hi) {
      for (Coord x = lo; x <= hi; ++x) out.push_back({x, y});
    });
  }
  return LatticeSet(std::move(out));
}

bool is_lattice_convex(const LatticeSet& k) {
  require_planar(k, "is_lattice_convex");
  // K is always contained in conv(K); equality of counts decides equality.
  return count_lattice_points(convex_hull(k)) == static_cast<std::int64_t>(k.size());
}

bool spans_plane(const LatticeSet& k) {
  if (k.dim() != 2 || k.size() < 3) return false;
  const auto& p0 = k[0];
  const auto& p1 = k[1];
  for (std::size_t i = 2; i < k.size(); ++i) {
    if (cross(p0, p1, k[i]) != 0) return true;
  }
  return false;
}

// ---------------------------------------------------------------- affine maps

LatticeVector IntMatrix2::operator*(const LatticeVector& v) const {
  return {narrow(Wide{a} * v.x() + Wide{b} * v.y(), "matrix product"),
          narrow(Wide{c} * v.x() + Wide{d} * v.y(), "matrix product")};
}

IntMatrix2 operator*(const IntMatrix2& l, const IntMatrix2& r) {
  return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c,
          l.c * r.b + l.d * r.d};
}

AffineMap2::AffineMap2(IntMatrix2 matrix, LatticeVector shift)
    : matrix_(matrix), shift_(shift) {
  Wide d = matrix_.det();
  if (d != 1 && d != -1) throw Error("affine map: matrix is not unimodular");
  if (shift_.dim() != 2) throw Error("affine map: shift must be planar");
}

LatticeVector AffineMap2::operator()(const LatticeVector& p) const { return matrix_ * p + shift_; }

LatticeSet AffineMap2::operator()(const LatticeSet& k) const {
  std::vector<LatticeVector> out;
  out.reserve(k.size());
  for (const auto& p : k) out.push_back((*this)(p));
  return LatticeSet(std::move(out));
}

AffineMap2 AffineMap2::inverse() const {
  const Coord d = static_cast<Coord>(matrix_.det());  // +-1
  IntMatrix2 inv{matrix_.d * d, -matrix_.b * d, -matrix_.c * d, matrix_.a * d};
  return AffineMap2(inv, -(inv * shift_));
}

AffineMap2 AffineMap2::compose(const AffineMap2& other) const {
  return AffineMap2(matrix_ * other.matrix_, matrix_ * other.shift_ + shift_);
}

std::string to_string(const AffineMap2& m) {
  const auto& a = m.matrix();
  std::ostringstream os;
  os << "[[" << a.a << ',' << a.b << "],[" << a.c << ',' << a.d << "]]+" << to_string(m.shift());
  return os.str();
}

namespace {

std::vector<AffineMap2> find_equivalences(const LatticeSet& k, const LatticeSet& l,
                                          bool first_only) {
  require_planar(k, "affine_equivalent");
  require_planar(l, "affine_equivalent");
  if (!spans_plane(k) || !spans_plane(l)) throw Error("degenerate set");
  std::vector<AffineMap2> found;
  if (k.size() != l.size()) return found;

  // Anchor triple of K with the smallest nonzero |det|.
  const std::size_t n = k.size();
  Wide best = -1;
  std::size_t i0 = 0, i1 = 0, i2 = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        Wide d = cross(k[a], k[b], k[c]);
        if (d < 0) d = -d;
        if (d != 0 && (best < 0 || d < best)) {
          best = d;
          i0 = a, i1 = b, i2 = c;
        }
      }
    }
  }
  const LatticeVector p0 = k[i0];
  const LatticeVector e1 = k[i1] - p0, e2 = k[i2] - p0;
  const Wide dp = det(e1, e2);

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a) continue;
      const LatticeVector f1 = l[b] - l[a];
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        const LatticeVector f2 = l[c] - l[a];
        Wide dq = det(f1, f2);
        if (dq != dp && dq != -dp) continue;
        // A = Q adj(P) / det P, with P = [e1 e2], Q = [f1 f2].
        Wide m[4] = {Wide{f1.x()} * e2.y() - Wide{f2.x()} * e1.y(),
                     -Wide{f1.x()} * e2.x() + Wide{f2.x()} * e1.x(),
                     Wide{f1.y()} * e2.y() - Wide{f2.y()} * e1.y(),
                     -Wide{f1.y()} * e2.x() + Wide{f2.y()} * e1.x()};
        bool integral = true;
        for (auto& v : m) {
          if (v % dp != 0) {
            integral = false;
            break;
          }
          v /= dp;
        }
        if (!integral) continue;
        IntMatrix2 mat{narrow(m[0], "affine"), narrow(m[1], "affine"), narrow(m[2], "affine"),
                       narrow(m[3], "affine")};
        if (mat.det() != 1 && mat.det() != -1) continue;
        AffineMap2 map(mat, l[a] - mat * p0);
        bool ok = true;
        for (const auto& p : k) {
          if (!l.contains(map(p))) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        found.push_back(map);
        if (first_only) return found;
      }
    }
  }
  return found;
}

}  // namespace

std::optional<AffineMap2> affine_equivalent(const LatticeSet& k, const LatticeSet& l) {
  auto maps = find_equivalences(k, l, true);
  if (maps.empty()) return std::nullopt;
  return maps.front();
}

std::vector<AffineMap2> affine_equivalences(const LatticeSet& k, const LatticeSet& l) {
  return find_equivalences(k, l, false);
}

std::int64_t halfopen_parallelogram_count(const LatticeVector& u, const LatticeVector& v) {
  if (u.dim() != 2 || v.dim() != 2) throw Error("halfopen_parallelogram_count: dimension must be 2");
  if (u.is_zero() || v.is_zero()) throw Error("zero direction");
  const Coord xlo = std::min({Coord{0}, u.x(), v.x(), u.x() + v.x()});
  const Coord xhi = std::max({Coord{0}, u.x(), v.x(), u.x() + v.x()});
  const Coord ylo = std::min({Coord{0}, u.y(), v.y(), u.y() + v.y()});
  const Coord yhi = std::max({Coord{0}, u.y(), v.y(), u.y() + v.y()});
  const Wide d = det(u, v);
  std::int64_t count = 0;

  if (d != 0) {
    const Wide s = d > 0 ? 1 : -1;
    for (Coord x = xlo; x <= xhi; ++x) {
      for (Coord y = ylo; y <= yhi; ++y) {
        LatticeVector p{x, y};
        // p = a u + b v with a = det(p,v)/d, b = det(u,p)/d.
        Wide na = s * det(p, v), nb = s * det(u, p), dd = s * d;
        if (na >= 0 && na < dd && nb >= 0 && nb < dd) ++count;
      }
    }
    return count;
  }

  // Parallel: the set is {a*lu + b*lv : a,b in [0,1)} * w for primitive w.
  const LatticeVector w = primitive_part(u);
  const Wide ww = dot(w, w);
  const Wide lu = dot(u, w) / ww, lv = dot(v, w) / ww;
  for (Coord x = xlo; x <= xhi; ++x) {
    for (Coord y = ylo; y <= yhi; ++y) {
      LatticeVector p{x, y};
      if (det(p, w) != 0) continue;
      Wide t = dot(p, w) / ww;
      bool inside;
      if (lu > 0 && lv > 0) {
        inside = t >= 0 && t < lu + lv;
      } else if (lu < 0 && lv < 0) {
        inside = t <= 0 && t > lu + lv;
      } else {
        inside = t > std::min(lu, lv) && t < std::max(lu, lv);
      }
      if (inside) ++count;
    }
  }
  return count;
}

}  // namespace latcov
