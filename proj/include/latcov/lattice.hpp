#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latcov/error.hpp"

namespace latcov {

using Coord = std::int64_t;
__extension__ typedef __int128 Wide;

/// Largest dimension a LatticeVector can carry. Planar work uses d = 2;
/// product constructions go up to Z^kMaxDim.
inline constexpr std::size_t kMaxDim = 6;

/// Coordinates read from files must satisfy |c| <= kInputLimit.
inline constexpr Coord kInputLimit = Coord{1} << 31;

/// A point or vector of Z^d with exact 64-bit components.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t dim);
  LatticeVector(std::initializer_list<Coord> coords);

  static LatticeVector from_span(std::span<const Coord> coords);

  std::size_t dim() const { return dim_; }
  Coord operator[](std::size_t i) const { return c_[i]; }
  Coord& operator[](std::size_t i) { return c_[i]; }
  Coord x() const { return c_[0]; }
  Coord y() const { return c_[1]; }
  std::span<const Coord> coords() const { return {c_.data(), dim_}; }
  bool is_zero() const;

  LatticeVector operator-() const;
  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(Coord s, LatticeVector v);

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  /// Dimension first, then lexicographic on coordinates.
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b);

 private:
  std::array<Coord, kMaxDim> c_{};
  std::uint8_t dim_ = 0;
};

struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector& v) const noexcept;
};

/// "(x,y)" style rendering.
std::string to_string(const LatticeVector& v);

Wide dot(const LatticeVector& a, const LatticeVector& b);
/// det of the 2x2 matrix with columns a and b.
Wide det(const LatticeVector& a, const LatticeVector& b);
Coord gcd_of(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);
/// v divided by the gcd of its components; v must be nonzero.
LatticeVector primitive_part(const LatticeVector& v);

/// Finite set of distinct lattice vectors of a common dimension, stored
/// sorted lexicographically.
class LatticeSet {
 public:
  LatticeSet() = default;
  /// Rejects duplicates and mixed dimensions.
  explicit LatticeSet(std::vector<LatticeVector> points);
  LatticeSet(std::initializer_list<LatticeVector> points);

  /// Builds a set from a multiset; repeated points collapse.
  static LatticeSet collect(std::vector<LatticeVector> points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  std::span<const LatticeVector> points() const { return pts_; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }
  const LatticeVector& operator[](std::size_t i) const { return pts_[i]; }
  bool contains(const LatticeVector& p) const;

  /// Componentwise minimum and maximum; set must be nonempty.
  LatticeVector min_corner() const;
  LatticeVector max_corner() const;

  LatticeSet translated(const LatticeVector& t) const;
  LatticeSet negated() const;

  friend bool operator==(const LatticeSet&, const LatticeSet&) = default;
  friend auto operator<=>(const LatticeSet& a, const LatticeSet& b) {
    return a.pts_ <=> b.pts_;
  }

 private:
  struct Sorted {};
  LatticeSet(Sorted, std::vector<LatticeVector> points, std::size_t dim);

  std::vector<LatticeVector> pts_;
  std::size_t dim_ = 0;
};

std::string to_string(const LatticeSet& s);

LatticeSet minkowski_sum(const LatticeSet& a, const LatticeSet& b);
/// Points of a in the first coordinates, points of b in the rest.
LatticeSet cartesian_product(const LatticeSet& a, const LatticeSet& b);
/// DK = K + (-K), any dimension.
LatticeSet difference_set(const LatticeSet& k);
/// F(K,u): the points of K maximizing <x,u>.
LatticeSet support_set(const LatticeSet& k, const LatticeVector& u);

/// K translated so that its componentwise minimum is the origin.
LatticeSet translation_normal_form(const LatticeSet& k);
/// Unique representative of {K+t} u {-K+t}.
LatticeSet canonical_form(const LatticeSet& k);
bool is_centrally_symmetric(const LatticeSet& k);

struct HullEdge {
  LatticeVector start;
  LatticeVector direction;     ///< primitive, pointing along the CCW boundary
  std::int64_t lattice_points; ///< on the closed edge, endpoints included
};

/// Strict convex hull of a planar set. Fewer than three vertices means the
/// hull is a point or a segment.
struct Hull2 {
  std::vector<LatticeVector> vertices;  ///< counterclockwise
  std::vector<HullEdge> edges;          ///< one per boundary edge; one for a segment

  bool is_point() const { return vertices.size() == 1; }
  bool is_segment() const { return vertices.size() == 2; }
  bool is_polygon() const { return vertices.size() >= 3; }
  /// Twice the signed area (shoelace).
  Wide twice_area() const;
};

Hull2 convex_hull(const LatticeSet& k);
/// Hull of an already strictly convex CCW vertex cycle; not checked.
Hull2 hull_from_vertices(std::vector<LatticeVector> ccw_vertices);
/// Z^2 intersected with the hull, enumerated row by row.
LatticeSet lattice_points(const Hull2& hull);
bool is_lattice_convex(const LatticeSet& k);
/// True iff the planar set affinely spans R^2.
bool spans_plane(const LatticeSet& k);

/// Row-major integer 2x2 matrix [[a, b], [c, d]].
struct IntMatrix2 {
  Coord a = 1, b = 0, c = 0, d = 1;

  Wide det() const { return Wide{a} * d - Wide{b} * c; }
  LatticeVector operator*(const LatticeVector& v) const;
  friend IntMatrix2 operator*(const IntMatrix2& l, const IntMatrix2& r);
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
  static IntMatrix2 identity() { return {}; }
};

/// x -> A x + t with A unimodular.
class AffineMap2 {
 public:
  AffineMap2() : shift_{0, 0} {}
  /// Throws unless |det A| = 1.
  AffineMap2(IntMatrix2 matrix, LatticeVector shift);

  const IntMatrix2& matrix() const { return matrix_; }
  const LatticeVector& shift() const { return shift_; }

  LatticeVector operator()(const LatticeVector& p) const;
  LatticeSet operator()(const LatticeSet& k) const;
  AffineMap2 inverse() const;
  /// (this o other)(x) = this(other(x)).
  AffineMap2 compose(const AffineMap2& other) const;

  friend bool operator==(const AffineMap2&, const AffineMap2&) = default;

 private:
  IntMatrix2 matrix_;
  LatticeVector shift_;
};

std::string to_string(const AffineMap2& m);

/// A witness x -> Ax+t with A K + t = L, or nullopt. Both sets must span R^2.
std::optional<AffineMap2> affine_equivalent(const LatticeSet& k, const LatticeSet& l);
/// Every such witness (one per affine automorphism of K).
std::vector<AffineMap2> affine_equivalences(const LatticeSet& k, const LatticeSet& l);

/// Lattice points in the half-open parallelogram [0,1)u + [0,1)v.
std::int64_t halfopen_parallelogram_count(const LatticeVector& u, const LatticeVector& v);

/// Exact floor/ceil of n/d for d != 0.
Wide floor_div(Wide n, Wide d);
Wide ceil_div(Wide n, Wide d);

}  // namespace latcov
