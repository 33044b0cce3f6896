#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "latcov/covariogram.hpp"
#include "latcov/lattice.hpp"

namespace latcov {

/// Shape parameters of the width-one tile; k > ell >= 0.
class WidthOneParams {
 public:
  WidthOneParams(std::int64_t k, std::int64_t ell);

  std::int64_t k() const { return k_; }
  std::int64_t ell() const { return ell_; }
  /// k = ell + 1, where the extra diagonal direction is admissible.
  bool diagonal_case() const { return k_ == ell_ + 1; }

  friend bool operator==(const WidthOneParams&, const WidthOneParams&) = default;

 private:
  std::int64_t k_, ell_;
};

/// Basis w1 = (-k-1, 1), w2 = (ell+1, 1) of the sublattice complementary to T.
struct SublatticeBasis {
  LatticeVector w1;
  LatticeVector w2;

  explicit SublatticeBasis(const WidthOneParams& p);
  /// |det(w1, w2)| = k + ell + 2.
  std::int64_t index() const;
  LatticeVector at(std::int64_t i, std::int64_t j) const { return i * w1 + j * w2; }
  /// (i, j) with p = i w1 + j w2, or nullopt if p is not in the sublattice.
  std::optional<LatticeVector> coordinates(const LatticeVector& p) const;
};

/// Bounds a1 <= i <= a2, b1 <= j <= b2, g1 <= i - j <= g2 on sublattice
/// coordinates; the region must be nonempty.
struct HexagonParams {
  std::int64_t a1, a2, b1, b2, g1, g2;

  void validate() const;
  bool contains(std::int64_t i, std::int64_t j) const {
    return a1 <= i && i <= a2 && b1 <= j && j <= b2 && g1 <= i - j && i - j <= g2;
  }
  friend bool operator==(const HexagonParams&, const HexagonParams&) = default;
};

std::string to_string(const HexagonParams& h);

struct MirrorPairReport {
  LatticeSet k;  ///< S (+) T
  LatticeSet l;  ///< S (+) (-T)
  LatticeSet s;
  LatticeSet t;
  bool homometric = false;
  bool nontrivial = false;
};

/// T = ({0..k} x {0}) u ({0..ell} x {1}).
LatticeSet width_one_T(const WidthOneParams& p);

/// |S + T| = |S| |T|.
bool sum_is_direct(const LatticeSet& s, const LatticeSet& t);
/// Throws "sum not direct" unless the sum is direct.
LatticeSet direct_sum(const LatticeSet& s, const LatticeSet& t);

/// (S (+) T, S (+) (-T)) with homometry computed and the nontriviality
/// prediction (neither summand centrally symmetric) checked against
/// canonical forms.
MirrorPairReport mirror_pair(const LatticeSet& s, const LatticeSet& t);

struct PlaneDecomposition {
  LatticeVector lattice_part;  ///< in the sublattice
  LatticeVector tile_part;     ///< in T
};

/// The unique p = lambda + t with lambda in the sublattice and t in T.
PlaneDecomposition decompose_plane(const LatticeVector& p, const WidthOneParams& params);

/// Sum of S and T direct and lattice-convex.
bool condition_i(const LatticeSet& s, const WidthOneParams& params);
/// S, translated to contain o, lies in the sublattice, is lattice-convex
/// there, and every edge of its hull is parallel to an admissible direction.
bool condition_ii(const LatticeSet& s, const WidthOneParams& params);

/// Connectivity of the graph on S with steps +-w1, +-w2 (and +-(w1+w2) when
/// k = ell + 1). S must lie in the sublattice.
bool gs_graph_connected(const LatticeSet& s, const WidthOneParams& params);

/// K x L and K x (-L).
MirrorPairReport product_pair(const LatticeSet& k, const LatticeSet& l);

/// {i w1 + j w2 : (i, j) in the hexagon region}.
LatticeSet hexagon_set(const WidthOneParams& params, const HexagonParams& hex);

/// The mirror pair of hexagon_set and width_one_T for k = ell + 1, with
/// every claimed property verified.
MirrorPairReport corollary_pair(const WidthOneParams& params, const HexagonParams& hex);

}  // namespace latcov
