#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "latcov/covariogram.hpp"
#include "latcov/invariants.hpp"
#include "latcov/lattice.hpp"

namespace latcov {

/// The pair F(K,u) u F(K,-u) as read off a covariogram, up to translation and
/// point reflection. Only the union's class is meaningful: the covariogram
/// cannot tell which way the short row is attached.
struct EdgePairSketch {
  LatticeSet long_row;
  LatticeSet short_row;
  LatticeVector normal;

  LatticeSet combined() const;
};

/// supp g = DK. Planar covariograms only.
LatticeSet diffset_from_covariogram(const Covariogram& g);

/// Reads the edge pair in direction u from the values of g on the supporting
/// line of supp g with outer normal u. Throws "not realizable" when the
/// values there are not positive on an interval with an interval of maxima.
EdgePairSketch edge_pair_from_covariogram(const Covariogram& g, const LatticeVector& u);

/// The invariant record computed from g alone; equals invariants_direct(K)
/// for every spanning lattice-convex K realizing g.
InvariantRecord invariants_from_covariogram(const Covariogram& g);

/// Point box {0..w-1} x {0..h-1} that holds every realization of g up to
/// translation: the bounding box of supp g is exactly twice as wide and tall.
std::pair<int, int> default_box(const Covariogram& g);

/// Canonical forms of all spanning lattice-convex K in the box with g_K = g,
/// deduplicated under translation and reflection, sorted.
std::vector<LatticeSet> reconstruct_all(const Covariogram& g, int box_width, int box_height,
                                        unsigned jobs = 1);

struct Verdict {
  enum class Kind { unique, ambiguous, unrealizable };
  Kind kind = Kind::unrealizable;
  std::vector<LatticeSet> classes;

  std::size_t count() const { return classes.size(); }
};

const char* to_string(Verdict::Kind kind);

Verdict determination_verdict(const Covariogram& g, int box_width, int box_height,
                              unsigned jobs = 1);

}  // namespace latcov
