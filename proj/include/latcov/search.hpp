#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "latcov/covariogram.hpp"
#include "latcov/enumerate.hpp"
#include "latcov/homometry.hpp"
#include "latcov/lattice.hpp"

namespace latcov {

/// A pair (K, L) identified with a generated pair (K', L') from the
/// hexagon family: map_k(K) = K' and map_l(L) = L', where map_l differs from
/// map_k by a translation or a point reflection. With `swapped`, K is
/// matched to the second member S (+) (-T) instead.
struct CorollaryMatch {
  WidthOneParams params{1, 0};
  HexagonParams hex{};
  AffineMap2 map_k;
  AffineMap2 map_l;
  bool swapped = false;
};

inline constexpr int kDefaultMatchKMax = 4;

/// Searches k = l + 1 <= k_max and hexagons with |S| |T| = |K|. Throws unless
/// (K, L) is a nontrivially homometric pair of planar spanning sets.
std::optional<CorollaryMatch> match_corollary(const LatticeSet& k, const LatticeSet& l,
                                              int k_max = kDefaultMatchKMax);

inline constexpr std::size_t kDefaultTileMax = 12;

/// Bounded search for S, T with K = S (+) T and [L] = [S (+) (-T)], trying
/// tiles T of 2..t_max points. With require_nontrivial, decompositions with a
/// centrally symmetric summand are skipped. nullopt means "not found within
/// the bound", not "not constructible".
std::optional<std::pair<LatticeSet, LatticeSet>> constructibility_search(
    const LatticeSet& k, const LatticeSet& l, std::size_t t_max = kDefaultTileMax,
    bool require_nontrivial = true);

struct PairVerdict {
  std::size_t first = 0;   ///< indices into HomometricClass::members
  std::size_t second = 0;
  bool verified = false;   ///< equal covariograms, distinct canonical forms
  std::optional<CorollaryMatch> match;
};

struct HomometricClass {
  Covariogram covariogram;
  std::vector<LatticeSet> members;  ///< distinct canonical forms, sorted
  std::vector<PairVerdict> pairs;
};

struct SearchReport {
  int width = 0;
  int height = 0;
  std::size_t total_sets = 0;  ///< up to translation
  bool matched_corollary = false;
  std::vector<HomometricClass> classes;

  std::size_t pair_count() const;
  std::size_t matched_count() const;
};

struct SearchOptions {
  unsigned jobs = 1;
  bool match_corollary = false;
  /// Boxes with more than kSoftBoxLimit points are refused unless set.
  bool allow_large = false;
};

inline constexpr int kSoftBoxLimit = 42;

/// All homometric classes with at least two canonical forms among the
/// spanning lattice-convex sets of the box.
SearchReport homometric_classes(int width, int height, const SearchOptions& options = {});

}  // namespace latcov
