#pragma once

#include <cstdint>
#include <vector>

#include "latcov/lattice.hpp"

namespace latcov {

struct CovEntry {
  LatticeVector offset;
  std::int64_t count = 0;

  friend bool operator==(const CovEntry&, const CovEntry&) = default;
};

/// Finite symmetric map u -> |K cap (K+u)|, stored as a sorted entry list
/// holding both u and -u.
class Covariogram {
 public:
  Covariogram() = default;

  /// Validates: positive counts, uniform dimension, no repeated offsets,
  /// g(u) = g(-u), and g(o) present and maximal. Entries may come unsorted.
  static Covariogram from_entries(std::size_t dim, std::vector<CovEntry> entries);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<CovEntry>& entries() const { return entries_; }

  /// 0 outside the support.
  std::int64_t at(const LatticeVector& u) const;
  std::int64_t at_origin() const;
  Wide mass() const;
  /// Whether the mass is a perfect square equal to g(o)^2, as it is for any
  /// covariogram of a set.
  bool mass_matches_origin() const;

  friend bool operator==(const Covariogram&, const Covariogram&) = default;

 private:
  struct Trusted {};
  Covariogram(Trusted, std::size_t dim, std::vector<CovEntry> sorted);
  friend Covariogram compute_covariogram(const LatticeSet&);
  friend Covariogram convolve(const Covariogram&, const Covariogram&);

  std::size_t dim_ = 0;
  std::vector<CovEntry> entries_;
};

Covariogram compute_covariogram(const LatticeSet& k);
/// Throws on dimension mismatch.
bool covariogram_equal(const Covariogram& g1, const Covariogram& g2);
LatticeSet support_of(const Covariogram& g);
/// (g1 * g2)(u) = sum_v g1(v) g2(u - v).
Covariogram convolve(const Covariogram& g1, const Covariogram& g2);

/// 64-bit digest of the sorted entry list; equal covariograms collide.
std::uint64_t fingerprint(const Covariogram& g);

}  // namespace latcov
