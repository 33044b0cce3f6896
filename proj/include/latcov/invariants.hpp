#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latcov/lattice.hpp"

namespace latcov {

/// Positive integer or infinity, with min over the empty set = infinity.
class ExtCount {
 public:
  ExtCount() = default;  // infinity
  explicit ExtCount(std::int64_t v) : value_(v) {}
  static ExtCount infinity() { return {}; }

  bool is_infinite() const { return !value_.has_value(); }
  std::int64_t value() const;

  friend bool operator==(const ExtCount&, const ExtCount&) = default;
  friend std::strong_ordering operator<=>(const ExtCount& a, const ExtCount& b);

 private:
  std::optional<std::int64_t> value_;
};

/// "inf" or the decimal value.
std::string to_string(const ExtCount& c);
ExtCount min(const ExtCount& a, const ExtCount& b);

/// Reduced positive fraction num/den.
class Fraction {
 public:
  Fraction(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  std::int64_t num_ = 1, den_ = 1;
};

std::string to_string(const Fraction& f);

struct InvariantRecord {
  std::vector<LatticeVector> normals;  ///< U(K) u U(-K), sorted
  ExtCount m_prime;
  ExtCount m_doubleprime;
  ExtCount m;
  Fraction delta{1, 1};
  std::vector<std::int64_t> det_set;   ///< nonzero |det(u,v)| over normal pairs, sorted
  bool certified = false;              ///< m >= delta^2 + delta + 1

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

/// Primitive outer normals of the edges of a spanning lattice-convex planar
/// set, sorted.
std::vector<LatticeVector> edge_normals(const LatticeSet& k);

/// Sorted set of nonzero |det(u,v)| over pairs of vectors.
std::vector<std::int64_t> nonzero_dets(std::span<const LatticeVector> vectors);
/// max/min of the nonzero determinants; throws if the vectors do not span.
Fraction discrepancy(std::span<const LatticeVector> vectors);

/// Exact test of m >= delta^2 + delta + 1.
bool uniqueness_certified(const ExtCount& m, const Fraction& delta);

InvariantRecord invariants_direct(const LatticeSet& k);

/// delta(normals) <= 2 n^2, compared exactly.
bool delta_bound_check(std::span<const LatticeVector> normals, std::int64_t n);

/// Integers k with delta <= k <= (m-1)/delta, as [lo, hi]; nullopt if m is
/// infinite or the interval holds no integer.
std::optional<std::pair<std::int64_t, std::int64_t>> certificate_k_range(const ExtCount& m,
                                                                        const Fraction& delta);

}  // namespace latcov
