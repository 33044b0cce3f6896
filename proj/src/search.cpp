#include "latcov/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>

namespace latcov {

namespace {

std::vector<std::int64_t> sorted_counts(const Covariogram& g) {
  std::vector<std::int64_t> c;
  c.reserve(g.size());
  for (const auto& e : g.entries()) c.push_back(e.count);
  std::sort(c.begin(), c.end());
  return c;
}

/// A map taking M onto `target` that is `base` followed by a translation or
/// a point reflection, if such exists.
std::optional<AffineMap2> align_up_to_reflection(const AffineMap2& base, const LatticeSet& source,
                                                 const LatticeSet& target) {
  const LatticeSet image = base(source);
  const LatticeVector tmin = target.min_corner();
  {
    AffineMap2 shift(IntMatrix2::identity(), tmin - image.min_corner());
    if (shift(image) == target) return shift.compose(base);
  }
  const LatticeSet flipped = image.negated();
  AffineMap2 flip(IntMatrix2{-1, 0, 0, -1}, tmin - flipped.min_corner());
  if (flip(image) == target) return flip.compose(base);
  return std::nullopt;
}

/// Hexagon bounds with a1 = b1 = 0 cutting out exactly `size` points, each
/// distinct S reported once.
std::vector<HexagonParams> hexagons_of_size(std::int64_t size) {
  std::vector<HexagonParams> out;
  std::set<std::vector<std::pair<std::int64_t, std::int64_t>>> seen;
  for (std::int64_t a2 = 0; a2 < size; ++a2) {
    for (std::int64_t b2 = 0; b2 < size; ++b2) {
      for (std::int64_t g1 = -b2; g1 <= a2; ++g1) {
        for (std::int64_t g2 = g1; g2 <= a2; ++g2) {
          HexagonParams h{0, a2, 0, b2, g1, g2};
          std::vector<std::pair<std::int64_t, std::int64_t>> cells;
          for (std::int64_t i = 0; i <= a2; ++i) {
            for (std::int64_t j = 0; j <= b2; ++j) {
              if (h.contains(i, j)) cells.emplace_back(i, j);
            }
          }
          if (static_cast<std::int64_t>(cells.size()) != size) continue;
          // The region must touch i = 0 and j = 0; otherwise it is a
          // translate of one found elsewhere.
          bool i0 = false, j0 = false;
          for (auto [i, j] : cells) {
            i0 |= i == 0;
            j0 |= j == 0;
          }
          if (!i0 || !j0) continue;
          if (seen.insert(cells).second) out.push_back(h);
        }
      }
    }
  }
  return out;
}

}  // namespace

std::optional<CorollaryMatch> match_corollary(const LatticeSet& k, const LatticeSet& l,
                                              int k_max) {
  if (k.dim() != 2 || l.dim() != 2) throw Error("match_corollary: dimension must be 2");
  if (!spans_plane(k) || !spans_plane(l)) throw Error("match_corollary: degenerate set");
  const Covariogram gk = compute_covariogram(k);
  if (!covariogram_equal(gk, compute_covariogram(l)) || canonical_form(k) == canonical_form(l)) {
    throw Error("match_corollary: pair is not nontrivially homometric");
  }
  const auto counts = sorted_counts(gk);
  const auto n = static_cast<std::int64_t>(k.size());

  for (std::int64_t kk = 1; kk <= k_max; ++kk) {
    const WidthOneParams params(kk, kk - 1);
    const std::int64_t tile = 2 * kk + 1;
    if (n % tile != 0) continue;
    for (const HexagonParams& hex : hexagons_of_size(n / tile)) {
      const MirrorPairReport gen = corollary_pair(params, hex);
      if (!gen.nontrivial) continue;
      if (sorted_counts(compute_covariogram(gen.k)) != counts) continue;
      for (bool swapped : {false, true}) {
        const LatticeSet& k_target = swapped ? gen.l : gen.k;
        const LatticeSet& l_target = swapped ? gen.k : gen.l;
        for (const AffineMap2& phi : affine_equivalences(k, k_target)) {
          if (auto psi = align_up_to_reflection(phi, l, l_target)) {
            return CorollaryMatch{params, hex, phi, *psi, swapped};
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

class TileSearch {
 public:
  TileSearch(const LatticeSet& k, const LatticeSet& l, bool require_nontrivial)
      : k_(k), l_canon_(canonical_form(l)), gk_(compute_covariogram(k)),
        nontrivial_(require_nontrivial) {
    const LatticeVector k0 = k[0];
    for (std::size_t i = 1; i < k.size(); ++i) candidates_.push_back(k[i] - k0);
  }

  std::optional<std::pair<LatticeSet, LatticeSet>> run(std::size_t size) {
    size_ = size;
    copies_ = static_cast<std::int64_t>(k_.size() / size);
    tile_.assign({LatticeVector(2)});
    diffs_.clear();
    return grow(0);
  }

 private:
  std::optional<std::pair<LatticeSet, LatticeSet>> grow(std::size_t from) {
    if (tile_.size() == size_) return try_tile();
    for (std::size_t i = from; i < candidates_.size(); ++i) {
      const LatticeVector p = candidates_[i];
      // g_K = g_S * g_T dominates |S| g_T pointwise.
      bool ok = true;
      std::vector<LatticeVector> added;
      for (const auto& q : tile_) {
        for (const LatticeVector d : {p - q, q - p}) {
          added.push_back(d);
          if (copies_ * ++diffs_[d] > gk_.at(d)) ok = false;
        }
      }
      if (ok) {
        tile_.push_back(p);
        if (auto r = grow(i + 1)) return r;
        tile_.pop_back();
      }
      for (const auto& d : added) --diffs_[d];
    }
    return std::nullopt;
  }

  /// The smallest uncovered point of K must be the smallest point of its
  /// tile, so the tiling by translates of T is forced.
  std::optional<std::pair<LatticeSet, LatticeSet>> try_tile() {
    const LatticeSet tile{std::vector<LatticeVector>(tile_)};
    std::vector<bool> covered(k_.size(), false);
    std::vector<LatticeVector> positions;
    for (std::size_t i = 0; i < k_.size(); ++i) {
      if (covered[i]) continue;
      const LatticeVector s = k_[i];
      for (const auto& t : tile) {
        auto it = std::lower_bound(k_.begin(), k_.end(), s + t);
        if (it == k_.end() || *it != s + t) return std::nullopt;
        auto j = static_cast<std::size_t>(it - k_.begin());
        if (covered[j]) return std::nullopt;
        covered[j] = true;
      }
      positions.push_back(s);
    }
    LatticeSet s(std::move(positions));
    if (nontrivial_ && (is_centrally_symmetric(s) || is_centrally_symmetric(tile))) {
      return std::nullopt;
    }
    if (canonical_form(minkowski_sum(s, tile.negated())) != l_canon_) return std::nullopt;
    return std::pair{std::move(s), tile};
  }

  const LatticeSet& k_;
  LatticeSet l_canon_;
  Covariogram gk_;
  bool nontrivial_;
  std::vector<LatticeVector> candidates_;
  std::size_t size_ = 0;
  std::int64_t copies_ = 1;
  std::vector<LatticeVector> tile_;
  std::unordered_map<LatticeVector, std::int64_t, LatticeVectorHash> diffs_;
};

}  // namespace

std::optional<std::pair<LatticeSet, LatticeSet>> constructibility_search(
    const LatticeSet& k, const LatticeSet& l, std::size_t t_max, bool require_nontrivial) {
  if (k.dim() != 2 || l.dim() != 2) throw Error("constructibility_search: dimension must be 2");
  if (k.empty() || l.empty()) throw Error("constructibility_search: empty set");
  if (!covariogram_equal(compute_covariogram(k), compute_covariogram(l))) {
    throw Error("constructibility_search: pair is not homometric");
  }
  TileSearch search(k, l, require_nontrivial);
  for (std::size_t size = 2; size <= std::min(t_max, k.size()); ++size) {
    if (k.size() % size != 0) continue;
    if (auto r = search.run(size)) return r;
  }
  return std::nullopt;
}

std::size_t SearchReport::pair_count() const {
  std::size_t n = 0;
  for (const auto& c : classes) n += c.pairs.size();
  return n;
}

std::size_t SearchReport::matched_count() const {
  std::size_t n = 0;
  for (const auto& c : classes) {
    for (const auto& p : c.pairs) n += p.match.has_value();
  }
  return n;
}

SearchReport homometric_classes(int width, int height, const SearchOptions& options) {
  if (width < 1 || height < 1) throw Error("search: box dimensions must be positive");
  if (width * height > kSoftBoxLimit && !options.allow_large) {
    throw Error("search: box exceeds " + std::to_string(kSoftBoxLimit) +
                " points; pass the large-box flag to proceed");
  }
  SearchReport report;
  report.width = width;
  report.height = height;
  report.matched_corollary = options.match_corollary;

  const std::vector<LatticeSet> sets = enumerate_lattice_convex(width, height, options.jobs);
  report.total_sets = sets.size();

  std::vector<Covariogram> covs;
  covs.reserve(sets.size());
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    covs.push_back(compute_covariogram(sets[i]));
    buckets[fingerprint(covs.back())].push_back(i);
  }

  for (auto& [hash, members] : buckets) {
    if (members.size() < 2) continue;
    // Exact split of the bucket; the digest is only a hint.
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i : members) {
      auto it = std::find_if(groups.begin(), groups.end(),
                             [&](const auto& grp) { return covs[grp.front()] == covs[i]; });
      if (it == groups.end()) {
        groups.push_back({i});
      } else {
        it->push_back(i);
      }
    }
    for (const auto& grp : groups) {
      std::vector<LatticeSet> forms;
      for (std::size_t i : grp) forms.push_back(canonical_form(sets[i]));
      std::sort(forms.begin(), forms.end());
      forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
      if (forms.size() < 2) continue;
      HomometricClass cls;
      cls.covariogram = covs[grp.front()];
      cls.members = std::move(forms);
      report.classes.push_back(std::move(cls));
    }
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const auto& a, const auto& b) { return a.members.front() < b.members.front(); });

  struct Job {
    std::size_t cls, a, b;
  };
  std::vector<Job> jobs;
  for (std::size_t c = 0; c < report.classes.size(); ++c) {
    const auto& m = report.classes[c].members;
    for (std::size_t a = 0; a < m.size(); ++a) {
      for (std::size_t b = a + 1; b < m.size(); ++b) jobs.push_back({c, a, b});
    }
  }
  std::vector<PairVerdict> verdicts(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const auto& cls = report.classes[jobs[i].cls];
      const LatticeSet& x = cls.members[jobs[i].a];
      const LatticeSet& y = cls.members[jobs[i].b];
      PairVerdict v;
      v.first = jobs[i].a;
      v.second = jobs[i].b;
      const Covariogram gx = compute_covariogram(x);
      v.verified = covariogram_equal(gx, compute_covariogram(y)) && gx == cls.covariogram &&
                   canonical_form(x) != canonical_form(y);
      if (v.verified && options.match_corollary) v.match = match_corollary(x, y);
      verdicts[i] = std::move(v);
    }
  };
  const unsigned workers = std::max(1u, options.jobs);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < workers; ++j) pool.emplace_back(worker);
  }
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    report.classes[jobs[i].cls].pairs.push_back(std::move(verdicts[i]));
  }
  return report;
}

}  // namespace latcov
