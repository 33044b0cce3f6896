#include <doctest.h>

#include "latcov/homometry.hpp"
#include "oracles.hpp"

using namespace latcov;

namespace {

const LatticeSet kTriangle{{0, 0}, {1, 0}, {0, 1}};
const LatticeSet kNineS{{0, 0}, {-2, 1}, {-1, 2}};

const WidthOneParams kTested[] = {{1, 0}, {2, 0}, {2, 1}, {3, 2}};

}  // namespace

TEST_CASE("WidthOneParams and the tile") {
  CHECK_THROWS_AS(WidthOneParams(1, 1), Error);
  CHECK_THROWS_AS(WidthOneParams(2, -1), Error);
  CHECK(width_one_T({1, 0}) == kTriangle);
  CHECK(width_one_T({2, 0}) == LatticeSet{{0, 0}, {1, 0}, {2, 0}, {0, 1}});
  CHECK(width_one_T({3, 1}).size() == 6);
  for (std::int64_t k = 1; k <= 6; ++k) {
    for (std::int64_t l = 0; l < k; ++l) {
      const SublatticeBasis b({k, l});
      CHECK(b.w1 == LatticeVector{-k - 1, 1});
      CHECK(b.w2 == LatticeVector{l + 1, 1});
      CHECK(b.index() == k + l + 2);
    }
  }
}

TEST_CASE("sum_is_direct and direct_sum") {
  CHECK(sum_is_direct(LatticeSet{{0, 0}, {3, 0}}, kTriangle));
  CHECK_FALSE(sum_is_direct(LatticeSet{{0, 0}, {1, 0}}, kTriangle));
  CHECK(sum_is_direct(LatticeSet{{0, 0}}, kTriangle));
  CHECK_THROWS_WITH_AS(direct_sum(LatticeSet{{0, 0}, {1, 0}}, kTriangle), "sum not direct", Error);
  CHECK_THROWS_AS(sum_is_direct(LatticeSet{{0, 0}}, LatticeSet{{0, 0, 0}}), Error);
}

TEST_CASE("mirror_pair") {
  const MirrorPairReport nine = mirror_pair(kNineS, kTriangle);
  CHECK(nine.k.size() == 9);
  CHECK(is_lattice_convex(nine.k));
  CHECK(nine.homometric);
  CHECK(nine.nontrivial);
  CHECK(nine.l == minkowski_sum(kNineS, kTriangle.negated()));

  const MirrorPairReport unit = mirror_pair(LatticeSet{{0, 0}}, kTriangle);
  CHECK(unit.k == kTriangle);
  CHECK(unit.l == kTriangle.negated());
  CHECK(unit.homometric);
  CHECK_FALSE(unit.nontrivial);

  const MirrorPairReport sym = mirror_pair(LatticeSet{{0, 0}, {3, 0}}, kTriangle);
  CHECK(sym.homometric);
  CHECK_FALSE(sym.nontrivial);
}

TEST_CASE("mirror pairs on random direct sums") {
  std::mt19937_64 rng(29);
  int direct = 0;
  for (int i = 0; i < 400; ++i) {
    const auto s = oracle::random_subset(rng, 6, 4);
    const auto t = oracle::random_subset(rng, 2, 4);
    const LatticeSet ls = oracle::to(s), lt = oracle::to(t);
    if (!sum_is_direct(ls, lt)) continue;
    ++direct;
    const MirrorPairReport r = mirror_pair(ls, lt);
    CHECK(r.homometric);
    CHECK(oracle::covariogram(oracle::from(r.k)) == oracle::covariogram(oracle::from(r.l)));
    CHECK(r.nontrivial == !oracle::same_class(oracle::from(r.k), oracle::from(r.l)));
  }
  CHECK(direct > 100);
}

TEST_CASE("decompose_plane") {
  const WidthOneParams p(1, 0);
  auto d = decompose_plane({0, 0}, p);
  CHECK(d.lattice_part == LatticeVector{0, 0});
  CHECK(d.tile_part == LatticeVector{0, 0});
  d = decompose_plane({2, 1}, p);
  CHECK(d.lattice_part == LatticeVector{1, 1});
  CHECK(d.tile_part == LatticeVector{1, 0});
  d = decompose_plane({-1, 0}, p);
  CHECK(d.lattice_part == LatticeVector{-1, -1});
  CHECK(d.tile_part == LatticeVector{0, 1});
}

TEST_CASE("condition (i) examples") {
  const WidthOneParams p(1, 0);
  CHECK(condition_i(kNineS, p));
  CHECK_FALSE(condition_i(LatticeSet{{0, 0}, {-2, 1}, {1, 1}}, p));
  CHECK(condition_i(LatticeSet{{0, 0}}, p));
}

TEST_CASE("condition (ii) examples") {
  for (std::int64_t k = 1; k <= 4; ++k) {
    const WidthOneParams p(k, k - 1);
    const SublatticeBasis b(p);
    CHECK(condition_ii(LatticeSet{{0, 0}, b.w1, b.w1 + b.w2}, p));
    CHECK_FALSE(condition_ii(LatticeSet{{0, 0}, b.w1, b.w2}, p));
  }
  const WidthOneParams p20(2, 0);
  CHECK(condition_ii(LatticeSet{{0, 0}, SublatticeBasis(p20).w1}, p20));
  CHECK(condition_i(LatticeSet{{0, 0}, SublatticeBasis(p20).w1}, p20));
  // Outside the sublattice.
  CHECK_FALSE(condition_ii(LatticeSet{{0, 0}, {1, 0}}, WidthOneParams(1, 0)));
  // Translation invariance of both conditions.
  const LatticeSet moved = kNineS.translated({5, -7});
  CHECK(condition_i(moved, {1, 0}));
  CHECK(condition_ii(kNineS.translated(SublatticeBasis({1, 0}).at(3, -2)), {1, 0}));
}

TEST_CASE("gs_graph_connected") {
  const WidthOneParams p(1, 0);
  const SublatticeBasis b(p);
  CHECK(gs_graph_connected(LatticeSet{{0, 0}, b.w1, b.w1 + b.w2}, p));
  CHECK_FALSE(gs_graph_connected(LatticeSet{{0, 0}, 2 * b.w1}, p));
  CHECK(gs_graph_connected(LatticeSet{{0, 0}}, p));
  CHECK_THROWS_AS(gs_graph_connected(LatticeSet{{0, 0}, {1, 0}}, p), Error);
  // The diagonal step only exists when k = l + 1.
  const WidthOneParams q(2, 0);
  const SublatticeBasis c(q);
  CHECK_FALSE(gs_graph_connected(LatticeSet{{0, 0}, c.w1 + c.w2}, q));
}

TEST_CASE("condition (i) implies a connected graph") {
  for (const WidthOneParams& p : kTested) {
    const SublatticeBasis b(p);
    for (unsigned mask = 1; mask < 512; ++mask) {
      std::vector<LatticeVector> v;
      for (int c = 0; c < 9; ++c) {
        if (mask >> c & 1) v.push_back(b.at(c % 3, c / 3));
      }
      const LatticeSet s(std::move(v));
      if (condition_i(s, p)) CHECK(gs_graph_connected(s, p));
    }
  }
}

TEST_CASE("product_pair") {
  const MirrorPairReport tt = product_pair(kTriangle, kTriangle);
  CHECK(tt.k.dim() == 4);
  CHECK(tt.k.size() == 9);
  CHECK(tt.homometric);
  CHECK(tt.nontrivial);
  CHECK_FALSE(product_pair(kTriangle, LatticeSet{{0, 0}}).nontrivial);
  const LatticeSet seg{LatticeVector{0}, LatticeVector{1}};
  const MirrorPairReport ss = product_pair(seg, seg);
  CHECK(ss.k.dim() == 2);
  CHECK(ss.homometric);
  CHECK_FALSE(ss.nontrivial);
}

TEST_CASE("corollary generator") {
  const MirrorPairReport tri = corollary_pair({1, 0}, {0, 1, 0, 1, 0, 1});
  CHECK(tri.s.size() == 3);
  CHECK(tri.k.size() == 9);
  CHECK(tri.homometric);
  CHECK(tri.nontrivial);
  CHECK(canonical_form(tri.k) == canonical_form(mirror_pair(kNineS, kTriangle).k));

  const MirrorPairReport seg = corollary_pair({1, 0}, {0, 1, 0, 0, 0, 1});
  CHECK(seg.s.size() == 2);
  CHECK_FALSE(seg.nontrivial);

  const MirrorPairReport point = corollary_pair({1, 0}, {0, 1, 0, 1, 1, 1});
  CHECK(point.s.size() == 1);
  CHECK_FALSE(point.nontrivial);

  CHECK_THROWS_WITH_AS(corollary_pair({2, 0}, {0, 1, 0, 1, 0, 1}),
                       doctest::Contains("k = l + 1"), Error);
  CHECK_THROWS_AS(corollary_pair({1, 0}, {0, 1, 3, 4, 0, 0}), Error);  // empty region
}

TEST_CASE("hexagon parameters") {
  HexagonParams h{0, 2, 0, 2, -1, 1};
  CHECK_NOTHROW(h.validate());
  CHECK(h.contains(1, 1));
  CHECK_FALSE(h.contains(2, 0));
  CHECK(hexagon_set({1, 0}, h).size() == 7);
  CHECK_THROWS_AS((HexagonParams{1, 0, 0, 0, 0, 0}.validate()), Error);
  CHECK_THROWS_AS((HexagonParams{0, 0, 0, 0, 1, 2}.validate()), Error);
}
