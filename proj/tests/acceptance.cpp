// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "latcov/enumerate.hpp"
#include "latcov/homometry.hpp"
#include "latcov/invariants.hpp"
#include "latcov/reconstruct.hpp"
#include "latcov/search.hpp"
#include "oracles.hpp"

using namespace latcov;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<LatticeSet> boxes_up_to_5x4() {
  // Every set fitting 5x4 or 4x5; both orientations of the box.
  auto a = enumerate_lattice_convex(5, 4);
  const auto b = enumerate_lattice_convex(4, 5);
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

Outcome search_reproduction() {
  Outcome o;
  SearchOptions opts;
  opts.match_corollary = true;
  auto t0 = Clock::now();
  const SearchReport one = homometric_classes(6, 5, opts);
  const double t_single = seconds_since(t0);
  opts.jobs = 8;
  t0 = Clock::now();
  const SearchReport eight = homometric_classes(6, 5, opts);
  const double t_sharded = seconds_since(t0);

  if (one.total_sets != 53524) o.fail("enumerated " + std::to_string(one.total_sets) + " sets");
  if (one.pair_count() < 1) o.fail("no nontrivial pair");
  if (one.matched_count() != one.pair_count()) {
    o.fail(std::to_string(one.pair_count() - one.matched_count()) + " unmatched pairs");
  }
  for (const auto& c : one.classes) {
    for (const auto& p : c.pairs) {
      const auto a = oracle::from(c.members[p.first]), b = oracle::from(c.members[p.second]);
      if (!p.verified || oracle::covariogram(a) != oracle::covariogram(b) ||
          oracle::same_class(a, b)) {
        o.fail("a reported pair is not nontrivially homometric");
      }
      if (p.match) {
        const MirrorPairReport gen = corollary_pair(p.match->params, p.match->hex);
        const auto& kt = p.match->swapped ? gen.l : gen.k;
        const auto& lt = p.match->swapped ? gen.k : gen.l;
        const auto dk = p.match->map_k.matrix().det(), dl = p.match->map_l.matrix().det();
        if (p.match->map_k(c.members[p.first]) != kt || p.match->map_l(c.members[p.second]) != lt ||
            (dk != 1 && dk != -1) || (dl != 1 && dl != -1)) {
          o.fail("an affine witness does not map the pair onto its hexagon-family instance");
        }
      }
    }
  }
  if (eight.pair_count() != one.pair_count() || eight.matched_count() != one.matched_count()) {
    o.fail("8-shard run differs from single-threaded run");
  } else {
    for (std::size_t i = 0; i < one.classes.size(); ++i) {
      if (one.classes[i].members != eight.classes[i].members) o.fail("class order differs");
    }
  }
  if (t_single > 600) o.fail("single-threaded run exceeded 10 minutes");
  if (t_sharded > 120) o.fail("8-shard run exceeded 2 minutes");
  std::ostringstream d;
  d << "pairs=" << one.pair_count() << " matched=" << one.matched_count() << " sets=" << one.total_sets
    << " single=" << t_single << "s sharded8=" << t_sharded << "s";
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome uniqueness_oracle(const std::vector<LatticeSet>& sets) {
  Outcome o;
  std::size_t certified = 0;
  for (const auto& k : sets) {
    const auto s = oracle::from(k);
    const auto inv = oracle::invariants(s, 6);
    if (invariants_direct(k).certified != inv.certified) o.fail("certificate disagrees with oracle");
    if (!inv.certified) continue;
    ++certified;
    const Covariogram g = compute_covariogram(k);
    const auto [w, h] = default_box(g);
    const auto classes = reconstruct_all(g, w, h);
    if (classes.size() != 1 || classes[0] != canonical_form(k)) {
      o.fail("certified set " + to_string(k) + " has " + std::to_string(classes.size()) + " classes");
    }
    // Independent check: no other set in the enumeration shares g.
    for (const auto& other : sets) {
      if (other.size() == k.size() && !oracle::same_class(oracle::from(other), s) &&
          compute_covariogram(other) == g) {
        o.fail("certified set " + to_string(k) + " has a homometric partner");
      }
    }
  }
  // Frozen from the independent enumerator: 24 certified sets in each
  // orientation, 12 of which fit 4x4 and are counted once.
  if (certified != 36) o.fail("certified count " + std::to_string(certified));
  if (o.pass) o.detail = "sets=" + std::to_string(sets.size()) + " certified=" + std::to_string(certified);
  return o;
}

Outcome determined_invariants(const std::vector<LatticeSet>& sets) {
  Outcome o;
  for (const auto& k : sets) {
    const InvariantRecord direct = invariants_direct(k);
    const InvariantRecord from_g = invariants_from_covariogram(compute_covariogram(k));
    if (direct.m_prime != from_g.m_prime || direct.m_doubleprime != from_g.m_doubleprime ||
        direct.m != from_g.m || direct.delta != from_g.delta || direct.normals != from_g.normals) {
      o.fail("mismatch on " + to_string(k));
    }
    for (const auto& u : from_g.normals) {
      if (std::find(from_g.normals.begin(), from_g.normals.end(), -u) == from_g.normals.end()) {
        o.fail("normals not closed under negation on " + to_string(k));
      }
    }
  }
  if (o.pass) o.detail = "sets=" + std::to_string(sets.size());
  return o;
}

Outcome edge_recovery() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::size_t normals = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto s = oracle::random_convex(rng, 12, 8);
    const LatticeSet k = oracle::to(s);
    const Covariogram g = compute_covariogram(k);
    for (const auto& e : convex_hull(difference_set(k)).edges) {
      const oracle::P u{e.direction.y(), -e.direction.x()};
      oracle::Pts want = oracle::support(s, u);
      const auto opp = oracle::support(s, {-u.first, -u.second});
      want.insert(opp.begin(), opp.end());
      const EdgePairSketch sk = edge_pair_from_covariogram(g, {u.first, u.second});
      if (!oracle::same_class(oracle::from(sk.combined()), want)) {
        o.fail("edge pair mismatch on " + to_string(k));
      }
      ++normals;
    }
  }
  if (o.pass) o.detail = "sets=1000 normals=" + std::to_string(normals);
  return o;
}

Outcome condition_equivalence() {
  Outcome o;
  std::size_t n = 0, both = 0;
  for (const WidthOneParams p : {WidthOneParams(1, 0), WidthOneParams(2, 0), WidthOneParams(2, 1),
                                 WidthOneParams(3, 2)}) {
    const SublatticeBasis b(p);
    const LatticeSet t = width_one_T(p);
    for (unsigned mask = 1; mask < 512; ++mask) {
      std::vector<LatticeVector> v;
      for (int c = 0; c < 9; ++c) {
        if (mask >> c & 1) v.push_back(b.at(c % 3, c / 3));
      }
      const LatticeSet s(std::move(v));
      const bool ci = condition_i(s, p), cii = condition_ii(s, p);
      // Condition (i) straight from the definition.
      const auto os = oracle::from(s), ot = oracle::from(t);
      oracle::Pts sum;
      for (auto a : os) {
        for (auto c : ot) sum.insert({a.first + c.first, a.second + c.second});
      }
      const bool ci_oracle = sum.size() == os.size() * ot.size() && oracle::lattice_convex(sum);
      if (ci != ci_oracle) o.fail("condition (i) disagrees with the definition");
      if (ci != cii) {
        o.fail("k=" + std::to_string(p.k()) + " l=" + std::to_string(p.ell()) + " S=" + to_string(s));
      }
      both += ci;
      ++n;
    }
  }
  if (n != 511 * 4) o.fail("instance count " + std::to_string(n));
  if (o.pass) o.detail = "instances=" + std::to_string(n) + " holding=" + std::to_string(both);
  return o;
}

Outcome generator_sweep() {
  Outcome o;
  std::size_t n = 0, nontrivial = 0;
  for (std::int64_t k = 1; k <= 3; ++k) {
    const WidthOneParams p(k, k - 1);
    for (std::int64_t a2 = 0; a2 <= 3; ++a2) {
      for (std::int64_t b2 = 0; b2 <= 3; ++b2) {
        for (std::int64_t g1 = -b2; g1 <= a2; ++g1) {
          for (std::int64_t g2 = g1; g2 <= std::min(a2, g1 + 3); ++g2) {
            const HexagonParams hex{0, a2, 0, b2, g1, g2};
            const MirrorPairReport r = corollary_pair(p, hex);
            const auto ok = oracle::from(r.k), ol = oracle::from(r.l), os = oracle::from(r.s);
            if (!oracle::lattice_convex(ok) || !oracle::lattice_convex(ol)) {
              o.fail("not lattice-convex for hex " + to_string(hex));
            }
            if (oracle::covariogram(ok) != oracle::covariogram(ol)) o.fail("not homometric");
            const bool expect = !oracle::centrally_symmetric(os);
            if (r.nontrivial != expect || oracle::same_class(ok, ol) == expect) {
              o.fail("nontriviality wrong for k=" + std::to_string(k) + " hex " + to_string(hex));
            }
            nontrivial += r.nontrivial;
            ++n;
          }
        }
      }
    }
  }
  if (o.pass) o.detail = "instances=" + std::to_string(n) + " nontrivial=" + std::to_string(nontrivial);
  return o;
}

Outcome plane_decomposition() {
  Outcome o;
  std::size_t n = 0;
  for (const WidthOneParams p : {WidthOneParams(1, 0), WidthOneParams(2, 0), WidthOneParams(2, 1),
                                 WidthOneParams(3, 2), WidthOneParams(5, 1)}) {
    const SublatticeBasis b(p);
    const auto tile = oracle::from(width_one_T(p));
    const auto idx = b.index();
    // p in the sublattice iff both Cramer numerators are divisible by the index.
    auto in_lattice = [&](std::int64_t x, std::int64_t y) {
      const auto d1 = x * b.w2.y() - y * b.w2.x();
      const auto d2 = b.w1.x() * y - b.w1.y() * x;
      return d1 % idx == 0 && d2 % idx == 0;
    };
    for (std::int64_t x = -20; x <= 20; ++x) {
      for (std::int64_t y = -20; y <= 20; ++y) {
        const PlaneDecomposition d = decompose_plane({x, y}, p);
        const auto lam = d.lattice_part, t = d.tile_part;
        if (lam + t != LatticeVector{x, y} || !tile.count({t.x(), t.y()}) ||
            !in_lattice(lam.x(), lam.y())) {
          o.fail("bad witness at (" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
        int hits = 0;
        for (auto [tx, ty] : tile) hits += in_lattice(x - tx, y - ty);
        if (hits != 1) o.fail("witness not unique");
        ++n;
      }
    }
  }
  if (o.pass) o.detail = "points=" + std::to_string(n);
  return o;
}

Outcome identity_suite() {
  Outcome o;
  std::mt19937_64 rng(99);
  std::size_t cases = 0;
  const IntMatrix2 gens[] = {{1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 0}, {-1, 0, 0, 1}, {0, -1, 1, 0}};
  std::uniform_int_distribution<int> pick(0, 4), shift(-30, 30), kind(0, 6);
  while (cases < 10000) {
    const int which = kind(rng);
    ++cases;
    if (which == 0) {  // symmetry, g(o), mass against the definition
      const auto s = oracle::random_subset(rng, 5, 12);
      const Covariogram g = compute_covariogram(oracle::to(s));
      const auto ref = oracle::covariogram(s);
      std::int64_t mass = 0;
      for (const auto& e : g.entries()) {
        mass += e.count;
        if (g.at(-e.offset) != e.count) o.fail("asymmetric");
        if (ref.at({e.offset.x(), e.offset.y()}) != e.count) o.fail("count differs from definition");
      }
      if (g.size() != ref.size()) o.fail("support differs from definition");
      const auto n = static_cast<std::int64_t>(s.size());
      if (g.at_origin() != n || mass != n * n || g.mass() != Wide(n) * n) o.fail("mass identity");
    } else if (which == 1) {  // translation and reflection invariance
      const auto s = oracle::random_subset(rng, 5, 10);
      const LatticeSet k = oracle::to(s);
      const LatticeVector t{shift(rng), shift(rng)};
      const Covariogram g = compute_covariogram(k);
      if (g != compute_covariogram(k.translated(t)) || g != compute_covariogram(k.negated())) {
        o.fail("translation or reflection changes g");
      }
    } else if (which == 2) {  // unimodular equivariance
      const auto s = oracle::random_subset(rng, 4, 9);
      const LatticeSet k = oracle::to(s);
      IntMatrix2 m = IntMatrix2::identity();
      for (int i = 0; i < 3; ++i) m = gens[pick(rng)] * m;
      const AffineMap2 f(m, {shift(rng), shift(rng)});
      const Covariogram g = compute_covariogram(k), ga = compute_covariogram(f(k));
      if (g.size() != ga.size()) o.fail("equivariance: support size");
      for (const auto& e : g.entries()) {
        if (ga.at(m * e.offset) != e.count) o.fail("equivariance: count");
      }
    } else if (which == 3) {  // direct-sum convolution identity
      const LatticeSet s = oracle::to(oracle::random_subset(rng, 6, 5));
      const LatticeSet t = oracle::to(oracle::random_subset(rng, 2, 4));
      if (!sum_is_direct(s, t)) {
        --cases;
        continue;
      }
      if (convolve(compute_covariogram(s), compute_covariogram(t)) !=
          compute_covariogram(direct_sum(s, t))) {
        o.fail("convolution identity");
      }
    } else if (which == 4) {  // product pairs in Z^4
      const auto a = oracle::random_subset(rng, 2, 5), b = oracle::random_subset(rng, 2, 5);
      const MirrorPairReport r = product_pair(oracle::to(a), oracle::to(b));
      std::vector<std::vector<std::int64_t>> pk, pl;
      for (auto [x, y] : a) {
        for (auto [u, v] : b) {
          pk.push_back({x, y, u, v});
          pl.push_back({x, y, -u, -v});
        }
      }
      if (!r.homometric || oracle::covariogram_nd(pk) != oracle::covariogram_nd(pl) ||
          r.k.dim() != 4 || r.k.size() != a.size() * b.size()) {
        o.fail("product pair not homometric");
      }
      const bool expect = !oracle::centrally_symmetric(a) && !oracle::centrally_symmetric(b);
      if (r.nontrivial != expect) o.fail("product pair nontriviality");
    } else if (which == 5) {  // delta bound on edge normals
      const auto s = oracle::random_convex(rng, 10);
      const auto normals = edge_normals(oracle::to(s));
      std::int64_t n = 1;
      for (const auto& u : normals) n = std::max({n, std::abs(u.x()), std::abs(u.y())});
      if (!delta_bound_check(normals, n)) o.fail("delta bound on " + to_string(oracle::to(s)));
    } else {  // delta bound on arbitrary spanning primitive families
      std::uniform_int_distribution<int> c(-6, 6), cnt(2, 6);
      std::vector<LatticeVector> u;
      const int m = cnt(rng);
      while (static_cast<int>(u.size()) < m) {
        const LatticeVector v{c(rng), c(rng)};
        if (!v.is_zero() && is_primitive(v)) u.push_back(v);
      }
      if (nonzero_dets(u).empty()) {
        --cases;
        continue;
      }
      std::int64_t n = 1;
      for (const auto& v : u) n = std::max({n, std::abs(v.x()), std::abs(v.y())});
      if (!delta_bound_check(u, n)) o.fail("delta bound on a primitive family");
    }
  }
  if (o.pass) o.detail = "cases=" + std::to_string(cases);
  return o;
}

Outcome enumeration_completeness() {
  Outcome o;
  std::size_t total = 0;
  for (int w = 1; w <= 3; ++w) {
    for (int h = 1; h <= 3; ++h) {
      std::set<oracle::Pts> got;
      for (const auto& k : enumerate_lattice_convex(w, h)) got.insert(oracle::from(k));
      const auto want = oracle::all_lattice_convex(w, h);
      if (got != want) {
        o.fail(std::to_string(w) + "x" + std::to_string(h) + ": " + std::to_string(got.size()) +
               " vs " + std::to_string(want.size()));
      }
      total += got.size();
    }
  }
  if (o.pass) o.detail = "boxes=9 sets=" + std::to_string(total);
  return o;
}

}  // namespace

int main() {
  const std::vector<LatticeSet> small = boxes_up_to_5x4();
  struct Criterion {
    const char* name;
    double budget;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"search reproduction 6x5", 600, search_reproduction},
      {"uniqueness oracle up to 5x4", 300, [&] { return uniqueness_oracle(small); }},
      {"determined invariants up to 5x4", 120, [&] { return determined_invariants(small); }},
      {"edge recovery on 1000 random sets", 60, edge_recovery},
      {"condition (i) = condition (ii)", 120, condition_equivalence},
      {"hexagon generator sweep", 60, generator_sweep},
      {"plane decomposition on [-20,20]^2", 10, plane_decomposition},
      {"covariogram identity suite", 60, identity_suite},
      {"enumeration completeness up to 3x3", 30, enumeration_completeness},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto t0 = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double t = seconds_since(t0);
    if (t > c.budget) out.fail("over budget");
    failed += !out.pass;
    std::printf("[%s] %d %s (%.2fs): %s\n", out.pass ? "PASS" : "FAIL", index, c.name, t,
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed ? 1 : 0;
}
