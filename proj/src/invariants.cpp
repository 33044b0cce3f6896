#include "latcov/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace latcov {

std::int64_t ExtCount::value() const {
  if (!value_) throw Error("ExtCount: value of infinity");
  return *value_;
}

std::strong_ordering operator<=>(const ExtCount& a, const ExtCount& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() <=> b.is_infinite();  // inf is largest
  }
  return *a.value_ <=> *b.value_;
}

std::string to_string(const ExtCount& c) {
  return c.is_infinite() ? "inf" : std::to_string(c.value());
}

ExtCount min(const ExtCount& a, const ExtCount& b) { return a <= b ? a : b; }

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (num <= 0 || den <= 0) throw Error("Fraction: expects positive numerator and denominator");
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  return Wide{a.num_} * b.den_ <=> Wide{b.num_} * a.den_;
}

std::string to_string(const Fraction& f) {
  return std::to_string(f.num()) + "/" + std::to_string(f.den());
}

std::vector<LatticeVector> edge_normals(const LatticeSet& k) {
  if (k.dim() != 2) throw Error("edge_normals: dimension must be 2");
  if (!spans_plane(k)) throw Error("edge_normals: set does not span the plane");
  if (!is_lattice_convex(k)) throw Error("edge_normals: set is not lattice-convex");
  std::vector<LatticeVector> out;
  for (const auto& e : convex_hull(k).edges) {
    // CCW direction (dx,dy) has outer normal (dy,-dx); already primitive.
    out.push_back({e.direction.y(), -e.direction.x()});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> nonzero_dets(std::span<const LatticeVector> vectors) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      Wide d = det(vectors[i], vectors[j]);
      if (d < 0) d = -d;
      if (d != 0) out.push_back(static_cast<std::int64_t>(d));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Fraction discrepancy(std::span<const LatticeVector> vectors) {
  auto d = nonzero_dets(vectors);
  if (d.empty()) throw Error("discrepancy: vectors do not span the plane");
  return Fraction(d.back(), d.front());
}

bool uniqueness_certified(const ExtCount& m, const Fraction& delta) {
  if (m.is_infinite()) return true;
  const Wide a = delta.num(), b = delta.den();
  return Wide{m.value()} * b * b >= a * a + a * b + b * b;
}

InvariantRecord invariants_direct(const LatticeSet& k) {
  const auto own = edge_normals(k);
  const Hull2 hull = convex_hull(k);

  InvariantRecord r;
  for (const auto& e : hull.edges) r.m_prime = min(r.m_prime, ExtCount(e.lattice_points));

  std::vector<LatticeVector> both(own);
  for (const auto& u : own) both.push_back(-u);
  std::sort(both.begin(), both.end());
  both.erase(std::unique(both.begin(), both.end()), both.end());

  // |F(K,u)| > 1 forces u to be an edge normal, so scanning these suffices.
  for (const auto& u : both) {
    const auto a = static_cast<std::int64_t>(support_set(k, u).size());
    const auto b = static_cast<std::int64_t>(support_set(k, -u).size());
    if (a > b && b > 1) r.m_doubleprime = min(r.m_doubleprime, ExtCount(a - b + 1));
  }
  r.m = min(r.m_prime, r.m_doubleprime);
  r.det_set = nonzero_dets(own);
  r.delta = discrepancy(own);
  r.certified = uniqueness_certified(r.m, r.delta);
  r.normals = std::move(both);
  return r;
}

bool delta_bound_check(std::span<const LatticeVector> normals, std::int64_t n) {
  if (normals.empty()) throw Error("delta_bound_check: no normals");
  if (n <= 0) throw Error("delta_bound_check: n must be positive");
  const Fraction d = discrepancy(normals);
  return Wide{d.num()} <= Wide{2} * n * n * d.den();
}

std::optional<std::pair<std::int64_t, std::int64_t>> certificate_k_range(const ExtCount& m,
                                                                        const Fraction& delta) {
  if (m.is_infinite()) return std::nullopt;
  const Wide a = delta.num(), b = delta.den();
  const Wide lo = ceil_div(a, b);
  const Wide hi = floor_div(Wide{m.value() - 1} * b, a);
  if (lo > hi) return std::nullopt;
  return std::pair{static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)};
}

}  // namespace latcov
