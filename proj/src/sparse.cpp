#include "hyperop/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "hyperop/binomial.hpp"
#include "hyperop/errors.hpp"

namespace hyperop {

namespace {

std::vector<double> padded(int n, std::span<const double> p) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (p.size() > static_cast<std::size_t>(n))
    throw std::invalid_argument("more parameters than dimensions of the n-vertex simplex");
  std::vector<double> out(p.begin(), p.end());
  out.resize(static_cast<std::size_t>(n), 0.0);
  for (double v : out)
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("parameter outside [0,1]");
  return out;
}

// All (k+1)-subsets of {1..n} in lexicographic order.
template <typename F>
void forEachSubset(int n, int k, F&& f) {
  const int size = k + 1;
  if (size > n) return;
  std::vector<Vertex> v(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) v[static_cast<std::size_t>(i)] = static_cast<Vertex>(i + 1);
  while (true) {
    f(v);
    int i = size - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == static_cast<Vertex>(n - size + i + 1)) --i;
    if (i < 0) return;
    ++v[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j)
      v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j - 1)] + 1;
  }
}

bool facetsPresent(const std::vector<Vertex>& v, const std::set<std::vector<Vertex>>& below) {
  std::vector<Vertex> f(v.size() - 1);
  for (std::size_t skip = 0; skip < v.size(); ++skip) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i != skip) f[w++] = v[i];
    if (!below.count(f)) return false;
  }
  return true;
}

std::vector<Simplex> toSimplices(const std::set<std::vector<Vertex>>& s) {
  std::vector<Simplex> out;
  out.reserve(s.size());
  for (const auto& v : s) out.emplace_back(v);
  return out;
}

}  // namespace

DerivedDims derivedDims(int n, std::span<const double> p) {
  DerivedDims d;
  d.n = n;
  d.p = padded(n, p);
  if (d.p[0] != 1.0) throw ContractViolation("derived parameters need p_0 = 1");
  d.pPrime.assign(static_cast<std::size_t>(n), 0.0);
  d.pDoublePrime.assign(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    long double logMiss = 0.0L;
    for (int i = 0; i <= n - k - 1; ++i) {
      const double miss = 1.0 - d.p[static_cast<std::size_t>(k + i)];
      if (miss == 1.0) continue;
      logMiss += logPowBig(miss, binomial(static_cast<unsigned>(n - k - 1), static_cast<unsigned>(i)));
      if (std::isinf(logMiss)) break;
    }
    d.pPrime[static_cast<std::size_t>(k)] = static_cast<double>(1.0L - std::exp(logMiss));
    long double logHit = 0.0L;
    for (int i = 1; i <= k; ++i) {
      const double hit = d.p[static_cast<std::size_t>(i)];
      if (hit == 1.0) continue;
      logHit += logPowBig(hit, binomial(static_cast<unsigned>(k + 1), static_cast<unsigned>(i + 1)));
      if (std::isinf(logHit)) break;
    }
    d.pDoublePrime[static_cast<std::size_t>(k)] = static_cast<double>(std::exp(logHit));
  }
  return d;
}

std::size_t SparseFaces::count(int dim) const {
  return dim >= 0 && static_cast<std::size_t>(dim) < byDimension.size()
             ? byDimension[static_cast<std::size_t>(dim)].size()
             : 0;
}

std::size_t SparseFaces::size() const {
  std::size_t s = 0;
  for (const auto& level : byDimension) s += level.size();
  return s;
}

int SparseFaces::dimension() const {
  for (int d = static_cast<int>(byDimension.size()) - 1; d >= 0; --d)
    if (!byDimension[static_cast<std::size_t>(d)].empty()) return d;
  return -1;
}

Hypergraph SparseFaces::toHypergraph(const Ambient& L) const {
  std::vector<Simplex> all;
  for (const auto& level : byDimension) all.insert(all.end(), level.begin(), level.end());
  return {L, all};
}

SparseFaces sampleHypergraphTruncated(int n, std::span<const double> p, int r,
                                      BernoulliSource& coin) {
  const auto q = padded(n, p);
  SparseFaces out;
  out.n = n;
  const int top = std::min(r, n - 1);
  out.byDimension.resize(static_cast<std::size_t>(std::max(top, -1) + 1));
  for (int k = 0; k <= top; ++k)
    forEachSubset(n, k, [&](const std::vector<Vertex>& v) {
      if (coin.draw(q[static_cast<std::size_t>(k)]))
        out.byDimension[static_cast<std::size_t>(k)].emplace_back(v);
    });
  return out;
}

SparseFaces sampleComplexTruncated(int n, std::span<const double> q, int r, BernoulliSource& coin) {
  const auto pq = padded(n, q);
  SparseFaces out;
  out.n = n;
  const int top = std::min(r, n - 1);
  if (top < 0) return out;
  out.byDimension.resize(static_cast<std::size_t>(top + 1));
  std::set<std::vector<Vertex>> level;
  for (Vertex v = 1; v <= static_cast<Vertex>(n); ++v)
    if (coin.draw(pq[0])) level.insert({v});
  out.byDimension[0] = toSimplices(level);
  for (int k = 1; k <= top; ++k) {
    // Each k-clique is the extension of its first k vertices by a larger one.
    std::set<std::vector<Vertex>> next;
    std::vector<Vertex> cand;
    for (const auto& tau : level) {
      for (Vertex v = tau.back() + 1; v <= static_cast<Vertex>(n); ++v) {
        cand = tau;
        cand.push_back(v);
        if (facetsPresent(cand, level) && coin.draw(pq[static_cast<std::size_t>(k)]))
          next.insert(cand);
      }
    }
    level = std::move(next);
    out.byDimension[static_cast<std::size_t>(k)] = toSimplices(level);
  }
  return out;
}

SparseFaces interiorOf(const SparseFaces& h) {
  SparseFaces out;
  out.n = h.n;
  out.byDimension.resize(h.byDimension.size());
  std::set<std::vector<Vertex>> kept;
  for (std::size_t k = 0; k < h.byDimension.size(); ++k) {
    std::set<std::vector<Vertex>> next;
    for (const auto& s : h.byDimension[k]) {
      std::vector<Vertex> v(s.vertices().begin(), s.vertices().end());
      if (k == 0 || facetsPresent(v, kept)) next.insert(std::move(v));
    }
    kept = std::move(next);
    out.byDimension[k] = toSimplices(kept);
  }
  return out;
}

Algorithm1Output algorithm1Truncated(int n, std::span<const double> p, int r,
                                     BernoulliSource& coin) {
  if (r < 1) throw std::invalid_argument("truncation dimension must be >= 1");
  const DerivedDims d = derivedDims(n, p);
  Algorithm1Output out;
  out.hypergraph = sampleHypergraphTruncated(n, d.p, r, coin);
  out.complex = sampleComplexTruncated(n, d.pPrime, r, coin);
  return out;
}

SparseFaces algorithm2Truncated(int n, std::span<const double> p, int r, BernoulliSource& coin) {
  if (r < 1) throw std::invalid_argument("truncation dimension must be >= 1");
  const DerivedDims d = derivedDims(n, p);
  return interiorOf(sampleHypergraphTruncated(n, d.p, r, coin));
}

double deltaDimensionProbability(int n, std::span<const double> p, int r) {
  const auto q = padded(n, p);
  long double logNone = 0.0L;
  for (int k = r + 1; k < n; ++k) {
    if (q[static_cast<std::size_t>(k)] == 0.0) continue;
    logNone += logPowBig(1.0 - q[static_cast<std::size_t>(k)],
                         binomial(static_cast<unsigned>(n), static_cast<unsigned>(k + 1)));
  }
  return static_cast<double>(std::exp(logNone));
}

double countingBound(int n, int k, int r, double p1) {
  const auto m = static_cast<unsigned>(k * (r + 1));
  const BigInt choose = binomial(static_cast<unsigned>(n), m);
  if (choose == 0) return 0.0;
  const BigInt e = binomial(static_cast<unsigned>(n), 2) - binomial(m, 2);
  const long double logBound =
      std::log(choose.convert_to<long double>()) + (e > 0 ? logPowBig(1.0 - p1, e) : 0.0L);
  return static_cast<double>(std::exp(logBound));
}

}  // namespace hyperop
