#include "hyperop/metric.hpp"

#include <algorithm>
#include <deque>

#include "hyperop/errors.hpp"
#include "hyperop/operators.hpp"

namespace hyperop {

bool SimplexPath::isValid(const AmbientComplex& L) const {
  if (faces.empty()) return false;
  for (std::size_t i = 0; i + 1 < faces.size(); ++i)
    if (!L.meets(faces[i], faces[i + 1])) return false;
  return true;
}

bool SimplexPath::isBroad(const AmbientComplex& L) const {
  for (FaceId f : faces)
    if (!L.isMaximal(f)) return false;
  return true;
}

namespace {

// BFS on the face intersection graph; neighbours are found by mask
// intersection on the fly instead of a stored adjacency list.
std::vector<int> bfs(const AmbientComplex& L, FaceId a, std::vector<FaceId>* parent) {
  const std::size_t m = L.faceCount();
  std::vector<int> dist(m, -1);
  if (parent) parent->assign(m, m);
  std::deque<FaceId> queue{a};
  dist[a] = 1;
  while (!queue.empty()) {
    const FaceId x = queue.front();
    queue.pop_front();
    for (FaceId y = 0; y < m; ++y) {
      if (dist[y] >= 0 || !L.meets(x, y)) continue;
      dist[y] = dist[x] + 1;
      if (parent) (*parent)[y] = x;
      queue.push_back(y);
    }
  }
  return dist;
}

}  // namespace

std::vector<int> distancesFrom(const AmbientComplex& L, FaceId a) { return bfs(L, a, nullptr); }

std::optional<int> distance(const AmbientComplex& L, FaceId a, FaceId b) {
  const int d = bfs(L, a, nullptr)[b];
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<int> distance(const AmbientComplex& L, const Simplex& a, const Simplex& b) {
  return distance(L, L.idOf(a), L.idOf(b));
}

std::optional<SimplexPath> geodesic(const AmbientComplex& L, FaceId a, FaceId b) {
  std::vector<FaceId> parent;
  const auto dist = bfs(L, a, &parent);
  if (dist[b] < 0) return std::nullopt;
  SimplexPath path;
  for (FaceId x = b; x != a; x = parent[x]) path.faces.push_back(x);
  path.faces.push_back(a);
  std::reverse(path.faces.begin(), path.faces.end());
  return path;
}

std::pair<FaceId, FaceId> diametralPair(const AmbientComplex& L) {
  if (L.faceCount() == 0) throw Unreachable("diameter of the empty complex");
  int best = 0;
  std::pair<FaceId, FaceId> pair{0, 0};
  for (FaceId a = 0; a < L.faceCount(); ++a) {
    const auto dist = bfs(L, a, nullptr);
    for (FaceId b = 0; b < L.faceCount(); ++b) {
      if (dist[b] < 0) throw Unreachable("ambient complex is disconnected");
      if (dist[b] > best) {
        best = dist[b];
        pair = {a, b};
      }
    }
  }
  return pair;
}

int diameter(const AmbientComplex& L) {
  const auto [a, b] = diametralPair(L);
  return *distance(L, a, b);
}

Complex closedStar(const Ambient& L, Vertex v) {
  const FaceId vid = L->vertexFace(v);
  BitSet star(L->faceCount());
  for (FaceId s : L->superfaces(vid)) star.set(s);
  return closureDelta(Hypergraph(L, std::move(star)));
}

Complex nbd(const Hypergraph& h) {
  const auto& L = h.complex();
  BitSet touched(L.vertexCount());
  h.edges().forEach([&](std::size_t id) { touched |= L.vertexMask(id); });
  BitSet meeting(L.faceCount());
  for (FaceId id = 0; id < L.faceCount(); ++id)
    if (L.vertexMask(id).intersects(touched)) meeting.set(id);
  return closureDelta(Hypergraph(h.ambient(), std::move(meeting)));
}

Hypergraph nbdInv(const Hypergraph& h) {
  const auto& L = h.complex();
  BitSet out(L.faceCount());
  for (FaceId id = 0; id < L.faceCount(); ++id) {
    BitSet single(L.faceCount());
    single.set(id);
    if (nbd(Hypergraph(h.ambient(), std::move(single))).edges().isSubsetOf(h.edges()))
      out.set(id);
  }
  return Hypergraph(h.ambient(), std::move(out));
}

Hypergraph nbdInvByUnion(const Hypergraph& h) {
  const std::size_t m = h.complex().faceCount();
  if (m > 20) throw ExactModeUnavailable(m, 20);
  BitSet out(m);
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << m); ++pattern) {
    const auto candidate = Hypergraph::fromIndex(h.ambient(), pattern);
    if (nbd(candidate).edges().isSubsetOf(h.edges())) out |= candidate.edges();
  }
  return Hypergraph(h.ambient(), std::move(out));
}

Hypergraph extPower(const Hypergraph& h, int k) {
  Hypergraph cur = h;
  for (int i = 0; i < k; ++i) cur = extByComposition(cur);
  return cur;
}

Hypergraph intPower(const Hypergraph& h, int k) {
  Hypergraph cur = h;
  for (int i = 0; i < k; ++i) cur = interiorByComposition(cur);
  return cur;
}

Hypergraph extPowerByPaths(const Hypergraph& h, int k) {
  if (k == 0) return h;
  const auto& L = h.complex();
  // Layer 1: maximal faces containing an edge of H; each further layer adds
  // maximal faces meeting the previous one (paths may stay in place).
  BitSet layer(L.faceCount());
  h.edges().forEach([&](std::size_t id) {
    for (FaceId s : L.superfaces(id))
      if (L.isMaximal(s)) layer.set(s);
  });
  for (int step = 1; step < k; ++step) {
    BitSet next = layer;
    L.maximalFaces().forEach([&](std::size_t t) {
      layer.forEach([&](std::size_t u) {
        if (L.meets(t, u)) next.set(t);
      });
    });
    layer = std::move(next);
  }
  return closureDelta(Hypergraph(h.ambient(), std::move(layer)));
}

Hypergraph intPowerByPaths(const Hypergraph& h, int k) {
  if (k == 0) return h;
  const auto& L = h.complex();
  const BitSet holes = ~h.edges();
  BitSet reach(L.faceCount());
  for (FaceId t = 0; t < L.faceCount(); ++t)
    holes.forEach([&](std::size_t s) {
      if (L.meets(t, s)) reach.set(t);
    });
  for (int step = 1; step < k; ++step) {
    BitSet next = reach;
    for (FaceId t = 0; t < L.faceCount(); ++t)
      reach.forEach([&](std::size_t u) {
        if (L.meets(t, u)) next.set(t);
      });
    reach = std::move(next);
  }
  return Hypergraph(h.ambient(), ~reach);
}

PowerIndexPair minimalPowers(const Hypergraph& h) {
  PowerIndexPair out;
  {
    Hypergraph cur = complementGamma(h);
    int k = 0;
    while (!cur.isFull()) {
      Hypergraph next = extByComposition(cur);
      if (next == cur) {
        out.rDefined = false;
        k = 0;
        break;
      }
      cur = std::move(next);
      ++k;
    }
    out.r = k;
  }
  {
    Hypergraph cur = h;
    int k = 0;
    while (!cur.isEmpty()) {
      Hypergraph next = interiorByComposition(cur);
      if (next == cur) {
        out.tDefined = false;
        k = 0;
        break;
      }
      cur = std::move(next);
      ++k;
    }
    out.t = k;
  }
  return out;
}

}  // namespace hyperop
