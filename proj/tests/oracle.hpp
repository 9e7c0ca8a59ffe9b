#pragma once

// Brute-force set-of-sets reference implementations. Deliberately naive and
// independent of the library's bitset machinery.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "hyperop/hypergraph.hpp"

namespace oracle {

using Face = std::set<unsigned>;
using Family = std::set<Face>;

inline bool subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
inline bool meets(const Face& a, const Face& b) {
  for (auto v : a)
    if (b.count(v)) return true;
  return false;
}

inline std::vector<Face> nonemptySubsets(const Face& s) {
  std::vector<unsigned> v(s.begin(), s.end());
  std::vector<Face> out;
  for (std::uint32_t m = 1; m < (1u << v.size()); ++m) {
    Face f;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (m >> i & 1u) f.insert(v[i]);
    out.push_back(f);
  }
  return out;
}

inline Family faces(const hyperop::AmbientComplex& L) {
  Family out;
  for (const auto& s : L.faces()) out.insert(Face(s.vertices().begin(), s.vertices().end()));
  return out;
}

inline Family of(const hyperop::Hypergraph& h) {
  Family out;
  for (const auto& s : h.simplices()) out.insert(Face(s.vertices().begin(), s.vertices().end()));
  return out;
}

inline Family closure(const Family& L, const Family& H) {
  Family out;
  for (const auto& s : L)
    for (const auto& t : H)
      if (subset(s, t)) out.insert(s);
  return out;
}

inline Family interior(const Family& L, const Family& H) {
  Family out;
  for (const auto& s : L) {
    bool ok = true;
    for (const auto& t : nonemptySubsets(s)) ok = ok && H.count(t);
    if (ok) out.insert(s);
  }
  return out;
}

inline Family complement(const Family& L, const Family& H) {
  Family out;
  for (const auto& s : L)
    if (!H.count(s)) out.insert(s);
  return out;
}

inline Family maximal(const Family& L) {
  Family out;
  for (const auto& s : L) {
    bool top = true;
    for (const auto& t : L) top = top && !(t != s && subset(s, t));
    if (top) out.insert(s);
  }
  return out;
}

inline Family ext(const Family& L, const Family& H) {
  return closure(L, complement(L, interior(L, complement(L, H))));
}
inline Family intr(const Family& L, const Family& H) {
  return interior(L, complement(L, closure(L, complement(L, H))));
}

inline Family nbd(const Family& L, const Family& H) {
  Family touched;
  for (const auto& s : L)
    for (const auto& t : H)
      if (meets(s, t)) touched.insert(s);
  return closure(L, touched);
}

/// Simplex-intersection BFS; lengths count simplices. -1 when unreachable.
inline int distance(const Family& L, const Face& a, const Face& b) {
  std::map<Face, int> d{{a, 1}};
  std::deque<Face> q{a};
  while (!q.empty()) {
    Face x = q.front();
    q.pop_front();
    if (x == b) return d[x];
    for (const auto& y : L)
      if (!d.count(y) && meets(x, y)) {
        d[y] = d[x] + 1;
        q.push_back(y);
      }
  }
  return -1;
}

inline bool isComplex(const Family& H) {
  for (const auto& s : H)
    for (const auto& t : nonemptySubsets(s))
      if (!H.count(t)) return false;
  return true;
}

inline Family external(const Family& L, const Family& Y) {
  Family out;
  for (const auto& s : L) {
    if (Y.count(s)) continue;
    bool ok = true;
    for (const auto& t : nonemptySubsets(s)) ok = ok && (t == s || Y.count(t));
    if (ok) out.insert(s);
  }
  return out;
}

/// Every subset of L as a Family, in no particular order.
inline std::vector<Family> allSubsets(const Family& L) {
  std::vector<Face> v(L.begin(), L.end());
  std::vector<Family> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << v.size()); ++m) {
    Family f;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (m >> i & 1u) f.insert(v[i]);
    out.push_back(f);
  }
  return out;
}

inline hyperop::Hypergraph toHypergraph(const hyperop::Ambient& L, const Family& f) {
  std::vector<hyperop::Simplex> s;
  for (const auto& face : f) s.emplace_back(std::vector<unsigned>(face.begin(), face.end()));
  return {L, s};
}

}  // namespace oracle
