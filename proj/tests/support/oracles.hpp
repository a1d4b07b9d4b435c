#pragma once

// Test-only reference procedures. Each one is deliberately naive and shares
// no code path with the library routine it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace oracle {

// Enumerates all |T|^|S| assignments; true if one is a strict homomorphism.
inline bool brute_force_homomorphism_exists(const raag::SimplicialGraph& s,
                                            const raag::SimplicialGraph& t) {
  const auto n = s.vertex_count();
  const auto m = t.vertex_count();
  if (n == 0) return true;
  if (m == 0) return false;
  std::vector<std::size_t> f(n, 0);
  while (true) {
    bool ok = true;
    for (const auto& e : s.edges()) {
      if (f[e.u] == f[e.v] || !t.adjacent(f[e.u], f[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) return false;
  }
}

inline raag::SimplicialGraph triangle() {
  return raag::SimplicialGraph({"r", "g", "b"}, {{0, 1}, {1, 2}, {0, 2}});
}

inline raag::SimplicialGraph cycle(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<raag::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i + 1));
    edges.push_back({i, (i + 1) % n});
  }
  return raag::SimplicialGraph(labels, edges);
}

inline raag::SimplicialGraph complete(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<raag::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("k" + std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return raag::SimplicialGraph(labels, edges);
}

// Tries every permutation of s2 against s1.
inline bool brute_force_induced_isomorphic(const raag::SimplicialGraph& g,
                                           const std::vector<std::size_t>& s1,
                                           std::vector<std::size_t> s2) {
  if (s1.size() != s2.size()) return false;
  std::sort(s2.begin(), s2.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < s1.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < s1.size() && ok; ++j) {
        ok = g.adjacent(s1[i], s1[j]) == g.adjacent(s2[i], s2[j]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(s2.begin(), s2.end()));
  return false;
}

// Letter code 2 * vertex + inverse bit, matching vertex indices of the graph.
using Codes = std::vector<int>;

inline Codes reduce(const Codes& w) {
  Codes out;
  for (int c : w) {
    if (!out.empty() && out.back() == (c ^ 1)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

inline Codes inverse(const Codes& w) {
  Codes out(w.rbegin(), w.rend());
  for (auto& c : out) c ^= 1;
  return out;
}

// Freely reduced words of length <= max_length that the closure of
// {empty word} under w -> reduce(w * u r u^-1) reaches, where r runs over
// cyclic rotations of the edge commutators and their inverses and u over
// reduced words of length <= conjugator_length. Intermediate words are
// allowed up to intermediate_length letters. Every word found is trivial in
// the group; the search is a bounded normal-closure enumeration.
inline std::set<Codes> relator_closure(const raag::SimplicialGraph& g, std::size_t max_length,
                                       std::size_t intermediate_length,
                                       std::size_t conjugator_length) {
  std::vector<Codes> relators;
  for (const auto& e : g.edges()) {
    const int a = static_cast<int>(2 * e.u);
    const int b = static_cast<int>(2 * e.v);
    Codes r{a, b, a ^ 1, b ^ 1};
    for (const auto& base : {r, inverse(r)}) {
      for (std::size_t k = 0; k < 4; ++k) {
        Codes rot(base.begin() + static_cast<long>(k), base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(k));
        relators.push_back(rot);
      }
    }
  }
  std::vector<Codes> conjugators{{}};
  for (std::size_t len = 1; len <= conjugator_length; ++len) {
    std::vector<Codes> next;
    for (const auto& u : conjugators) {
      if (u.size() != len - 1) continue;
      for (int c = 0; c < static_cast<int>(2 * g.vertex_count()); ++c) {
        if (!u.empty() && u.back() == (c ^ 1)) continue;
        Codes v = u;
        v.push_back(c);
        next.push_back(v);
      }
    }
    conjugators.insert(conjugators.end(), next.begin(), next.end());
  }
  std::vector<Codes> pieces;
  for (const auto& u : conjugators) {
    for (const auto& r : relators) {
      Codes p = u;
      p.insert(p.end(), r.begin(), r.end());
      const auto ui = inverse(u);
      p.insert(p.end(), ui.begin(), ui.end());
      pieces.push_back(reduce(p));
    }
  }
  std::set<Codes> seen{{}};
  std::vector<Codes> frontier{{}};
  while (!frontier.empty()) {
    std::vector<Codes> next;
    for (const auto& w : frontier) {
      for (const auto& p : pieces) {
        Codes x = w;
        x.insert(x.end(), p.begin(), p.end());
        x = reduce(x);
        if (x.size() <= intermediate_length && seen.insert(x).second) next.push_back(x);
      }
    }
    frontier = std::move(next);
  }
  std::set<Codes> out;
  for (const auto& w : seen) {
    if (w.size() <= max_length) out.insert(w);
  }
  return out;
}

inline raag::Word to_word(const raag::SimplicialGraph& g, const Codes& codes) {
  raag::Word w;
  for (int c : codes) w.letters.push_back({g.label(static_cast<std::size_t>(c / 2)), (c & 1) ? -1 : 1});
  return w;
}

}  // namespace oracle
