#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace mlqkit {

// Partitions, weak and strong compositions are plain integer vectors. The
// predicates below check the invariants where it matters.
using Partition = std::vector<int>;
using Composition = std::vector<int>;
using StrongComposition = std::vector<int>;

inline int total(const std::vector<int>& v) {
  long long s = 0;
  for (int x : v) s += x;
  assert(s >= 0 && s < (1LL << 31));
  return static_cast<int>(s);
}

inline bool is_partition(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= 0) return false;
    if (i > 0 && v[i] > v[i - 1]) return false;
  }
  return true;
}

inline bool is_weak_composition(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

inline bool is_strong_composition(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x > 0; });
}

// Positive parts in weakly decreasing order.
inline Partition sort_parts(const Composition& a) {
  Partition p;
  for (int x : a)
    if (x > 0) p.push_back(x);
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

// Drop the zero parts, keeping order.
inline StrongComposition compress(const Composition& a) {
  StrongComposition g;
  for (int x : a)
    if (x != 0) g.push_back(x);
  return g;
}

inline Partition conjugate(const Partition& lam) {
  Partition c;
  if (lam.empty()) return c;
  for (int j = 1; j <= lam.front(); ++j) {
    int k = 0;
    for (int x : lam)
      if (x >= j) ++k;
    c.push_back(k);
  }
  return c;
}

inline bool dominates(const Partition& lam, const Partition& mu) {
  if (total(lam) != total(mu))
    throw DominanceSizeError("dominance needs equal sizes");
  int a = 0, b = 0;
  std::size_t len = std::max(lam.size(), mu.size());
  for (std::size_t i = 0; i < len; ++i) {
    a += i < lam.size() ? lam[i] : 0;
    b += i < mu.size() ? mu[i] : 0;
    if (a < b) return false;
  }
  return true;
}

// Pads a partition with zeros to length n.
inline Composition pad(const std::vector<int>& v, int n) {
  Composition out(v);
  if (static_cast<int>(out.size()) < n) out.resize(n, 0);
  return out;
}

// Every length-n weak composition sorting to lam, in decreasing
// lexicographic order.
inline std::vector<Composition> rearrangements(const Partition& lam, int n) {
  if (n < static_cast<int>(lam.size()))
    throw TooFewPositionsError("n=" + std::to_string(n) + " is less than the length of the partition");
  Composition a = pad(lam, n);
  std::sort(a.begin(), a.end(), std::greater<>());
  std::vector<Composition> out;
  do {
    out.push_back(a);
  } while (std::prev_permutation(a.begin(), a.end()));
  return out;
}

// All partitions of m in decreasing lexicographic order.
inline std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

// All weak compositions of m with exactly len parts, decreasing lex order.
inline std::vector<Composition> weak_compositions(int m, int len) {
  std::vector<Composition> out;
  if (len == 0) {
    if (m == 0) out.push_back({});
    return out;
  }
  Composition cur(len, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == len - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur[pos] = x;
      rec(pos + 1, left - x);
    }
  };
  rec(0, m);
  return out;
}

// All strong compositions of m, decreasing lex order.
inline std::vector<StrongComposition> strong_compositions(int m) {
  std::vector<StrongComposition> out;
  StrongComposition cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int x = left; x >= 1; --x) {
      cur.push_back(x);
      rec(left - x);
      cur.pop_back();
    }
  };
  rec(m);
  return out;
}

// k-subsets of {1..n} in colexicographic order.
inline std::vector<std::vector<int>> subsets_colex(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 1);
  while (true) {
    out.push_back(c);
    int j = 0;
    while (j < k) {
      int limit = (j + 1 < k) ? c[j + 1] : n + 1;
      if (c[j] + 1 < limit) break;
      ++j;
    }
    if (j == k) break;
    ++c[j];
    for (int t = 0; t < j; ++t) c[t] = t + 1;
  }
  return out;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Simple transposition s_i (1-indexed) acting on positions.
inline Composition swap_adjacent(Composition a, int i) {
  std::swap(a.at(i - 1), a.at(i));
  return a;
}

inline std::string to_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace mlqkit
