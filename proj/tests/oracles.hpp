#pragma once

// Reference implementations written from the definitions, sharing no code
// with the library. Used only to cross-check it.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;
using Rows = std::vector<Vec>;
using QCoeff = std::map<int, long long>;  // q-degree -> coefficient
using Poly = std::map<Vec, QCoeff>;       // exponent -> coefficient

inline void add(Poly& p, const Vec& e, const QCoeff& c, long long scale = 1) {
  QCoeff& slot = p[e];
  for (auto [d, x] : c) {
    slot[d] += scale * x;
    if (slot[d] == 0) slot.erase(d);
  }
  if (slot.empty()) p.erase(e);
}

inline QCoeff mul(const QCoeff& a, const QCoeff& b) {
  QCoeff out;
  for (auto [d, x] : a)
    for (auto [e, y] : b) out[d + e] += x * y;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Brackets on a circle: repeatedly delete an open immediately followed,
// cyclically, by a close. kinds: +1 open, -1 close, 0 ignored.
inline std::vector<bool> circle_matched(const Vec& kinds) {
  std::vector<bool> matched(kinds.size(), false);
  Vec live;
  for (std::size_t p = 0; p < kinds.size(); ++p)
    if (kinds[p] != 0) live.push_back(static_cast<int>(p));
  bool again = true;
  while (again && live.size() >= 2) {
    again = false;
    for (std::size_t k = 0; k < live.size(); ++k) {
      std::size_t next = (k + 1) % live.size();
      if (kinds[live[k]] == 1 && kinds[live[next]] == -1) {
        matched[live[k]] = matched[live[next]] = true;
        int a = live[k], b = live[next];
        live.erase(std::remove_if(live.begin(), live.end(), [&](int x) { return x == a || x == b; }), live.end());
        again = true;
        break;
      }
    }
  }
  return matched;
}

// The same on a line.
inline std::vector<bool> line_matched(const Vec& kinds) {
  std::vector<bool> matched(kinds.size(), false);
  Vec live;
  for (std::size_t p = 0; p < kinds.size(); ++p)
    if (kinds[p] != 0) live.push_back(static_cast<int>(p));
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t k = 0; k + 1 < live.size(); ++k)
      if (kinds[live[k]] == 1 && kinds[live[k + 1]] == -1) {
        matched[live[k]] = matched[live[k + 1]] = true;
        live.erase(live.begin() + static_cast<long>(k), live.begin() + static_cast<long>(k) + 2);
        again = true;
        break;
      }
  }
  return matched;
}

struct Labeling {
  Vec type;
  int maj = 0;
};

// Balls of row r look for the nearest free ball of row r-1 weakly to their
// right around the cylinder, higher labels first and left to right.
inline Labeling fm(const Rows& rows, int n) {
  const int L = static_cast<int>(rows.size());
  std::vector<std::map<int, int>> label(L);
  Labeling out;
  for (int r = L - 1; r >= 1; --r) {
    for (int c : rows[r])
      if (!label[r].count(c)) label[r][c] = r + 1;
    std::set<int> free(rows[r - 1].begin(), rows[r - 1].end());
    for (int l = L; l >= 1; --l)
      for (int c : rows[r]) {
        if (label[r][c] != l) continue;
        auto it = free.lower_bound(c);
        bool wrapped = it == free.end();
        if (wrapped) it = free.begin();
        label[r - 1][*it] = l;
        if (wrapped) out.maj += l - (r + 1) + 1;
        free.erase(it);
      }
  }
  out.type.assign(n, 0);
  if (L > 0)
    for (int c : rows[0]) out.type[c - 1] = label[0].count(c) ? label[0][c] : 1;
  return out;
}

// Every queue with row sizes sizes on n columns, by bitmask.
inline void each_queue(const Vec& sizes, int n, const std::function<void(const Rows&)>& fn) {
  Rows rows(sizes.size());
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == sizes.size()) {
      fn(rows);
      return;
    }
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (__builtin_popcount(mask) != sizes[r]) continue;
      rows[r].clear();
      for (int c = 1; c <= n; ++c)
        if (mask >> (c - 1) & 1) rows[r].push_back(c);
      rec(r + 1);
    }
  };
  rec(0);
}

inline Vec conjugate(const Vec& lam) {
  Vec out;
  for (int k = 1; !lam.empty() && k <= lam.front(); ++k) {
    int c = 0;
    for (int x : lam) c += x >= k;
    out.push_back(c);
  }
  return out;
}

inline Vec column_counts(const Rows& rows, int n) {
  Vec e(n, 0);
  for (const auto& row : rows)
    for (int c : row) ++e[c - 1];
  return e;
}

// Sum of q^maj x^M over queues of shape lam whose type passes keep.
inline Poly queue_sum(const Vec& lam, int n, const std::function<bool(const Labeling&)>& keep, bool weight_maj) {
  Poly p;
  each_queue(conjugate(lam), n, [&](const Rows& rows) {
    Labeling l = fm(rows, n);
    if (keep(l)) add(p, column_counts(rows, n), {{weight_maj ? l.maj : 0, 1}});
  });
  return p;
}

inline Vec sorted_desc(Vec a) {
  std::sort(a.rbegin(), a.rend());
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline Poly P(const Vec& lam, int n) {
  return queue_sum(lam, n, [](const Labeling&) { return true; }, true);
}

inline Poly f(const Vec& alpha) {
  return queue_sum(sorted_desc(alpha), static_cast<int>(alpha.size()),
                   [&](const Labeling& l) { return l.type == alpha; }, true);
}

inline Poly atom(const Vec& alpha) {
  return queue_sum(sorted_desc(alpha), static_cast<int>(alpha.size()),
                   [&](const Labeling& l) { return l.maj == 0 && l.type == alpha; }, false);
}

// Schur polynomial from semistandard tableaux with entries at most n.
inline Poly schur(const Vec& mu, int n) {
  Poly p;
  Rows t;
  for (int len : mu) t.push_back(Vec(len, 0));
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < mu.size(); ++r)
    for (int c = 0; c < mu[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      Vec e(n, 0);
      for (const auto& row : t)
        for (int x : row) ++e[x - 1];
      add(p, e, {{0, 1}});
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int x = lo; x <= n; ++x) {
      t[r][c] = x;
      rec(k + 1);
    }
  };
  rec(0);
  return p;
}

// Coefficients of a symmetric polynomial in Schur polynomials, peeling the
// lexicographically largest monomial.
inline std::map<Vec, QCoeff> schur_coefficients(Poly p, int n) {
  std::map<Vec, QCoeff> out;
  while (!p.empty()) {
    Vec lead = p.rbegin()->first;
    QCoeff c = p.rbegin()->second;
    Vec mu = sorted_desc(lead);
    out[mu] = c;
    for (const auto& [e, x] : schur(mu, n)) add(p, e, mul(c, x), -1);
  }
  return out;
}

// Mason's conditions read literally: T(r,j) for r >= 1, zero outside.
inline bool is_ssaf(const Vec& alpha, const Rows& cols) {
  auto T = [&](int r, int j) {
    if (j < 1 || j > static_cast<int>(cols.size()) || r < 1 || r > static_cast<int>(cols[j - 1].size())) return 0;
    return cols[j - 1][r - 1];
  };
  int height = 0;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (static_cast<int>(cols[j].size()) != alpha[j]) return false;
    height = std::max(height, alpha[j]);
  }
  const int w = static_cast<int>(alpha.size());
  for (int r = 1; r <= height; ++r) {
    std::set<int> seen;
    for (int j = 1; j <= w; ++j)
      if (T(r, j) != 0 && !seen.insert(T(r, j)).second) return false;
  }
  for (int j = 1; j <= w; ++j)
    for (int r = 2; r <= alpha[j - 1]; ++r)
      if (T(r, j) > T(r - 1, j)) return false;
  for (int j = 1; j <= w; ++j)
    if (alpha[j - 1] != 0 && T(1, j) != j) return false;
  for (int j = 1; j <= w; ++j)
    for (int k = j + 1; k <= w; ++k)
      for (int r = 2; r <= height; ++r)
        if (T(r, k) != 0 && T(r, j) <= T(r, k) && !(T(r - 1, j) < T(r, k))) return false;
  return true;
}

// Every filling of shape alpha with entries in 1..max_entry.
inline std::vector<Rows> all_fillings(const Vec& alpha, int max_entry) {
  std::vector<Rows> out;
  Rows cols;
  for (int a : alpha) cols.push_back(Vec(a, 1));
  std::vector<std::pair<int, int>> cells;
  for (std::size_t j = 0; j < alpha.size(); ++j)
    for (int r = 0; r < alpha[j]; ++r) cells.emplace_back(static_cast<int>(j), r);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      out.push_back(cols);
      return;
    }
    for (int x = 1; x <= max_entry; ++x) {
      cols[cells[k].first][cells[k].second] = x;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace oracle
