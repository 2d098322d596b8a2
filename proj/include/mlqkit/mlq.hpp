#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "combinat.hpp"
#include "errors.hpp"

namespace mlqkit {

// Ball configuration on an L x n array. rows[0] is B_1, the bottom row.
// Columns are 1-indexed and every row is kept sorted. The same type doubles
// as a generalized multiline queue; only fm_label and the statistics built
// on it insist on weakly decreasing row sizes.
struct MultilineQueue {
  int n = 0;
  std::vector<std::vector<int>> rows;

  int height() const { return static_cast<int>(rows.size()); }
  bool has(int r, int c) const {
    if (r < 1 || r > height()) return false;
    const auto& row = rows[r - 1];
    return std::binary_search(row.begin(), row.end(), c);
  }
  auto operator<=>(const MultilineQueue&) const = default;
};

using GeneralizedMLQ = MultilineQueue;

struct Site {
  int row = 0;
  int col = 0;
  auto operator<=>(const Site&) const = default;
};

inline void trim_top(MultilineQueue& m) {
  while (!m.rows.empty() && m.rows.back().empty()) m.rows.pop_back();
}

// Sorts rows, checks ranges and drops empty rows at the top.
inline MultilineQueue make_mlq(int n, std::vector<std::vector<int>> rows) {
  MultilineQueue m{n, std::move(rows)};
  for (auto& row : m.rows) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw ShapeError("repeated column in a row");
    for (int c : row)
      if (c < 1 || c > n)
        throw ShapeError("column " + std::to_string(c) + " outside 1.." + std::to_string(n));
  }
  trim_top(m);
  return m;
}

inline std::vector<int> row_sizes(const MultilineQueue& m) {
  std::vector<int> s;
  for (const auto& row : m.rows) s.push_back(static_cast<int>(row.size()));
  return s;
}

inline bool has_valid_shape(const MultilineQueue& m) {
  for (int r = 1; r < m.height(); ++r)
    if (m.rows[r].size() > m.rows[r - 1].size()) return false;
  return m.rows.empty() || !m.rows.back().empty();
}

inline void require_shape(const MultilineQueue& m) {
  if (!has_valid_shape(m)) throw ShapeError("row sizes must weakly decrease upward");
}

// The partition lambda with lambda' equal to the row sizes.
inline Partition mlq_shape(const MultilineQueue& m) {
  require_shape(m);
  return conjugate(row_sizes(m));
}

enum class TieBreak { LeftToRight, RightToLeft };

// FM labeling. labels[r-1][c-1] is the label of the ball at (r,c), 0 if the
// site is empty. pair_to[r-1][c-1] is the row r-1 column the ball pairs to
// (0 in row 1 and at empty sites). wraps[l][r] counts wrapping pairings of
// label-l balls leaving row r.
struct LabelArray {
  int n = 0;
  int L = 0;
  std::vector<std::vector<int>> labels;
  std::vector<std::vector<int>> pair_to;
  std::vector<std::vector<int>> wraps;

  int at(int r, int c) const {
    if (r < 1 || r > L || c < 1 || c > n) return 0;
    return labels[r - 1][c - 1];
  }
};

inline LabelArray fm_label(const MultilineQueue& m, TieBreak tie = TieBreak::LeftToRight) {
  require_shape(m);
  const int n = m.n, L = m.height();
  LabelArray la;
  la.n = n;
  la.L = L;
  la.labels.assign(L, std::vector<int>(n, 0));
  la.pair_to.assign(L, std::vector<int>(n, 0));
  la.wraps.assign(L + 1, std::vector<int>(L + 1, 0));
  for (int r = L; r >= 2; --r) {
    auto& lab = la.labels[r - 1];
    for (int c : m.rows[r - 1])
      if (lab[c - 1] == 0) lab[c - 1] = r;
    std::vector<int> order(m.rows[r - 1]);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      if (lab[a - 1] != lab[b - 1]) return lab[a - 1] > lab[b - 1];
      return tie == TieBreak::LeftToRight ? a < b : a > b;
    });
    std::vector<char> free(n + 1, 0);
    for (int c : m.rows[r - 2]) free[c] = 1;
    for (int c : order) {
      int d = 0;
      for (int k = 0; k < n && d == 0; ++k) {
        int cand = (c - 1 + k) % n + 1;
        if (free[cand]) d = cand;
      }
      if (d == 0) throw ShapeError("row " + std::to_string(r - 1) + " has too few balls");
      free[d] = 0;
      la.pair_to[r - 1][c - 1] = d;
      la.labels[r - 2][d - 1] = lab[c - 1];
      if (d < c) ++la.wraps[lab[c - 1]][r];
    }
  }
  if (L >= 1)
    for (int c : m.rows[0])
      if (la.labels[0][c - 1] == 0) la.labels[0][c - 1] = 1;
  return la;
}

inline Composition type_of(const LabelArray& la) {
  if (la.L == 0) return Composition(la.n, 0);
  return la.labels[0];
}

inline Composition mlq_type(const MultilineQueue& m) { return type_of(fm_label(m)); }

inline StrongComposition mlq_strtype(const MultilineQueue& m) { return compress(mlq_type(m)); }

inline int maj_of(const LabelArray& la) {
  int s = 0;
  for (int l = 2; l <= la.L; ++l)
    for (int r = 2; r <= l; ++r) s += la.wraps[l][r] * (l - r + 1);
  return s;
}

inline int maj(const MultilineQueue& m) { return maj_of(fm_label(m)); }

inline bool is_nonwrapping(const MultilineQueue& m) { return maj(m) == 0; }

// A word with segment boundaries: seg_ends[k] is one past the last letter of
// segment k. sites[p] is the ball that letter p was read from.
struct Word {
  std::vector<int> letters;
  std::vector<std::size_t> seg_ends;
  std::vector<Site> sites;

  // Segments joined by '.', as in 53.432.5431.
  std::string str() const {
    std::string s;
    std::size_t start = 0;
    for (std::size_t k = 0; k < seg_ends.size(); ++k) {
      if (k) s += '.';
      for (std::size_t p = start; p < seg_ends[k]; ++p) s += std::to_string(letters[p]);
      start = seg_ends[k];
    }
    for (std::size_t p = start; p < letters.size(); ++p) s += std::to_string(letters[p]);
    return s;
  }
};

// Rows top to bottom, each right to left, recording columns.
inline Word row_word(const MultilineQueue& m) {
  Word w;
  for (int r = m.height(); r >= 1; --r) {
    const auto& row = m.rows[r - 1];
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      w.letters.push_back(*it);
      w.sites.push_back({r, *it});
    }
    w.seg_ends.push_back(w.letters.size());
  }
  return w;
}

// Columns left to right, each top to bottom, recording rows.
inline Word column_word(const MultilineQueue& m) {
  Word w;
  for (int c = 1; c <= m.n; ++c) {
    for (int r = m.height(); r >= 1; --r)
      if (m.has(r, c)) {
        w.letters.push_back(r);
        w.sites.push_back({r, c});
      }
    w.seg_ends.push_back(w.letters.size());
  }
  return w;
}

inline std::vector<int> content_monomial(const MultilineQueue& m) {
  std::vector<int> e(m.n, 0);
  for (const auto& row : m.rows)
    for (int c : row) ++e[c - 1];
  return e;
}

// M_alpha: a ball at (r,i) iff r <= alpha_i.
inline MultilineQueue straight_mlq(const Composition& alpha) {
  MultilineQueue m;
  m.n = static_cast<int>(alpha.size());
  int L = alpha.empty() ? 0 : *std::max_element(alpha.begin(), alpha.end());
  m.rows.assign(std::max(L, 0), {});
  for (int r = 1; r <= L; ++r)
    for (int i = 1; i <= m.n; ++i)
      if (alpha[i - 1] >= r) m.rows[r - 1].push_back(i);
  return m;
}

// Calls fn(M) for every M in MLQ_lambda on n columns. Rows are chosen top to
// bottom, each in colex order.
template <class Fn>
void for_each_mlq(const Partition& lam, int n, Fn&& fn) {
  Partition lc = conjugate(lam);
  if (!lc.empty() && n < lc.front())
    throw TooFewColumnsError("need at least " + std::to_string(lc.front()) + " columns");
  const int L = static_cast<int>(lc.size());
  std::vector<std::vector<std::vector<int>>> choices(L);
  for (int r = 0; r < L; ++r) choices[r] = subsets_colex(n, lc[r]);
  MultilineQueue m;
  m.n = n;
  m.rows.assign(L, {});
  std::function<void(int)> rec = [&](int r) {
    if (r < 0) {
      fn(static_cast<const MultilineQueue&>(m));
      return;
    }
    for (const auto& s : choices[r]) {
      m.rows[r] = s;
      rec(r - 1);
    }
  };
  rec(L - 1);
}

inline std::vector<MultilineQueue> enumerate_mlq(const Partition& lam, int n) {
  std::vector<MultilineQueue> out;
  for_each_mlq(lam, n, [&](const MultilineQueue& m) { out.push_back(m); });
  return out;
}

inline long long count_mlq(const Partition& lam, int n) {
  long long c = 1;
  for (int k : conjugate(lam)) c *= binomial(n, k);
  return c;
}

struct Strand {
  std::vector<Site> balls;  // top ball first
  int length() const { return static_cast<int>(balls.size()); }
  int anchor() const { return balls.back().col; }
};

// Maximal pairing chains under the canonical pairing.
inline std::vector<Strand> strands_of(const MultilineQueue& m, const LabelArray& la) {
  const int L = m.height();
  std::vector<std::vector<char>> hit(L + 1, std::vector<char>(m.n + 1, 0));
  for (int r = 2; r <= L; ++r)
    for (int c : m.rows[r - 1]) hit[r - 1][la.pair_to[r - 1][c - 1]] = 1;
  std::vector<Strand> out;
  for (int r = L; r >= 1; --r)
    for (int c : m.rows[r - 1]) {
      if (r < L && hit[r][c]) continue;
      Strand s;
      int rr = r, cc = c;
      while (true) {
        s.balls.push_back({rr, cc});
        if (rr == 1) break;
        cc = la.pair_to[rr - 1][cc - 1];
        --rr;
      }
      out.push_back(std::move(s));
    }
  std::sort(out.begin(), out.end(), [](const Strand& a, const Strand& b) { return a.anchor() < b.anchor(); });
  return out;
}

inline std::vector<Strand> strands(const MultilineQueue& m) { return strands_of(m, fm_label(m)); }

// Keeps rows 1..k.
inline MultilineQueue truncate(const MultilineQueue& m, int k) {
  MultilineQueue t = m;
  if (k < static_cast<int>(t.rows.size())) t.rows.resize(k);
  trim_top(t);
  return t;
}

inline std::string to_string(const MultilineQueue& m) {
  std::string s;
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    s += r ? ",{" : "{";
    for (std::size_t k = 0; k < m.rows[r].size(); ++k) {
      if (k) s += ",";
      s += std::to_string(m.rows[r][k]);
    }
    s += "}";
  }
  return "(" + s + ")";
}

}  // namespace mlqkit
