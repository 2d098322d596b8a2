#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "combinat.hpp"
#include "errors.hpp"
#include "mlq.hpp"

namespace mlqkit {

enum class FillingKind { SSAF, SSQT };

// Filling of a composition diagram: column j (1-indexed) has shape[j-1]
// cells, columns[j-1][r-1] is the entry in row r.
struct CompositionFilling {
  Composition shape;
  std::vector<std::vector<int>> columns;
  FillingKind kind = FillingKind::SSAF;

  int at(int r, int j) const {
    if (j < 1 || j > static_cast<int>(columns.size())) return 0;
    const auto& col = columns[j - 1];
    if (r < 1 || r > static_cast<int>(col.size())) return 0;
    return col[r - 1];
  }
  int height() const { return shape.empty() ? 0 : *std::max_element(shape.begin(), shape.end()); }
  bool operator==(const CompositionFilling& o) const { return shape == o.shape && columns == o.columns; }
};

inline std::vector<int> filling_row(const CompositionFilling& f, int r) {
  std::vector<int> row;
  for (int j = 1; j <= static_cast<int>(f.shape.size()); ++j)
    if (f.shape[j - 1] >= r) row.push_back(f.at(r, j));
  return row;
}

// eta: row r of the queue is the set of entries in row r of the filling.
inline MultilineQueue filling_to_mlq(const CompositionFilling& f, int n = 0) {
  int maxe = 0;
  for (const auto& col : f.columns)
    for (int x : col) maxe = std::max(maxe, x);
  if (n == 0) n = std::max(static_cast<int>(f.shape.size()), maxe);
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= f.height(); ++r) {
    auto row = filling_row(f, r);
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw FillingError("row " + std::to_string(r) + " repeats an entry");
    rows.push_back(row);
  }
  try {
    return make_mlq(n, rows);
  } catch (const ShapeError& e) {
    throw FillingError(e.what());
  }
}

namespace detail {

inline bool ssaf_triple_ok(const CompositionFilling& f, int r) {
  const int w = static_cast<int>(f.shape.size());
  for (int k = 1; k <= w; ++k) {
    int a = f.at(r, k);
    if (a == 0) continue;
    for (int j = 1; j < k; ++j)
      if (f.at(r, j) <= a && !(f.at(r - 1, j) < a)) return false;
  }
  return true;
}

}  // namespace detail

inline bool is_ssaf(const CompositionFilling& f) {
  const int w = static_cast<int>(f.shape.size());
  if (static_cast<int>(f.columns.size()) != w) return false;
  for (int j = 1; j <= w; ++j) {
    if (static_cast<int>(f.columns[j - 1].size()) != f.shape[j - 1]) return false;
    if (f.shape[j - 1] > 0 && f.at(1, j) != j) return false;
    for (int r = 1; r <= f.shape[j - 1]; ++r) {
      if (f.at(r, j) < 1) return false;
      if (r > 1 && f.at(r, j) > f.at(r - 1, j)) return false;
    }
  }
  for (int r = 1; r <= f.height(); ++r) {
    auto row = filling_row(f, r);
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) return false;
    if (r > 1 && !detail::ssaf_triple_ok(f, r)) return false;
  }
  return true;
}

// a = T(r,i), b = T(r-1,i), c = T(r-1,j), i < j.
inline bool quinv_triple_ok(int a, int b, int c) {
  return (a <= b && b < c) || (b < c && c < a) || (c < a && a <= b);
}

inline bool is_ssqt(const CompositionFilling& f) {
  if (!is_partition(f.shape)) return false;
  const int w = static_cast<int>(f.shape.size());
  for (int j = 1; j <= w; ++j) {
    if (static_cast<int>(f.columns[j - 1].size()) != f.shape[j - 1]) return false;
    for (int x : f.columns[j - 1])
      if (x < 1) return false;
  }
  for (int r = 1; r <= f.height(); ++r) {
    auto row = filling_row(f, r);
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) return false;
    // Top cells of equal-height columns sit under a virtual +infinity, so
    // the degenerate triple forces them to increase.
    for (int i = 1; i < w; ++i)
      if (f.shape[i - 1] == r && f.shape[i] == r && f.at(r, i) > f.at(r, i + 1)) return false;
    if (r == 1) continue;
    for (int i = 1; i <= w; ++i) {
      if (f.shape[i - 1] < r) continue;
      for (int j = i + 1; j <= w; ++j)
        if (f.shape[j - 1] >= r - 1 && !quinv_triple_ok(f.at(r, i), f.at(r - 1, i), f.at(r - 1, j))) return false;
    }
  }
  return true;
}

// Haglund-Haiman-Loehr major index: sum of leg+1 over cells larger than the
// cell below.
inline int filling_maj(const CompositionFilling& f) {
  int s = 0;
  for (int i = 1; i <= static_cast<int>(f.shape.size()); ++i)
    for (int r = 2; r <= f.shape[i - 1]; ++r)
      if (f.at(r, i) > f.at(r - 1, i)) s += f.shape[i - 1] - r + 1;
  return s;
}

// Type of an SSQT read off its bottom row.
inline Composition filling_type(const CompositionFilling& f, int n) {
  Composition w(n, 0);
  for (int i = 1; i <= static_cast<int>(f.shape.size()); ++i)
    if (f.shape[i - 1] > 0) w.at(f.at(1, i) - 1) = f.shape[i - 1];
  return w;
}

namespace detail {

// Assigns the entries of `content` to the cells `cols` of row r, one at a
// time left to right; `ok(col, value)` checks the constraints that involve
// only that cell and finished rows. Collects up to `limit` solutions.
template <class Ok>
void assign_row(const std::vector<int>& cols, const std::vector<int>& content, Ok&& ok,
                std::vector<std::vector<int>>& solutions, std::size_t limit) {
  std::vector<int> pick(cols.size(), 0);
  std::vector<char> used(content.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (solutions.size() >= limit) return;
    if (k == cols.size()) {
      solutions.push_back(pick);
      return;
    }
    for (std::size_t v = 0; v < content.size(); ++v) {
      if (used[v] || !ok(k, pick, content[v])) continue;
      used[v] = 1;
      pick[k] = content[v];
      rec(k + 1);
      used[v] = 0;
    }
  };
  rec(0);
}

}  // namespace detail

// The SSQT of shape lambda with the row contents of M, by backtracking over
// whole rows bottom to top; a row is checked against the finished row below.
// Throws unless exactly one filling exists.
inline CompositionFilling mlq_to_ssqt(const MultilineQueue& m) {
  Partition lam = mlq_shape(m);
  CompositionFilling f;
  f.kind = FillingKind::SSQT;
  f.shape = lam;
  f.columns.assign(lam.size(), {});
  const int w = static_cast<int>(lam.size());
  std::vector<CompositionFilling> found;
  std::function<void(int)> rec = [&](int r) {
    if (found.size() >= 2) return;
    if (r > m.height()) {
      found.push_back(f);
      return;
    }
    std::vector<int> cols;
    for (int i = 1; i <= w; ++i)
      if (lam[i - 1] >= r) cols.push_back(i);
    auto ok = [&](std::size_t k, const std::vector<int>& pick, int a) {
      int i = cols[k];
      if (lam[i - 1] == r && k > 0 && lam[i - 2] == r && pick[k - 1] > a) return false;
      if (r == 1) return true;
      for (int j = i + 1; j <= w; ++j)
        if (lam[j - 1] >= r - 1 && !quinv_triple_ok(a, f.at(r - 1, i), f.at(r - 1, j))) return false;
      return true;
    };
    std::vector<std::vector<int>> sols;
    detail::assign_row(cols, m.rows[r - 1], ok, sols, static_cast<std::size_t>(-1));
    for (const auto& s : sols) {
      for (std::size_t k = 0; k < cols.size(); ++k) f.columns[cols[k] - 1].push_back(s[k]);
      rec(r + 1);
      for (std::size_t k = 0; k < cols.size(); ++k) f.columns[cols[k] - 1].pop_back();
      if (found.size() >= 2) return;
    }
  };
  rec(1);
  if (found.size() != 1)
    throw FillingError("expected a unique maximal-quinv filling for " + to_string(m) + ", found " +
                       std::to_string(found.size()));
  return found[0];
}

// All SSAF of shape alpha. Column j starts at j and weakly decreases, so
// every entry is at most the length of alpha.
inline std::vector<CompositionFilling> enumerate_ssaf(const Composition& alpha) {
  const int w = static_cast<int>(alpha.size());
  CompositionFilling f;
  f.kind = FillingKind::SSAF;
  f.shape = alpha;
  f.columns.assign(w, {});
  std::vector<CompositionFilling> out;
  std::function<void(int)> col = [&](int j) {
    if (j > w) {
      if (is_ssaf(f)) out.push_back(f);
      return;
    }
    auto& c = f.columns[j - 1];
    std::function<void(int)> cell = [&](int r) {
      if (r > alpha[j - 1]) {
        col(j + 1);
        return;
      }
      int top = r == 1 ? j : c.back();
      int bottom = r == 1 ? j : 1;
      for (int v = top; v >= bottom; --v) {
        c.push_back(v);
        cell(r + 1);
        c.pop_back();
      }
    };
    cell(1);
  };
  col(1);
  return out;
}

// The SSAF of shape type(N) with the row contents of N, by backtracking over
// whole fillings. Throws if the solution is not unique.
inline CompositionFilling mlq_to_ssaf(const MultilineQueue& m) {
  LabelArray la = fm_label(m);
  if (maj_of(la) != 0) throw NotNonwrappingError("SSAF needs a nonwrapping queue");
  Composition alpha = type_of(la);
  const int w = static_cast<int>(alpha.size());
  CompositionFilling f;
  f.kind = FillingKind::SSAF;
  f.shape = alpha;
  f.columns.assign(w, {});
  for (int j = 1; j <= w; ++j)
    if (alpha[j - 1] > 0) f.columns[j - 1].push_back(j);
  std::vector<CompositionFilling> found;
  std::function<void(int)> rec = [&](int r) {
    if (found.size() >= 2) return;
    if (r > m.height()) {
      found.push_back(f);
      return;
    }
    std::vector<int> cols;
    for (int j = 1; j <= w; ++j)
      if (alpha[j - 1] >= r) cols.push_back(j);
    if (cols.size() != m.rows[r - 1].size()) return;
    auto ok = [&](std::size_t k, const std::vector<int>& pick, int v) {
      int j = cols[k];
      if (v > f.at(r - 1, j)) return false;
      // Triples with the new cell on the right, and with it on the left for
      // columns already placed.
      for (int jj = 1; jj < j; ++jj) {
        int left = 0;
        for (std::size_t t = 0; t < k; ++t)
          if (cols[t] == jj) left = pick[t];
        if (left <= v && !(f.at(r - 1, jj) < v)) return false;
      }
      return true;
    };
    std::vector<std::vector<int>> sols;
    detail::assign_row(cols, m.rows[r - 1], ok, sols, static_cast<std::size_t>(-1));
    for (const auto& s : sols) {
      for (std::size_t k = 0; k < cols.size(); ++k) f.columns[cols[k] - 1].push_back(s[k]);
      rec(r + 1);
      for (std::size_t k = 0; k < cols.size(); ++k) f.columns[cols[k] - 1].pop_back();
      if (found.size() >= 2) return;
    }
  };
  if (m.height() >= 1) rec(2);
  else found.push_back(f);
  if (found.size() != 1)
    throw FillingError("expected a unique SSAF for " + to_string(m) + ", found " + std::to_string(found.size()));
  return found[0];
}

}  // namespace mlqkit
