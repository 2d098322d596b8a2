#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "combinat.hpp"
#include "errors.hpp"

namespace mlqkit {

// Semistandard Young tableau in French convention: rows[0] is the bottom
// row. Rows weakly increase to the right, columns strictly increase upward.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const {
    Partition s;
    for (const auto& r : rows)
      if (!r.empty()) s.push_back(static_cast<int>(r.size()));
    return s;
  }
  int max_entry() const {
    int m = 0;
    for (const auto& r : rows)
      for (int x : r) m = std::max(m, x);
    return m;
  }
  auto operator<=>(const Tableau&) const = default;
};

inline std::vector<int> tableau_content(const Tableau& t) {
  std::vector<int> c(t.max_entry(), 0);
  for (const auto& r : t.rows)
    for (int x : r) ++c[x - 1];
  return c;
}

inline bool is_semistandard(const Tableau& t) {
  if (!is_partition(t.shape()) || t.shape().size() != t.rows.size()) return false;
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      if (t.rows[r][c] < 1) return false;
      if (c > 0 && t.rows[r][c] < t.rows[r][c - 1]) return false;
      if (r > 0 && t.rows[r][c] <= t.rows[r - 1][c]) return false;
    }
  return true;
}

// Superstandard tableau: row j filled with j.
inline Tableau superstandard(const Partition& shape) {
  Tableau t;
  for (std::size_t j = 0; j < shape.size(); ++j) t.rows.push_back(std::vector<int>(shape[j], static_cast<int>(j) + 1));
  return t;
}

// All SSYT of the given shape and content, filled bottom row first, each row
// left to right.
inline std::vector<Tableau> enumerate_ssyt(const Partition& shape, const std::vector<int>& content) {
  if (!is_partition(shape)) throw SizeError("shape " + to_string(shape) + " is not a partition");
  if (total(shape) != total(content))
    throw SizeError("shape " + to_string(shape) + " and content " + to_string(content) + " differ in size");
  std::vector<Tableau> out;
  Tableau t;
  for (int len : shape) t.rows.push_back(std::vector<int>(len, 0));
  std::vector<int> left(content);
  const int m = static_cast<int>(content.size());
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t r, std::size_t c) {
    if (r == t.rows.size()) {
      out.push_back(t);
      return;
    }
    if (c == t.rows[r].size()) {
      rec(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
    for (int v = lo; v <= m; ++v) {
      if (left[v - 1] == 0) continue;
      --left[v - 1];
      t.rows[r][c] = v;
      rec(r, c + 1);
      ++left[v - 1];
    }
    t.rows[r][c] = 0;
  };
  rec(0, 0);
  return out;
}

// Rows from top to bottom, each left to right.
inline std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (auto r = t.rows.rbegin(); r != t.rows.rend(); ++r) w.insert(w.end(), r->begin(), r->end());
  return w;
}

// Lascoux-Schutzenberger charge of a word with partition content. Standard
// subwords are peeled by scanning right to left for 1, 2, ..., wrapping
// around; a letter found after a wrap sits to the right of its predecessor
// and raises the index by one.
inline int charge_word(std::vector<int> w) {
  std::vector<int> content;
  for (int x : w) {
    if (x < 1) throw ContentError("letters must be positive");
    if (static_cast<int>(content.size()) < x) content.resize(x, 0);
    ++content[x - 1];
  }
  for (std::size_t k = 1; k < content.size(); ++k)
    if (content[k] > content[k - 1]) throw ContentError("content " + to_string(content) + " is not a partition");
  int total_charge = 0;
  std::vector<char> used(w.size(), 0);
  std::size_t remaining = w.size();
  while (remaining > 0) {
    int top = 0;
    for (std::size_t p = 0; p < w.size(); ++p)
      if (!used[p]) top = std::max(top, w[p]);
    int pos = static_cast<int>(w.size());
    int index = 0;
    for (int letter = 1; letter <= top; ++letter) {
      int found = -1;
      for (int p = pos - 1; p >= 0; --p)
        if (!used[p] && w[p] == letter) {
          found = p;
          break;
        }
      if (found < 0) {
        if (letter > 1) ++index;
        for (int p = static_cast<int>(w.size()) - 1; p >= pos; --p)
          if (!used[p] && w[p] == letter) {
            found = p;
            break;
          }
      }
      total_charge += index;
      used[found] = 1;
      --remaining;
      pos = found;
    }
  }
  return total_charge;
}

inline int charge(const Tableau& t) { return charge_word(reading_word(t)); }

inline std::string to_string(const Tableau& t) {
  std::string s;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r) s += ",";
    s += to_string(t.rows[r]);
  }
  return "[" + s + "]";
}

}  // namespace mlqkit
