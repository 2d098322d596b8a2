#pragma once

#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "mlq.hpp"

namespace mlqkit {

enum class Bracket { Inert, MatchedOpen, MatchedClose, UnmatchedOpen, UnmatchedClose };

// Bracketing theta_i: i+1 reads as '(' and i as ')'. partner[p] is the
// matched position or -1.
struct BracketMatching {
  std::vector<Bracket> status;
  std::vector<int> partner;

  std::vector<int> positions(Bracket b) const {
    std::vector<int> out;
    for (std::size_t p = 0; p < status.size(); ++p)
      if (status[p] == b) out.push_back(static_cast<int>(p));
    return out;
  }
};

// kinds: +1 open, -1 close, 0 inert.
inline BracketMatching match_classical(const std::vector<int>& kinds) {
  BracketMatching bm;
  bm.status.assign(kinds.size(), Bracket::Inert);
  bm.partner.assign(kinds.size(), -1);
  std::vector<int> stack;
  for (std::size_t p = 0; p < kinds.size(); ++p) {
    if (kinds[p] > 0) {
      stack.push_back(static_cast<int>(p));
      bm.status[p] = Bracket::UnmatchedOpen;
    } else if (kinds[p] < 0) {
      if (stack.empty()) {
        bm.status[p] = Bracket::UnmatchedClose;
      } else {
        int q = stack.back();
        stack.pop_back();
        bm.status[q] = Bracket::MatchedOpen;
        bm.status[p] = Bracket::MatchedClose;
        bm.partner[q] = static_cast<int>(p);
        bm.partner[p] = q;
      }
    }
  }
  return bm;
}

// Matching on a circle. After the classical pass the leftover word is
// )^a (^b, whose last open is cyclically adjacent to its first close; peel
// those pairs outward.
inline BracketMatching match_cylindrical(const std::vector<int>& kinds) {
  BracketMatching bm = match_classical(kinds);
  auto opens = bm.positions(Bracket::UnmatchedOpen);
  auto closes = bm.positions(Bracket::UnmatchedClose);
  std::size_t k = std::min(opens.size(), closes.size());
  for (std::size_t t = 0; t < k; ++t) {
    int o = opens[opens.size() - 1 - t], c = closes[t];
    bm.status[o] = Bracket::MatchedOpen;
    bm.status[c] = Bracket::MatchedClose;
    bm.partner[o] = c;
    bm.partner[c] = o;
  }
  return bm;
}

inline std::vector<int> bracket_kinds(const std::vector<int>& letters, int i) {
  std::vector<int> k(letters.size(), 0);
  for (std::size_t p = 0; p < letters.size(); ++p) {
    if (letters[p] == i + 1) k[p] = 1;
    else if (letters[p] == i) k[p] = -1;
  }
  return k;
}

inline BracketMatching theta(const std::vector<int>& letters, int i) {
  return match_classical(bracket_kinds(letters, i));
}

inline void check_index(int i, int upper, const char* what) {
  if (i < 1 || (upper > 0 && i >= upper))
    throw IndexError(std::string(what) + " index " + std::to_string(i) + " out of range");
}

// Position of the letter E_i (raise) or F_i (lower) would change, or -1.
inline int raise_position(const std::vector<int>& letters, int i) {
  auto u = theta(letters, i).positions(Bracket::UnmatchedOpen);
  return u.empty() ? -1 : u.front();
}

inline int lower_position(const std::vector<int>& letters, int i) {
  auto u = theta(letters, i).positions(Bracket::UnmatchedClose);
  return u.empty() ? -1 : u.back();
}

template <class T>
struct Acted {
  T value;
  bool acted = false;
};

inline Acted<std::vector<int>> word_raise(std::vector<int> w, int i) {
  check_index(i, 0, "word operator");
  int p = raise_position(w, i);
  if (p < 0) return {std::move(w), false};
  w[p] = i;
  return {std::move(w), true};
}

inline Acted<std::vector<int>> word_lower(std::vector<int> w, int i) {
  check_index(i, 0, "word operator");
  int p = lower_position(w, i);
  if (p < 0) return {std::move(w), false};
  w[p] = i + 1;
  return {std::move(w), true};
}

inline std::vector<int> word_raise_star(std::vector<int> w, int i) {
  check_index(i, 0, "word operator");
  auto bm = theta(w, i);
  for (int p : bm.positions(Bracket::UnmatchedOpen)) w[p] = i;
  return w;
}

inline std::vector<int> word_lower_star(std::vector<int> w, int i) {
  check_index(i, 0, "word operator");
  auto bm = theta(w, i);
  for (int p : bm.positions(Bracket::UnmatchedClose)) w[p] = i + 1;
  return w;
}

namespace detail {

inline MultilineQueue move_ball(const MultilineQueue& m, Site from, Site to) {
  MultilineQueue out = m;
  if (static_cast<int>(out.rows.size()) < to.row) out.rows.resize(to.row);
  auto& src = out.rows[from.row - 1];
  src.erase(std::lower_bound(src.begin(), src.end(), from.col));
  auto& dst = out.rows[to.row - 1];
  dst.insert(std::lower_bound(dst.begin(), dst.end(), to.col), to.col);
  trim_top(out);
  return out;
}

}  // namespace detail

// e-down_i: the leftmost unmatched i+1 of theta_i(cw(M)) drops to row i.
inline Acted<MultilineQueue> row_drop(const MultilineQueue& m, int i) {
  check_index(i, 0, "row operator");
  Word w = column_word(m);
  int p = raise_position(w.letters, i);
  if (p < 0) return {m, false};
  Site s = w.sites[p];
  return {detail::move_ball(m, s, {i, s.col}), true};
}

// f-up_i: the rightmost unmatched i of theta_i(cw(M)) lifts to row i+1.
inline Acted<MultilineQueue> row_lift(const MultilineQueue& m, int i) {
  check_index(i, 0, "row operator");
  Word w = column_word(m);
  int p = lower_position(w.letters, i);
  if (p < 0) return {m, false};
  Site s = w.sites[p];
  return {detail::move_ball(m, s, {i + 1, s.col}), true};
}

inline MultilineQueue row_drop_star(MultilineQueue m, int i) {
  while (true) {
    auto r = row_drop(m, i);
    if (!r.acted) return m;
    m = std::move(r.value);
  }
}

inline MultilineQueue row_lift_star(MultilineQueue m, int i) {
  while (true) {
    auto r = row_lift(m, i);
    if (!r.acted) return m;
    m = std::move(r.value);
  }
}

// e-left_i: the leftmost unmatched i+1 of theta_i(rw(M)) moves to column i.
inline Acted<MultilineQueue> col_raise(const MultilineQueue& m, int i) {
  check_index(i, m.n, "column operator");
  Word w = row_word(m);
  int p = raise_position(w.letters, i);
  if (p < 0) return {m, false};
  Site s = w.sites[p];
  return {detail::move_ball(m, s, {s.row, i}), true};
}

// f-right_i: the rightmost unmatched i of theta_i(rw(M)) moves to column i+1.
inline Acted<MultilineQueue> col_lower(const MultilineQueue& m, int i) {
  check_index(i, m.n, "column operator");
  Word w = row_word(m);
  int p = lower_position(w.letters, i);
  if (p < 0) return {m, false};
  Site s = w.sites[p];
  return {detail::move_ball(m, s, {s.row, i + 1}), true};
}

inline MultilineQueue col_raise_star(MultilineQueue m, int i) {
  while (true) {
    auto r = col_raise(m, i);
    if (!r.acted) return m;
    m = std::move(r.value);
  }
}

inline MultilineQueue col_lower_star(MultilineQueue m, int i) {
  while (true) {
    auto r = col_lower(m, i);
    if (!r.acted) return m;
    m = std::move(r.value);
  }
}

enum class Direction { Raise, Lower };

inline bool is_full(const MultilineQueue& m, int i, Direction dir) {
  check_index(i, m.n, "column operator");
  if (dir == Direction::Lower) {
    auto r = col_lower(m, i);
    return r.acted && is_full(r.value, i, Direction::Raise);
  }
  Composition t = mlq_type(m);
  if (!(t[i - 1] < t[i])) return false;
  auto bm = theta(row_word(m).letters, i);
  return bm.positions(Bracket::UnmatchedOpen).size() == 1;
}

// Rows p..r of columns i and i+1, where (r,i+1) holds the ball e-left_i moves.
struct ActiveRegion {
  int i = 0;
  int p = 0;
  int r = 0;
  int label = 0;

  std::vector<Site> sites() const {
    std::vector<Site> s;
    for (int row = p; row <= r; ++row) {
      s.push_back({row, i});
      s.push_back({row, i + 1});
    }
    return s;
  }
};

inline ActiveRegion active_region(const MultilineQueue& m, int i) {
  check_index(i, m.n, "column operator");
  Word w = row_word(m);
  int pos = raise_position(w.letters, i);
  if (pos < 0) throw NoActiveRegionError("e-left_" + std::to_string(i) + " acts trivially");
  LabelArray la = fm_label(m);
  ActiveRegion a;
  a.i = i;
  a.r = w.sites[pos].row;
  a.label = la.at(a.r, i + 1);
  a.p = 1;
  for (int p = a.r; p >= 2; --p) {
    int below = la.at(p - 1, i);
    if (below == 0 || below >= a.label) {
      a.p = p;
      break;
    }
  }
  return a;
}

// Two-row matchings between a (below) and b (above) read off cw((a,b)).
// Returns the elements of a whose ')' is matched.
inline std::vector<int> match_rows(const std::vector<int>& a, const std::vector<int>& b, bool cylindrical) {
  std::vector<int> kinds, cols;
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() || ib < b.size()) {
    constexpr int kEnd = std::numeric_limits<int>::max();
    int c = std::min(ia < a.size() ? a[ia] : kEnd, ib < b.size() ? b[ib] : kEnd);
    if (ib < b.size() && b[ib] == c) {
      kinds.push_back(1);
      cols.push_back(c);
      ++ib;
    }
    if (ia < a.size() && a[ia] == c) {
      kinds.push_back(-1);
      cols.push_back(c);
      ++ia;
    }
  }
  BracketMatching bm = cylindrical ? match_cylindrical(kinds) : match_classical(kinds);
  std::vector<int> out;
  for (std::size_t p = 0; p < kinds.size(); ++p)
    if (bm.status[p] == Bracket::MatchedClose) out.push_back(cols[p]);
  return out;
}

// R(b_1,...,b_L), evaluated from the inside out.
inline std::vector<int> cylindrical_match(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) return {};
  std::vector<int> acc = rows.back();
  for (int k = static_cast<int>(rows.size()) - 2; k >= 0; --k) acc = match_rows(rows[k], acc, true);
  return acc;
}

// theta(b_1 x ... x b_L), evaluated from the top.
inline std::vector<int> classical_match(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) return {};
  std::vector<int> acc = rows.back();
  for (int k = static_cast<int>(rows.size()) - 2; k >= 0; --k) acc = match_rows(rows[k], acc, false);
  return acc;
}

// I_k(M) for every label k that occurs.
inline std::map<int, std::vector<int>> label_sets(const MultilineQueue& m) {
  std::map<int, std::vector<int>> out;
  Composition t = mlq_type(m);
  for (int c = 1; c <= static_cast<int>(t.size()); ++c)
    if (t[c - 1] > 0) out[t[c - 1]].push_back(c);
  return out;
}

// I_{>=k}(M) through the cylindrical rule.
inline std::vector<int> label_at_least(const MultilineQueue& m, int k) {
  if (k < 1 || k > m.height()) return {};
  return cylindrical_match({m.rows.begin(), m.rows.begin() + k});
}

}  // namespace mlqkit
