#pragma once

#include <vector>

#include "crystal.hpp"
#include "errors.hpp"
#include "mlq.hpp"
#include "tableau.hpp"

namespace mlqkit {

struct CollapsePair {
  MultilineQueue nonwrap;
  Tableau record;
  auto operator<=>(const CollapsePair&) const = default;
};

// rho = (rho_N, rho_Q). Stage i applies e-down*_i, e-down*_{i-1}, ...,
// e-down*_1 and records every arrival in rows 1..i+1 with the entry i+1.
inline CollapsePair collapse(const MultilineQueue& m) {
  require_shape(m);
  const int L = m.height();
  CollapsePair out;
  out.nonwrap = m;
  if (L == 0) return out;
  auto& q = out.record.rows;
  q.assign(L, {});
  q[0].assign(m.rows[0].size(), 1);
  MultilineQueue cur = m;
  for (int i = 1; i <= L - 1; ++i) {
    std::vector<int> before = row_sizes(cur);
    for (int k = i; k >= 1; --k) cur = row_drop_star(std::move(cur), k);
    std::vector<int> after = row_sizes(cur);
    after.resize(L, 0);
    for (int j = 1; j <= i; ++j) {
      int added = after[j - 1] - before[j - 1];
      if (added < 0) throw TheoremViolationError("collapse stage removed balls from row " + std::to_string(j));
      q[j - 1].insert(q[j - 1].end(), added, i + 1);
    }
    q[i].insert(q[i].end(), after[i], i + 1);
  }
  while (!q.empty() && q.back().empty()) q.pop_back();
  trim_top(cur);
  out.nonwrap = std::move(cur);
  return out;
}

inline MultilineQueue partial_collapse(const MultilineQueue& m, int k) {
  if (k < 1 || k > m.height())
    throw IndexError("partial collapse needs 1 <= k <= " + std::to_string(m.height()));
  return collapse(truncate(m, k)).nonwrap;
}

// rho^{-1}(N, Q). Stage i is undone for i = L-1 down to 1; inside a stage the
// drops at level 1 are undone first, lifting at level k exactly as many
// times as stage i dropped there, which is the number of entries i+1 in
// rows 1..k of Q.
inline MultilineQueue uncollapse(const CollapsePair& pair) {
  const Tableau& q = pair.record;
  const MultilineQueue& nw = pair.nonwrap;
  if (!is_semistandard(q)) throw InvalidPairError("record is not semistandard");
  std::vector<int> content = tableau_content(q);
  if (!is_partition(content)) throw InvalidPairError("record content " + to_string(content) + " is not a partition");
  if (!has_valid_shape(nw) || row_sizes(nw) != q.shape())
    throw InvalidPairError("nonwrap row sizes do not match the record shape");
  if (!is_nonwrapping(nw)) throw InvalidPairError("nonwrap component wraps");
  const int L = static_cast<int>(content.size());
  MultilineQueue cur = nw;
  if (cur.height() < L) cur.rows.resize(L);
  for (int i = L - 1; i >= 1; --i) {
    int lifts = 0;
    for (int k = 1; k <= i; ++k) {
      if (k <= static_cast<int>(q.rows.size()))
        lifts += static_cast<int>(std::count(q.rows[k - 1].begin(), q.rows[k - 1].end(), i + 1));
      for (int t = 0; t < lifts; ++t) {
        auto r = row_lift(cur, k);
        if (!r.acted) throw InvalidPairError("no ball to lift at level " + std::to_string(k));
        cur = std::move(r.value);
        if (cur.height() < L) cur.rows.resize(L);
      }
    }
  }
  trim_top(cur);
  if (!has_valid_shape(cur)) throw InvalidPairError("preimage has invalid row sizes");
  if (collapse(cur) != pair) throw InvalidPairError("pair is not in the image of the collapsing map");
  return cur;
}

}  // namespace mlqkit
