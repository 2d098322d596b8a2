#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "collapse.hpp"
#include "combinat.hpp"
#include "crystal.hpp"
#include "errors.hpp"
#include "fillings.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "mlq.hpp"
#include "parallel.hpp"
#include "symfun.hpp"
#include "tableau.hpp"

namespace mlqkit {

struct VerifyBounds {
  int max_size = 6;
  int max_cols = 5;
  std::uint64_t seed = 1;
  long instances = 10000;
  int op_max_size = 8;
  int op_max_cols = 7;
};

struct VerifyFailure {
  std::string check;
  json counterexample;
};

struct VerifyReport {
  std::string suite;
  long instances = 0;
  long failure_count = 0;
  std::vector<VerifyFailure> failures;  // the first few, for replay
  json facts = json::object();
  double seconds = 0;

  bool passed() const { return failure_count == 0; }
};

inline json to_json(const VerifyReport& r) {
  json fs = json::array();
  for (const auto& f : r.failures) fs.push_back({{"check", f.check}, {"counterexample", f.counterexample}});
  return {{"suite", r.suite},       {"instances", r.instances}, {"failures", r.failure_count},
          {"counterexamples", fs}, {"facts", r.facts},         {"seconds", r.seconds}};
}

namespace detail {

constexpr std::size_t kKeptFailures = 20;

using Failures = std::vector<VerifyFailure>;

inline void merge(VerifyReport& r, const std::vector<Failures>& per_instance) {
  for (const auto& fs : per_instance)
    for (const auto& f : fs) {
      ++r.failure_count;
      if (r.failures.size() < kKeptFailures) r.failures.push_back(f);
    }
}

inline void add_failure(VerifyReport& r, std::string check, json cex) {
  ++r.failure_count;
  if (r.failures.size() < kKeptFailures) r.failures.push_back({std::move(check), std::move(cex)});
}

// Runs check on every item in parallel; library errors become failures.
template <class Item, class Check>
void run_items(VerifyReport& r, const std::vector<Item>& items, Check&& check, std::function<json(const Item&)> show) {
  auto out = parallel_map(items.size(), [&](std::size_t k) {
    Failures fs;
    try {
      check(items[k], fs);
    } catch (const Error& e) {
      fs.push_back({std::string(e.name()) + ": " + e.what(), show(items[k])});
    }
    return fs;
  });
  r.instances += static_cast<long>(items.size());
  merge(r, out);
}

// Every (lambda, n) with 1 <= |lambda| <= max_size and l(lambda) <= n <= max_cols.
inline std::vector<std::pair<Partition, int>> shapes(int max_size, int max_cols) {
  std::vector<std::pair<Partition, int>> out;
  for (int m = 1; m <= max_size; ++m)
    for (const auto& lam : partitions_of(m))
      for (int n = static_cast<int>(lam.size()); n <= max_cols; ++n) out.emplace_back(lam, n);
  return out;
}

inline json shape_json(const Partition& lam, int n) { return {{"shape", lam}, {"n", n}}; }

inline std::vector<int> padded_theta(const MultilineQueue& m, int height) {
  std::vector<std::vector<int>> rows = m.rows;
  rows.resize(height);
  return classical_match(rows);
}

}  // namespace detail

inline VerifyReport verify_examples() {
  VerifyReport r{"examples"};
  auto expect = [&](bool ok, const std::string& what, json cex) {
    ++r.instances;
    if (!ok) detail::add_failure(r, what, std::move(cex));
  };
  try {
    MultilineQueue a = make_mlq(5, {{1, 3, 4, 5}, {2, 3, 4}, {3, 5}});
    expect(mlq_type(a) == Composition{1, 0, 3, 3, 2}, "type", to_json(a));
    expect(mlq_strtype(a) == StrongComposition{1, 3, 3, 2}, "strtype", to_json(a));
    expect(row_word(a).str() == "53.432.5431", "row word", to_json(a));
    expect(column_word(a).str() == "1.2.321.21.31", "column word", to_json(a));
    expect(!col_raise(a, 4).acted && !col_lower(a, 4).acted, "trivial column operators at 4", to_json(a));

    MultilineQueue c = make_mlq(6, {{1, 3, 4, 5}, {2, 3, 4, 6}, {2, 3, 4, 5}, {1, 4, 6}, {3, 5}});
    CollapsePair p = collapse(c);
    Tableau q{{{1, 1, 1, 1, 2, 4}, {2, 2, 2, 3}, {3, 3, 3, 5}, {4, 4}, {5}}};
    expect(maj(c) == 4, "maj", to_json(c));
    expect(mlq_shape(p.nonwrap) == Partition{5, 4, 3, 3, 1, 1}, "collapsed shape", to_json(p));
    expect(mlq_type(p.nonwrap) == Composition{1, 1, 4, 5, 3, 3}, "collapsed type", to_json(p));
    expect(p.record == q, "recording tableau", to_json(p));
    expect(charge(p.record) == 4, "charge of the recording tableau", to_json(p.record));
    expect(uncollapse(p) == c, "uncollapse", to_json(p));
  } catch (const Error& e) {
    detail::add_failure(r, std::string(e.name()) + ": " + e.what(), json::object());
  }
  return r;
}

// collapse is a bijection onto the pairs (N, Q) with x^M = x^N and
// maj(M) = charge(Q), and uncollapse inverts it.
inline VerifyReport verify_collapse_roundtrip(const VerifyBounds& b) {
  VerifyReport r{"collapse-roundtrip"};
  for (const auto& [lam, n] : detail::shapes(b.max_size, b.max_cols)) {
    auto all = enumerate_mlq(lam, n);
    Partition lc = conjugate(lam);
    auto pairs = parallel_map(all.size(), [&](std::size_t k) { return collapse(all[k]); });
    detail::run_items<std::size_t>(
        r, [&] {
          std::vector<std::size_t> idx(all.size());
          std::iota(idx.begin(), idx.end(), 0);
          return idx;
        }(),
        [&](std::size_t k, detail::Failures& fs) {
          const MultilineQueue& m = all[k];
          const CollapsePair& p = pairs[k];
          json cex = to_json(m);
          if (!is_nonwrapping(p.nonwrap)) fs.push_back({"nonwrapping image", cex});
          if (content_monomial(p.nonwrap) != content_monomial(m)) fs.push_back({"content", cex});
          if (!is_semistandard(p.record) || tableau_content(p.record) != lc || p.record.shape() != row_sizes(p.nonwrap))
            fs.push_back({"recording tableau", cex});
          else if (charge(p.record) != maj(m))
            fs.push_back({"maj equals charge", cex});
          if (!dominates(lam, mlq_shape(p.nonwrap))) fs.push_back({"dominance", cex});
          if (uncollapse(p) != m) fs.push_back({"uncollapse", cex});
        },
        [&](const std::size_t& k) { return to_json(all[k]); });
    std::set<CollapsePair> distinct(pairs.begin(), pairs.end());
    long long expected = 0;
    for (const auto& mu : partitions_of(total(lam)))
      if (static_cast<int>(mu.size()) <= n && dominates(lam, mu)) {
        long long nw = 0;
        for_each_mlq(mu, n, [&](const MultilineQueue& m) { nw += is_nonwrapping(m); });
        expected += nw * static_cast<long long>(enumerate_ssyt(conjugate(mu), lc).size());
      }
    ++r.instances;
    if (distinct.size() != all.size() || static_cast<long long>(all.size()) != expected)
      detail::add_failure(r, "bijection cardinality", detail::shape_json(lam, n));
  }
  return r;
}

inline VerifyReport verify_p_charge(const VerifyBounds& b) {
  VerifyReport r{"p-charge"};
  auto items = detail::shapes(b.max_size, b.max_cols);
  detail::run_items<std::pair<Partition, int>>(
      r, items,
      [](const std::pair<Partition, int>& it, detail::Failures& fs) {
        Expansion e = expand_in_schur(it.first, it.second);
        if (expansion_sum(e, it.second) != genfun_P(it.first, it.second))
          fs.push_back({"P equals the charge-weighted Schur sum", detail::shape_json(it.first, it.second)});
      },
      [](const std::pair<Partition, int>& it) { return detail::shape_json(it.first, it.second); });
  return r;
}

inline VerifyReport verify_expansion_atoms(const VerifyBounds& b) {
  VerifyReport r{"expansion-atoms"};
  std::vector<Composition> items;
  for (int m = 0; m <= b.max_size; ++m)
    for (int len = 1; len <= b.max_cols; ++len)
      for (auto& a : weak_compositions(m, len)) items.push_back(a);
  detail::run_items<Composition>(
      r, items,
      [](const Composition& alpha, detail::Failures& fs) {
        Expansion e = expand_in_atoms(alpha);
        if (expansion_sum(e, static_cast<int>(alpha.size())) != genfun_f(alpha))
          fs.push_back({"f equals the atom sum", json{{"alpha", alpha}}});
        for (const auto& [beta, c] : e.coeffs)
          if (!dominates(sort_parts(alpha), sort_parts(beta)))
            fs.push_back({"dominance support", json{{"alpha", alpha}, {"beta", beta}}});
      },
      [](const Composition& alpha) { return json{{"alpha", alpha}}; });
  return r;
}

inline VerifyReport verify_expansion_qschur(const VerifyBounds& b) {
  VerifyReport r{"expansion-qschur"};
  std::vector<std::pair<StrongComposition, int>> items;
  for (int m = 1; m <= b.max_size; ++m)
    for (auto& g : strong_compositions(m))
      for (int n = static_cast<int>(g.size()); n <= b.max_cols; ++n) items.emplace_back(g, n);
  detail::run_items<std::pair<StrongComposition, int>>(
      r, items,
      [](const std::pair<StrongComposition, int>& it, detail::Failures& fs) {
        Expansion e = expand_in_qschur(it.first, it.second);
        if (expansion_sum(e, it.second) != genfun_G(it.first, it.second))
          fs.push_back({"G equals the quasisymmetric Schur sum", json{{"gamma", it.first}, {"n", it.second}}});
      },
      [](const std::pair<StrongComposition, int>& it) { return json{{"gamma", it.first}, {"n", it.second}}; });
  return r;
}

// The nonwrapping crystal of (3,3,1,1) on 4 columns is connected while its
// type (1,3,1,3) part is not; on 8 columns the strong type (1,3,1,3) part
// has 3135 vertices and is disconnected too.
inline VerifyReport verify_crystal_3311() {
  VerifyReport r{"crystal-3311"};
  auto expect = [&](bool ok, const std::string& what) {
    ++r.instances;
    if (!ok) detail::add_failure(r, what, json::object());
  };
  try {
    Partition lam{3, 3, 1, 1};
    auto whole = build_graph(lam, 4, parse_filter("nonwrapping"));
    auto typed = build_graph(lam, 4, parse_filter("nonwrapping+type=1,3,1,3"));
    auto wide = build_graph(lam, 8, parse_filter("nonwrapping+strtype=1,3,1,3"));
    std::size_t wide_all = 0;
    for_each_mlq(lam, 8, [&](const MultilineQueue& m) { wide_all += is_nonwrapping(m); });
    r.facts = {{"vertices_n4", whole.vertices.size()},
               {"edges_n4", whole.edges.size()},
               {"components_n4", components(whole).size()},
               {"type_1313_components_n4", components(typed).size()},
               {"strtype_1313_vertices_n8", wide.vertices.size()},
               {"strtype_1313_components_n8", components(wide).size()},
               {"nonwrapping_vertices_n8", wide_all}};
    expect(whole.vertices.size() == 20 && whole.edges.size() == 30, "size of the n=4 crystal");
    expect(components(whole).size() == 1, "n=4 crystal is connected");
    expect(components(typed).size() >= 2, "type (1,3,1,3) subgraph is disconnected");
    expect(wide.vertices.size() == 3135, "strong type (1,3,1,3) on 8 columns has 3135 vertices");
    expect(components(wide).size() >= 2, "strong type (1,3,1,3) subgraph on 8 columns is disconnected");
  } catch (const Error& e) {
    detail::add_failure(r, std::string(e.name()) + ": " + e.what(), json::object());
  }
  return r;
}

struct OperatorInstance {
  MultilineQueue m;
  int i = 1;  // column operator index
  int j = 1;  // row operator index
};

inline MultilineQueue random_mlq(const Partition& lam, int n, std::mt19937_64& rng) {
  MultilineQueue m;
  m.n = n;
  std::vector<int> cols(n);
  std::iota(cols.begin(), cols.end(), 1);
  for (int k : conjugate(lam)) {
    std::shuffle(cols.begin(), cols.end(), rng);
    std::vector<int> row(cols.begin(), cols.begin() + k);
    std::sort(row.begin(), row.end());
    m.rows.push_back(row);
  }
  return m;
}

inline std::vector<OperatorInstance> operator_instances(const VerifyBounds& b) {
  std::mt19937_64 rng(b.seed);
  std::vector<std::pair<Partition, int>> pool;
  for (int m = 1; m <= b.op_max_size; ++m)
    for (const auto& lam : partitions_of(m))
      for (int n = std::max(2, static_cast<int>(lam.size())); n <= b.op_max_cols; ++n) pool.emplace_back(lam, n);
  std::vector<OperatorInstance> out;
  for (long k = 0; k < b.instances; ++k) {
    const auto& [lam, n] = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    MultilineQueue m = random_mlq(lam, n, rng);
    int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
    int j = m.height() >= 2 ? std::uniform_int_distribution<int>(1, m.height() - 1)(rng) : 1;
    out.push_back({m, i, j});
  }
  return out;
}

// Local laws of the row and column operators on one queue.
inline void check_operator_laws(const OperatorInstance& in, detail::Failures& fs) {
  const MultilineQueue& m = in.m;
  const int i = in.i, L = m.height();
  json cex = {{"mlq", to_json(m)}, {"i", i}, {"j", in.j}};
  auto fail = [&](const char* what) { fs.push_back({what, cex}); };
  CollapsePair rho = collapse(m);
  Composition type = mlq_type(m);

  for (Direction dir : {Direction::Raise, Direction::Lower}) {
    auto g = [&](const MultilineQueue& x) { return dir == Direction::Raise ? col_raise(x, i) : col_lower(x, i); };
    auto gm = g(m);
    if (L >= 2) {
      auto lhs = g(row_drop(m, in.j).value).value;
      auto rhs = row_drop(gm.value, in.j).value;
      if (lhs != rhs) fail("column and row operators commute");
    }
    CollapsePair rho_g = collapse(gm.value);
    if (rho_g.nonwrap != g(rho.nonwrap).value) fail("column operators commute with collapsing");
    if (maj(gm.value) != maj(m)) fail("column operators preserve maj");
    if (rho_g.record != rho.record) fail("column operators preserve the recording tableau");
    Composition expect = is_full(m, i, dir) ? swap_adjacent(type, i) : type;
    if (mlq_type(gm.value) != expect) fail("type changes exactly at full queues");
  }

  if (auto up = col_raise(m, i); up.acted) {
    ActiveRegion a = active_region(m, i);
    LabelArray before = fm_label(m), after = fm_label(up.value);
    for (int s = 1; s <= L; ++s) {
      std::vector<int> row = before.labels[s - 1];
      if (a.p <= s && s <= a.r) std::swap(row[i - 1], row[i]);
      if (after.labels[s - 1] != row) {
        fail("labels swap inside the active region");
        break;
      }
    }
  }

  std::vector<int> theta_m = detail::padded_theta(m, L);
  for (int k = 1; k < L; ++k)
    if (detail::padded_theta(row_drop_star(m, k), L) != theta_m) {
      fail("theta is invariant under full row drops");
      break;
    }

  Composition beta = mlq_type(rho.nonwrap);
  beta.resize(m.n, 0);
  std::vector<int> top;
  for (int c = 1; c <= m.n; ++c)
    if (L >= 1 && beta[c - 1] == L) top.push_back(c);
  if (top != theta_m) fail("top label set of the collapse equals theta");

  for (int a = 0; a < m.n; ++a)
    for (int c = a + 1; c < m.n; ++c)
      if (type[a] < type[c] && !(beta[a] < beta[c])) fail("collapsing keeps coinversions");

  if (L >= 2) {
    Composition part = mlq_type(partial_collapse(m, L - 1));
    for (int c = 0; c < m.n; ++c)
      if (beta[c] - part[c] != 0 && beta[c] - part[c] != 1) {
        fail("one-row collapse changes each type entry by 0 or 1");
        break;
      }
  }
}

inline VerifyReport verify_operator_laws(const VerifyBounds& b) {
  VerifyReport r{"operator-laws"};
  detail::run_items<OperatorInstance>(r, operator_instances(b), check_operator_laws, [](const OperatorInstance& in) {
    return json{{"mlq", to_json(in.m)}, {"i", in.i}, {"j", in.j}};
  });
  r.facts = {{"seed", b.seed}};
  return r;
}

// Within a fiber of the recording tableau, the type (strong type) of the
// collapse determines the type (strong type) of the queue.
inline VerifyReport verify_fiber_type(const VerifyBounds& b) {
  VerifyReport r{"fiber-type"};
  auto items = detail::shapes(b.max_size, b.max_cols);
  detail::run_items<std::pair<Partition, int>>(
      r, items,
      [](const std::pair<Partition, int>& it, detail::Failures& fs) {
        std::map<Tableau, std::map<Composition, Composition>> weak, strong;
        for_each_mlq(it.first, it.second, [&](const MultilineQueue& m) {
          CollapsePair p = collapse(m);
          Composition t = mlq_type(m), tn = mlq_type(p.nonwrap);
          auto [w, fresh] = weak[p.record].emplace(tn, t);
          if (!fresh && w->second != t) fs.push_back({"type determined within a fiber", to_json(m)});
          auto [s, fresh_s] = strong[p.record].emplace(compress(tn), compress(t));
          if (!fresh_s && s->second != compress(t)) fs.push_back({"strong type determined within a fiber", to_json(m)});
        });
      },
      [](const std::pair<Partition, int>& it) { return detail::shape_json(it.first, it.second); });
  return r;
}

// Row content bijections with augmented fillings and quinv tableaux.
inline VerifyReport verify_eta(const VerifyBounds& b) {
  VerifyReport r{"eta"};
  std::vector<Composition> alphas;
  for (int m = 0; m <= b.max_size; ++m)
    for (int len = 1; len <= b.max_cols; ++len)
      for (auto& a : weak_compositions(m, len)) alphas.push_back(a);
  detail::run_items<Composition>(
      r, alphas,
      [](const Composition& alpha, detail::Failures& fs) {
        int n = static_cast<int>(alpha.size());
        std::set<MultilineQueue> images;
        for (const auto& f : enumerate_ssaf(alpha)) {
          MultilineQueue m = filling_to_mlq(f, n);
          if (!is_nonwrapping(m) || mlq_type(m) != alpha) fs.push_back({"SSAF lands in NMLQ[alpha]", to_json(f)});
          else if (mlq_to_ssaf(m) != f) fs.push_back({"SSAF round trip", to_json(f)});
          images.insert(m);
        }
        std::size_t count = 0;
        for_each_mlq(sort_parts(alpha), n, [&](const MultilineQueue& m) {
          if (is_nonwrapping(m) && mlq_type(m) == alpha) ++count;
        });
        if (images.size() != count) fs.push_back({"SSAF bijection cardinality", json{{"alpha", alpha}}});
      },
      [](const Composition& alpha) { return json{{"alpha", alpha}}; });
  auto expect = [&](bool ok, const std::string& what, json cex) {
    ++r.instances;
    if (!ok) detail::add_failure(r, what, std::move(cex));
  };
  try {
    Composition alpha{1, 0, 3, 2};
    std::vector<std::pair<std::vector<int>, std::vector<int>>> listed = {
        {{3, 3, 3}, {4, 2}}, {{3, 3, 3}, {4, 4}}, {{3, 3, 2}, {4, 2}}, {{3, 3, 1}, {4, 2}},
        {{3, 3, 2}, {4, 4}}, {{3, 3, 1}, {4, 4}}, {{3, 2, 2}, {4, 4}}, {{3, 2, 1}, {4, 4}}};
    std::set<std::vector<std::vector<int>>> want, got;
    for (const auto& [c3, c4] : listed) want.insert({{1}, {}, c3, c4});
    for (const auto& f : enumerate_ssaf(alpha)) got.insert(f.columns);
    expect(got == want, "the eight fillings of shape (1,0,3,2)", json{{"alpha", alpha}});
    for (const auto& cols : want) {
      CompositionFilling f{alpha, cols, FillingKind::SSAF};
      MultilineQueue m = filling_to_mlq(f, 4);
      expect(is_nonwrapping(m) && mlq_type(m) == alpha && mlq_to_ssaf(m) == f, "listed filling of shape (1,0,3,2)",
             to_json(f));
    }
    MultilineQueue q = make_mlq(6, {{1, 4, 5, 6}, {2, 3, 4, 5}, {1, 4, 6}, {3, 4}});
    CompositionFilling t = mlq_to_ssqt(q);
    CompositionFilling shown{{4, 4, 3, 2}, {{4, 4, 4, 3}, {5, 2, 6, 4}, {6, 3, 1}, {1, 5}}, FillingKind::SSQT};
    expect(t == shown && filling_maj(t) == 3 && maj(q) == 3 && filling_type(t, 6) == Composition{2, 0, 0, 4, 4, 3},
           "quinv filling of the (4,4,3,2) queue", to_json(q));
  } catch (const Error& e) {
    detail::add_failure(r, std::string(e.name()) + ": " + e.what(), json::object());
  }
  auto items = detail::shapes(b.max_size, b.max_cols);
  detail::run_items<std::pair<Partition, int>>(
      r, items,
      [](const std::pair<Partition, int>& it, detail::Failures& fs) {
        for_each_mlq(it.first, it.second, [&](const MultilineQueue& m) {
          CompositionFilling t = mlq_to_ssqt(m);
          if (!is_ssqt(t)) fs.push_back({"quinv filling is valid", to_json(m)});
          if (filling_to_mlq(t, m.n) != m) fs.push_back({"quinv row content", to_json(m)});
          if (filling_maj(t) != maj(m)) fs.push_back({"quinv maj", to_json(m)});
          if (filling_type(t, m.n) != mlq_type(m)) fs.push_back({"quinv type", to_json(m)});
        });
      },
      [](const std::pair<Partition, int>& it) { return detail::shape_json(it.first, it.second); });
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"examples",   "collapse-roundtrip", "p-charge",
                                                 "expansion-atoms", "expansion-qschur", "crystal-3311",
                                                 "operator-laws",   "fiber-type",       "eta"};
  return names;
}

inline VerifyReport run_suite(const std::string& name, const VerifyBounds& b) {
  auto start = std::chrono::steady_clock::now();
  VerifyReport r;
  if (name == "examples") r = verify_examples();
  else if (name == "collapse-roundtrip") r = verify_collapse_roundtrip(b);
  else if (name == "p-charge") r = verify_p_charge(b);
  else if (name == "expansion-atoms") r = verify_expansion_atoms(b);
  else if (name == "expansion-qschur") r = verify_expansion_qschur(b);
  else if (name == "crystal-3311") r = verify_crystal_3311();
  else if (name == "operator-laws") r = verify_operator_laws(b);
  else if (name == "fiber-type") r = verify_fiber_type(b);
  else if (name == "eta") r = verify_eta(b);
  else if (name == "fig1") r = verify_crystal_3311();
  else throw UsageError("unknown suite '" + name + "'");
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace mlqkit
