#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "collapse.hpp"
#include "combinat.hpp"
#include "crystal.hpp"
#include "errors.hpp"
#include "mlq.hpp"
#include "parallel.hpp"
#include "tableau.hpp"

namespace mlqkit {

enum class FilterKind { All, Nonwrapping, Type, StrType };

// A type or strtype restriction, optionally limited to nonwrapping queues.
struct GraphFilter {
  FilterKind kind = FilterKind::All;
  Composition key;
  bool nonwrapping = false;

  bool accepts(const Composition& type, int maj_value) const {
    if (nonwrapping && maj_value != 0) return false;
    switch (kind) {
      case FilterKind::All: return true;
      case FilterKind::Nonwrapping: return maj_value == 0;
      case FilterKind::Type: return type == key;
      case FilterKind::StrType: return compress(type) == key;
    }
    return false;
  }
};

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string s = text;
  for (char& ch : s)
    if (ch == '(' || ch == ')' || ch == '[' || ch == ']') ch = ' ';
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(' '));
    tok.erase(tok.find_last_not_of(' ') + 1);
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (...) {
      throw UsageError("not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw UsageError("not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

// all | nonwrapping | type=1,3,1,3 | strtype=1,3,1,3, where the last two
// may be prefixed with "nonwrapping+".
inline GraphFilter parse_filter(const std::string& text) {
  if (text == "all") return {FilterKind::All, {}, false};
  if (text == "nonwrapping") return {FilterKind::Nonwrapping, {}, true};
  std::string rest = text;
  bool nw = false;
  const std::string prefix = "nonwrapping+";
  if (rest.rfind(prefix, 0) == 0) {
    nw = true;
    rest = rest.substr(prefix.size());
  }
  auto eq = rest.find('=');
  if (eq != std::string::npos) {
    std::string head = rest.substr(0, eq);
    Composition key = parse_int_list(rest.substr(eq + 1));
    if (head == "type") return {FilterKind::Type, key, nw};
    if (head == "strtype") return {FilterKind::StrType, key, nw};
  }
  throw UsageError("unknown filter '" + text + "'");
}

inline std::string filter_name(const GraphFilter& f) {
  std::string head = f.nonwrapping && f.kind != FilterKind::Nonwrapping ? "nonwrapping+" : "";
  switch (f.kind) {
    case FilterKind::All: return "all";
    case FilterKind::Nonwrapping: return "nonwrapping";
    case FilterKind::Type: return head + "type=" + to_string(f.key);
    case FilterKind::StrType: return head + "strtype=" + to_string(f.key);
  }
  return "";
}

struct GraphVertex {
  MultilineQueue m;
  Composition type;
  int maj = 0;
  Tableau record;
};

// u -> v with label i whenever f-right_i(u) = v.
struct GraphEdge {
  int from = 0;
  int to = 0;
  int label = 0;
};

struct CrystalGraph {
  Partition shape;
  int n = 0;
  GraphFilter filter;
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  std::map<MultilineQueue, int> index;

  int find(const MultilineQueue& m) const {
    auto it = index.find(m);
    return it == index.end() ? -1 : it->second;
  }
};

// Enumerates MLQ_lam on n columns in the enumeration order, keeps the
// filtered vertices and adds every f-right edge between kept vertices.
// Every edge is checked to preserve maj and the recording tableau and to
// change the type exactly when its source is full.
inline CrystalGraph build_graph(const Partition& lam, int n, const GraphFilter& filter) {
  if (!is_partition(lam)) throw ShapeError(to_string(lam) + " is not a partition");
  if (n < static_cast<int>(lam.size()))
    throw TooFewColumnsError("need at least " + std::to_string(lam.size()) + " columns");
  CrystalGraph g;
  g.shape = lam;
  g.n = n;
  g.filter = filter;
  auto all = enumerate_mlq(lam, n);
  auto info = parallel_map(all.size(), [&](std::size_t k) {
    LabelArray la = fm_label(all[k]);
    return std::pair<Composition, int>{type_of(la), maj_of(la)};
  });
  for (std::size_t k = 0; k < all.size(); ++k)
    if (filter.accepts(info[k].first, info[k].second)) {
      g.index.emplace(all[k], static_cast<int>(g.vertices.size()));
      g.vertices.push_back({all[k], info[k].first, info[k].second, {}});
    }
  auto records = parallel_map(g.vertices.size(), [&](std::size_t k) { return collapse(g.vertices[k].m).record; });
  for (std::size_t k = 0; k < records.size(); ++k) g.vertices[k].record = std::move(records[k]);

  auto out = parallel_map(g.vertices.size(), [&](std::size_t k) {
    std::vector<GraphEdge> es;
    const GraphVertex& u = g.vertices[k];
    for (int i = 1; i < n; ++i) {
      auto r = col_lower(u.m, i);
      if (!r.acted) continue;
      int v = g.find(r.value);
      if (v < 0) continue;
      const GraphVertex& w = g.vertices[v];
      std::string where = to_string(u.m) + " -" + std::to_string(i) + "-> " + to_string(w.m);
      if (w.maj != u.maj) throw TheoremViolationError("edge changes maj: " + where);
      if (w.record != u.record) throw TheoremViolationError("edge changes the recording tableau: " + where);
      Composition expect = is_full(u.m, i, Direction::Lower) ? swap_adjacent(u.type, i) : u.type;
      if (w.type != expect) throw TheoremViolationError("edge breaks the fullness rule: " + where);
      es.push_back({static_cast<int>(k), v, i});
    }
    return es;
  });
  for (auto& es : out) g.edges.insert(g.edges.end(), es.begin(), es.end());
  return g;
}

// Connected components of the underlying undirected graph, each sorted, in
// order of their smallest vertex.
inline std::vector<std::vector<int>> components(const CrystalGraph& g) {
  std::vector<int> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) {
    int a = root(e.from), b = root(e.to);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) groups[root(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [r, vs] : groups) out.push_back(std::move(vs));
  return out;
}

// Vertices are colored by type in order of first appearance.
inline std::string to_dot(const CrystalGraph& g) {
  static const char* palette[] = {"red",    "blue",   "darkgreen", "orange", "purple", "brown",
                                  "magenta", "cyan4", "gold4",     "gray40", "navy",   "olivedrab"};
  std::map<Composition, int> color;
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    const auto& v = g.vertices[k];
    int c = color.emplace(v.type, static_cast<int>(color.size())).first->second;
    os << "  v" << k << " [label=\"" << to_string(v.m) << "\", type=\"" << to_string(v.type) << "\", maj=" << v.maj
       << ", color=" << palette[c % (sizeof(palette) / sizeof(palette[0]))] << "];\n";
  }
  for (const auto& e : g.edges) os << "  v" << e.from << " -> v" << e.to << " [label=" << e.label << "];\n";
  os << "}\n";
  return os.str();
}

// One crystal operator: e<i, f>i (columns), ev i, f^i (rows), with a
// trailing '*' for the starred version.
struct CrystalOp {
  bool column = true;
  bool raise = true;
  int i = 1;
  bool star = false;

  std::string str() const {
    std::string s = raise ? "e" : "f";
    s += column ? (raise ? "<" : ">") : (raise ? "v" : "^");
    s += std::to_string(i);
    if (star) s += "*";
    return s;
  }
};

inline CrystalOp parse_op(const std::string& text) {
  std::string t = text;
  CrystalOp op;
  if (!t.empty() && t.back() == '*') {
    op.star = true;
    t.pop_back();
  }
  if (t.size() < 3) throw UsageError("bad operator '" + text + "'");
  if (t[0] == 'e') op.raise = true;
  else if (t[0] == 'f') op.raise = false;
  else throw UsageError("bad operator '" + text + "'");
  char d = t[1];
  if (op.raise && d == '<') op.column = true;
  else if (!op.raise && d == '>') op.column = true;
  else if (op.raise && d == 'v') op.column = false;
  else if (!op.raise && d == '^') op.column = false;
  else throw UsageError("bad operator direction in '" + text + "'");
  std::string num = t.substr(2);
  if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit))
    throw UsageError("bad operator index in '" + text + "'");
  op.i = std::stoi(num);
  return op;
}

// Space-separated operator word, returned in application order (the word is
// read right to left).
inline std::vector<CrystalOp> parse_op_word(const std::string& text) {
  std::vector<CrystalOp> ops;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) ops.push_back(parse_op(tok));
  std::reverse(ops.begin(), ops.end());
  return ops;
}

inline Acted<MultilineQueue> apply_op(const MultilineQueue& m, const CrystalOp& op) {
  if (op.star) {
    MultilineQueue out;
    if (op.column) out = op.raise ? col_raise_star(m, op.i) : col_lower_star(m, op.i);
    else out = op.raise ? row_drop_star(m, op.i) : row_lift_star(m, op.i);
    bool changed = out != m;
    return {std::move(out), changed};
  }
  if (op.column) return op.raise ? col_raise(m, op.i) : col_lower(m, op.i);
  return op.raise ? row_drop(m, op.i) : row_lift(m, op.i);
}

struct TraceStep {
  MultilineQueue m;
  Composition type;  // empty when the rows do not form a multiline queue
};

struct Trace {
  std::vector<TraceStep> steps;
  bool complete = true;
  int stopped_at = -1;  // index into the applied operators
};

inline Composition type_if_valid(const MultilineQueue& m) {
  return has_valid_shape(m) ? mlq_type(m) : Composition{};
}

// Applies ops in the given order, stopping at the first trivial action.
inline Trace trace_path(const MultilineQueue& m, const std::vector<CrystalOp>& ops) {
  Trace t;
  t.steps.push_back({m, type_if_valid(m)});
  for (std::size_t k = 0; k < ops.size(); ++k) {
    auto r = apply_op(t.steps.back().m, ops[k]);
    if (!r.acted) {
      t.complete = false;
      t.stopped_at = static_cast<int>(k);
      break;
    }
    t.steps.push_back({r.value, type_if_valid(r.value)});
  }
  return t;
}

}  // namespace mlqkit
