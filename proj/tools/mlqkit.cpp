#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <mlqkit/collapse.hpp>
#include <mlqkit/fillings.hpp>
#include <mlqkit/graph.hpp>
#include <mlqkit/io.hpp>
#include <mlqkit/symfun.hpp>
#include <mlqkit/verify.hpp>

using namespace mlqkit;

namespace {

struct Options {
  bool pretty = false;
  std::uint64_t seed = 1;
  std::string input;  // empty reads stdin
};

std::string read_input(const Options& o) {
  if (o.input.empty() || o.input == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(o.input);
  if (!in) throw UsageError("cannot read '" + o.input + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const Options& o, const json& j, const std::string& human) {
  if (o.pretty) std::cout << human << (human.empty() || human.back() == '\n' ? "" : "\n");
  else std::cout << j.dump() << "\n";
}

std::string mlq_line(const MultilineQueue& m) { return to_string(m); }

json mlq_summary(const MultilineQueue& m) {
  json j = {{"mlq", to_json(m)}};
  if (has_valid_shape(m)) {
    j["type"] = mlq_type(m);
    j["maj"] = maj(m);
  } else {
    j["type"] = nullptr;
    j["maj"] = nullptr;
  }
  return j;
}

std::string summary_line(const json& s) {
  std::string out = to_string(mlq_from_json(s["mlq"]));
  if (!s["type"].is_null()) out += "  type " + to_string(s["type"].get<Composition>()) + "  maj " + std::to_string(s["maj"].get<int>());
  return out;
}

int cmd_op(const Options& o, const std::string& word, bool trace) {
  MultilineQueue m = mlq_from_json(parse_json(read_input(o)));
  auto ops = parse_op_word(word);
  json steps = json::array();
  bool any = false;
  MultilineQueue cur = m;
  std::string human = "before  " + summary_line(mlq_summary(m)) + "\n";
  for (const auto& op : ops) {
    auto r = apply_op(cur, op);
    any = any || r.acted;
    cur = r.value;
    json s = mlq_summary(cur);
    s["op"] = op.str();
    s["acted"] = r.acted;
    if (trace) {
      steps.push_back(s);
      human += op.str() + (r.acted ? "  " : " (trivial)  ") + summary_line(s) + "\n";
    }
  }
  human += "after   " + summary_line(mlq_summary(cur));
  json out = {{"before", mlq_summary(m)}, {"after", mlq_summary(cur)}, {"acted", any}};
  if (trace) out["steps"] = steps;
  emit(o, out, human);
  return 0;
}

int cmd_collapse(const Options& o) {
  MultilineQueue m = mlq_from_json(parse_json(read_input(o)));
  CollapsePair p = collapse(m);
  int c = charge(p.record);
  json out = {{"nonwrap", to_json(p.nonwrap)}, {"record", to_json(p.record)}, {"maj", maj(m)}, {"charge", c}};
  std::ostringstream h;
  h << "nonwrap " << to_string(p.nonwrap) << "\nrecord  " << to_string(p.record) << "\nmaj " << maj(m) << "  charge " << c;
  emit(o, out, h.str());
  return 0;
}

int cmd_uncollapse(const Options& o) {
  CollapsePair p = pair_from_json(parse_json(read_input(o)));
  MultilineQueue m = uncollapse(p);
  emit(o, to_json(m), mlq_line(m));
  return 0;
}

struct ShapeArgs {
  std::string shape, alpha, gamma, mu;
  int cols = 0;
};

int cols_or(const ShapeArgs& a, int fallback) { return a.cols > 0 ? a.cols : fallback; }

std::vector<int> need(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing ") + flag);
  return parse_int_list(text);
}

int cmd_genfun(const Options& o, const std::string& kind, const ShapeArgs& a) {
  GenFun g;
  if (kind == "P" || kind == "schur") {
    Partition lam = need(a.shape, "--shape");
    int n = cols_or(a, static_cast<int>(lam.size()));
    g = kind == "P" ? genfun_P(lam, n) : genfun_schur(lam, n);
  } else if (kind == "f" || kind == "atom") {
    Composition alpha = need(a.alpha, "--alpha");
    g = kind == "f" ? genfun_f(alpha) : genfun_atom(alpha);
  } else if (kind == "G" || kind == "qschur") {
    StrongComposition gamma = need(a.gamma, "--gamma");
    int n = cols_or(a, static_cast<int>(gamma.size()));
    g = kind == "G" ? genfun_G(gamma, n) : genfun_qschur(gamma, n);
  } else {
    throw UsageError("unknown generating function '" + kind + "'");
  }
  emit(o, to_json(g), to_string(g));
  return 0;
}

int cmd_expand(const Options& o, const std::string& basis, const ShapeArgs& a) {
  Expansion e;
  if (basis == "schur") {
    Partition lam = need(a.shape, "--shape");
    e = expand_in_schur(lam, cols_or(a, static_cast<int>(lam.size())));
  } else if (basis == "atoms") {
    e = expand_in_atoms(need(a.alpha, "--alpha"));
  } else if (basis == "qschur") {
    StrongComposition gamma = need(a.gamma, "--gamma");
    e = expand_in_qschur(gamma, cols_or(a, static_cast<int>(gamma.size())));
  } else {
    throw UsageError("unknown basis '" + basis + "'");
  }
  std::string human;
  for (auto it = e.coeffs.rbegin(); it != e.coeffs.rend(); ++it)
    human += "(" + to_string(it->second) + ") " + basis_name(e.kind) + to_string(it->first) + "\n";
  emit(o, to_json(e), human.empty() ? "0" : human);
  return 0;
}

int cmd_kostka(const Options& o, const ShapeArgs& a, const std::string& method) {
  Partition lam = need(a.shape, "--shape");
  Partition mu = need(a.mu, "--mu");
  QPoly k;
  if (method == "charge") k = kostka_foulkes(lam, mu);
  else if (method == "preimage") k = kostka_by_preimage(lam, mu);
  else throw UsageError("unknown method '" + method + "'");
  emit(o, {{"shape", lam}, {"mu", mu}, {"q", to_json(k)}}, to_string(k));
  return 0;
}

int cmd_graph(const Options& o, const ShapeArgs& a, const std::string& filter, const std::string& dot_out,
              bool with_components) {
  Partition lam = need(a.shape, "--shape");
  CrystalGraph g = build_graph(lam, cols_or(a, static_cast<int>(lam.size())), parse_filter(filter));
  if (!dot_out.empty()) {
    std::ofstream out(dot_out);
    if (!out) throw UsageError("cannot write '" + dot_out + "'");
    out << to_dot(g);
  }
  std::ostringstream h;
  h << g.vertices.size() << " vertices, " << g.edges.size() << " edges";
  if (with_components) h << ", " << components(g).size() << " components";
  emit(o, to_json(g, with_components), h.str());
  return 0;
}

int cmd_enumerate(const Options& o, const std::string& what, const ShapeArgs& a, const std::string& filter) {
  json out = json::array();
  std::string human;
  if (what == "mlq") {
    Partition lam = need(a.shape, "--shape");
    GraphFilter f = parse_filter(filter);
    for_each_mlq(lam, cols_or(a, static_cast<int>(lam.size())), [&](const MultilineQueue& m) {
      LabelArray la = fm_label(m);
      if (!f.accepts(type_of(la), maj_of(la))) return;
      out.push_back(to_json(m));
      human += to_string(m) + "\n";
    });
  } else if (what == "ssyt") {
    for (const auto& t : enumerate_ssyt(need(a.shape, "--shape"), need(a.mu, "--mu"))) {
      out.push_back(to_json(t));
      human += to_string(t) + "\n";
    }
  } else if (what == "ssaf") {
    for (const auto& f : enumerate_ssaf(need(a.alpha, "--alpha"))) {
      out.push_back(to_json(f));
      human += to_json(f)["columns"].dump() + "\n";
    }
  } else if (what == "ssqt") {
    Partition lam = need(a.shape, "--shape");
    for_each_mlq(lam, cols_or(a, static_cast<int>(lam.size())), [&](const MultilineQueue& m) {
      CompositionFilling t = mlq_to_ssqt(m);
      out.push_back(to_json(t));
      human += to_json(t)["columns"].dump() + "\n";
    });
  } else {
    throw UsageError("unknown family '" + what + "'");
  }
  emit(o, out, human);
  return 0;
}

int cmd_verify(const Options& o, const std::string& suite, VerifyBounds b) {
  b.seed = o.seed;
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  json reports = json::array();
  std::string human;
  bool ok = true;
  for (const auto& name : names) {
    VerifyReport r = run_suite(name, b);
    ok = ok && r.passed();
    reports.push_back(to_json(r));
    std::ostringstream h;
    h << (r.passed() ? "PASS " : "FAIL ") << r.suite << ": " << r.instances << " instances, " << r.failure_count
      << " failures, " << r.seconds << " s";
    if (!r.facts.empty()) h << "  " << r.facts.dump();
    for (const auto& f : r.failures) h << "\n  " << f.check << ": " << f.counterexample.dump();
    human += h.str() + "\n";
  }
  emit(o, suite == "all" ? reports : reports.front(), human);
  return ok ? 0 : 1;
}

int report_error(const std::string& name, const std::string& what) {
  std::cerr << json{{"error", name}, {"message", what}}.dump() << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiline queues, crystal operators, collapsing and their symmetric function expansions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--pretty", o.pretty, "Human-readable output");
  app.add_option("--seed", o.seed, "Seed for randomized suites");

  ShapeArgs a;
  auto add_shape = [&](CLI::App* s) { s->add_option("--shape", a.shape, "Partition, e.g. 3,3,1,1"); };
  auto add_cols = [&](CLI::App* s) { s->add_option("--cols", a.cols, "Number of columns n"); };
  auto add_input = [&](CLI::App* s) { s->add_option("--in", o.input, "Input JSON file (default stdin)"); };

  std::string word;
  bool trace = false;
  auto* op = app.add_subcommand("op", "Apply an operator word (read right to left) to an MLQ");
  op->add_option("word", word, "e.g. \"e<2 f>1 f>2 f>2\"")->required();
  op->add_flag("--trace", trace, "Report every intermediate queue");
  add_input(op);

  auto* col = app.add_subcommand("collapse", "Collapse an MLQ to {nonwrap, record}");
  add_input(col);
  auto* unc = app.add_subcommand("uncollapse", "Invert the collapsing map on {nonwrap, record}");
  add_input(unc);

  std::string kind;
  auto* gf = app.add_subcommand("genfun", "Generating function P, f, G, schur, atom or qschur");
  gf->add_option("kind", kind)->required()->check(CLI::IsMember({"P", "f", "G", "schur", "atom", "qschur"}));
  add_shape(gf);
  add_cols(gf);
  gf->add_option("--alpha", a.alpha, "Weak composition");
  gf->add_option("--gamma", a.gamma, "Strong composition");

  std::string basis;
  auto* ex = app.add_subcommand("expand", "Expand f, G or P in atoms, quasisymmetric Schur or Schur functions");
  ex->add_option("basis", basis)->required()->check(CLI::IsMember({"atoms", "qschur", "schur"}));
  add_shape(ex);
  add_cols(ex);
  ex->add_option("--alpha", a.alpha, "Weak composition");
  ex->add_option("--gamma", a.gamma, "Strong composition");

  std::string method = "charge";
  auto* ko = app.add_subcommand("kostka", "Kostka-Foulkes polynomial K_{shape,mu}(q)");
  add_shape(ko);
  ko->add_option("--mu", a.mu, "Content partition");
  ko->add_option("--method", method, "charge or preimage");

  std::string filter = "all", dot_out;
  bool with_components = false;
  auto* gr = app.add_subcommand("graph", "Column-operator crystal graph of MLQ_shape on n columns");
  add_shape(gr);
  add_cols(gr);
  gr->add_option("--filter", filter, "all | nonwrapping | [nonwrapping+]type=.. | [nonwrapping+]strtype=..");
  gr->add_option("--dot-out", dot_out, "Write DOT to this file");
  gr->add_flag("--components", with_components, "Include connected components");

  std::string suite;
  VerifyBounds bounds;
  auto* ve = app.add_subcommand("verify", "Run a verification suite");
  ve->add_option("suite", suite, "all or one of the suite names")->required();
  ve->add_option("--maxSize", bounds.max_size, "Largest |lambda| for exhaustive suites");
  ve->add_option("--maxCols", bounds.max_cols, "Largest n for exhaustive suites");
  ve->add_option("--instances", bounds.instances, "Randomized instance count");

  std::string family;
  auto* en = app.add_subcommand("enumerate", "List MLQs, SSYT, SSAF or SSQT");
  en->add_option("family", family)->required()->check(CLI::IsMember({"mlq", "ssyt", "ssaf", "ssqt"}));
  add_shape(en);
  add_cols(en);
  en->add_option("--mu", a.mu, "Content for ssyt");
  en->add_option("--alpha", a.alpha, "Shape for ssaf");
  en->add_option("--filter", filter, "Filter for mlq");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("UsageError", e.what());
  }

  try {
    if (*op) return cmd_op(o, word, trace);
    if (*col) return cmd_collapse(o);
    if (*unc) return cmd_uncollapse(o);
    if (*gf) return cmd_genfun(o, kind, a);
    if (*ex) return cmd_expand(o, basis, a);
    if (*ko) return cmd_kostka(o, a, method);
    if (*gr) return cmd_graph(o, a, filter, dot_out, with_components);
    if (*ve) return cmd_verify(o, suite, bounds);
    if (*en) return cmd_enumerate(o, family, a, filter);
  } catch (const TheoremViolationError& e) {
    std::cerr << json{{"error", e.name()}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const Error& e) {
    return report_error(e.name(), e.what());
  }
  return 2;
}
