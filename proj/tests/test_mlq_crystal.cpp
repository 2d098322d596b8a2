#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mlqkit/collapse.hpp>
#include <mlqkit/crystal.hpp>

#include "oracles.hpp"

using namespace mlqkit;

namespace {

// Every (lambda, n) with |lambda| <= max_size and l(lambda) <= n <= max_cols.
template <class Fn>
void each_shape(int max_size, int max_cols, Fn&& fn) {
  for (int m = 1; m <= max_size; ++m)
    for (const auto& lam : partitions_of(m))
      for (int n = static_cast<int>(lam.size()); n <= max_cols; ++n) fn(lam, n);
}

std::vector<std::vector<int>> kind_words(int max_len) {
  std::vector<std::vector<int>> out{{}};
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (int k : {-1, 0, 1}) {
        auto v = w;
        v.push_back(k);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("enumerators list every object once in the documented order") {
  CHECK(partitions_of(4) == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(partitions_of(6).size() == 11);
  CHECK(weak_compositions(2, 2) == std::vector<Composition>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(weak_compositions(4, 3).size() == 15);
  CHECK(strong_compositions(3) == std::vector<StrongComposition>{{3}, {2, 1}, {1, 2}, {1, 1, 1}});
  CHECK(rearrangements({2, 1}, 3) ==
        std::vector<Composition>{{2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 0, 2}, {0, 2, 1}, {0, 1, 2}});
  CHECK_THROWS_AS(rearrangements({1, 1, 1}, 2), TooFewPositionsError);
  CHECK(subsets_colex(4, 2) ==
        std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(swap_adjacent({1, 2, 3}, 2) == Composition{1, 3, 2});
}

TEST_CASE("conjugation is an involution and reverses dominance") {
  for (int m = 1; m <= 8; ++m) {
    auto parts = partitions_of(m);
    for (const auto& lam : parts) {
      CHECK(conjugate(conjugate(lam)) == lam);
      CHECK(total(conjugate(lam)) == m);
      for (const auto& mu : parts)
        if (dominates(lam, mu)) CHECK(dominates(conjugate(mu), conjugate(lam)));
    }
  }
  CHECK(conjugate({3, 3, 1, 1}) == Partition{4, 2, 2});
  CHECK(compress({0, 2, 0, 1}) == StrongComposition{2, 1});
  CHECK(sort_parts({0, 2, 0, 3}) == Partition{3, 2});
}

TEST_CASE("type, words and label sets of ({1,3,4,5},{2,3,4},{3,5})") {
  MultilineQueue m = make_mlq(5, {{1, 3, 4, 5}, {2, 3, 4}, {3, 5}});
  CHECK(mlq_type(m) == Composition{1, 0, 3, 3, 2});
  CHECK(mlq_strtype(m) == StrongComposition{1, 3, 3, 2});
  CHECK(row_word(m).str() == "53.432.5431");
  CHECK(column_word(m).str() == "1.2.321.21.31");
  CHECK(label_sets(m) == std::map<int, std::vector<int>>{{1, {1}}, {2, {5}}, {3, {3, 4}}});
  CHECK(cylindrical_match({{2, 3, 4}, {3, 5}}) == std::vector<int>{2, 3});
  CHECK(cylindrical_match({{1, 3, 4, 5}, {2, 3, 4}}) == std::vector<int>{3, 4, 5});
  CHECK(label_at_least(m, 3) == std::vector<int>{3, 4});
  CHECK(label_at_least(m, 2) == std::vector<int>{3, 4, 5});
  CHECK(label_at_least(m, 1) == std::vector<int>{1, 3, 4, 5});
  CHECK(mlq_shape(m) == Partition{3, 3, 2, 1});
}

TEST_CASE("label sets from the cylindrical rule agree with FM on every small queue") {
  each_shape(6, 5, [](const Partition& lam, int n) {
    for_each_mlq(lam, n, [&](const MultilineQueue& m) {
      Composition t = mlq_type(m);
      for (int k = 1; k <= m.height(); ++k) {
        std::vector<int> expect;
        for (int c = 1; c <= n; ++c)
          if (t[c - 1] >= k) expect.push_back(c);
        REQUIRE(label_at_least(m, k) == expect);
      }
    });
  });
}

TEST_CASE("FM labeling matches an independent cylinder walk") {
  long long seen = 0;
  each_shape(6, 5, [&](const Partition& lam, int n) {
    long long count = 0;
    for_each_mlq(lam, n, [&](const MultilineQueue& m) {
      oracle::Labeling o = oracle::fm(m.rows, n);
      INFO(to_string(m));
      REQUIRE(mlq_type(m) == o.type);
      REQUIRE(maj(m) == o.maj);
      ++count;
    });
    CHECK(count == count_mlq(lam, n));
    seen += count;
  });
  CHECK(seen == 44715);
}

TEST_CASE("strands and wrapping on two columns") {
  MultilineQueue straight = make_mlq(2, {{2}, {1}});
  auto s = strands(straight);
  REQUIRE(s.size() == 1);
  CHECK(s[0].length() == 2);
  CHECK(s[0].anchor() == 2);
  CHECK(maj(straight) == 0);

  MultilineQueue wrap = make_mlq(2, {{1}, {2}});
  CHECK(maj(wrap) == 1);
  CHECK(mlq_type(wrap) == Composition{2, 0});
  CHECK(is_nonwrapping(straight_mlq({0, 3, 1, 2})));
  CHECK(mlq_type(straight_mlq({0, 3, 1, 2})) == Composition{0, 3, 1, 2});
}

TEST_CASE("invalid queues are rejected") {
  CHECK_THROWS_AS(make_mlq(3, {{1, 4}}), ShapeError);
  CHECK_THROWS_AS(make_mlq(3, {{1, 1}}), ShapeError);
  CHECK_THROWS_AS(fm_label(make_mlq(3, {{1}, {1, 2}})), ShapeError);
  CHECK_THROWS_AS(for_each_mlq({1, 1, 1}, 2, [](const MultilineQueue&) {}), TooFewColumnsError);
  CHECK_THROWS_AS(col_raise(make_mlq(3, {{1}}), 3), IndexError);
  CHECK_THROWS_AS(col_raise(make_mlq(3, {{1}}), 0), IndexError);
}

TEST_CASE("classical and cylindrical bracketing match the literal pair-removal rules") {
  for (const auto& kinds : kind_words(9)) {
    auto line = oracle::line_matched(kinds);
    auto circle = oracle::circle_matched(kinds);
    BracketMatching a = match_classical(kinds), b = match_cylindrical(kinds);
    for (std::size_t p = 0; p < kinds.size(); ++p) {
      bool ma = a.status[p] == Bracket::MatchedOpen || a.status[p] == Bracket::MatchedClose;
      bool mb = b.status[p] == Bracket::MatchedOpen || b.status[p] == Bracket::MatchedClose;
      REQUIRE(ma == static_cast<bool>(line[p]));
      REQUIRE(mb == static_cast<bool>(circle[p]));
      if (ma) REQUIRE(a.partner[a.partner[p]] == static_cast<int>(p));
    }
  }
}

TEST_CASE("word operators are mutually inverse and respect the string lengths") {
  std::vector<std::vector<int>> words{{}};
  for (int len = 1; len <= 7; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words)
      if (static_cast<int>(w.size()) == len - 1)
        for (int x : {1, 2, 3}) {
          auto v = w;
          v.push_back(x);
          next.push_back(v);
        }
    words.insert(words.end(), next.begin(), next.end());
  }
  for (const auto& w : words)
    for (int i : {1, 2}) {
      auto up = word_raise(w, i);
      if (up.acted) REQUIRE(word_lower(up.value, i).value == w);
      auto down = word_lower(w, i);
      if (down.acted) REQUIRE(word_raise(down.value, i).value == w);
      int c_i = static_cast<int>(std::count(w.begin(), w.end(), i));
      int c_j = static_cast<int>(std::count(w.begin(), w.end(), i + 1));
      auto top = word_raise_star(w, i), bottom = word_lower_star(w, i);
      REQUIRE(std::count(top.begin(), top.end(), i) - std::count(bottom.begin(), bottom.end(), i) ==
              std::count(bottom.begin(), bottom.end(), i + 1) - std::count(top.begin(), top.end(), i + 1));
      REQUIRE(c_i + c_j == std::count(top.begin(), top.end(), i) + std::count(top.begin(), top.end(), i + 1));
    }
}

TEST_CASE("row and column operators on ({1,3,4,5},{2,3,4},{3,5})") {
  MultilineQueue m = make_mlq(5, {{1, 3, 4, 5}, {2, 3, 4}, {3, 5}});
  auto d = row_drop(m, 2);
  REQUIRE(d.acted);
  CHECK(d.value == make_mlq(5, {{1, 3, 4, 5}, {2, 3, 4, 5}, {3}}));
  CHECK_FALSE(col_raise(m, 4).acted);
  CHECK_FALSE(col_lower(m, 4).acted);
  CHECK(col_raise(m, 4).value == m);
}

TEST_CASE("active regions of a nine-column queue") {
  MultilineQueue m = make_mlq(9, {{2, 3, 5, 7, 8, 9}, {2, 3, 4, 6, 7, 8}, {1, 2, 3, 5, 6, 8}, {3, 6, 9}, {2}});
  ActiveRegion a2 = active_region(m, 2), a5 = active_region(m, 5), a7 = active_region(m, 7);
  CHECK(a2.p == 1);
  CHECK(a2.r == 4);
  CHECK(is_full(m, 2, Direction::Raise));
  CHECK(a5.p == 3);
  CHECK(a5.r == 4);
  CHECK_FALSE(is_full(m, 5, Direction::Raise));
  CHECK(a7.p == 3);
  CHECK(a7.r == 3);
  CHECK_FALSE(is_full(m, 7, Direction::Raise));
  // the moved balls sit in the top row of each region
  for (const auto& a : {a2, a5, a7}) {
    MultilineQueue after = col_raise(m, a.i).value;
    CHECK(after.has(a.r, a.i));
    CHECK_FALSE(after.has(a.r, a.i + 1));
  }
}

TEST_CASE("classical matching and full row drops on small tensor words") {
  CHECK(classical_match({{1, 3, 4}, {2, 5}}) == std::vector<int>{3});
  CHECK(classical_match({{3, 5}, {1, 2, 4}, {3, 4}}) == std::vector<int>{5});
  MultilineQueue b = make_mlq(5, {{3, 5}, {1, 2, 4}, {3, 4}});
  CHECK(row_drop_star(b, 1) == make_mlq(5, {{1, 3, 5}, {2, 4}, {3, 4}}));
  CHECK(row_drop_star(b, 2) == make_mlq(5, {{3, 5}, {1, 2, 3, 4}, {4}}));

  MultilineQueue t = make_mlq(6, {{1, 3, 6}, {1, 2, 3, 5, 6}, {2, 4, 6}});
  CHECK(classical_match({t.rows[1], t.rows[2]}) == std::vector<int>{2, 5, 6});
  CHECK(classical_match(t.rows) == std::vector<int>{3, 6});
  MultilineQueue t1 = row_drop_star(t, 1);
  CHECK(classical_match({t1.rows[1], t1.rows[2]}) == std::vector<int>{3, 6});
  CHECK(classical_match(t1.rows) == std::vector<int>{3, 6});
}

TEST_CASE("operators on every small queue") {
  each_shape(5, 4, [](const Partition& lam, int n) {
    for_each_mlq(lam, n, [&](const MultilineQueue& m) {
      INFO(to_string(m));
      const int mj = maj(m);
      const Composition t = mlq_type(m);
      const Tableau rec = collapse(m).record;
      for (int i = 1; i < n; ++i) {
        auto up = col_raise(m, i), down = col_lower(m, i);
        if (up.acted) {
          REQUIRE(col_lower(up.value, i).value == m);
          REQUIRE(content_monomial(up.value)[i - 1] == content_monomial(m)[i - 1] + 1);
        }
        if (down.acted) REQUIRE(col_raise(down.value, i).value == m);
        for (auto [g, dir] : {std::pair{up, Direction::Raise}, std::pair{down, Direction::Lower}}) {
          REQUIRE(row_sizes(g.value) == row_sizes(m));
          REQUIRE(maj(g.value) == mj);
          REQUIRE(collapse(g.value).record == rec);
          REQUIRE(mlq_type(g.value) == (is_full(m, i, dir) ? swap_adjacent(t, i) : t));
          if (!g.acted) REQUIRE_FALSE(is_full(m, i, dir));
        }
      }
      for (int i = 1; i < m.height(); ++i) {
        auto d = row_drop(m, i);
        if (d.acted) REQUIRE(row_lift(d.value, i).value == m);
        auto u = row_lift(m, i);
        if (u.acted) REQUIRE(row_drop(u.value, i).value == m);
        REQUIRE(content_monomial(d.value) == content_monomial(m));
      }
    });
  });
}
