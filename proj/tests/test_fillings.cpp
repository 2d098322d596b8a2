#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mlqkit/fillings.hpp>

#include <algorithm>
#include <set>

#include "oracles.hpp"

using namespace mlqkit;

namespace {

std::vector<Composition> small_compositions(int max_size, int max_len) {
  std::vector<Composition> out;
  for (int m = 0; m <= max_size; ++m)
    for (int len = 1; len <= max_len; ++len)
      for (auto& a : weak_compositions(m, len)) out.push_back(a);
  return out;
}

// Every filling of dg(lam) whose row r holds the set rows[r-1] in some order.
std::vector<CompositionFilling> fillings_with_rows(const Partition& lam, const std::vector<std::vector<int>>& rows) {
  std::vector<CompositionFilling> out;
  std::vector<std::vector<int>> perm = rows;
  for (auto& r : perm) std::sort(r.begin(), r.end());
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == perm.size()) {
      CompositionFilling f{lam, std::vector<std::vector<int>>(lam.size()), FillingKind::SSQT};
      for (std::size_t k = 0; k < perm.size(); ++k)
        for (std::size_t j = 0; j < perm[k].size(); ++j) f.columns[j].push_back(perm[k][j]);
      out.push_back(f);
      return;
    }
    std::vector<int> keep = perm[r];
    do {
      rec(r + 1);
    } while (std::next_permutation(perm[r].begin(), perm[r].end()));
    perm[r] = keep;
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("the SSAF predicate matches the definition on every small filling") {
  for (const auto& alpha : small_compositions(4, 3))
    for (const auto& cols : oracle::all_fillings(alpha, static_cast<int>(alpha.size()) + 1)) {
      CompositionFilling f{alpha, cols, FillingKind::SSAF};
      INFO(to_string(alpha));
      REQUIRE(is_ssaf(f) == oracle::is_ssaf(alpha, cols));
    }
}

TEST_CASE("SSAF enumeration is complete and in bijection with nonwrapping queues of the same type") {
  for (const auto& alpha : small_compositions(5, 4)) {
    const int n = static_cast<int>(alpha.size());
    std::set<std::vector<std::vector<int>>> brute, listed;
    for (const auto& cols : oracle::all_fillings(alpha, n))
      if (oracle::is_ssaf(alpha, cols)) brute.insert(cols);
    std::set<MultilineQueue> images;
    for (const auto& f : enumerate_ssaf(alpha)) {
      listed.insert(f.columns);
      MultilineQueue m = filling_to_mlq(f, n);
      REQUIRE(is_nonwrapping(m));
      REQUIRE(mlq_type(m) == alpha);
      REQUIRE(mlq_to_ssaf(m) == f);
      images.insert(m);
    }
    INFO(to_string(alpha));
    REQUIRE(listed == brute);
    std::size_t expected = 0;
    for_each_mlq(sort_parts(alpha), n, [&](const MultilineQueue& m) {
      if (is_nonwrapping(m) && mlq_type(m) == alpha) ++expected;
    });
    REQUIRE(images.size() == expected);
  }
}

TEST_CASE("the eight fillings of shape (1,0,3,2)") {
  auto all = enumerate_ssaf({1, 0, 3, 2});
  REQUIRE(all.size() == 8);
  std::set<std::pair<std::vector<int>, std::vector<int>>> cols;
  for (const auto& f : all) cols.emplace(f.columns[2], f.columns[3]);
  CHECK(cols == std::set<std::pair<std::vector<int>, std::vector<int>>>{{{3, 3, 3}, {4, 2}},
                                                                          {{3, 3, 3}, {4, 4}},
                                                                          {{3, 3, 2}, {4, 2}},
                                                                          {{3, 3, 1}, {4, 2}},
                                                                          {{3, 3, 2}, {4, 4}},
                                                                          {{3, 3, 1}, {4, 4}},
                                                                          {{3, 2, 2}, {4, 4}},
                                                                          {{3, 2, 1}, {4, 4}}});
  CompositionFilling first{{1, 0, 3, 2}, {{1}, {}, {3, 3, 3}, {4, 2}}, FillingKind::SSAF};
  CHECK(filling_to_mlq(first, 4) == make_mlq(4, {{1, 3, 4}, {2, 3}, {3}}));
  CHECK(mlq_type(filling_to_mlq(first, 4)) == Composition{1, 0, 3, 2});
}

TEST_CASE("single cells and straight queues") {
  for (int n = 1; n <= 5; ++n)
    for (int j = 1; j <= n; ++j) {
      Composition alpha(n, 0);
      alpha[j - 1] = 1;
      CompositionFilling f = mlq_to_ssaf(make_mlq(n, {{j}}));
      CHECK(f.columns[j - 1] == std::vector<int>{j});
      CHECK(filling_to_mlq(f, n) == make_mlq(n, {{j}}));
    }
  CompositionFilling s = mlq_to_ssaf(straight_mlq({2, 0, 3}));
  CHECK(s.columns == std::vector<std::vector<int>>{{1, 1}, {}, {3, 3, 3}});
  CHECK_THROWS_AS(mlq_to_ssaf(make_mlq(2, {{1}, {2}})), NotNonwrappingError);
}

TEST_CASE("quinv filling of a (4,4,3,2) queue") {
  MultilineQueue m = make_mlq(6, {{1, 4, 5, 6}, {2, 3, 4, 5}, {1, 4, 6}, {3, 4}});
  CompositionFilling t = mlq_to_ssqt(m);
  CHECK(filling_row(t, 1) == std::vector<int>{4, 5, 6, 1});
  CHECK(filling_row(t, 2) == std::vector<int>{4, 2, 3, 5});
  CHECK(filling_row(t, 3) == std::vector<int>{4, 6, 1});
  CHECK(filling_row(t, 4) == std::vector<int>{3, 4});
  CHECK(is_ssqt(t));
  CHECK(filling_maj(t) == 3);
  CHECK(maj(m) == 3);
  CHECK(filling_type(t, 6) == Composition{2, 0, 0, 4, 4, 3});
  CHECK(mlq_type(m) == Composition{2, 0, 0, 4, 4, 3});
}

TEST_CASE("each row content has exactly one quinv filling, carrying maj and type") {
  for (int size = 1; size <= 5; ++size)
    for (const auto& lam : partitions_of(size))
      for (int n = static_cast<int>(lam.size()); n <= 4; ++n)
        for_each_mlq(lam, n, [&](const MultilineQueue& m) {
          INFO(to_string(m));
          int valid = 0;
          for (const auto& f : fillings_with_rows(lam, m.rows)) valid += is_ssqt(f);
          REQUIRE(valid == 1);
          CompositionFilling t = mlq_to_ssqt(m);
          REQUIRE(is_ssqt(t));
          REQUIRE(filling_to_mlq(t, n) == m);
          REQUIRE(filling_maj(t) == maj(m));
          REQUIRE(filling_type(t, n) == mlq_type(m));
        });
}

TEST_CASE("quinv triples") {
  CHECK(quinv_triple_ok(1, 2, 3));
  CHECK(quinv_triple_ok(2, 2, 3));
  CHECK(quinv_triple_ok(4, 2, 3));
  CHECK(quinv_triple_ok(2, 3, 1));
  CHECK_FALSE(quinv_triple_ok(3, 2, 3));
  CHECK_FALSE(quinv_triple_ok(1, 3, 2));
}

TEST_CASE("malformed fillings are rejected") {
  CompositionFilling repeat{{1, 1}, {{1}, {1}}, FillingKind::SSAF};
  CHECK_THROWS_AS(filling_to_mlq(repeat, 2), FillingError);
  CHECK_FALSE(is_ssaf(repeat));
  CompositionFilling rising{{0, 2}, {{}, {2, 3}}, FillingKind::SSAF};
  CHECK_FALSE(is_ssaf(rising));
}
