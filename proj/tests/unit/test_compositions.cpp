#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "noma/compositions.hpp"
#include "noma/error.hpp"

using namespace noma;

namespace {

// Brute-force oracle: every vector in [0, t]^K whose entries sum to t.
std::uint64_t brute_force_count(int t, int k) {
  std::vector<int> v(static_cast<std::size_t>(k), 0);
  std::uint64_t count = 0;
  for (;;) {
    if (std::accumulate(v.begin(), v.end(), 0) == t) ++count;
    std::size_t i = 0;
    while (i < v.size() && v[i] == t) v[i++] = 0;
    if (i == v.size()) return count;
    ++v[i];
  }
}

}  // namespace

TEST_CASE("documented examples") {
  CHECK(enumerate_compositions(2, 2) == std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(enumerate_compositions(0, 5) == std::vector<std::vector<int>>{{0, 0, 0, 0, 0}});
  CHECK(enumerate_compositions(3, 24).size() == 2600);
  CHECK(composition_count(3, 24) == 2600);
}

TEST_CASE("three-part order") {
  CHECK(enumerate_compositions(2, 3) == std::vector<std::vector<int>>{
                                            {0, 0, 2}, {0, 1, 1}, {1, 0, 1},
                                            {0, 2, 0}, {1, 1, 0}, {2, 0, 0}});
}

TEST_CASE("zero parts") {
  CHECK(enumerate_compositions(0, 0) == std::vector<std::vector<int>>{{}});
  CHECK_THROWS_AS(CompositionCursor(1, 0), DomainError);
  CHECK_THROWS_AS(CompositionCursor(-1, 2), DomainError);
}

TEST_CASE("exhaustive count, uniqueness and sums for t <= 6, K <= 10") {
  for (int k = 1; k <= 10; ++k) {
    for (int t = 0; t <= 6; ++t) {
      const auto all = enumerate_compositions(t, k);
      const std::set<std::vector<int>> unique(all.begin(), all.end());
      CHECK(unique.size() == all.size());
      CHECK(all.size() == composition_count(t, k));
      if (k <= 6) CHECK(all.size() == brute_force_count(t, k));
      for (const auto& c : all) {
        CHECK(std::accumulate(c.begin(), c.end(), 0) == t);
        for (int part : c) CHECK(part >= 0);
      }
    }
  }
}

TEST_CASE("order is strictly descending colexicographic") {
  const auto all = enumerate_compositions(4, 5);
  for (std::size_t n = 1; n < all.size(); ++n) {
    const auto& prev = all[n - 1];
    const auto& cur = all[n];
    std::size_t pos = prev.size();
    while (pos > 0 && prev[pos - 1] == cur[pos - 1]) --pos;
    REQUIRE(pos > 0);
    CHECK(prev[pos - 1] > cur[pos - 1]);
  }
}

TEST_CASE("composition_count saturates instead of overflowing") {
  CHECK(composition_count(1000, 1000) == std::numeric_limits<std::uint64_t>::max());
  CHECK(composition_count(5, 0) == 0);
}
