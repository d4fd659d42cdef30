#include <doctest.h>

#include <vector>

#include "dtri/error.hpp"
#include "dtri/partitions.hpp"
#include "oracles.hpp"

using namespace dtri;

namespace {

std::vector<Partition> all_partitions(unsigned n) {
  std::vector<Partition> out;
  for (const auto& p : enumerate_partitions(n)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("partition validation") {
  CHECK_NOTHROW(Partition({3, 3, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition().size() == 0);
}

TEST_CASE("enumeration counts and order") {
  auto zero = all_partitions(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());

  CHECK(all_partitions(5).size() == 7);

  auto p = oracle::partition_numbers(40);
  CHECK(p[20] == 627);
  CHECK(all_partitions(20).size() == 627);
  for (unsigned n = 0; n <= 40; ++n) CHECK(count_partitions_bruteforce(n) == p[n]);

  auto four = all_partitions(4);
  std::vector<Partition> expected{Partition({4}), Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1}),
                                  Partition({1, 1, 1, 1})};
  CHECK(four == expected);
  for (std::size_t i = 1; i < four.size(); ++i) CHECK(four[i - 1].parts() > four[i].parts());

  CHECK_THROWS_AS(enumerate_partitions(kMaxEnumerationSize + 1), EnumerationLimit);
}

TEST_CASE("Durfee square and triangle sizes") {
  const Partition fig({6, 4, 2, 1});
  CHECK(durfee_square_size(fig) == 2);
  CHECK(durfee_triangle_size(fig) == 4);
  CHECK(durfee_square_size(Partition()) == 0);
  CHECK(durfee_triangle_size(Partition()) == 0);
  CHECK(durfee_square_size(Partition({1, 1, 1})) == 1);
  for (unsigned n = 1; n <= 10; ++n) CHECK(durfee_triangle_size(Partition({n})) == 1);
}

TEST_CASE("conjugation") {
  CHECK(conjugate(Partition({6, 4, 2, 1})) == Partition({4, 3, 2, 2, 1, 1}));
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(Partition({3, 3, 3})) == Partition({3, 3, 3}));
}

TEST_CASE("triangle decomposition") {
  auto t = decompose_by_triangle(Partition({6, 4, 2, 1}));
  CHECK(t.k == 4);
  CHECK(t.d == 2);
  CHECK(t.row_excess == std::vector<unsigned>{2, 1});
  CHECK(t.col_excess == std::vector<unsigned>{0, 0});
  CHECK(reconstruct(t) == Partition({6, 4, 2, 1}));

  auto stair = decompose_by_triangle(Partition({5, 4, 3, 2, 1}));
  CHECK(stair.k == 5);
  CHECK(stair.d == 0);
  CHECK(stair.row_excess.empty());
  CHECK(stair.col_excess == std::vector<unsigned>(5, 0));

  auto empty = decompose_by_triangle(Partition());
  CHECK(empty == TriangleDecomposition{});
  CHECK(reconstruct(empty) == Partition());

  TriangleDecomposition bad{3, 1, {1}, {0, 2}};
  CHECK_FALSE(bad.well_formed());
  CHECK_THROWS_AS(reconstruct(bad), std::invalid_argument);
}

TEST_CASE("statistics invariants for n <= 24") {
  auto p = oracle::partition_numbers(24);
  for (unsigned n = 0; n <= 24; ++n) {
    std::vector<std::uint64_t> by_tri(n + 1), by_sq(n + 1);
    for (const auto& part : enumerate_partitions(n)) {
      unsigned sq = durfee_square_size(part);
      unsigned tri = durfee_triangle_size(part);
      CHECK(sq <= tri);
      CHECK(tri <= 2 * sq);
      Partition c = conjugate(part);
      CHECK(conjugate(c) == part);
      CHECK(durfee_square_size(c) == sq);
      CHECK(durfee_triangle_size(c) == tri);

      auto t = decompose_by_triangle(part);
      CHECK(t.well_formed());
      CHECK(t.size() == n);
      CHECK(reconstruct(t) == part);
      ++by_tri[tri];
      ++by_sq[sq];
    }
    if (n >= 1) {
      std::uint64_t tri_total = 0, sq_total = 0;
      for (unsigned k = 1; k <= n; ++k) {
        CHECK(count_rk_bruteforce(k, n) == by_tri[k]);
        tri_total += count_rk_bruteforce(k, n);
        sq_total += count_dk_bruteforce(k, n);
      }
      CHECK(tri_total == p[n]);
      CHECK(sq_total == p[n]);
    }
  }
}

TEST_CASE("brute-force counts") {
  CHECK(count_rk_bruteforce(3, 11) == 32);
  CHECK(count_rk_bruteforce(3, 5) == 0);
  CHECK(count_rk_bruteforce(3, 6) == 1);

  CHECK(count_dk_bruteforce(1, 5) == 5);
  CHECK(count_dk_bruteforce(2, 4) == 1);
  CHECK(count_dk_bruteforce(2, 3) == 0);

  CHECK(count_ad_bruteforce(3, 5) == 9);
  CHECK(count_ad_bruteforce(4, 2) == 7);
  for (unsigned n = 0; n <= 12; ++n) CHECK(count_ad_bruteforce(1, n) == 1);

  CHECK(count_pd_bruteforce(2, 4) == 3);
  CHECK(count_pd_bruteforce(3, 6) == 7);
  for (unsigned n = 1; n <= 15; ++n) CHECK(count_pd_bruteforce(n, n) == count_partitions_bruteforce(n));

  CHECK_THROWS_AS(count_rk_bruteforce(0, 3), std::invalid_argument);
}

TEST_CASE("sandwich bound p_d(n) <= a_d(n) <= p_d(n + T_d)") {
  for (unsigned d = 1; d <= 6; ++d)
    for (unsigned n = 0; n <= 20; ++n) {
      auto a = count_ad_bruteforce(d, n);
      CHECK(count_pd_bruteforce(d, n) <= a);
      CHECK(a <= count_pd_bruteforce(d, n + triangular(d)));
    }
}
