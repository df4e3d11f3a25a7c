#include <doctest.h>

#include "preproj/ffla.hpp"
#include "support.hpp"

using namespace preproj;
using namespace preproj::ffla;

TEST_CASE("field arithmetic and primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  const FieldElem a(3, 7), b(5, 7);
  CHECK((a + b).value() == 1);
  CHECK((a - b).value() == 5);
  CHECK((a * b).value() == 1);
  CHECK((a * a.inverse()).value() == 1);
  CHECK_THROWS_AS(FieldElem(0, 7).inverse(), std::invalid_argument);
}

TEST_CASE("rank agrees with naive elimination on random matrices") {
  testsupport::Gen g(11);
  for (std::uint32_t q : {2u, 3u, 5u})
    for (int t = 0; t < 200; ++t) {
      const Mat m = g.mat(q, 1 + g.below(4), 1 + g.below(4));
      CHECK(rank(m) == testsupport::naive_rank(testsupport::rows_of(m), q));
    }
}

TEST_CASE("kernel basis spans the kernel") {
  testsupport::Gen g(12);
  for (int t = 0; t < 200; ++t) {
    const Mat m = g.mat(3, 1 + g.below(4), 1 + g.below(4));
    const Mat k = kernel_basis(m);
    CHECK(k.rows() + rank(m) == m.cols());
    if (k.rows() > 0) CHECK((m * k.transpose()).is_zero());
  }
}

TEST_CASE("inverse and solve") {
  testsupport::Gen g(13);
  for (int t = 0; t < 100; ++t) {
    const Mat m = g.mat(5, 3, 3);
    const auto inv = inverse(m);
    CHECK(inv.has_value() == (rank(m) == 3));
    if (inv) CHECK(m * *inv == Mat::identity(5, 3));
    const Mat b = g.mat(5, 3, 1);
    if (auto x = solve(m, b)) CHECK(m * *x == b);
  }
}

TEST_CASE("subspace counts match enumeration and the brute-force oracle") {
  for (std::uint32_t q : {2u, 3u})
    for (std::size_t n = 0; n <= 3; ++n)
      for (std::size_t d = 0; d <= n; ++d) {
        const auto want = testsupport::brute_subspace_count(n, d, q);
        CHECK(subspace_count(n, d, q) == want);
        CHECK(enumerate_subspaces(n, d, q).size() == want);
        CHECK(eval(q_binomial(n, d), q) == want);
      }
}

TEST_CASE("enumerated subspaces are distinct reduced bases") {
  const auto subs = enumerate_subspaces(4, 2, 2);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    CHECK(rref(subs[i]).reduced == subs[i]);
    for (std::size_t j = i + 1; j < subs.size(); ++j) CHECK_FALSE(subs[i] == subs[j]);
  }
  CHECK_THROWS_AS(enumerate_subspaces(8, 4, 7, 1000), BudgetError);
}

TEST_CASE("gaussian binomials") {
  CHECK(q_binomial(2, 1).to_string() == "q+1");
  CHECK(q_binomial(4, 2) == QPoly({1, 1, 2, 1, 1}));
  for (std::size_t m = 0; m <= 5; ++m)
    for (std::size_t l = 0; l <= m; ++l) CHECK(eval(q_binomial(m, l), 1) == binomial(m, l));
}

TEST_CASE("integer interpolation with a held-out point") {
  const QPoly p({1, 0, 2});
  std::vector<std::pair<Integer, Integer>> pts;
  for (int q : {2, 3, 5, 7}) pts.emplace_back(q, p.eval(q));
  const PolyFit fit = interpolate_integer_poly(pts);
  REQUIRE(fit.ok());
  CHECK(*fit.poly == p);

  pts.back().second += 1;
  CHECK_FALSE(interpolate_integer_poly(pts).ok());

  // (q^2 - q)/2 has non-integer coefficients
  std::vector<std::pair<Integer, Integer>> half;
  for (int q : {2, 3, 5, 7}) half.emplace_back(q, Integer(q * q - q) / 2);
  CHECK_FALSE(interpolate_integer_poly(half).ok());
}
