#include <doctest.h>

#include "preproj/percplx.hpp"
#include "support.hpp"

using namespace preproj;
using namespace preproj::percplx;

namespace {

bool squares_to_zero(const PeriodicComplex& p) {
  return (p.d1() * p.d0()).is_zero() && (p.d0() * p.d1()).is_zero();
}

bool squares_to_zero(const BoundedComplex& c) {
  for (int n = c.lowest_degree(); n + 1 <= c.highest_degree(); ++n)
    if (!(c.diff(n + 1) * c.diff(n)).is_zero()) return false;
  return true;
}

/// Homology from ranks computed by plain elimination.
std::pair<std::size_t, std::size_t> naive_homology(const PeriodicComplex& p) {
  const std::size_t r0 = testsupport::naive_rank(testsupport::rows_of(p.d0()), p.q());
  const std::size_t r1 = testsupport::naive_rank(testsupport::rows_of(p.d1()), p.q());
  return {p.dim0() - r0 - r1, p.dim1() - r1 - r0};
}

long long bounded_euler(const BoundedComplex& c) {
  long long chi = 0;
  for (int n = c.lowest_degree(); n <= c.highest_degree(); ++n)
    chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(c.dim(n));
  return chi;
}

PeriodicComplex random_periodic(testsupport::Gen& gen, std::uint32_t q) {
  BoundedComplex c = random_complex(gen.rng, q, 4, 2);
  return compress(c);
}

}  // namespace

TEST_CASE("random bounded complexes square to zero") {
  testsupport::Gen gen(3);
  for (std::uint32_t q : {2u, 3u, 5u})
    for (int t = 0; t < 20; ++t) CHECK(squares_to_zero(random_complex(gen.rng, q, 4, 3)));
}

TEST_CASE("compression preserves d^2 = 0 and the euler characteristic") {
  testsupport::Gen gen(4);
  for (int t = 0; t < 30; ++t) {
    const BoundedComplex c = random_complex(gen.rng, 3, 4, 2);
    const PeriodicComplex p = compress(c);
    CHECK(squares_to_zero(p));
    CHECK(euler_characteristic(p) == bounded_euler(c));
  }
}

TEST_CASE("tensor products square to zero") {
  testsupport::Gen gen(5);
  for (int t = 0; t < 20; ++t) {
    const BoundedComplex a = random_complex(gen.rng, 3, 3, 2);
    const BoundedComplex b = random_complex(gen.rng, 3, 3, 2);
    const BoundedComplex ab = tensor(a, b);
    CHECK(squares_to_zero(ab));
    CHECK(bounded_euler(ab) == bounded_euler(a) * bounded_euler(b));
    const PeriodicComplex pab = tensor(compress(a), compress(b));
    CHECK(squares_to_zero(pab));
    CHECK(euler_characteristic(pab) == euler_characteristic(compress(a)) * euler_characteristic(compress(b)));
  }
}

TEST_CASE("hom complex squares to zero") {
  testsupport::Gen gen(6);
  for (int t = 0; t < 20; ++t) {
    const PeriodicComplex x = random_periodic(gen, 3);
    const PeriodicComplex y = random_periodic(gen, 3);
    const PeriodicComplex h = b2(x, y);
    CHECK(squares_to_zero(h));
    CHECK(h.dim0() == x.dim0() * y.dim0() + x.dim1() * y.dim1());
    CHECK(h.dim1() == x.dim0() * y.dim1() + x.dim1() * y.dim0());
  }
}

TEST_CASE("homology matches plain elimination") {
  testsupport::Gen gen(7);
  for (std::uint32_t q : {2u, 5u}) {
    for (int t = 0; t < 20; ++t) {
      const PeriodicComplex p = random_periodic(gen, q);
      CHECK(homology_dims(p) == naive_homology(p));
      const auto [h0, h1] = homology_dims(p);
      CHECK(euler_characteristic(p) == static_cast<long long>(h0) - static_cast<long long>(h1));
    }
  }
}

TEST_CASE("shift twice is the identity") {
  testsupport::Gen gen(8);
  for (int t = 0; t < 10; ++t) {
    const PeriodicComplex p = random_periodic(gen, 5);
    const PeriodicComplex s = shift(p);
    CHECK(s.dim0() == p.dim1());
    CHECK(squares_to_zero(s));
    CHECK(shift(s) == p);
    CHECK(euler_characteristic(s) == -euler_characteristic(p));
  }
}

TEST_CASE("cone of the identity is acyclic") {
  testsupport::Gen gen(9);
  for (int t = 0; t < 15; ++t) {
    const PeriodicComplex p = random_periodic(gen, 3);
    const ChainMap id = identity_map(p);
    CHECK(is_chain_map(p, p, id));
    const PeriodicComplex c = cone(p, p, id);
    CHECK(squares_to_zero(c));
    CHECK(homology_dims(c) == std::pair<std::size_t, std::size_t>{0, 0});
  }
}

TEST_CASE("cone of the zero map splits") {
  testsupport::Gen gen(10);
  for (int t = 0; t < 10; ++t) {
    const PeriodicComplex x = random_periodic(gen, 3);
    const PeriodicComplex y = random_periodic(gen, 3);
    const ChainMap zero{Mat(3, y.dim0(), x.dim0()), Mat(3, y.dim1(), x.dim1())};
    REQUIRE(is_chain_map(x, y, zero));
    const auto [y0, y1] = homology_dims(y);
    const auto [x0, x1] = homology_dims(x);
    CHECK(homology_dims(cone(x, y, zero)) == std::pair<std::size_t, std::size_t>{y0 + x1, y1 + x0});
  }
}

TEST_CASE("non-chain maps are rejected") {
  const PeriodicComplex x(Mat::from_rows(2, {{1}}), Mat::from_rows(2, {{0}}));
  const PeriodicComplex y = PeriodicComplex::zero(2, 1, 1);
  const ChainMap f{Mat::from_rows(2, {{0}}), Mat::from_rows(2, {{1}})};
  CHECK_FALSE(is_chain_map(x, y, f));
}

TEST_CASE("compression commutes with tensor on every small binary complex") {
  const auto all = all_binary_complexes(3, 2);
  CHECK(all.size() == 241);
  std::size_t checked = 0;
  for (std::size_t a = 0; a < all.size(); a += 7)
    for (std::size_t b = 0; b < all.size(); b += 11) {
      CHECK(compression_commutes_with_tensor(all[a], all[b]));
      ++checked;
    }
  CHECK(checked > 100);
}

TEST_CASE("compression commutes with tensor after regrading") {
  testsupport::Gen gen(12);
  for (int t = 0; t < 10; ++t) {
    const BoundedComplex a = random_complex(gen.rng, 3, 3, 2).regraded(static_cast<int>(gen.below(3)) - 1);
    const BoundedComplex b = random_complex(gen.rng, 3, 3, 2);
    CHECK(compression_commutes_with_tensor(a, b));
  }
}

TEST_CASE("periodic complexes round-trip through json") {
  testsupport::Gen gen(13);
  for (int t = 0; t < 5; ++t) {
    const PeriodicComplex p = random_periodic(gen, 5);
    CHECK(periodic_from_json(to_json(p)) == p);
  }
}

TEST_CASE("malformed complexes are rejected") {
  CHECK_THROWS_AS(PeriodicComplex(Mat::from_rows(2, {{1}}), Mat::from_rows(2, {{1}})), std::invalid_argument);
  CHECK_THROWS_AS(BoundedComplex(2, 0, {1, 1}, {}), std::invalid_argument);
}
