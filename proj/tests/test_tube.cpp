#include <doctest.h>

#include "preproj/tube.hpp"
#include "preproj/tube_crosscheck.hpp"

using namespace preproj;
using namespace preproj::tube;

namespace {

TubeElt u(long long n, std::optional<Integer> mod = std::nullopt) { return TubeElt::basis(1, TubeBasis::u(n), mod); }
TubeElt h(std::optional<Integer> mod = std::nullopt) { return TubeElt::basis(1, TubeBasis::h(), mod); }

}  // namespace

TEST_CASE("basic tube brackets") {
  CHECK(tube_bracket(u(2), u(4)).is_zero());
  CHECK(tube_bracket(u(2), u(1)) == u(3) - u(1));
  CHECK(tube_bracket(u(1), u(-1)) == u(2) - u(-2) - h());
  CHECK(tube_bracket(u(1), u(3)).is_zero());
  CHECK(tube_bracket(h(), u(1)) == scale(2, u(1)));
  CHECK(tube_bracket(h(), u(-3)) == scale(-2, u(-3)));
  CHECK(tube_bracket(h(), u(2)).is_zero());
  CHECK(tube_bracket(u(1), u(-1)).to_string() == "-h-u<-2>+u<2>");
}

TEST_CASE("tube bracket is antisymmetric") {
  std::vector<TubeBasis> basis{TubeBasis::h()};
  for (long long n = -8; n <= 8; ++n)
    if (n != 0) basis.push_back(TubeBasis::u(n));
  for (const auto& a : basis)
    for (const auto& b : basis) {
      const auto ab = bracket_basis(a, b);
      const auto ba = bracket_basis(b, a);
      CHECK(ab.size() == ba.size());
      for (const auto& [z, c] : ab) {
        REQUIRE(ba.count(z) == 1);
        CHECK(ba.at(z) == -c);
      }
    }
}

TEST_CASE("tube bracket respects the parity of indices") {
  for (long long m = -8; m <= 8; ++m)
    for (long long n = -8; n <= 8; ++n) {
      if (m == 0 || n == 0) continue;
      for (const auto& [z, c] : bracket_basis(TubeBasis::u(m), TubeBasis::u(n))) {
        if (z.is_h) {
          CHECK(m + n == 0);
          continue;
        }
        CHECK((z.n - m - n) % 2 == 0);
      }
    }
}

TEST_CASE("u<0> is rejected") { CHECK_THROWS_AS(TubeBasis::u(0), std::invalid_argument); }

TEST_CASE("brackets across vertices or rings are rejected") {
  CHECK_THROWS_AS(tube_bracket(u(1), TubeElt::basis(2, TubeBasis::u(1))), std::invalid_argument);
  CHECK_THROWS_AS(tube_bracket(u(1), u(1, Integer(2))), std::invalid_argument);
}

TEST_CASE("modular coefficients stay reduced") {
  const TubeElt e = tube_bracket(u(1, Integer(4)), u(-1, Integer(4)));
  CHECK(e.h == 3);
  CHECK(e.coeff(TubeBasis::u(-2)) == 3);
  CHECK(scale(4, e).is_zero());
}

TEST_CASE("jacobi identity holds mod 2 and fails over the integers") {
  CHECK(jacobi_check(1, 6, 3).ok());
  const JacobiReport z = jacobi_check(1, 6, 0);
  CHECK_FALSE(z.inconclusive);
  CHECK(z.violations.size() == 12);
  const JacobiReport five = jacobi_check(1, 6, 5);
  CHECK(five.violations.size() == 12);
  CHECK(five.triples > 0);
}

TEST_CASE("sl2 quotient check reports each relation") {
  const Sl2Report r = sl2_quotient_check(1, 8, 5);
  CHECK(r.conclusive);
  CHECK(r.ideal_generator_vanishes);
  CHECK(r.h_plus);
  CHECK(r.h_minus);
  CHECK(r.u1_nonzero);
  CHECK_FALSE(r.bracket_h);
  CHECK(r.bracket_minus_h);
  CHECK(r.rescaled_triple);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.to_string().empty());
}

TEST_CASE("sl2 quotient check is inconclusive when the closure leaves the window") {
  const Sl2Report r = sl2_quotient_check(1, 8, 7);
  CHECK_FALSE(r.conclusive);
  CHECK_FALSE(r.note.empty());
  CHECK_FALSE(r.pass());
}

TEST_CASE("generator bracket agrees with the root category") {
  for (std::uint32_t q : {3u, 5u}) {
    CHECK(crosscheck_generator_bracket(1, q));
    CHECK(crosscheck_generator_bracket(2, q));
  }
}

TEST_CASE("connecting map orbits partition the hom space") {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const OrbitCounts o = connecting_map_orbits(q);
    CHECK(o.split == 1);
    CHECK(o.e_cone == 1);
    CHECK(o.zero_cone == 1);
  }
  const HallSideReport r = generator_pair_hall_side(3);
  CHECK(r.ok());
}
