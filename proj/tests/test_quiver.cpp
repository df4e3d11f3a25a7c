#include <doctest.h>

#include <sstream>

#include "preproj/quiver.hpp"

using namespace preproj::quiver;

namespace {

std::vector<Quiver> test_quivers() { return {Quiver::kronecker(), Quiver::a2(), Quiver::fork()}; }

}  // namespace

TEST_CASE("forms on the Kronecker quiver") {
  const Quiver k = Quiver::kronecker();
  CHECK(euler_form_A(k, {1, 0}, {0, 1}) == -2);
  CHECK(euler_form_A(k, {0, 1}, {1, 0}) == 0);
  CHECK(symmetric_form(k, {1, 0}, {1, 0}) == 2);
  CHECK(symmetric_form(k, {1, 0}, {0, 1}) == -2);
  CHECK(symmetric_form(k, {1, 1}, {1, 1}) == 0);
  CHECK_FALSE(k.is_dynkin());
  CHECK(Quiver::a2().is_dynkin());
}

TEST_CASE("the preprojective Euler form is symmetric and equals the symmetrized form") {
  for (const auto& q : test_quivers()) {
    const int n = q.num_vertices();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const auto a = simple_root(q, i), b = simple_root(q, j);
        CHECK(euler_form_lambda(q, a, b) == euler_form_lambda(q, b, a));
        CHECK(euler_form_lambda(q, a, b) == euler_form_A(q, a, b) + euler_form_A(q, b, a));
      }
  }
}

TEST_CASE("simple reflections are involutions preserving the form") {
  for (const auto& q : test_quivers()) {
    const auto n = static_cast<std::size_t>(q.num_vertices());
    for (int i = 1; i <= q.num_vertices(); ++i) {
      const IntMatrix s = reflection_matrix(q, i);
      CHECK(s * s == IntMatrix::identity(n));
      CHECK(s.determinant() == -1);
      CHECK(s * simple_root(q, i) == scale(-1, simple_root(q, i)));
      for (int j = 1; j <= q.num_vertices(); ++j)
        for (int k = 1; k <= q.num_vertices(); ++k) {
          const auto x = simple_root(q, j), y = simple_root(q, k);
          CHECK(symmetric_form(q, s * x, s * y) == symmetric_form(q, x, y));
        }
    }
  }
}

TEST_CASE("Weyl words") {
  const Quiver a2 = Quiver::a2();
  const IntMatrix s1 = reflection_matrix(a2, 1), s2 = reflection_matrix(a2, 2);
  CHECK(weyl_word_matrix(a2, {1, 2, 1}) == s1 * s2 * s1);
  CHECK(weyl_word_matrix(a2, {}) == IntMatrix::identity(2));
  CHECK(weyl_word_matrix(a2, {1, 2, 1}) == weyl_word_matrix(a2, {2, 1, 2}));
  CHECK(weyl_order_probe(a2, {1, 2}, 10).order == 3);
  const auto k = weyl_order_probe(Quiver::kronecker(), {1, 2}, 10);
  CHECK_FALSE(k.order.has_value());
  CHECK(k.to_string() == ">10");
  CHECK(reflection(Quiver::kronecker(), 1, {0, 1}) == RootVec{2, 1});
}

TEST_CASE("quiver files round-trip") {
  std::istringstream in("# kronecker\nvertices 2\narrow 1 2\narrow 1 2\n");
  const Quiver q = parse_quiver(in);
  CHECK(q == Quiver::kronecker());
  std::istringstream again(format_quiver(q));
  CHECK(parse_quiver(again) == q);
  std::istringstream bad("vertices 2\narrow 1 3\n");
  CHECK_THROWS_AS(parse_quiver(bad), std::invalid_argument);
  std::istringstream loop("vertices 1\narrow 1 1\n");
  CHECK_THROWS_AS(parse_quiver(loop), std::invalid_argument);
}

TEST_CASE("double quiver signs") {
  const DoubleQuiver d(Quiver::kronecker());
  CHECK(d.num_arrows() == 4);
  CHECK(d.epsilon(0) == 1);
  CHECK(d.epsilon(2) == -1);
  CHECK(d.bar(d.bar(1)) == 1);
  CHECK(d.arrow(2).source == 2);
}
