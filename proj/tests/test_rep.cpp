#include <doctest.h>

#include "preproj/rep.hpp"
#include "support.hpp"

using namespace preproj;
using namespace preproj::rep;
using quiver::Quiver;

namespace {

Integer gl_order(const Dims& d, std::uint32_t q) {
  Integer r = 1;
  for (int n : d) {
    Integer qn = 1;
    for (int k = 0; k < n; ++k) qn *= q;
    Integer qk = 1;
    for (int k = 0; k < n; ++k) {
      r *= qn - qk;
      qk *= q;
    }
  }
  return r;
}

std::uint64_t power(std::uint64_t q, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= q;
  return r;
}

}  // namespace

TEST_CASE("simple modules and extension_I") {
  const Quiver k = Quiver::kronecker();
  const Rep s1 = simple(k, Algebra::Preprojective, 3, 1);
  CHECK(s1.dims() == Dims{1, 0});
  CHECK(satisfies_relations(s1));
  const Rep i21 = extension_I(k, 3, 2, 1);
  CHECK(i21.dims() == Dims{2, 1});
  CHECK(is_nilpotent(i21));
  CHECK(is_indecomposable(i21));
}

TEST_CASE("relations are enforced for preprojective modules") {
  const Quiver a2 = Quiver::a2();
  const auto one = ffla::Mat::from_rows(2, {{1}});
  // a abar + (-1) abar a is nonzero when both maps are nonzero
  CHECK_THROWS_AS(Rep(a2, Algebra::Preprojective, 2, {1, 1}, {one, one}), std::invalid_argument);
  CHECK_NOTHROW(Rep(a2, Algebra::Preprojective, 2, {1, 1}, {one, ffla::Mat(2, 1, 1)}));
}

TEST_CASE("hom dimensions agree with brute-force enumeration") {
  testsupport::Gen g(21);
  const Quiver k = Quiver::kronecker();
  for (int t = 0; t < 40; ++t) {
    const Dims dm{static_cast<int>(g.below(3)), static_cast<int>(g.below(2))};
    const Dims dn{static_cast<int>(g.below(2)), static_cast<int>(g.below(3))};
    const Rep m = g.path_rep(k, 2, dm), n = g.path_rep(k, 2, dn);
    CHECK(power(2, hom_dim(m, n)) == testsupport::brute_hom_count(m, n));
    const HomSpace h = hom_space(m, n);
    for (const auto& f : h.basis) CHECK(is_homomorphism(m, n, f));
  }
}

TEST_CASE("isomorphism test agrees with a brute-force search") {
  testsupport::Gen g(22);
  const Quiver k = Quiver::kronecker();
  for (int t = 0; t < 60; ++t) {
    const Dims d{1 + static_cast<int>(g.below(2)), 1};
    const Rep m = g.path_rep(k, 2, d), n = g.path_rep(k, 2, d);
    CHECK(are_isomorphic(m, n) == testsupport::brute_isomorphic(m, n));
    CHECK(are_isomorphic(m, m));
  }
}

TEST_CASE("orbit sizes times automorphism counts give |GL_d|") {
  for (auto alg : {Algebra::PathAlgebra, Algebra::Preprojective})
    for (const Dims& d : {Dims{1, 1}, Dims{2, 1}, Dims{1, 2}}) {
      const auto classes = all_modules_of_dim(Quiver::kronecker(), alg, 2, d);
      std::uint64_t total = 0;
      for (const auto& c : classes) {
        total += c.raw_count;
        CHECK(Integer(c.raw_count) * aut_count(c.rep) == gl_order(d, 2));
      }
      if (alg == Algebra::PathAlgebra) CHECK(total == power(2, 2 * static_cast<std::size_t>(d[0] * d[1])));
    }
}

TEST_CASE("indecomposables of small Kronecker dimension vectors") {
  for (std::uint32_t q : {2u, 3u}) {
    std::size_t ind = 0;
    for (const auto& c : all_modules_of_dim(Quiver::kronecker(), Algebra::PathAlgebra, q, {1, 1}))
      ind += is_indecomposable(c.rep);
    CHECK(ind == q + 1);
    ind = 0;
    for (const auto& c : all_modules_of_dim(Quiver::kronecker(), Algebra::PathAlgebra, q, {2, 1}))
      ind += is_indecomposable(c.rep);
    CHECK(ind == 1);
  }
  const Rep s = simple(Quiver::kronecker(), Algebra::Preprojective, 3, 2);
  CHECK_FALSE(is_indecomposable(direct_sum(s, s)));
  CHECK(end_residue_degree(s) == 1);
}

TEST_CASE("submodule enumeration agrees with the brute-force oracle") {
  const Quiver k = Quiver::kronecker();
  for (const auto& c : all_modules_of_dim(k, Algebra::Preprojective, 2, {2, 1}))
    for (const Dims& d : {Dims{1, 0}, Dims{0, 1}, Dims{1, 1}}) {
      const auto subs = enumerate_submodules(c.rep, d);
      CHECK(subs.size() == testsupport::brute_submodules(c.rep, d).size());
      for (const auto& u : subs) {
        CHECK(is_submodule(c.rep, u));
        const Rep x = sub_to_rep(c.rep, u), y = quotient(c.rep, u);
        CHECK(x.dims() == d);
        CHECK(y.total_dim() + x.total_dim() == c.rep.total_dim());
        CHECK(satisfies_relations(y));
      }
    }
}

TEST_CASE("Ext^1 from cocycles matches the 2-Calabi-Yau count") {
  const Quiver k = Quiver::kronecker();
  std::vector<Rep> mods;
  for (const Dims& d : {Dims{1, 0}, Dims{0, 1}, Dims{1, 1}})
    for (const auto& c : all_modules_of_dim(k, Algebra::Preprojective, 2, d)) mods.push_back(c.rep);
  for (const auto& m : mods)
    for (const auto& n : mods) {
      const ExtDims e = ext_dims_lambda(m, n);
      CHECK(static_cast<long long>(ext1_dim(m, n)) == e.ext1);
      CHECK(e.ext2 == static_cast<long long>(hom_dim(n, m)));
    }
}

TEST_CASE("extension middle terms contain N with quotient M") {
  const Quiver k = Quiver::kronecker();
  const Rep s1 = simple(k, Algebra::Preprojective, 2, 1), s2 = simple(k, Algebra::Preprojective, 2, 2);
  const auto ls = extension_middle_terms(s1, s2);
  CHECK(ls.size() == 4);
  for (const auto& l : ls) {
    bool found = false;
    for (const auto& u : submodules_isomorphic_to(l, s2))
      found = found || are_isomorphic(quotient(l, u), s1);
    CHECK(found);
  }
}

TEST_CASE("restriction and lifting between kQ and the preprojective algebra") {
  const Quiver k = Quiver::kronecker();
  testsupport::Gen g(23);
  const Rep m = g.path_rep(k, 3, {1, 2});
  const Rep lifted = lift_to_preprojective(m);
  REQUIRE(restrict_to_path_algebra(lifted).has_value());
  CHECK(*restrict_to_path_algebra(lifted) == m);
  CHECK(restrict_to_path_algebra(extension_I(k, 3, 2, 1)).has_value());
  CHECK_FALSE(restrict_to_path_algebra(extension_I(k, 3, 1, 2)).has_value());
}

TEST_CASE("JSON round trip") {
  const Rep m = extension_I(Quiver::fork(), 5, 2, 1);
  CHECK(rep_from_json(to_json(m)) == m);
  CHECK_THROWS(rep_from_json(nlohmann::json{{"q", 4}}));
}

TEST_CASE("enumeration budgets are enforced") {
  Budget tight;
  tight.enumeration_cap = 10;
  CHECK_THROWS_AS(all_modules_of_dim(Quiver::kronecker(), Algebra::PathAlgebra, 3, {2, 2}, tight), BudgetError);
}
