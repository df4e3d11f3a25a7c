#include "preproj/acceptance.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "preproj/hall.hpp"
#include "preproj/percplx.hpp"
#include "preproj/rootcat.hpp"
#include "preproj/tube.hpp"
#include "preproj/tube_crosscheck.hpp"
#include "preproj/twist.hpp"

namespace preproj::acceptance {

namespace {

using quiver::Quiver;
using rep::Algebra;
using rep::Dims;
using rep::Rep;

// Wall-clock limits in seconds; criteria without a limit use 0.
constexpr double kLimitSeconds[kCriteria + 1] = {0, 10, 300, 0, 0, 0, 0, 0, 0, 0, 0, 300, 0};

const char* const kNames[kCriteria + 1] = {
    "",
    "kronecker-simple-product",
    "serre-congruences",
    "twist-k0-reflections",
    "generator-bracket-crosscheck",
    "sl2-quotient",
    "tube-jacobi",
    "hall-polynomials",
    "nplus-comparison",
    "compression-tensor",
    "triangle-count-congruence",
    "twist-invariance",
    "reflection-contracts",
};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (detail.tellp() > 0) detail << "; ";
    pass = false;
    detail << what;
  }
  void note(const std::string& what) {
    if (detail.tellp() > 0) detail << "; ";
    detail << what;
  }
};

std::vector<Dims> dims_up_to(int nv, int max_total) {
  std::vector<Dims> out;
  Dims d(static_cast<std::size_t>(nv), 0);
  std::function<void(std::size_t, int)> visit = [&](std::size_t k, int left) {
    if (k == d.size()) {
      int total = 0;
      for (int x : d) total += x;
      if (total > 0) out.push_back(d);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      d[k] = x;
      visit(k + 1, left - x);
    }
    d[k] = 0;
  };
  visit(0, max_total);
  return out;
}

void simple_product(Outcome& o) {
  const Quiver k = Quiver::kronecker();
  for (std::uint32_t q : {2u, 3u}) {
    hall::HallAlgebra h(k, Algebra::Preprojective, q);
    auto& cat = h.catalog();
    const auto s1 = cat.simple(1), s2 = cat.simple(2);
    const auto& terms = h.product_terms(s1, s2);
    const Rep split = rep::direct_sum(cat.rep(s1), cat.rep(s2));
    std::size_t splits = 0, forward = 0;
    for (const auto& [l, c] : terms) {
      const Rep& lr = cat.rep(l);
      o.check(c == 1, "q=" + std::to_string(q) + ": coefficient of " + cat.label(l) + " is not 1");
      if (rep::are_isomorphic(lr, split))
        ++splits;
      else if (cat.is_indecomposable(l) && rep::restrict_to_path_algebra(lr))
        ++forward;
      const Integer f = rootcat::triangle_count_R(cat.rep(s1), cat.rep(s2), lr);
      o.check(f == 1, "q=" + std::to_string(q) + ": F for " + cat.label(l) + " is " + f.str());
    }
    o.check(terms.size() == q + 2, "q=" + std::to_string(q) + ": " + std::to_string(terms.size()) + " terms");
    o.check(splits == 1 && forward == q + 1, "q=" + std::to_string(q) + ": term shapes differ");
    if (o.pass) o.note("q=" + std::to_string(q) + ": " + std::to_string(terms.size()) + " terms, all 1");
  }
}

void serre(Outcome& o) {
  std::size_t checked = 0;
  for (const auto& [qname, qv] : {std::pair{"kronecker", Quiver::kronecker()}, std::pair{"fork", Quiver::fork()}})
    for (Algebra alg : {Algebra::PathAlgebra, Algebra::Preprojective})
      for (std::uint32_t q : {3u, 5u}) {
        hall::HallAlgebra h(qv, alg, q);
        for (int i = 1; i <= qv.num_vertices(); ++i)
          for (int j = 1; j <= qv.num_vertices(); ++j) {
            if (i == j) continue;
            ++checked;
            const hall::HallElement r = hall::serre_residue(h, i, j);
            o.check(r.is_zero(), std::string(qname) + " " + rep::to_string(alg) +
                                     " q=" + std::to_string(q) + " (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") nonzero residue");
          }
      }
  if (o.pass) o.detail << checked << " residues zero";
}

void twist_reflections(Outcome& o) {
  std::size_t checked = 0;
  for (const Quiver& qv : {Quiver::kronecker(), Quiver::a2(), Quiver::fork()}) {
    const auto id = quiver::IntMatrix::identity(static_cast<std::size_t>(qv.num_vertices()));
    for (int i = 1; i <= qv.num_vertices(); ++i) {
      ++checked;
      o.check(twist::twist_k0_matrix(qv, i) == quiver::reflection_matrix(qv, i),
              "vertex " + std::to_string(i) + ": twist matrix differs from the reflection");
      o.check(twist::twist_word_k0(qv, {i, i}) == id && twist::weyl_image(qv, {i, i}) == id,
              "vertex " + std::to_string(i) + ": square is not the identity");
    }
    o.check(twist::epsilon_surjectivity_check(qv), "a generator is not hit");
  }
  const auto probe = quiver::weyl_order_probe(Quiver::kronecker(), {1, 2}, 10);
  o.check(!probe.order, "kronecker s1 s2 has order " + probe.to_string());
  if (o.pass) o.detail << checked << " vertices; kronecker s1 s2 " << probe.to_string();
}

void generator_bracket(Outcome& o) {
  for (std::uint32_t q : {3u, 5u})
    for (int i : {1, 2})
      o.check(tube::crosscheck_generator_bracket(i, q),
              "root-category bracket differs at i=" + std::to_string(i) + " q=" + std::to_string(q));
  tube::TubeElt want;
  want.add(tube::TubeBasis::h(), -1);
  want.add(tube::TubeBasis::u(2), 1);
  want.add(tube::TubeBasis::u(-2), -1);
  const tube::TubeElt got =
      tube::tube_bracket(tube::TubeElt::basis(1, tube::TubeBasis::u(1)), tube::TubeElt::basis(1, tube::TubeBasis::u(-1)));
  o.check(got == want, "tube bracket [u<1>,u<-1>] = " + got.to_string());
  for (std::uint32_t q : {3u, 5u}) {
    const auto hs = tube::generator_pair_hall_side(q);
    o.check(hs.ok(), "q=" + std::to_string(q) + ": " + hs.to_string());
    if (q == 3 && o.pass) o.detail << "[u1,u-1] = " << got.to_string() << "; " << hs.to_string();
  }
}

void sl2(Outcome& o) {
  const tube::Sl2Report r = tube::sl2_quotient_check(1, 8, 5);
  o.check(r.pass(), "relations fail in the quotient");
  o.note(r.to_string());
}

void tube_jacobi(Outcome& o) {
  for (std::uint32_t q : {3u, 5u}) {
    const tube::JacobiReport r = tube::jacobi_check(1, 6, q);
    std::string what = "q=" + std::to_string(q) + ": " + std::to_string(r.violations.size()) + " of " +
                       std::to_string(r.triples) + " triples violate";
    if (!r.violations.empty()) what += " (first " + r.violations.front() + ")";
    if (r.inconclusive) what = "q=" + std::to_string(q) + ": " + *r.inconclusive;
    o.check(r.ok(), what);
    if (r.ok()) o.note("q=" + std::to_string(q) + ": " + std::to_string(r.triples) + " triples clean");
  }
}

void hall_polynomials(Outcome& o) {
  const Quiver k = Quiver::kronecker();
  const std::vector<std::uint32_t> probes{2, 3, 5, 7};
  std::size_t fits = 0;
  auto run = [&](const std::string& lam, int vertex, const hall::RepTemplate& t, const ffla::QPoly& want,
                 const Integer& chi, const std::string& what) {
    const auto rep = hall::hall_polynomial(hall::parse_filtration(lam, vertex), t, probes);
    ++fits;
    if (!rep.fit.ok()) {
      o.check(false, what + " " + lam + ": no integer fit");
      return;
    }
    o.check(*rep.fit.poly == want, what + " " + lam + ": got " + rep.fit.poly->to_string());
    o.check(hall::euler_char(*rep.fit.poly) == chi, what + " " + lam + ": chi mismatch");
  };
  for (int i : {1, 2}) {
    const Rep s = rep::simple(k, Algebra::Preprojective, 2, i);
    const auto t1 = hall::RepTemplate::of(s), t2 = hall::RepTemplate::of(rep::direct_power(s, 2));
    const std::string name = "S" + std::to_string(i);
    run("i", i, t1, ffla::QPoly::constant(1), 1, name);
    run("i", i, t2, ffla::QPoly{}, 0, name + "^2");
    run("i+i", i, t2, ffla::q_binomial(2, 1), ffla::binomial(2, 1), name + "^2");
    run("2i", i, t2, ffla::q_binomial(2, 2), ffla::binomial(2, 2), name + "^2");
  }
  catalog::Catalog cat(k, Algebra::Preprojective, 2);
  for (auto h : cat.classes_of_dim({1, 1})) {
    const Rep& m = cat.rep(h);
    bool reverse_zero = true;
    for (std::size_t a = k.num_arrows(); a < m.num_arrows(); ++a) reverse_zero = reverse_zero && m.map(a).is_zero();
    const int want = reverse_zero ? 1 : 0;
    run("1*1+1*2", 1, hall::RepTemplate::of(m), want ? ffla::QPoly::constant(1) : ffla::QPoly{}, want, cat.label(h));
  }
  if (o.pass) o.detail << fits << " fits with held-out q=7";
}

void nplus(Outcome& o) {
  const Quiver k = Quiver::kronecker();
  const auto lam = rootcat::graded_dim_nplus(k, Algebra::Preprojective, 3, 3);
  const auto path = rootcat::graded_dim_nplus(k, Algebra::PathAlgebra, 3, 3);
  o.check(lam == path, "graded dimensions differ");
  hall::HallAlgebra hl(k, Algebra::Preprojective, 3), hp(k, Algebra::PathAlgebra, 3);
  std::size_t words = 0;
  for (std::size_t len = 1; len <= 3; ++len)
    for (std::size_t code = 0; code < (1u << len); ++code) {
      std::vector<int> w;
      for (std::size_t b = 0; b < len; ++b) w.push_back(((code >> b) & 1u) ? 2 : 1);
      ++words;
      o.check(hall::theta_compare(hl, hp, w), "theta_compare fails on a word of length " + std::to_string(len));
    }
  if (o.pass) {
    o.detail << lam.size() << " degrees agree (";
    bool first = true;
    for (const auto& [d, n] : lam) {
      if (!n) continue;
      o.detail << (first ? "" : " ") << '(' << d[0] << ',' << d[1] << ")=" << n;
      first = false;
    }
    o.detail << "); " << words << " words";
  }
}

void compression(Outcome& o, std::uint64_t seed) {
  const auto family = percplx::all_binary_complexes(3, 2);
  std::size_t pairs = 0;
  for (const auto& p : family)
    for (const auto& q : family) {
      ++pairs;
      if (!percplx::compression_commutes_with_tensor(p, q)) {
        o.check(false, "exhaustive pair " + std::to_string(pairs) + " differs");
        return;
      }
    }
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 500; ++k) {
    const auto p = percplx::random_complex(rng, 3, 3, 2);
    const auto q = percplx::random_complex(rng, 3, 3, 2);
    o.check(percplx::compression_commutes_with_tensor(p, q), "random case " + std::to_string(k) + " differs");
  }
  if (o.pass) o.detail << pairs << " exhaustive pairs over F2, 500 random over F3";
}

void triangle_congruence(Outcome& o) {
  const std::uint32_t q = 3;
  catalog::Catalog cat(Quiver::kronecker(), Algebra::Preprojective, q);
  std::vector<catalog::Handle> inds;
  for (const auto& d : dims_up_to(2, 3))
    for (auto h : cat.classes_of_dim(d))
      if (cat.is_indecomposable(h)) inds.push_back(h);
  std::size_t triples = 0, closed_form_off = 0;
  for (auto m : inds)
    for (auto n : inds) {
      int total = 0;
      for (std::size_t v = 0; v < 2; ++v) total += cat.dims(m)[v] + cat.dims(n)[v];
      if (total > 4) continue;
      for (auto l : cat.extension_classes(m, n)) {
        ++triples;
        const auto r = rootcat::triangle_count_report(cat.rep(m), cat.rep(n), cat.rep(l));
        const Integer g = hall::hall_number(cat.rep(m), cat.rep(n), cat.rep(l));
        o.check(r.value >= 0, cat.label(l) + ": negative count");
        o.check((r.value - g) % (q - 1) == 0, cat.label(l) + ": F=" + r.value.str() + " g=" + g.str());
        if (r.closed_form && *r.closed_form != Rational(r.value)) ++closed_form_off;
      }
    }
  if (o.pass)
    o.detail << triples << " triples; closed form q^(e2(N,L)-e2(N,N)) g differs on " << closed_form_off;
}

void twist_invariance(Outcome& o) {
  for (std::uint32_t q : {2u, 3u}) {
    catalog::Catalog cat(Quiver::kronecker(), Algebra::Preprojective, q);
    const auto sample = twist::phi_f_sample(cat, 1, 3);
    const auto r = twist::phi_f_invariance(1, sample);
    o.check(r.ok(), "q=" + std::to_string(q) + ": " + std::to_string(r.violations.size()) + " violations" +
                        (r.ok() ? "" : " (first " + r.violations.front() + ")"));
    if (r.ok()) o.note("q=" + std::to_string(q) + ": " + std::to_string(r.checked) + " triples");
  }
}

void reflection_contracts(Outcome& o, std::uint64_t seed) {
  catalog::Catalog cat(Quiver::kronecker(), Algebra::Preprojective, 2);
  std::mt19937_64 rng(seed);
  std::size_t checked = 0;
  for (const auto& d : dims_up_to(2, 4))
    for (auto h : cat.classes_of_dim(d))
      for (int i : {1, 2}) {
        ++checked;
        const auto r = twist::check_reflect_contracts(i, cat.rep(h), rng);
        o.check(r.ok(), cat.label(h) + " i=" + std::to_string(i) + ": " + r.to_string());
      }
  if (o.pass) o.detail << checked << " (module, vertex) pairs";
}

}  // namespace

std::string CriterionResult::line() const {
  std::ostringstream os;
  os << (pass ? "[PASS] " : "[FAIL] ") << id << ' ' << name << " (" << std::fixed << std::setprecision(2) << seconds
     << "s): " << detail;
  return os.str();
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  require(id >= 1 && id <= kCriteria, "run_criterion: no criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.name = kNames[id];
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: simple_product(o); break;
      case 2: serre(o); break;
      case 3: twist_reflections(o); break;
      case 4: generator_bracket(o); break;
      case 5: sl2(o); break;
      case 6: tube_jacobi(o); break;
      case 7: hall_polynomials(o); break;
      case 8: nplus(o); break;
      case 9: compression(o, seed); break;
      case 10: triangle_congruence(o); break;
      case 11: twist_invariance(o); break;
      case 12: reflection_contracts(o, seed); break;
    }
  } catch (const std::exception& e) {
    o.check(false, std::string("error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (kLimitSeconds[id] > 0 && r.seconds > kLimitSeconds[id])
    o.check(false, "exceeded " + std::to_string(static_cast<int>(kLimitSeconds[id])) + "s limit");
  r.pass = o.pass;
  r.detail = o.detail.str();
  return r;
}

std::vector<CriterionResult> run_all(std::uint64_t seed, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) {
    out.push_back(run_criterion(id, seed));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace preproj::acceptance
