#pragma once

// Integral Ringel-Hall algebra of kQ or of nilpotent preprojective modules:
// Hall numbers, products of basis elements, reduction mod (q-1), Serre
// residues, filtration counts and Hall polynomials.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "preproj/catalog.hpp"

namespace preproj::hall {

using catalog::Catalog;
using catalog::Handle;
using rep::Algebra;
using rep::Dims;
using rep::Quiver;
using rep::Rep;

/// Number of submodules X of L with X ~ N and L/X ~ M.
Integer hall_number(const Rep& m, const Rep& n, const Rep& l, const Budget& budget = {});

/// Integer combination of isomorphism classes of one catalog. With a modulus
/// set, coefficients live in [0, modulus).
struct HallElement {
  std::map<Handle, Integer> terms;
  std::optional<Integer> modulus;

  bool is_zero() const { return terms.empty(); }
  Integer coeff(Handle h) const;
  void add(Handle h, const Integer& c);
  bool operator==(const HallElement&) const = default;
};

HallElement operator+(const HallElement& a, const HallElement& b);
HallElement operator-(const HallElement& a, const HallElement& b);
HallElement scale(const Integer& s, const HallElement& a);
/// Coefficientwise reduction mod m (idempotent).
HallElement mod_reduce(const HallElement& a, const Integer& m);

class HallAlgebra {
 public:
  HallAlgebra(Quiver quiver, Algebra alg, std::uint32_t q, Budget budget = {});

  Catalog& catalog() { return cat_; }
  const Catalog& catalog() const { return cat_; }
  std::uint32_t q() const { return cat_.q(); }

  HallElement one();
  HallElement basis(Handle h) const;
  HallElement generator(int i);
  HallElement element_of(const Rep& m);

  /// g^L_{MN} for classes of this session.
  Integer hall_number(Handle m, Handle n, Handle l);
  /// [M][N] as a sum over the classes L with nonzero Hall number.
  const std::vector<std::pair<Handle, Integer>>& product_terms(Handle m, Handle n);
  HallElement product(const HallElement& a, const HallElement& b);
  /// [S_{w1}][S_{w2}]...[S_{wk}].
  HallElement monomial(const std::vector<int>& word);

  /// Rows "fingerprint<TAB>coefficient", sorted by dimension vector then fingerprint.
  std::string tsv(const HallElement& e) const;

 private:
  Catalog cat_;
  std::map<std::pair<Handle, Handle>, std::vector<std::pair<Handle, Integer>>> products_;
};

/// 1 + a_ij + a_ji.
int serre_degree(const Quiver& quiver, int i, int j);
/// sum_l (-1)^l binom(N,l) [S_i]^{N-l}[S_j][S_i]^l reduced mod (q-1).
HallElement serre_residue(HallAlgebra& h, int i, int j);

/// l_1 i_1 + ... + l_t i_t: steps (l_j, i_j) from the top of the module down.
struct Filtration {
  std::vector<std::pair<int, int>> steps;
  std::string to_string() const;
};

/// Parses "i", "1+2", "2*1+1*2" (multiplicity*vertex); vertex names may be
/// given as "i" with `default_vertex`.
Filtration parse_filtration(const std::string& s, int default_vertex = 1);

/// Number of chains M = L_1 > L_2 > ... > L_{t+1} = 0 with
/// L_j / L_{j+1} ~ S_{i_j}^{l_j}, enumerated top-down.
Integer filtration_count(const Rep& m, const Filtration& lambda, const Budget& budget = {});
/// Same count by the bottom-up recursion over semisimple submodules
/// N ~ S_{i_t}^{l_t}, grouped by the class of M/N.
Integer filtration_count_by_socle(const Rep& m, const Filtration& lambda, const Budget& budget = {});

/// Module shape with entries in {0, 1, -1}, read over any prime field.
struct RepTemplate {
  Quiver quiver;
  Algebra algebra;
  Dims dims;
  std::vector<std::vector<long long>> maps;  // row-major per arrow
  Rep instantiate(std::uint32_t q) const;
  static RepTemplate of(const Rep& m);
};

struct HallPolynomialReport {
  std::vector<std::pair<std::uint32_t, Integer>> counts;
  ffla::PolyFit fit;
};

/// Counts filtrations at each probe prime and fits an integer polynomial,
/// holding the last probe out.
HallPolynomialReport hall_polynomial(const Filtration& lambda, const RepTemplate& t,
                                     const std::vector<std::uint32_t>& probes = {2, 3, 5, 7},
                                     const Budget& budget = {});

/// Value at q = 1.
Integer euler_char(const ffla::QPoly& p);

/// Whether the monomial in the preprojective Hall algebra, restricted to kQ
/// and reduced mod (q-1), equals the same monomial computed over kQ.
bool theta_compare(const Quiver& quiver, const std::vector<int>& word, std::uint32_t q, const Budget& budget = {});
/// Same comparison reusing two sessions (preprojective and path algebra).
bool theta_compare(HallAlgebra& lambda_side, HallAlgebra& path_side, const std::vector<int>& word);

}  // namespace preproj::hall
