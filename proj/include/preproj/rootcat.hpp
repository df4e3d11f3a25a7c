#pragma once

// Objects of the 2-periodic root category at desk scale, the symmetric form
// on K0, triangle counts F^L_{XY} and the Lie bracket on u-symbols and h_i.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "preproj/catalog.hpp"
#include "preproj/quiver.hpp"
#include "preproj/tube.hpp"

namespace preproj::rootcat {

using catalog::Catalog;
using catalog::Handle;
using quiver::RootVec;
using rep::Algebra;
using rep::Dims;
using rep::Quiver;
using rep::Rep;

/// A module (up to isomorphism) with a shift parity, or an object <n> of the
/// cluster tube at a vertex. Tube(i, +-1) is not allowed; it is S_i or S_i[1].
struct RCObject {
  enum class Kind { Module, Tube };
  Kind kind = Kind::Module;
  Handle handle = 0;
  int parity = 0;
  int vertex = 0;
  long long n = 0;

  static RCObject module(Handle h, int parity = 0);
  static RCObject tube(int vertex, long long n);
  auto operator<=>(const RCObject&) const = default;
};

/// Basis symbol: h_i or u_X.
struct Symbol {
  bool is_h = false;
  int vertex = 0;  // for h_i
  RCObject object;

  static Symbol h(int i);
  static Symbol u(RCObject x);
  auto operator<=>(const Symbol&) const = default;
};

/// Sparse combination of symbols over Z, or over Z/m when a modulus is set.
struct LieElement {
  std::map<Symbol, Integer> terms;
  std::optional<Integer> modulus;

  static LieElement of(Symbol s, std::optional<Integer> modulus = std::nullopt);
  void add(const Symbol& s, const Integer& c);
  Integer coeff(const Symbol& s) const;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const LieElement&) const = default;
};

LieElement operator+(const LieElement& a, const LieElement& b);
LieElement operator-(const LieElement& a, const LieElement& b);
LieElement scale(const Integer& s, const LieElement& a);

/// (x|y) = <x,y> + <y,x> on dimension vectors.
long long sym_form_R(const Quiver& quiver, const RootVec& x, const RootVec& y);

struct TriangleCount {
  Integer value;
  /// Number of submodules U ~ N of L with L/U ~ M.
  Integer module_side;
  /// q^{e2(N,L) - e2(N,N)} * module_side for preprojective input.
  std::optional<Rational> closed_form;
};

/// F^L_{MN}: sum over submodules U ~ N of L with L/U ~ M of
/// q^{dim Hom(L,N) - rank(Hom(L,N) -> Hom(U,N))}. M and N must be zero or
/// indecomposable; L is arbitrary.
TriangleCount triangle_count_report(const Rep& m, const Rep& n, const Rep& l, const Budget& budget = {});
Integer triangle_count_R(const Rep& m, const Rep& n, const Rep& l, const Budget& budget = {});

class RootCategory {
 public:
  /// With reduce set, bracket coefficients live in Z/(q-1).
  RootCategory(Quiver quiver, Algebra alg, std::uint32_t q, bool reduce, Budget budget = {});

  Catalog& catalog() { return cat_; }
  const Quiver& quiver() const { return cat_.quiver(); }
  std::uint32_t q() const { return cat_.q(); }
  std::optional<Integer> modulus() const { return modulus_; }

  RCObject simple(int i, int parity = 0);
  RootVec k0_class(const RCObject& x) const;

  LieElement h(int i) const;
  LieElement u(const RCObject& x) const;
  LieElement u_simple(int i, int parity = 0);

  /// Throws UnsupportedError naming the pair for symbol pairs outside the
  /// implemented cases.
  LieElement bracket(const LieElement& x, const LieElement& y);
  LieElement bracket_symbols(const Symbol& a, const Symbol& b);
  Integer triangle_count(Handle m, Handle n, Handle l);

  std::string symbol_name(const Symbol& s) const;
  /// Rows "symbol<TAB>coefficient" in canonical order.
  std::string tsv(const LieElement& e) const;
  /// Class of a homogeneous element; nullopt when zero or not homogeneous.
  std::optional<RootVec> degree(const LieElement& e) const;

 private:
  LieElement from_tube(const tube::TubeElt& e);
  std::optional<tube::TubeElt> to_tube(const Symbol& s) const;
  bool symbol_less(const Symbol& a, const Symbol& b) const;

  Catalog cat_;
  std::optional<Integer> modulus_;
  std::map<std::tuple<Handle, Handle, Handle>, Integer> counts_;
};

/// Free rank over Z/(q-1) of the span of left-normed brackets of the
/// generators u_{S_i} in each dimension vector of total degree 1..bound.
std::map<RootVec, std::size_t> graded_dim_nplus(const Quiver& quiver, Algebra alg, std::uint32_t q, int degree_bound,
                                                const Budget& budget = {});

struct LieJacobiReport {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Jacobi sums mod (q-1) over triples from {u_{S_i}, u_{S_i[1]}, h_i};
/// triples reaching an unsupported pair are skipped and counted.
LieJacobiReport jacobi_generators(const Quiver& quiver, std::uint32_t q, const Budget& budget = {});

}  // namespace preproj::rootcat
