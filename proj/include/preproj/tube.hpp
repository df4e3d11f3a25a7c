#pragma once

// Lie algebra of the rank-2 cluster tube at one vertex: basis h and u<n>
// (n != 0) with explicit structure constants, a Jacobi checker and the
// quotient by the ideal generated by u<2> - u<-2>.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "preproj/common.hpp"

namespace preproj::tube {

/// h or u<n>.
struct TubeBasis {
  bool is_h = false;
  long long n = 0;
  static TubeBasis h() { return {true, 0}; }
  static TubeBasis u(long long n);
  auto operator<=>(const TubeBasis&) const = default;
  std::string to_string() const;
};

/// Element with coefficients in Z, or in Z/m when a modulus is set.
struct TubeElt {
  int vertex = 1;
  std::optional<Integer> modulus;
  Integer h = 0;
  std::map<long long, Integer> u;

  static TubeElt basis(int vertex, TubeBasis b, std::optional<Integer> modulus = std::nullopt);
  void add(TubeBasis b, const Integer& c);
  Integer coeff(TubeBasis b) const;
  bool is_zero() const { return h == 0 && u.empty(); }
  /// Largest |n| among u-terms (0 if none).
  long long max_index() const;
  bool operator==(const TubeElt& o) const;
  /// e.g. "-h-u<-2>+u<2>", "0".
  std::string to_string() const;
};

TubeElt operator+(const TubeElt& a, const TubeElt& b);
TubeElt operator-(const TubeElt& a, const TubeElt& b);
TubeElt scale(const Integer& s, const TubeElt& a);

/// Bracket of two basis vectors over Z.
std::map<TubeBasis, Integer> bracket_basis(TubeBasis a, TubeBasis b);
/// Bilinear extension; vertices and moduli must agree.
TubeElt tube_bracket(const TubeElt& a, const TubeElt& b);

struct JacobiReport {
  std::size_t triples = 0;
  std::vector<std::string> violations;
  /// Set when a bracket left the tracked window; the check is then void.
  std::optional<std::string> inconclusive;
  bool ok() const { return !inconclusive && violations.empty(); }
};

/// Jacobi sums over every unordered triple of basis vectors with |n| <= n_max,
/// with coefficients in Z/(q-1) (or Z when q == 0). Terms are tracked up to
/// |n| <= 3 n_max.
JacobiReport jacobi_check(int vertex, long long n_max, std::uint32_t q);

struct Sl2Report {
  long long window = 0;
  std::uint32_t q = 0;
  bool conclusive = false;
  std::string note;
  std::size_t layers = 0;
  std::size_t ideal_rows = 0;
  bool ideal_generator_vanishes = false;
  bool h_plus = false;     // [h, u1] - 2 u1 in I
  bool h_minus = false;    // [h, u-1] + 2 u-1 in I
  bool bracket_h = false;  // [u1, u-1] - h in I
  bool bracket_minus_h = false;  // [u1, u-1] + h in I
  bool u1_nonzero = false;       // u1 not in I
  /// sl2 relations for E = u1, F = -u-1, H = h.
  bool rescaled_triple = false;
  bool pass() const { return conclusive && h_plus && h_minus && bracket_h && u1_nonzero; }
  std::string to_string() const;
};

/// Closes the ideal generated by u<2> - u<-2> under brackets with u<1>,
/// u<-1>, h until no new rows appear, then tests the sl2 relations on the
/// images in the quotient.
Sl2Report sl2_quotient_check(int vertex, long long n_max, std::uint32_t q);

}  // namespace preproj::tube
