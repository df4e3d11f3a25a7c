#pragma once

// Finite-dimensional representations of a quiver (path algebra kQ) or of its
// preprojective algebra over F_q: construction, Hom spaces, submodules,
// quotients and isomorphism testing.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "preproj/common.hpp"
#include "preproj/ffla.hpp"
#include "preproj/quiver.hpp"

namespace preproj::rep {

using ffla::Mat;
using quiver::Arrow;
using quiver::Quiver;
using Dims = std::vector<int>;

enum class Algebra { PathAlgebra, Preprojective };

std::string to_string(Algebra a);
Algebra algebra_from_string(const std::string& s);

/// Arrows acted on by modules of the algebra: Q1 for kQ, the double for the
/// preprojective algebra (original arrows first, then their reverses).
std::vector<Arrow> algebra_arrows(const Quiver& q, Algebra alg);

class Rep {
 public:
  /// Validates shapes; for the preprojective algebra also the relations and
  /// nilpotency.
  Rep(Quiver quiver, Algebra alg, std::uint32_t q, Dims dims, std::vector<Mat> maps);
  /// Skips relation and nilpotency checks (shapes are still checked).
  static Rep unchecked(Quiver quiver, Algebra alg, std::uint32_t q, Dims dims, std::vector<Mat> maps);

  const Quiver& quiver() const { return quiver_; }
  Algebra algebra() const { return alg_; }
  std::uint32_t q() const { return q_; }
  const Dims& dims() const { return dims_; }
  /// Dimension at vertex i (1-based).
  int dim(int i) const { return dims_.at(i - 1); }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  std::size_t num_arrows() const { return arrows_.size(); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_[a]; }
  const Mat& map(std::size_t a) const { return maps_[a]; }
  const std::vector<Mat>& maps() const { return maps_; }
  /// Sign of a doubled arrow; always +1 for the path algebra.
  int epsilon(std::size_t a) const;
  /// Reverse of a doubled arrow (preprojective algebra only).
  std::size_t bar(std::size_t a) const;

  bool operator==(const Rep& o) const;

 private:
  struct Unchecked {};
  Rep(Unchecked, Quiver quiver, Algebra alg, std::uint32_t q, Dims dims, std::vector<Mat> maps);

  Quiver quiver_;
  Algebra alg_;
  std::uint32_t q_;
  Dims dims_;
  std::vector<Arrow> arrows_;
  std::vector<Mat> maps_;
};

Rep zero_rep(const Quiver& quiver, Algebra alg, std::uint32_t q);
Rep simple(const Quiver& quiver, Algebra alg, std::uint32_t q, int i);
Rep direct_sum(const Rep& a, const Rep& b);
Rep direct_power(const Rep& a, int k);
/// Preprojective module with V_i = k^a (a = arrows between i and j), V_j = k,
/// coordinate projections on the doubled arrows i -> j and zero elsewhere.
Rep extension_I(const Quiver& quiver, std::uint32_t q, int j, int i);

bool satisfies_relations(const Rep& m);
bool is_nilpotent(const Rep& m);
/// Dimension vectors of J^k M for k = 0, 1, ... until zero (J = arrow ideal).
std::vector<Dims> radical_layers(const Rep& m);

/// One linear map per vertex.
using Morphism = std::vector<Mat>;

struct HomSpace {
  std::vector<Morphism> basis;
  std::size_t dim() const { return basis.size(); }
};

HomSpace hom_space(const Rep& m, const Rep& n);
std::size_t hom_dim(const Rep& m, const Rep& n);
Morphism combine(const HomSpace& h, const std::vector<std::uint32_t>& coeffs, const Rep& m, const Rep& n);
bool is_homomorphism(const Rep& m, const Rep& n, const Morphism& f);

struct ExtDims {
  long long hom;
  long long ext1;
  long long ext2;
};

/// Hom/Ext^1/Ext^2 dimensions over the preprojective algebra via the 2-CY
/// formulas; errors for path-algebra input.
ExtDims ext_dims_lambda(const Rep& m, const Rep& n);

/// Per-vertex subspaces given by RREF row bases.
using SubspaceTuple = std::vector<Mat>;

std::vector<SubspaceTuple> enumerate_submodules(const Rep& l, const Dims& dims, const Budget& budget = {});
std::vector<SubspaceTuple> submodules_isomorphic_to(const Rep& l, const Rep& n, const Budget& budget = {});
bool is_submodule(const Rep& l, const SubspaceTuple& u);
Rep sub_to_rep(const Rep& l, const SubspaceTuple& u);
Rep quotient(const Rep& l, const SubspaceTuple& u);

/// Isomorphism invariants used to prefilter isomorphism tests.
struct Fingerprint {
  Dims dims;
  std::size_t end_dim = 0;
  std::vector<std::size_t> hom_from_simple;
  std::vector<std::size_t> hom_to_simple;
  std::vector<Dims> radical;
  auto operator<=>(const Fingerprint&) const = default;
  std::string to_string() const;
};

Fingerprint fingerprint(const Rep& m);
bool are_isomorphic(const Rep& m, const Rep& n);
bool are_isomorphic(const Rep& m, const Rep& n, const Fingerprint& fm, const Fingerprint& fn);
/// |Aut M| by enumeration of End M.
Integer aut_count(const Rep& m, const Budget& budget = {});
/// True iff End M has no idempotents besides 0 and 1, decided through
/// Fitting's lemma (every endomorphism nilpotent or invertible).
bool is_indecomposable(const Rep& m, const Budget& budget = {});
/// dim End M - dim rad End M for indecomposable M.
int end_residue_degree(const Rep& m, const Budget& budget = {});

/// Forward maps of a preprojective module whose reversed maps vanish.
std::optional<Rep> restrict_to_path_algebra(const Rep& m);
/// Path-algebra module viewed as a preprojective module with zero reversed maps.
Rep lift_to_preprojective(const Rep& m);

nlohmann::json to_json(const Rep& m);
Rep rep_from_json(const nlohmann::json& j);

/// Raw iso class of dimension vector d: a representative and the number of
/// matrix tuples in its class.
struct ModuleClass {
  Rep rep;
  std::uint64_t raw_count;
};

/// Enumerates every matrix tuple of dimension vector d (subject to the
/// relations and nilpotency) and buckets them by isomorphism.
std::vector<ModuleClass> all_modules_of_dim(const Quiver& quiver, Algebra alg, std::uint32_t q, const Dims& d,
                                            const Budget& budget = {});

/// Middle terms L of 0 -> N -> L -> M -> 0, one per element of a complement
/// of the coboundaries in the cocycle space (repetitions possible).
std::vector<Rep> extension_middle_terms(const Rep& m, const Rep& n, const Budget& budget = {});
std::size_t ext1_dim(const Rep& m, const Rep& n);

}  // namespace preproj::rep
