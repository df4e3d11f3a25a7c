#pragma once

// Bounded and 2-periodic complexes of finite-dimensional F_q-spaces: the
// compression functor, tensor products, the Hom complex, shift and cone.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "preproj/ffla.hpp"

namespace preproj::percplx {

using ffla::Mat;

/// C^lo -> C^{lo+1} -> ... ; diffs[k] maps C^{lo+k} to C^{lo+k+1}.
class BoundedComplex {
 public:
  BoundedComplex(std::uint32_t q, int lowest_degree, std::vector<std::size_t> dims, std::vector<Mat> diffs);

  std::uint32_t q() const { return q_; }
  int lowest_degree() const { return lo_; }
  int highest_degree() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  std::size_t length() const { return dims_.size(); }
  /// Dimension in absolute degree n (zero outside the support).
  std::size_t dim(int n) const;
  const std::vector<std::size_t>& dims() const { return dims_; }
  /// Differential out of absolute degree n.
  Mat diff(int n) const;
  const std::vector<Mat>& diffs() const { return diffs_; }
  /// Same complex with every degree raised by k (no sign change).
  BoundedComplex regraded(int k) const;

 private:
  std::uint32_t q_;
  int lo_;
  std::vector<std::size_t> dims_;
  std::vector<Mat> diffs_;
};

/// V0 <-> V1 with d0: V0 -> V1, d1: V1 -> V0, both composites zero.
class PeriodicComplex {
 public:
  PeriodicComplex(Mat d0, Mat d1);
  static PeriodicComplex zero(std::uint32_t q, std::size_t dim0 = 0, std::size_t dim1 = 0);

  std::uint32_t q() const { return d0_.q(); }
  std::size_t dim0() const { return d0_.cols(); }
  std::size_t dim1() const { return d0_.rows(); }
  const Mat& d0() const { return d0_; }
  const Mat& d1() const { return d1_; }
  bool operator==(const PeriodicComplex& o) const { return d0_ == o.d0_ && d1_ == o.d1_; }

 private:
  Mat d0_;
  Mat d1_;
};

/// Even-degree terms form V0, odd-degree terms V1, in increasing degree.
PeriodicComplex compress(const BoundedComplex& c);

/// Total complex with d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy; degree n is
/// the sum of P^s (x) Q^{n-s} over increasing s.
BoundedComplex tensor(const BoundedComplex& p, const BoundedComplex& q);

/// Components (V0 (x) N0) + (V1 (x) N1) and (V1 (x) N0) + (V0 (x) N1) with
/// d0 = [[dV0 (x) 1, -1 (x) dN1], [1 (x) dN0, dV1 (x) 1]] and
/// d1 = [[dV1 (x) 1, 1 (x) dN1], [-1 (x) dN0, dV0 (x) 1]].
PeriodicComplex tensor(const PeriodicComplex& v, const PeriodicComplex& n);

/// Hom complex: degree 0 is Hom(P0,Q0)+Hom(P1,Q1), degree 1 is
/// Hom(P0,Q1)+Hom(P1,Q0); maps are vectorized row-major.
PeriodicComplex b2(const PeriodicComplex& p, const PeriodicComplex& q);

/// Components swapped, both differentials negated.
PeriodicComplex shift(const PeriodicComplex& p);

/// Degree-preserving map f0: X0 -> Y0, f1: X1 -> Y1.
struct ChainMap {
  Mat f0;
  Mat f1;
};

bool is_chain_map(const PeriodicComplex& x, const PeriodicComplex& y, const ChainMap& f);
/// C0 = Y0 + X1, C1 = Y1 + X0, d0 = [[dY0, f1], [0, -dX1]], d1 = [[dY1, f0], [0, -dX0]].
PeriodicComplex cone(const PeriodicComplex& x, const PeriodicComplex& y, const ChainMap& f);
ChainMap identity_map(const PeriodicComplex& x);

std::pair<std::size_t, std::size_t> homology_dims(const PeriodicComplex& p);
long long euler_characteristic(const PeriodicComplex& p);

/// Positions of the basis of compress(P (x) Q) inside compress(P) (x) compress(Q),
/// one vector per periodic degree.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> compression_permutation(const BoundedComplex& p,
                                                                                      const BoundedComplex& q);

/// compress(P (x) Q) and compress(P) (x) compress(Q) agree entry by entry
/// after relabelling bases by compression_permutation.
bool compression_commutes_with_tensor(const BoundedComplex& p, const BoundedComplex& q);

/// Every complex in degrees 0..length-1 (length 1..max_length) with term
/// dimensions 0..max_dim and 0/1 differentials satisfying d^2 = 0.
std::vector<BoundedComplex> all_binary_complexes(std::size_t max_length, std::size_t max_dim);

/// Random bounded complex; each differential is drawn from the left kernel
/// of the previous one so that d^2 = 0.
BoundedComplex random_complex(std::mt19937_64& rng, std::uint32_t q, std::size_t max_length, std::size_t max_dim);

nlohmann::json to_json(const PeriodicComplex& p);
PeriodicComplex periodic_from_json(const nlohmann::json& j);

}  // namespace preproj::percplx
