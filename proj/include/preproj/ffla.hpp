#pragma once

// Exact linear algebra over prime fields F_q, subspace enumeration, and
// integer polynomials in q (Gaussian binomials, interpolation).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "preproj/common.hpp"

namespace preproj::ffla {

bool is_prime(std::uint64_t n);

/// Element of F_q carrying its modulus.
class FieldElem {
 public:
  FieldElem(std::uint32_t value, std::uint32_t q);

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return q_; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;
  bool operator==(const FieldElem& o) const = default;

 private:
  std::uint32_t v_;
  std::uint32_t q_;
};

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t q);

inline std::uint32_t reduce(long long x, std::uint32_t q) {
  long long r = x % static_cast<long long>(q);
  return static_cast<std::uint32_t>(r < 0 ? r + q : r);
}

/// Advances a base-q counter (last digit fastest); false after wrapping to zero.
inline bool odometer_step(std::vector<std::uint32_t>& digits, std::uint32_t q) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < q) return true;
    digits[k] = 0;
  }
  return false;
}

/// Dense row-major matrix over F_q.
class Mat {
 public:
  Mat() = default;
  Mat(std::uint32_t q, std::size_t rows, std::size_t cols);

  static Mat identity(std::uint32_t q, std::size_t n);
  static Mat from_rows(std::uint32_t q, const std::vector<std::vector<long long>>& rows);
  /// Builds a rows x cols matrix from row-major integers reduced mod q.
  static Mat from_flat(std::uint32_t q, std::size_t rows, std::size_t cols,
                       const std::vector<long long>& flat);

  std::uint32_t q() const { return q_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long value) { (*this)(r, c) = reduce(value, q_); }
  FieldElem elem(std::size_t r, std::size_t c) const { return FieldElem((*this)(r, c), q_); }
  const std::vector<std::uint32_t>& data() const { return data_; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(std::uint32_t s) const;
  Mat transpose() const;
  bool operator==(const Mat& o) const;
  bool is_zero() const;

  Mat row(std::size_t r) const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);

  std::vector<long long> flat() const;
  std::string to_string() const;

 private:
  std::uint32_t q_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

Mat kron(const Mat& a, const Mat& b);
Mat hstack(const std::vector<Mat>& blocks, std::size_t rows);
Mat vstack(const std::vector<Mat>& blocks, std::size_t cols);

struct RrefResult {
  Mat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Mat& a);
std::size_t rank(const Mat& a);
/// Rows of the result form a basis of {x : a x = 0}.
Mat kernel_basis(const Mat& a);
/// Solution x of a x = b, or nullopt when the system is inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);
bool is_invertible(const Mat& a);
std::uint32_t determinant(const Mat& a);
std::optional<Mat> inverse(const Mat& a);
/// Reduces row vector v modulo the row space of an RREF basis; returns the residue.
Mat reduce_modulo(const Mat& v, const RrefResult& basis);
bool in_row_space(const Mat& v, const RrefResult& basis);

/// Number of d-dimensional subspaces of F_q^n.
Integer subspace_count(std::size_t n, std::size_t d, std::uint32_t q);

/// Every d-dimensional subspace of F_q^n as a d x n RREF basis, ordered by
/// pivot set then free entries.
std::vector<Mat> enumerate_subspaces(std::size_t n, std::size_t d, std::uint32_t q,
                                     std::uint64_t cap = Budget{}.enumeration_cap);

/// Integer polynomial in q, coefficients low to high.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Integer> coeffs);
  static QPoly constant(const Integer& c);
  static QPoly monomial(std::size_t degree, const Integer& c = 1);

  const std::vector<Integer>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  Integer eval(const Integer& x) const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

QPoly q_int(std::size_t n);
QPoly q_factorial(std::size_t n);
QPoly q_binomial(std::size_t m, std::size_t l);
Integer eval(const QPoly& p, const Integer& q0);
Integer binomial(std::size_t m, std::size_t l);

struct PolyFit {
  std::optional<QPoly> poly;
  /// fitted value minus observed value, one entry per input point.
  std::vector<Rational> residuals;
  bool ok() const { return poly.has_value(); }
};

/// Exact Lagrange fit through all points but the last, which is held out.
/// Succeeds only with integer coefficients reproducing the held-out point.
PolyFit interpolate_integer_poly(const std::vector<std::pair<Integer, Integer>>& points);

}  // namespace preproj::ffla
