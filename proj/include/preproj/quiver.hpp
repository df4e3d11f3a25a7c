#pragma once

// Finite acyclic quivers, their doubles, root lattice forms and Weyl group
// reflections.

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace preproj::quiver {

struct Arrow {
  int source;
  int target;
  bool operator==(const Arrow&) const = default;
};

/// Vertices are 1..n; arrows keep their input order.
class Quiver {
 public:
  Quiver(int num_vertices, std::vector<Arrow> arrows);

  int num_vertices() const { return n_; }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }

  /// Number of arrows i -> j.
  int arrows_from_to(int i, int j) const;
  /// Arrows between i and j in either direction.
  int adjacency(int i, int j) const { return arrows_from_to(i, j) + arrows_from_to(j, i); }
  /// True when the symmetrized form is positive definite.
  bool is_dynkin() const;

  bool operator==(const Quiver&) const = default;

  static Quiver kronecker();
  static Quiver a2();
  /// 1 -> 2, 1 -> 3.
  static Quiver fork();

 private:
  int n_;
  std::vector<Arrow> arrows_;
};

/// Double quiver: arrow a < m is original, a + m is its reverse.
class DoubleQuiver {
 public:
  explicit DoubleQuiver(const Quiver& q);

  const Quiver& base() const { return base_; }
  std::size_t num_arrows() const { return 2 * base_.num_arrows(); }
  Arrow arrow(std::size_t a) const;
  std::size_t bar(std::size_t a) const;
  /// +1 on original arrows, -1 on reversed ones.
  int epsilon(std::size_t a) const;

 private:
  Quiver base_;
};

using RootVec = std::vector<long long>;

/// Small dense integer matrix acting on root vectors (column convention).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  long long operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  long long& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  RootVec operator*(const RootVec& v) const;
  bool operator==(const IntMatrix& o) const = default;
  long long determinant() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<long long> data_;
};

RootVec simple_root(const Quiver& q, int i);
RootVec add(const RootVec& a, const RootVec& b);
RootVec scale(long long s, const RootVec& a);

/// <x,y> = sum x_i y_i - sum_h x_{s(h)} y_{t(h)}.
long long euler_form_A(const Quiver& q, const RootVec& x, const RootVec& y);
long long symmetric_form(const Quiver& q, const RootVec& x, const RootVec& y);
/// Euler form of the preprojective algebra; equals the symmetric form.
long long euler_form_lambda(const Quiver& q, const RootVec& x, const RootVec& y);

RootVec reflection(const Quiver& q, int i, const RootVec& x);
IntMatrix reflection_matrix(const Quiver& q, int i);
/// Product s_{w1} s_{w2} ... s_{wk}.
IntMatrix weyl_word_matrix(const Quiver& q, const std::vector<int>& word);
RootVec weyl_word_apply(const Quiver& q, const std::vector<int>& word, const RootVec& x);

struct OrderProbe {
  std::optional<int> order;  // empty when no n <= n_max gives the identity
  int n_max;
  std::string to_string() const;
};

OrderProbe weyl_order_probe(const Quiver& q, const std::vector<int>& word, int n_max);

/// Parses "vertices <n>" followed by "arrow <s> <t>" lines; '#' starts a comment.
Quiver parse_quiver(std::istream& in);
Quiver load_quiver(const std::string& path);
std::string format_quiver(const Quiver& q);

}  // namespace preproj::quiver
