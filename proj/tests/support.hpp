#pragma once

// Seeded generators and brute-force oracles shared by the unit tests. The
// oracles avoid the library's elimination routines wherever that is cheap.

#include <cstdint>
#include <random>
#include <vector>

#include "preproj/ffla.hpp"
#include "preproj/rep.hpp"

namespace testsupport {

using preproj::ffla::Mat;
using preproj::rep::Rep;

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::uint32_t below(std::uint32_t n) { return std::uniform_int_distribution<std::uint32_t>(0, n - 1)(rng); }
  Mat mat(std::uint32_t q, std::size_t r, std::size_t c) {
    Mat m(q, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = below(q);
    return m;
  }
  /// Random path-algebra representation with the given dimension vector.
  Rep path_rep(const preproj::quiver::Quiver& qv, std::uint32_t q, const preproj::rep::Dims& d) {
    std::vector<Mat> maps;
    for (const auto& a : qv.arrows())
      maps.push_back(mat(q, static_cast<std::size_t>(d[a.target - 1]), static_cast<std::size_t>(d[a.source - 1])));
    return Rep(qv, preproj::rep::Algebra::PathAlgebra, q, d, std::move(maps));
  }
};

/// Rank by plain Gaussian elimination on a copy.
inline std::size_t naive_rank(std::vector<std::vector<std::uint32_t>> a, std::uint32_t q) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    std::uint32_t inv = 1;
    while ((std::uint64_t{inv} * a[rank][c]) % q != 1) ++inv;
    for (auto& x : a[rank]) x = static_cast<std::uint32_t>((std::uint64_t{x} * inv) % q);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::uint64_t f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k)
        a[r][k] = static_cast<std::uint32_t>((a[r][k] + (q - (f * a[rank][k]) % q)) % q);
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<std::uint32_t>> rows_of(const Mat& m) {
  std::vector<std::vector<std::uint32_t>> out(m.rows(), std::vector<std::uint32_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

/// Number of d-dimensional subspaces of F_q^n: ordered independent d-tuples
/// in F_q^n divided by ordered bases of F_q^d, both by enumeration.
inline std::uint64_t brute_subspace_count(std::size_t n, std::size_t d, std::uint32_t q) {
  auto independent_tuples = [q](std::size_t dim, std::size_t k) {
    std::vector<std::uint32_t> digits(dim * k, 0);
    std::uint64_t count = 0;
    do {
      std::vector<std::vector<std::uint32_t>> rows(k, std::vector<std::uint32_t>(dim));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < dim; ++j) rows[i][j] = digits[i * dim + j];
      if (naive_rank(rows, q) == k) ++count;
    } while (preproj::ffla::odometer_step(digits, q));
    return count;
  };
  if (d == 0) return 1;
  return independent_tuples(n, d) / independent_tuples(d, d);
}

/// Every vertex-wise tuple of matrices f_v: M_v -> N_v commuting with all
/// arrows, by enumeration.
inline std::uint64_t brute_hom_count(const Rep& m, const Rep& n) {
  std::size_t vars = 0;
  const int nv = m.quiver().num_vertices();
  for (int v = 1; v <= nv; ++v) vars += static_cast<std::size_t>(m.dim(v) * n.dim(v));
  std::vector<std::uint32_t> digits(vars, 0);
  std::uint64_t count = 0;
  do {
    std::vector<Mat> f;
    std::size_t k = 0;
    for (int v = 1; v <= nv; ++v) {
      Mat fv(m.q(), static_cast<std::size_t>(n.dim(v)), static_cast<std::size_t>(m.dim(v)));
      for (std::size_t r = 0; r < fv.rows(); ++r)
        for (std::size_t c = 0; c < fv.cols(); ++c) fv(r, c) = digits[k++];
      f.push_back(fv);
    }
    bool ok = true;
    for (std::size_t a = 0; a < m.num_arrows() && ok; ++a) {
      const auto& arr = m.arrow(a);
      const Mat lhs = n.map(a) * f[static_cast<std::size_t>(arr.source - 1)];
      const Mat rhs = f[static_cast<std::size_t>(arr.target - 1)] * m.map(a);
      ok = lhs == rhs;
    }
    if (ok) ++count;
  } while (preproj::ffla::odometer_step(digits, m.q()));
  return count;
}

/// Isomorphism by searching every tuple of invertible matrices.
inline bool brute_isomorphic(const Rep& m, const Rep& n) {
  if (m.dims() != n.dims()) return false;
  const int nv = m.quiver().num_vertices();
  std::size_t vars = 0;
  for (int v = 1; v <= nv; ++v) vars += static_cast<std::size_t>(m.dim(v) * m.dim(v));
  std::vector<std::uint32_t> digits(vars, 0);
  do {
    std::vector<Mat> g;
    std::size_t k = 0;
    bool invertible = true;
    for (int v = 1; v <= nv && invertible; ++v) {
      const auto d = static_cast<std::size_t>(m.dim(v));
      Mat gv(m.q(), d, d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) gv(r, c) = digits[k++];
      invertible = naive_rank(rows_of(gv), m.q()) == d;
      g.push_back(gv);
    }
    if (!invertible) continue;
    bool ok = true;
    for (std::size_t a = 0; a < m.num_arrows() && ok; ++a) {
      const auto& arr = m.arrow(a);
      ok = n.map(a) * g[static_cast<std::size_t>(arr.source - 1)] ==
           g[static_cast<std::size_t>(arr.target - 1)] * m.map(a);
    }
    if (ok) return true;
  } while (preproj::ffla::odometer_step(digits, m.q()));
  return false;
}

/// Submodule tuples of L with the given dimension vector, by checking
/// arrow-stability of every tuple of subspaces.
inline std::vector<std::vector<Mat>> brute_submodules(const Rep& l, const preproj::rep::Dims& d) {
  const int nv = l.quiver().num_vertices();
  std::vector<std::vector<Mat>> per_vertex;
  for (int v = 1; v <= nv; ++v)
    per_vertex.push_back(preproj::ffla::enumerate_subspaces(static_cast<std::size_t>(l.dim(v)),
                                                            static_cast<std::size_t>(d[v - 1]), l.q()));
  std::vector<std::vector<Mat>> out;
  std::vector<std::size_t> idx(per_vertex.size(), 0);
  for (;;) {
    std::vector<Mat> u;
    for (std::size_t v = 0; v < idx.size(); ++v) u.push_back(per_vertex[v][idx[v]]);
    bool stable = true;
    for (std::size_t a = 0; a < l.num_arrows() && stable; ++a) {
      const auto& arr = l.arrow(a);
      const Mat& us = u[static_cast<std::size_t>(arr.source - 1)];
      const Mat& ut = u[static_cast<std::size_t>(arr.target - 1)];
      if (us.rows() == 0) continue;
      const Mat image = (l.map(a) * us.transpose()).transpose();
      auto stacked = rows_of(ut);
      for (const auto& r : rows_of(image)) stacked.push_back(r);
      stable = naive_rank(stacked, l.q()) == ut.rows();
    }
    if (stable) out.push_back(u);
    std::size_t v = 0;
    while (v < idx.size() && ++idx[v] == per_vertex[v].size()) idx[v++] = 0;
    if (v == idx.size()) break;
  }
  return out;
}

}  // namespace testsupport
