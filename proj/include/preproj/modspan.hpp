#pragma once

// Submodules of (Z/m)^n and Smith normal form over Z.

#include <cstddef>
#include <map>
#include <vector>

#include "preproj/common.hpp"

namespace preproj::modspan {

/// Span of vectors in (Z/m)^n kept in Howell form, so membership is decided
/// by reduction and the rows with leading column >= k span the elements
/// vanishing on the first k coordinates.
class ModSpan {
 public:
  ModSpan(long long modulus, std::size_t ncols);

  /// Inserts v; returns true when the span grew.
  bool insert(std::vector<long long> v);
  bool contains(std::vector<long long> v) const;
  /// Number of Howell rows (an upper bound for the number of generators needed).
  std::size_t size() const { return rows_.size(); }
  long long modulus() const { return m_; }
  std::size_t ncols() const { return n_; }
  /// Howell rows keyed by leading column.
  const std::map<std::size_t, std::vector<long long>>& rows() const { return rows_; }

 private:
  void add(std::vector<long long> v, bool& grew);
  void normalize(std::vector<long long>& v, std::size_t lead) const;
  long long m_;
  std::size_t n_;
  std::map<std::size_t, std::vector<long long>> rows_;
};

/// Invariant factors d_1 | d_2 | ... (nonzero only) of an integer matrix.
std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> a);

/// Number of free Z/m summands of the Z/m-span of the rows of a.
std::size_t free_rank_mod(const std::vector<std::vector<Integer>>& a, const Integer& m);

}  // namespace preproj::modspan
