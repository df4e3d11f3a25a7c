#include "preproj/modspan.hpp"

#include <numeric>
#include <utility>

namespace preproj::modspan {

namespace {

long long mod(long long x, long long m) {
  long long r = x % m;
  return r < 0 ? r + m : r;
}

// g = s*a + t*b
void xgcd(long long a, long long b, long long& g, long long& s, long long& t) {
  long long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    long long k = a / b;
    std::tie(a, b) = std::make_pair(b, a - k * b);
    std::tie(s0, s1) = std::make_pair(s1, s0 - k * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - k * t1);
  }
  g = a;
  s = s0;
  t = t0;
}

long long inverse_mod(long long a, long long m) {
  long long g, s, t;
  xgcd(mod(a, m), m, g, s, t);
  return mod(s, m);
}

}  // namespace

ModSpan::ModSpan(long long modulus, std::size_t ncols) : m_(modulus), n_(ncols) {
  require(modulus >= 1, "ModSpan: modulus must be positive");
}

void ModSpan::normalize(std::vector<long long>& v, std::size_t lead) const {
  long long a = v[lead];
  long long g = std::gcd(a, m_);
  long long mg = m_ / g;
  long long u = mg > 1 ? inverse_mod(a / g, mg) : 1;
  while (std::gcd(u, m_) != 1) u += mg;
  for (auto& x : v) x = mod(x * u, m_);
}

bool ModSpan::insert(std::vector<long long> v) {
  require(v.size() == n_, "ModSpan::insert: length mismatch");
  bool grew = false;
  add(std::move(v), grew);
  return grew;
}

void ModSpan::add(std::vector<long long> v, bool& grew) {
  for (auto& x : v) x = mod(x, m_);
  for (std::size_t j = 0; j < n_; ++j) {
    if (v[j] == 0) continue;
    auto it = rows_.find(j);
    if (it == rows_.end()) {
      normalize(v, j);
      long long g = v[j];
      rows_.emplace(j, v);
      grew = true;
      if (g != 1) {
        std::vector<long long> ann(n_);
        for (std::size_t k = 0; k < n_; ++k) ann[k] = mod(v[k] * (m_ / g), m_);
        add(std::move(ann), grew);
      }
      return;
    }
    std::vector<long long> r = it->second;
    long long p = r[j];
    if (v[j] % p == 0) {
      long long c = v[j] / p;
      for (std::size_t k = 0; k < n_; ++k) v[k] = mod(v[k] - c * r[k], m_);
      continue;
    }
    long long g, s, t;
    xgcd(p, v[j], g, s, t);
    std::vector<long long> nr(n_);
    for (std::size_t k = 0; k < n_; ++k) nr[k] = mod(s * r[k] + t * v[k], m_);
    normalize(nr, j);
    long long ng = nr[j];
    it->second = nr;
    grew = true;
    std::vector<long long> ann(n_), old(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      ann[k] = mod(nr[k] * (m_ / ng), m_);
      old[k] = mod(r[k] - (p / ng) * nr[k], m_);
    }
    add(std::move(ann), grew);
    add(std::move(old), grew);
    long long c = v[j] / ng;
    for (std::size_t k = 0; k < n_; ++k) v[k] = mod(v[k] - c * nr[k], m_);
  }
}

bool ModSpan::contains(std::vector<long long> v) const {
  require(v.size() == n_, "ModSpan::contains: length mismatch");
  for (auto& x : v) x = mod(x, m_);
  for (std::size_t j = 0; j < n_; ++j) {
    if (v[j] == 0) continue;
    auto it = rows_.find(j);
    if (it == rows_.end()) return false;
    long long p = it->second[j];
    if (v[j] % p != 0) return false;
    long long c = v[j] / p;
    for (std::size_t k = 0; k < n_; ++k) v[k] = mod(v[k] - c * it->second[k], m_);
  }
  return true;
}

std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> a) {
  std::vector<Integer> out;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t t = 0;
  auto absval = [](const Integer& x) { return x < 0 ? Integer(-x) : x; };
  while (t < rows && t < cols) {
    // smallest nonzero entry in the trailing block
    bool found = false;
    std::size_t pr = t, pc = t;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (!found || absval(a[i][j]) < absval(a[pr][pc]))) {
          found = true;
          pr = i;
          pc = j;
        }
    if (!found) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Integer k = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= k * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Integer k = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= k * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // divisibility of the remaining block by the pivot
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
              clean = false;
              break;
            }
      }
    }
    out.push_back(absval(a[t][t]));
    ++t;
  }
  return out;
}

std::size_t free_rank_mod(const std::vector<std::vector<Integer>>& a, const Integer& m) {
  std::size_t r = 0;
  for (const auto& d : smith_invariants(a))
    if (boost::multiprecision::gcd(d, m) == 1) ++r;
  return r;
}

}  // namespace preproj::modspan
