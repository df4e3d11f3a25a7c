#include "preproj/ffla.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace preproj::ffla {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t q) {
  long long t = 0, nt = 1, r = q, nr = a % q;
  while (nr != 0) {
    long long k = r / nr;
    t -= k * nt;
    std::swap(t, nt);
    r -= k * nr;
    std::swap(r, nr);
  }
  if (r != 1) argument_error("mod_inverse: element not invertible");
  return reduce(t, q);
}

FieldElem::FieldElem(std::uint32_t value, std::uint32_t q) : v_(value % q), q_(q) {}

FieldElem FieldElem::operator+(const FieldElem& o) const { return {(v_ + o.v_) % q_, q_}; }
FieldElem FieldElem::operator-(const FieldElem& o) const { return {(v_ + q_ - o.v_) % q_, q_}; }
FieldElem FieldElem::operator*(const FieldElem& o) const {
  return {static_cast<std::uint32_t>((static_cast<std::uint64_t>(v_) * o.v_) % q_), q_};
}
FieldElem FieldElem::operator-() const { return {(q_ - v_) % q_, q_}; }
FieldElem FieldElem::inverse() const { return {mod_inverse(v_, q_), q_}; }

Mat::Mat(std::uint32_t q, std::size_t rows, std::size_t cols)
    : q_(q), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mat Mat::identity(std::uint32_t q, std::size_t n) {
  Mat m(q, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % q;
  return m;
}

Mat Mat::from_rows(std::uint32_t q, const std::vector<std::vector<long long>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Mat m(q, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == nc, "Mat::from_rows: ragged rows");
    for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Mat Mat::from_flat(std::uint32_t q, std::size_t rows, std::size_t cols,
                   const std::vector<long long>& flat) {
  require(flat.size() == rows * cols, "Mat::from_flat: size mismatch");
  Mat m(q, rows, cols);
  for (std::size_t k = 0; k < flat.size(); ++k) m.data_[k] = reduce(flat[k], q);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  require(cols_ == o.rows_, "Mat::operator*: shape mismatch");
  Mat r(q_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = data_[i * cols_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.data_[i * o.cols_ + j] =
            static_cast<std::uint32_t>((r.data_[i * o.cols_ + j] + a * o.data_[k * o.cols_ + j]) % q_);
    }
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "Mat::operator+: shape mismatch");
  Mat r(q_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = (data_[k] + o.data_[k]) % q_;
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "Mat::operator-: shape mismatch");
  Mat r(q_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = (data_[k] + q_ - o.data_[k]) % q_;
  return r;
}

Mat Mat::operator-() const {
  Mat r(q_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = (q_ - data_[k]) % q_;
  return r;
}

Mat Mat::scaled(std::uint32_t s) const {
  Mat r(q_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k)
    r.data_[k] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(data_[k]) * s) % q_);
  return r;
}

Mat Mat::transpose() const {
  Mat r(q_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return q_ == o.q_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

Mat Mat::row(std::size_t r) const { return block(r, 0, 1, cols_); }

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "Mat::block: out of range");
  Mat b(q_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, "Mat::set_block: out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::vector<long long> Mat::flat() const { return {data_.begin(), data_.end()}; }

std::string Mat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
  }
  os << ']';
  return os.str();
}

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.q(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::uint64_t x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = static_cast<std::uint32_t>((x * b(k, l)) % a.q());
    }
  return r;
}

Mat hstack(const std::vector<Mat>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  std::uint32_t q = blocks.empty() ? 2 : blocks.front().q();
  for (const auto& b : blocks) {
    require(b.rows() == rows, "hstack: row mismatch");
    cols += b.cols();
  }
  Mat r(q, rows, cols);
  std::size_t c = 0;
  for (const auto& b : blocks) {
    r.set_block(0, c, b);
    c += b.cols();
  }
  return r;
}

Mat vstack(const std::vector<Mat>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  std::uint32_t q = blocks.empty() ? 2 : blocks.front().q();
  for (const auto& b : blocks) {
    require(b.cols() == cols, "vstack: column mismatch");
    rows += b.rows();
  }
  Mat r(q, rows, cols);
  std::size_t rr = 0;
  for (const auto& b : blocks) {
    r.set_block(rr, 0, b);
    rr += b.rows();
  }
  return r;
}

RrefResult rref(const Mat& a) {
  RrefResult res{a, 0, {}};
  Mat& m = res.reduced;
  const std::uint32_t q = a.q();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    std::uint64_t inv = mod_inverse(m(row, col), q);
    for (std::size_t j = col; j < m.cols(); ++j)
      m(row, j) = static_cast<std::uint32_t>((m(row, j) * inv) % q);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      std::uint64_t f = q - m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) = static_cast<std::uint32_t>((m(i, j) + f * m(row, j)) % q);
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

std::size_t rank(const Mat& a) { return rref(a).rank; }

Mat kernel_basis(const Mat& a) {
  const std::uint32_t q = a.q();
  RrefResult r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  Mat k(q, a.cols() - r.rank, a.cols());
  std::size_t out = 0;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    k(out, f) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) k(out, r.pivots[i]) = (q - r.reduced(i, f)) % q;
    ++out;
  }
  return k;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows(), "solve: shape mismatch");
  const std::uint32_t q = a.q();
  Mat aug = hstack({a, b}, a.rows());
  RrefResult r = rref(aug);
  for (auto p : r.pivots)
    if (p >= a.cols()) return std::nullopt;
  Mat x(q, a.cols(), b.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.reduced(i, a.cols() + j);
  return x;
}

bool is_invertible(const Mat& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }

std::uint32_t determinant(const Mat& a) {
  require(a.rows() == a.cols(), "determinant: square matrix required");
  const std::uint32_t q = a.q();
  Mat m = a;
  std::uint64_t det = 1 % q;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = (q - det) % q;
    }
    det = (det * m(col, col)) % q;
    std::uint64_t inv = mod_inverse(m(col, col), q);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      std::uint64_t f = (static_cast<std::uint64_t>(q - m(i, col)) * inv) % q;
      for (std::size_t j = col; j < n; ++j)
        m(i, j) = static_cast<std::uint32_t>((m(i, j) + f * m(col, j)) % q);
    }
  }
  return static_cast<std::uint32_t>(det);
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  auto x = solve(a, Mat::identity(a.q(), a.rows()));
  if (!x || !is_invertible(a)) return std::nullopt;
  return x;
}

Mat reduce_modulo(const Mat& v, const RrefResult& basis) {
  Mat r = v;
  const std::uint32_t q = v.q();
  for (std::size_t i = 0; i < basis.rank; ++i) {
    std::uint64_t c = r(0, basis.pivots[i]);
    if (c == 0) continue;
    std::uint64_t f = q - c;
    for (std::size_t j = 0; j < r.cols(); ++j)
      r(0, j) = static_cast<std::uint32_t>((r(0, j) + f * basis.reduced(i, j)) % q);
  }
  return r;
}

bool in_row_space(const Mat& v, const RrefResult& basis) { return reduce_modulo(v, basis).is_zero(); }

Integer subspace_count(std::size_t n, std::size_t d, std::uint32_t q) {
  if (d > n) return 0;
  return q_binomial(n, d).eval(q);
}

std::vector<Mat> enumerate_subspaces(std::size_t n, std::size_t d, std::uint32_t q,
                                     std::uint64_t cap) {
  require(is_prime(q), "enumerate_subspaces: q must be prime");
  std::vector<Mat> out;
  if (d > n) return out;
  Integer total = subspace_count(n, d, q);
  if (total > cap)
    throw BudgetError("enumerate_subspaces(" + std::to_string(n) + "," + std::to_string(d) +
                      "): " + total.str() + " subspaces exceed cap " + std::to_string(cap));
  out.reserve(static_cast<std::size_t>(total));
  std::vector<std::size_t> piv(d);
  std::iota(piv.begin(), piv.end(), 0);
  while (true) {
    std::vector<bool> is_pivot(n, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = piv[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free.emplace_back(r, c);
    std::vector<std::uint32_t> vals(free.size(), 0);
    do {
      Mat m(q, d, n);
      for (std::size_t r = 0; r < d; ++r) m(r, piv[r]) = 1;
      for (std::size_t k = 0; k < free.size(); ++k) m(free[k].first, free[k].second) = vals[k];
      out.push_back(std::move(m));
    } while (odometer_step(vals, q));
    // next pivot combination
    std::size_t i = d;
    while (i > 0 && piv[i - 1] == n - d + i - 1) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < d; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

QPoly::QPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Integer& c) { return QPoly(std::vector<Integer>{c}); }

QPoly QPoly::monomial(std::size_t degree, const Integer& c) {
  std::vector<Integer> v(degree + 1, 0);
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Integer> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) + o.coeff(k);
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Integer> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) - o.coeff(k);
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Integer> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return QPoly(std::move(r));
}

Integer QPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Integer& c = c_[k];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << 'q';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

QPoly q_int(std::size_t n) {
  std::vector<Integer> c(n, 1);
  return QPoly(std::move(c));
}

QPoly q_factorial(std::size_t n) {
  QPoly r = QPoly::constant(1);
  for (std::size_t k = 1; k <= n; ++k) r = r * q_int(k);
  return r;
}

QPoly q_binomial(std::size_t m, std::size_t l) {
  if (l > m) return {};
  // Pascal rule [m,l] = [m-1,l-1] + q^l [m-1,l]
  std::vector<std::vector<QPoly>> t(m + 1, std::vector<QPoly>(l + 1));
  for (std::size_t a = 0; a <= m; ++a) {
    t[a][0] = QPoly::constant(1);
    for (std::size_t b = 1; b <= std::min(a, l); ++b) {
      t[a][b] = t[a - 1][b - 1];
      if (b <= a - 1) t[a][b] = t[a][b] + QPoly::monomial(b) * t[a - 1][b];
    }
  }
  return t[m][l];
}

Integer eval(const QPoly& p, const Integer& q0) { return p.eval(q0); }

Integer binomial(std::size_t m, std::size_t l) {
  if (l > m) return 0;
  Integer r = 1;
  for (std::size_t k = 1; k <= l; ++k) r = r * (m - l + k) / k;
  return r;
}

PolyFit interpolate_integer_poly(const std::vector<std::pair<Integer, Integer>>& points) {
  require(points.size() >= 2, "interpolate_integer_poly: need at least two points");
  const std::size_t k = points.size() - 1;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      require(points[i].first != points[j].first, "interpolate_integer_poly: repeated abscissa");

  std::vector<Rational> coeffs(k, Rational(0));
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t l = 0; l < k; ++l) {
      if (l == j) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * Rational(points[l].first);
      }
      basis = std::move(next);
      denom *= Rational(points[j].first - points[l].first);
    }
    Rational scale = Rational(points[j].second) / denom;
    for (std::size_t t = 0; t < basis.size(); ++t) coeffs[t] += basis[t] * scale;
  }

  PolyFit fit;
  bool integral = true;
  std::vector<Integer> ic;
  for (const auto& c : coeffs) {
    if (boost::multiprecision::denominator(c) != 1) integral = false;
    ic.push_back(boost::multiprecision::numerator(c));
  }
  for (const auto& [x, y] : points) {
    Rational v = 0;
    for (std::size_t t = coeffs.size(); t-- > 0;) v = v * Rational(x) + coeffs[t];
    fit.residuals.push_back(v - Rational(y));
  }
  bool holds = fit.residuals.back() == 0;
  if (integral && holds) fit.poly = QPoly(std::move(ic));
  return fit;
}

}  // namespace preproj::ffla
