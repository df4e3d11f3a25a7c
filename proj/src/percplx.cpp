#include "preproj/percplx.hpp"

#include <map>
#include <tuple>

namespace preproj::percplx {

namespace {

bool is_even(int n) { return n % 2 == 0; }

Mat zero_mat(std::uint32_t q, std::size_t r, std::size_t c) { return Mat(q, r, c); }

Mat negate(const Mat& m) { return -m; }

}  // namespace

BoundedComplex::BoundedComplex(std::uint32_t q, int lowest_degree, std::vector<std::size_t> dims,
                               std::vector<Mat> diffs)
    : q_(q), lo_(lowest_degree), dims_(std::move(dims)), diffs_(std::move(diffs)) {
  require(ffla::is_prime(q_), "BoundedComplex: q must be prime");
  require(!dims_.empty(), "BoundedComplex: at least one term required");
  require(diffs_.size() + 1 == dims_.size(), "BoundedComplex: need one differential between consecutive terms");
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    require(diffs_[k].q() == q_, "BoundedComplex: differential over the wrong field");
    require(diffs_[k].rows() == dims_[k + 1] && diffs_[k].cols() == dims_[k], "BoundedComplex: differential shape");
    if (k + 1 < diffs_.size()) require((diffs_[k + 1] * diffs_[k]).is_zero(), "BoundedComplex: d^2 != 0");
  }
}

std::size_t BoundedComplex::dim(int n) const {
  if (n < lo_ || n > highest_degree()) return 0;
  return dims_[static_cast<std::size_t>(n - lo_)];
}

Mat BoundedComplex::diff(int n) const {
  if (n < lo_ || n >= highest_degree()) return zero_mat(q_, dim(n + 1), dim(n));
  return diffs_[static_cast<std::size_t>(n - lo_)];
}

BoundedComplex BoundedComplex::regraded(int k) const { return BoundedComplex(q_, lo_ + k, dims_, diffs_); }

PeriodicComplex::PeriodicComplex(Mat d0, Mat d1) : d0_(std::move(d0)), d1_(std::move(d1)) {
  require(d0_.q() == d1_.q(), "PeriodicComplex: differentials over different fields");
  require(d1_.rows() == d0_.cols() && d1_.cols() == d0_.rows(), "PeriodicComplex: differential shapes");
  require((d1_ * d0_).is_zero() && (d0_ * d1_).is_zero(), "PeriodicComplex: differentials must compose to zero");
}

PeriodicComplex PeriodicComplex::zero(std::uint32_t q, std::size_t dim0, std::size_t dim1) {
  return PeriodicComplex(zero_mat(q, dim1, dim0), zero_mat(q, dim0, dim1));
}

PeriodicComplex compress(const BoundedComplex& c) {
  const std::uint32_t q = c.q();
  // offsets of each degree inside V0 (even) or V1 (odd)
  std::map<int, std::size_t> off;
  std::size_t n0 = 0, n1 = 0;
  for (int n = c.lowest_degree(); n <= c.highest_degree(); ++n) {
    std::size_t& slot = is_even(n) ? n0 : n1;
    off[n] = slot;
    slot += c.dim(n);
  }
  Mat d0(q, n1, n0), d1(q, n0, n1);
  for (int n = c.lowest_degree(); n < c.highest_degree(); ++n) {
    Mat& target = is_even(n) ? d0 : d1;
    target.set_block(off[n + 1], off[n], c.diff(n));
  }
  return PeriodicComplex(d0, d1);
}

namespace {

struct TensorLayout {
  // (s, t) -> offset inside degree s + t
  std::map<std::pair<int, int>, std::size_t> off;
  std::map<int, std::size_t> dim;
};

TensorLayout tensor_layout(const BoundedComplex& p, const BoundedComplex& q) {
  TensorLayout l;
  for (int n = p.lowest_degree() + q.lowest_degree(); n <= p.highest_degree() + q.highest_degree(); ++n) {
    std::size_t o = 0;
    for (int s = p.lowest_degree(); s <= p.highest_degree(); ++s) {
      const int t = n - s;
      if (t < q.lowest_degree() || t > q.highest_degree()) continue;
      l.off[{s, t}] = o;
      o += p.dim(s) * q.dim(t);
    }
    l.dim[n] = o;
  }
  return l;
}

}  // namespace

BoundedComplex tensor(const BoundedComplex& p, const BoundedComplex& q) {
  require(p.q() == q.q(), "tensor: complexes over different fields");
  const std::uint32_t f = p.q();
  TensorLayout l = tensor_layout(p, q);
  const int lo = p.lowest_degree() + q.lowest_degree();
  const int hi = p.highest_degree() + q.highest_degree();
  std::vector<std::size_t> dims;
  for (int n = lo; n <= hi; ++n) dims.push_back(l.dim[n]);
  std::vector<Mat> diffs;
  for (int n = lo; n < hi; ++n) {
    Mat d(f, l.dim[n + 1], l.dim[n]);
    for (const auto& [st, col] : l.off) {
      const auto [s, t] = st;
      if (s + t != n) continue;
      if (auto it = l.off.find({s + 1, t}); it != l.off.end())
        d.set_block(it->second, col, ffla::kron(p.diff(s), Mat::identity(f, q.dim(t))));
      if (auto it = l.off.find({s, t + 1}); it != l.off.end()) {
        Mat b = ffla::kron(Mat::identity(f, p.dim(s)), q.diff(t));
        d.set_block(it->second, col, is_even(s) ? b : negate(b));
      }
    }
    diffs.push_back(std::move(d));
  }
  return BoundedComplex(f, lo, dims, diffs);
}

PeriodicComplex tensor(const PeriodicComplex& v, const PeriodicComplex& n) {
  require(v.q() == n.q(), "tensor: complexes over different fields");
  const std::uint32_t f = v.q();
  const std::size_t v0 = v.dim0(), v1 = v.dim1(), n0 = n.dim0(), n1 = n.dim1();
  auto id = [f](std::size_t k) { return Mat::identity(f, k); };
  // W0 = V0N0 + V1N1, W1 = V1N0 + V0N1
  const std::size_t a = v0 * n0, b = v1 * n1, c = v1 * n0, d = v0 * n1;
  Mat d0(f, c + d, a + b), d1(f, a + b, c + d);
  d0.set_block(0, 0, ffla::kron(v.d0(), id(n0)));
  d0.set_block(0, a, negate(ffla::kron(id(v1), n.d1())));
  d0.set_block(c, 0, ffla::kron(id(v0), n.d0()));
  d0.set_block(c, a, ffla::kron(v.d1(), id(n1)));
  d1.set_block(0, 0, ffla::kron(v.d1(), id(n0)));
  d1.set_block(0, c, ffla::kron(id(v0), n.d1()));
  d1.set_block(a, 0, negate(ffla::kron(id(v1), n.d0())));
  d1.set_block(a, c, ffla::kron(v.d0(), id(n1)));
  return PeriodicComplex(d0, d1);
}

PeriodicComplex b2(const PeriodicComplex& p, const PeriodicComplex& q) {
  require(p.q() == q.q(), "b2: complexes over different fields");
  const std::uint32_t f = p.q();
  const std::size_t p0 = p.dim0(), p1 = p.dim1(), q0 = q.dim0(), q1 = q.dim1();
  auto id = [f](std::size_t k) { return Mat::identity(f, k); };
  // Hom(A,B) holds |B| x |A| matrices, vectorized row-major:
  // X F -> kron(X, I_|A|),  F Y -> kron(I_|B|, Y^T)
  auto left = [&](const Mat& x, std::size_t src) { return ffla::kron(x, id(src)); };
  auto right = [&](const Mat& y, std::size_t dst) { return ffla::kron(id(dst), y.transpose()); };
  const std::size_t h00 = q0 * p0, h11 = q1 * p1, h01 = q1 * p0, h10 = q0 * p1;
  // degree 0: (f0 in Hom(P0,Q0), f1 in Hom(P1,Q1)); degree 1: (g0 in Hom(P0,Q1), g1 in Hom(P1,Q0))
  Mat d0(f, h01 + h10, h00 + h11), d1(f, h00 + h11, h01 + h10);
  // g0 = dQ0 f0 - f1 dP0,  g1 = dQ1 f1 - f0 dP1
  d0.set_block(0, 0, left(q.d0(), p0));
  d0.set_block(0, h00, negate(right(p.d0(), q1)));
  d0.set_block(h01, h00, left(q.d1(), p1));
  d0.set_block(h01, 0, negate(right(p.d1(), q0)));
  // f0 = dQ1 g0 + g1 dP0,  f1 = dQ0 g1 + g0 dP1
  d1.set_block(0, 0, left(q.d1(), p0));
  d1.set_block(0, h01, right(p.d0(), q0));
  d1.set_block(h00, h01, left(q.d0(), p1));
  d1.set_block(h00, 0, right(p.d1(), q1));
  return PeriodicComplex(d0, d1);
}

PeriodicComplex shift(const PeriodicComplex& p) { return PeriodicComplex(negate(p.d1()), negate(p.d0())); }

bool is_chain_map(const PeriodicComplex& x, const PeriodicComplex& y, const ChainMap& f) {
  if (f.f0.rows() != y.dim0() || f.f0.cols() != x.dim0() || f.f1.rows() != y.dim1() || f.f1.cols() != x.dim1())
    return false;
  return y.d0() * f.f0 == f.f1 * x.d0() && y.d1() * f.f1 == f.f0 * x.d1();
}

PeriodicComplex cone(const PeriodicComplex& x, const PeriodicComplex& y, const ChainMap& f) {
  require(x.q() == y.q(), "cone: complexes over different fields");
  require(is_chain_map(x, y, f), "cone: input is not a chain map");
  const std::uint32_t q = x.q();
  const std::size_t c0 = y.dim0() + x.dim1(), c1 = y.dim1() + x.dim0();
  Mat d0(q, c1, c0), d1(q, c0, c1);
  d0.set_block(0, 0, y.d0());
  d0.set_block(0, y.dim0(), f.f1);
  d0.set_block(y.dim1(), y.dim0(), negate(x.d1()));
  d1.set_block(0, 0, y.d1());
  d1.set_block(0, y.dim1(), f.f0);
  d1.set_block(y.dim0(), y.dim1(), negate(x.d0()));
  return PeriodicComplex(d0, d1);
}

ChainMap identity_map(const PeriodicComplex& x) {
  return {Mat::identity(x.q(), x.dim0()), Mat::identity(x.q(), x.dim1())};
}

std::pair<std::size_t, std::size_t> homology_dims(const PeriodicComplex& p) {
  const std::size_t r0 = ffla::rank(p.d0()), r1 = ffla::rank(p.d1());
  return {p.dim0() - r0 - r1, p.dim1() - r1 - r0};
}

long long euler_characteristic(const PeriodicComplex& p) {
  return static_cast<long long>(p.dim0()) - static_cast<long long>(p.dim1());
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> compression_permutation(const BoundedComplex& p,
                                                                                      const BoundedComplex& q) {
  // offsets of each degree inside its compressed component
  auto offsets = [](const BoundedComplex& c) {
    std::map<int, std::size_t> off;
    std::size_t n0 = 0, n1 = 0;
    for (int n = c.lowest_degree(); n <= c.highest_degree(); ++n) {
      std::size_t& slot = is_even(n) ? n0 : n1;
      off[n] = slot;
      slot += c.dim(n);
    }
    return std::make_tuple(off, n0, n1);
  };
  const auto [op, p0, p1] = offsets(p);
  const auto [oq, q0, q1] = offsets(q);
  std::vector<std::size_t> perm0, perm1;
  // compress(P (x) Q): even total degrees in increasing order, then s, then (a, b)
  for (int n = p.lowest_degree() + q.lowest_degree(); n <= p.highest_degree() + q.highest_degree(); ++n) {
    auto& perm = is_even(n) ? perm0 : perm1;
    for (int s = p.lowest_degree(); s <= p.highest_degree(); ++s) {
      const int t = n - s;
      if (t < q.lowest_degree() || t > q.highest_degree()) continue;
      for (std::size_t a = 0; a < p.dim(s); ++a)
        for (std::size_t b = 0; b < q.dim(t); ++b) {
          const std::size_t pa = op.at(s) + a, qb = oq.at(t) + b;
          std::size_t pos;
          if (is_even(n))
            pos = is_even(s) ? pa * q0 + qb : p0 * q0 + pa * q1 + qb;
          else
            pos = is_even(s) ? p1 * q0 + pa * q1 + qb : pa * q0 + qb;
          perm.push_back(pos);
        }
    }
  }
  return {perm0, perm1};
}

bool compression_commutes_with_tensor(const BoundedComplex& p, const BoundedComplex& q) {
  const PeriodicComplex lhs = compress(tensor(p, q));
  const PeriodicComplex rhs = tensor(compress(p), compress(q));
  if (lhs.dim0() != rhs.dim0() || lhs.dim1() != rhs.dim1()) return false;
  const auto [perm0, perm1] = compression_permutation(p, q);
  for (std::size_t r = 0; r < lhs.dim1(); ++r)
    for (std::size_t c = 0; c < lhs.dim0(); ++c)
      if (lhs.d0()(r, c) != rhs.d0()(perm1[r], perm0[c])) return false;
  for (std::size_t r = 0; r < lhs.dim0(); ++r)
    for (std::size_t c = 0; c < lhs.dim1(); ++c)
      if (lhs.d1()(r, c) != rhs.d1()(perm0[r], perm1[c])) return false;
  return true;
}

std::vector<BoundedComplex> all_binary_complexes(std::size_t max_length, std::size_t max_dim) {
  std::vector<BoundedComplex> out;
  const std::uint32_t q = 2;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::uint32_t> dims(len, 0);
    do {
      std::vector<std::size_t> d(dims.begin(), dims.end());
      std::size_t entries = 0;
      for (std::size_t k = 0; k + 1 < len; ++k) entries += d[k] * d[k + 1];
      std::vector<std::uint32_t> bits(entries, 0);
      do {
        std::vector<Mat> diffs;
        std::size_t pos = 0;
        for (std::size_t k = 0; k + 1 < len; ++k) {
          Mat m(q, d[k + 1], d[k]);
          for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = bits[pos++];
          diffs.push_back(std::move(m));
        }
        bool ok = true;
        for (std::size_t k = 0; k + 2 < len && ok; ++k) ok = (diffs[k + 1] * diffs[k]).is_zero();
        if (ok) out.emplace_back(q, 0, d, diffs);
      } while (ffla::odometer_step(bits, 2));
    } while (ffla::odometer_step(dims, static_cast<std::uint32_t>(max_dim + 1)));
  }
  return out;
}

BoundedComplex random_complex(std::mt19937_64& rng, std::uint32_t q, std::size_t max_length, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> len_dist(1, max_length), dim_dist(0, max_dim);
  std::uniform_int_distribution<std::uint32_t> coef(0, q - 1);
  const std::size_t len = len_dist(rng);
  std::vector<std::size_t> dims(len);
  for (auto& d : dims) d = dim_dist(rng);
  std::vector<Mat> diffs;
  for (std::size_t k = 0; k + 1 < len; ++k) {
    // rows must lie in the left kernel of the previous differential
    Mat allowed = k == 0 ? Mat::identity(q, dims[0]) : ffla::kernel_basis(diffs.back().transpose());
    Mat d(q, dims[k + 1], dims[k]);
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t b = 0; b < allowed.rows(); ++b) {
        const std::uint32_t c = coef(rng);
        for (std::size_t col = 0; col < d.cols(); ++col)
          d(r, col) = static_cast<std::uint32_t>((d(r, col) + static_cast<std::uint64_t>(c) * allowed(b, col)) % q);
      }
    diffs.push_back(std::move(d));
  }
  return BoundedComplex(q, 0, dims, diffs);
}

nlohmann::json to_json(const PeriodicComplex& p) {
  return {{"q", p.q()}, {"dims", {p.dim0(), p.dim1()}}, {"d0", p.d0().flat()}, {"d1", p.d1().flat()}};
}

PeriodicComplex periodic_from_json(const nlohmann::json& j) {
  try {
    const auto q = j.at("q").get<std::uint32_t>();
    const auto dims = j.at("dims").get<std::vector<std::size_t>>();
    require(dims.size() == 2, "periodic_from_json: dims must have two entries");
    return PeriodicComplex(Mat::from_flat(q, dims[1], dims[0], j.at("d0").get<std::vector<long long>>()),
                           Mat::from_flat(q, dims[0], dims[1], j.at("d1").get<std::vector<long long>>()));
  } catch (const nlohmann::json::exception& e) {
    argument_error(std::string("periodic_from_json: ") + e.what());
  }
}

}  // namespace preproj::percplx
