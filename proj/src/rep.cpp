#include "preproj/rep.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

namespace preproj::rep {

using ffla::RrefResult;

std::string to_string(Algebra a) { return a == Algebra::PathAlgebra ? "path" : "preprojective"; }

Algebra algebra_from_string(const std::string& s) {
  if (s == "path" || s == "kQ" || s == "A") return Algebra::PathAlgebra;
  if (s == "preprojective" || s == "lambda" || s == "Lambda") return Algebra::Preprojective;
  argument_error("unknown algebra '" + s + "'");
}

std::vector<Arrow> algebra_arrows(const Quiver& q, Algebra alg) {
  if (alg == Algebra::PathAlgebra) return q.arrows();
  quiver::DoubleQuiver dq(q);
  std::vector<Arrow> out;
  for (std::size_t a = 0; a < dq.num_arrows(); ++a) out.push_back(dq.arrow(a));
  return out;
}

Rep::Rep(Unchecked, Quiver quiver, Algebra alg, std::uint32_t q, Dims dims, std::vector<Mat> maps)
    : quiver_(std::move(quiver)), alg_(alg), q_(q), dims_(std::move(dims)), maps_(std::move(maps)) {
  require(ffla::is_prime(q_), "Rep: q must be prime");
  require(dims_.size() == static_cast<std::size_t>(quiver_.num_vertices()), "Rep: dimension vector length mismatch");
  for (int d : dims_) require(d >= 0, "Rep: negative dimension");
  arrows_ = algebra_arrows(quiver_, alg_);
  require(maps_.size() == arrows_.size(), "Rep: one map per arrow required");
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const Mat& m = maps_[a];
    require(m.q() == q_, "Rep: map over the wrong field");
    require(m.rows() == static_cast<std::size_t>(dims_[arrows_[a].target - 1]) &&
                m.cols() == static_cast<std::size_t>(dims_[arrows_[a].source - 1]),
            "Rep: map shape must be dims[target] x dims[source]");
  }
}

Rep::Rep(Quiver quiver, Algebra alg, std::uint32_t q, Dims dims, std::vector<Mat> maps)
    : Rep(Unchecked{}, std::move(quiver), alg, q, std::move(dims), std::move(maps)) {
  require(satisfies_relations(*this), "Rep: preprojective relations violated");
  require(is_nilpotent(*this), "Rep: module is not nilpotent");
}

Rep Rep::unchecked(Quiver quiver, Algebra alg, std::uint32_t q, Dims dims, std::vector<Mat> maps) {
  return Rep(Unchecked{}, std::move(quiver), alg, q, std::move(dims), std::move(maps));
}

int Rep::total_dim() const {
  int s = 0;
  for (int d : dims_) s += d;
  return s;
}

int Rep::epsilon(std::size_t a) const {
  return alg_ == Algebra::PathAlgebra || a < quiver_.num_arrows() ? 1 : -1;
}

std::size_t Rep::bar(std::size_t a) const {
  require(alg_ == Algebra::Preprojective, "Rep::bar: path algebra has no reversed arrows");
  const std::size_t m = quiver_.num_arrows();
  return a < m ? a + m : a - m;
}

bool Rep::operator==(const Rep& o) const {
  return quiver_ == o.quiver_ && alg_ == o.alg_ && q_ == o.q_ && dims_ == o.dims_ && maps_ == o.maps_;
}

namespace {

std::size_t sz(int d) { return static_cast<std::size_t>(d); }

std::vector<Mat> zero_maps(const Quiver& quiver, Algebra alg, std::uint32_t q, const Dims& dims) {
  std::vector<Mat> maps;
  for (const auto& a : algebra_arrows(quiver, alg))
    maps.emplace_back(q, sz(dims[a.target - 1]), sz(dims[a.source - 1]));
  return maps;
}

void check_compatible(const Rep& a, const Rep& b, const char* what) {
  require(a.quiver() == b.quiver() && a.algebra() == b.algebra() && a.q() == b.q(),
          std::string(what) + ": modules over different algebras");
}

}  // namespace

Rep zero_rep(const Quiver& quiver, Algebra alg, std::uint32_t q) {
  Dims d(quiver.num_vertices(), 0);
  return Rep::unchecked(quiver, alg, q, d, zero_maps(quiver, alg, q, d));
}

Rep simple(const Quiver& quiver, Algebra alg, std::uint32_t q, int i) {
  require(i >= 1 && i <= quiver.num_vertices(), "simple: vertex out of range");
  Dims d(quiver.num_vertices(), 0);
  d[i - 1] = 1;
  return Rep::unchecked(quiver, alg, q, d, zero_maps(quiver, alg, q, d));
}

Rep direct_sum(const Rep& a, const Rep& b) {
  check_compatible(a, b, "direct_sum");
  Dims d(a.dims().size());
  for (std::size_t v = 0; v < d.size(); ++v) d[v] = a.dims()[v] + b.dims()[v];
  std::vector<Mat> maps;
  for (std::size_t k = 0; k < a.num_arrows(); ++k) {
    const Mat& x = a.map(k);
    const Mat& y = b.map(k);
    Mat m(a.q(), x.rows() + y.rows(), x.cols() + y.cols());
    m.set_block(0, 0, x);
    m.set_block(x.rows(), x.cols(), y);
    maps.push_back(std::move(m));
  }
  return Rep::unchecked(a.quiver(), a.algebra(), a.q(), d, std::move(maps));
}

Rep direct_power(const Rep& a, int k) {
  require(k >= 0, "direct_power: negative exponent");
  Rep r = zero_rep(a.quiver(), a.algebra(), a.q());
  for (int t = 0; t < k; ++t) r = direct_sum(r, a);
  return r;
}

Rep extension_I(const Quiver& quiver, std::uint32_t q, int j, int i) {
  require(i != j, "extension_I: vertices must differ");
  require(i >= 1 && j >= 1 && i <= quiver.num_vertices() && j <= quiver.num_vertices(),
          "extension_I: vertex out of range");
  const int a = quiver.adjacency(i, j);
  Dims d(quiver.num_vertices(), 0);
  d[i - 1] = a;
  d[j - 1] = 1;
  auto arrows = algebra_arrows(quiver, Algebra::Preprojective);
  std::vector<Mat> maps = zero_maps(quiver, Algebra::Preprojective, q, d);
  int l = 0;
  for (std::size_t k = 0; k < arrows.size(); ++k)
    if (arrows[k].source == i && arrows[k].target == j) maps[k](0, l++) = 1;
  return Rep(quiver, Algebra::Preprojective, q, d, std::move(maps));
}

bool satisfies_relations(const Rep& m) {
  if (m.algebra() == Algebra::PathAlgebra) return true;
  const int n = m.quiver().num_vertices();
  for (int i = 1; i <= n; ++i) {
    Mat s(m.q(), sz(m.dim(i)), sz(m.dim(i)));
    for (std::size_t a = 0; a < m.num_arrows(); ++a) {
      if (m.arrow(a).target != i) continue;
      Mat p = m.map(a) * m.map(m.bar(a));
      s = m.epsilon(a) > 0 ? s + p : s - p;
    }
    if (!s.is_zero()) return false;
  }
  return true;
}

std::vector<Dims> radical_layers(const Rep& m) {
  const int n = m.quiver().num_vertices();
  // spanning columns of J^k M at each vertex
  std::vector<Mat> w(n);
  for (int v = 0; v < n; ++v) w[v] = Mat::identity(m.q(), sz(m.dims()[v]));
  std::vector<Dims> layers;
  for (int step = 0; step <= m.total_dim() + 1; ++step) {
    Dims d(n);
    int total = 0;
    for (int v = 0; v < n; ++v) {
      d[v] = static_cast<int>(ffla::rank(w[v]));
      total += d[v];
    }
    layers.push_back(d);
    if (total == 0) break;
    std::vector<std::vector<Mat>> images(n);
    for (std::size_t a = 0; a < m.num_arrows(); ++a) {
      const auto& ar = m.arrow(a);
      images[ar.target - 1].push_back(m.map(a) * w[ar.source - 1]);
    }
    std::vector<Mat> next(n);
    for (int v = 0; v < n; ++v) {
      Mat cat = images[v].empty() ? Mat(m.q(), sz(m.dims()[v]), 0) : ffla::hstack(images[v], sz(m.dims()[v]));
      // keep an independent column set
      RrefResult r = ffla::rref(cat.transpose());
      next[v] = r.reduced.block(0, 0, r.rank, cat.rows()).transpose();
    }
    w = std::move(next);
  }
  return layers;
}

bool is_nilpotent(const Rep& m) {
  auto layers = radical_layers(m);
  for (int x : layers.back())
    if (x != 0) return false;
  return true;
}

HomSpace hom_space(const Rep& m, const Rep& n) {
  check_compatible(m, n, "hom_space");
  const int nv = m.quiver().num_vertices();
  const std::uint32_t q = m.q();
  std::vector<std::size_t> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + sz(n.dims()[v]) * sz(m.dims()[v]);
  const std::size_t unknowns = off[nv];
  HomSpace h;
  if (unknowns == 0) return h;
  std::size_t neq = 0;
  for (std::size_t a = 0; a < m.num_arrows(); ++a)
    neq += sz(n.dim(m.arrow(a).target)) * sz(m.dim(m.arrow(a).source));
  Mat eq(q, neq, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < m.num_arrows(); ++a) {
    const int s = m.arrow(a).source - 1, t = m.arrow(a).target - 1;
    const std::size_t ms = sz(m.dims()[s]), mt = sz(m.dims()[t]);
    const std::size_t ns = sz(n.dims()[s]), nt = sz(n.dims()[t]);
    const Mat& ma = m.map(a);
    const Mat& na = n.map(a);
    // phi_t M_a - N_a phi_s = 0, entry (r, c)
    for (std::size_t r = 0; r < nt; ++r)
      for (std::size_t c = 0; c < ms; ++c, ++row) {
        for (std::size_t k = 0; k < mt; ++k) {
          std::size_t var = off[t] + r * mt + k;
          eq(row, var) = (eq(row, var) + ma(k, c)) % q;
        }
        for (std::size_t k = 0; k < ns; ++k) {
          std::size_t var = off[s] + k * ms + c;
          eq(row, var) = (eq(row, var) + q - na(r, k)) % q;
        }
      }
  }
  Mat ker = ffla::kernel_basis(eq);
  for (std::size_t b = 0; b < ker.rows(); ++b) {
    Morphism f;
    for (int v = 0; v < nv; ++v) {
      const std::size_t rows = sz(n.dims()[v]), cols = sz(m.dims()[v]);
      Mat fv(q, rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) fv(r, c) = ker(b, off[v] + r * cols + c);
      f.push_back(std::move(fv));
    }
    h.basis.push_back(std::move(f));
  }
  return h;
}

std::size_t hom_dim(const Rep& m, const Rep& n) { return hom_space(m, n).dim(); }

Morphism combine(const HomSpace& h, const std::vector<std::uint32_t>& coeffs, const Rep& m, const Rep& n) {
  require(coeffs.size() == h.dim(), "combine: coefficient count mismatch");
  const int nv = m.quiver().num_vertices();
  const std::uint32_t q = m.q();
  Morphism f;
  for (int v = 0; v < nv; ++v) f.emplace_back(q, sz(n.dims()[v]), sz(m.dims()[v]));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (int v = 0; v < nv; ++v) f[v] = f[v] + h.basis[k][v].scaled(coeffs[k]);
  }
  return f;
}

bool is_homomorphism(const Rep& m, const Rep& n, const Morphism& f) {
  for (std::size_t a = 0; a < m.num_arrows(); ++a) {
    const int s = m.arrow(a).source - 1, t = m.arrow(a).target - 1;
    if (!(f[t] * m.map(a) == n.map(a) * f[s])) return false;
  }
  return true;
}

ExtDims ext_dims_lambda(const Rep& m, const Rep& n) {
  require(m.algebra() == Algebra::Preprojective && n.algebra() == Algebra::Preprojective,
          "ext_dims_lambda: preprojective modules required");
  check_compatible(m, n, "ext_dims_lambda");
  ExtDims e{};
  e.hom = static_cast<long long>(hom_dim(m, n));
  e.ext2 = static_cast<long long>(hom_dim(n, m));
  quiver::RootVec dm(m.dims().begin(), m.dims().end()), dn(n.dims().begin(), n.dims().end());
  e.ext1 = e.hom + e.ext2 - quiver::symmetric_form(m.quiver(), dm, dn);
  return e;
}

namespace {

bool rows_in_space(const Mat& rows, const RrefResult& space) {
  for (std::size_t r = 0; r < rows.rows(); ++r)
    if (!ffla::in_row_space(rows.row(r), space)) return false;
  return true;
}

}  // namespace

bool is_submodule(const Rep& l, const SubspaceTuple& u) {
  const int nv = l.quiver().num_vertices();
  if (u.size() != sz(nv)) return false;
  std::vector<RrefResult> rr;
  for (int v = 0; v < nv; ++v) {
    if (u[v].cols() != sz(l.dims()[v])) return false;
    rr.push_back(ffla::rref(u[v]));
    if (rr.back().rank != u[v].rows()) return false;
  }
  for (std::size_t a = 0; a < l.num_arrows(); ++a) {
    const int s = l.arrow(a).source - 1, t = l.arrow(a).target - 1;
    if (!rows_in_space(u[s] * l.map(a).transpose(), rr[t])) return false;
  }
  return true;
}

std::vector<SubspaceTuple> enumerate_submodules(const Rep& l, const Dims& dims, const Budget& budget) {
  const int nv = l.quiver().num_vertices();
  require(dims.size() == sz(nv), "enumerate_submodules: dimension vector length mismatch");
  std::vector<SubspaceTuple> out;
  for (int v = 0; v < nv; ++v)
    if (dims[v] < 0 || dims[v] > l.dims()[v]) return out;
  Integer product = 1;
  for (int v = 0; v < nv; ++v) product *= ffla::subspace_count(sz(l.dims()[v]), sz(dims[v]), l.q());
  if (product > budget.enumeration_cap)
    throw BudgetError("enumerate_submodules: " + product.str() + " subspace tuples exceed cap " +
                      std::to_string(budget.enumeration_cap));
  std::vector<std::vector<Mat>> cand(nv);
  std::vector<std::vector<RrefResult>> cand_rr(nv);
  for (int v = 0; v < nv; ++v) {
    cand[v] = ffla::enumerate_subspaces(sz(l.dims()[v]), sz(dims[v]), l.q(), budget.enumeration_cap);
    for (const auto& m : cand[v]) cand_rr[v].push_back(ffla::rref(m));
  }
  // arrows checked once both endpoints are chosen
  std::vector<std::vector<std::size_t>> check_at(nv);
  for (std::size_t a = 0; a < l.num_arrows(); ++a)
    check_at[std::max(l.arrow(a).source, l.arrow(a).target) - 1].push_back(a);
  std::vector<std::size_t> choice(nv, 0);
  SubspaceTuple current(nv);
  std::vector<const RrefResult*> cur_rr(nv, nullptr);
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == nv) {
      out.push_back(current);
      return;
    }
    for (std::size_t k = 0; k < cand[v].size(); ++k) {
      current[v] = cand[v][k];
      cur_rr[v] = &cand_rr[v][k];
      bool ok = true;
      for (std::size_t a : check_at[v]) {
        const int s = l.arrow(a).source - 1, t = l.arrow(a).target - 1;
        if (!rows_in_space(current[s] * l.map(a).transpose(), *cur_rr[t])) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, v + 1);
    }
  };
  dfs(dfs, 0);
  return out;
}

std::vector<SubspaceTuple> submodules_isomorphic_to(const Rep& l, const Rep& n, const Budget& budget) {
  check_compatible(l, n, "submodules_isomorphic_to");
  std::vector<SubspaceTuple> out;
  const Fingerprint fn = fingerprint(n);
  for (auto& u : enumerate_submodules(l, n.dims(), budget)) {
    Rep x = sub_to_rep(l, u);
    if (are_isomorphic(x, n, fingerprint(x), fn)) out.push_back(std::move(u));
  }
  return out;
}

Rep sub_to_rep(const Rep& l, const SubspaceTuple& u) {
  require(is_submodule(l, u), "sub_to_rep: subspace tuple is not closed under the arrows");
  const int nv = l.quiver().num_vertices();
  Dims d(nv);
  std::vector<std::vector<std::size_t>> piv(nv);
  for (int v = 0; v < nv; ++v) {
    d[v] = static_cast<int>(u[v].rows());
    piv[v] = ffla::rref(u[v]).pivots;
  }
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < l.num_arrows(); ++a) {
    const int s = l.arrow(a).source - 1, t = l.arrow(a).target - 1;
    Mat w = l.map(a) * u[s].transpose();  // columns: images of basis vectors
    Mat m(l.q(), sz(d[t]), sz(d[s]));
    for (std::size_t r = 0; r < sz(d[t]); ++r)
      for (std::size_t c = 0; c < sz(d[s]); ++c) m(r, c) = w(piv[t][r], c);
    maps.push_back(std::move(m));
  }
  return Rep::unchecked(l.quiver(), l.algebra(), l.q(), d, std::move(maps));
}

Rep quotient(const Rep& l, const SubspaceTuple& u) {
  require(is_submodule(l, u), "quotient: subspace tuple is not closed under the arrows");
  const int nv = l.quiver().num_vertices();
  Dims d(nv);
  std::vector<RrefResult> rr(nv);
  std::vector<std::vector<std::size_t>> comp(nv);
  for (int v = 0; v < nv; ++v) {
    rr[v] = ffla::rref(u[v]);
    std::vector<bool> is_piv(sz(l.dims()[v]), false);
    for (auto p : rr[v].pivots) is_piv[p] = true;
    for (std::size_t c = 0; c < is_piv.size(); ++c)
      if (!is_piv[c]) comp[v].push_back(c);
    d[v] = static_cast<int>(comp[v].size());
  }
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < l.num_arrows(); ++a) {
    const int s = l.arrow(a).source - 1, t = l.arrow(a).target - 1;
    Mat m(l.q(), sz(d[t]), sz(d[s]));
    for (std::size_t c = 0; c < comp[s].size(); ++c) {
      Mat col = l.map(a).block(0, comp[s][c], l.map(a).rows(), 1).transpose();
      Mat red = ffla::reduce_modulo(col, rr[t]);
      for (std::size_t r = 0; r < comp[t].size(); ++r) m(r, c) = red(0, comp[t][r]);
    }
    maps.push_back(std::move(m));
  }
  return Rep::unchecked(l.quiver(), l.algebra(), l.q(), d, std::move(maps));
}

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  auto list = [&os](const auto& v) {
    os << '(';
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    os << ')';
  };
  os << "d=";
  list(dims);
  os << ";end=" << end_dim << ";soc=";
  list(hom_from_simple);
  os << ";top=";
  list(hom_to_simple);
  os << ";rad=";
  for (std::size_t k = 1; k < radical.size(); ++k) {
    if (k > 1) os << '/';
    list(radical[k]);
  }
  return os.str();
}

Fingerprint fingerprint(const Rep& m) {
  Fingerprint f;
  f.dims = m.dims();
  f.end_dim = hom_dim(m, m);
  const int nv = m.quiver().num_vertices();
  for (int i = 1; i <= nv; ++i) {
    std::vector<Mat> out, in;
    for (std::size_t a = 0; a < m.num_arrows(); ++a) {
      if (m.arrow(a).source == i) out.push_back(m.map(a));
      if (m.arrow(a).target == i) in.push_back(m.map(a));
    }
    const std::size_t di = sz(m.dim(i));
    std::size_t rout = out.empty() ? 0 : ffla::rank(ffla::vstack(out, di));
    std::size_t rin = in.empty() ? 0 : ffla::rank(ffla::hstack(in, di));
    f.hom_from_simple.push_back(di - rout);
    f.hom_to_simple.push_back(di - rin);
  }
  f.radical = radical_layers(m);
  return f;
}

namespace {

// Sparse homogeneous polynomial over F_q; a monomial is a sorted multiset of
// variable indices packed 6 bits per factor.
using Poly = std::unordered_map<std::uint64_t, std::uint32_t>;

std::uint64_t times_var(std::uint64_t key, unsigned var) {
  std::vector<unsigned> f;
  for (std::uint64_t k = key; k; k >>= 6) f.push_back(static_cast<unsigned>(k & 63U) - 1);
  f.insert(std::upper_bound(f.begin(), f.end(), var), var);
  std::uint64_t r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = (r << 6) | (f[i] + 1);
  return r;
}

// Whether det(sum_j x_j A_j) is a nonzero polynomial.
bool generic_determinant_nonzero(const std::vector<Mat>& basis, std::size_t d, std::uint32_t q) {
  require(d <= 10 && basis.size() < 63, "generic determinant: matrix too large");
  const std::size_t full = (std::size_t{1} << d) - 1;
  std::vector<Poly> f(full + 1);
  f[0][0] = 1 % q;
  for (std::size_t mask = 0; mask < full; ++mask) {
    if (f[mask].empty()) continue;
    const std::size_t r = static_cast<std::size_t>(__builtin_popcountll(mask));
    for (std::size_t c = 0; c < d; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      const std::size_t above = static_cast<std::size_t>(__builtin_popcountll(mask >> (c + 1)));
      const std::uint32_t sign = (above % 2) ? q - 1 : 1;
      Poly& target = f[mask | (std::size_t{1} << c)];
      for (std::size_t j = 0; j < basis.size(); ++j) {
        std::uint64_t a = basis[j](r, c);
        if (a == 0) continue;
        a = (a * sign) % q;
        for (const auto& [key, coef] : f[mask]) {
          auto& slot = target[times_var(key, static_cast<unsigned>(j))];
          slot = static_cast<std::uint32_t>((slot + a * coef) % q);
        }
      }
      for (auto it = target.begin(); it != target.end();)
        it = it->second == 0 ? target.erase(it) : std::next(it);
    }
    f[mask].clear();
  }
  return !f[full].empty();
}

bool all_invertible(const Morphism& f) {
  for (const auto& m : f)
    if (m.rows() > 0 && ffla::determinant(m) == 0) return false;
  return true;
}

}  // namespace

bool are_isomorphic(const Rep& m, const Rep& n) {
  check_compatible(m, n, "are_isomorphic");
  if (m.dims() != n.dims()) return false;
  return are_isomorphic(m, n, fingerprint(m), fingerprint(n));
}

bool are_isomorphic(const Rep& m, const Rep& n, const Fingerprint& fm, const Fingerprint& fn) {
  check_compatible(m, n, "are_isomorphic");
  if (m.dims() != n.dims() || fm != fn) return false;
  if (m.is_zero()) return true;
  HomSpace h = hom_space(m, n);
  if (h.dim() == 0) return false;
  const std::uint32_t q = m.q();
  // A random element is usually invertible when M and N are isomorphic.
  std::mt19937 rng(0x5eedU);
  std::uniform_int_distribution<std::uint32_t> dist(0, q - 1);
  std::vector<std::uint32_t> c(h.dim());
  for (int trial = 0; trial < 16; ++trial) {
    for (auto& x : c) x = dist(rng);
    if (all_invertible(combine(h, c, m, n))) return true;
  }
  // Exact: M ~ N iff at every vertex the generic element of Hom is invertible
  // (an isomorphism over the algebraic closure descends to F_q).
  const int nv = m.quiver().num_vertices();
  for (int v = 0; v < nv; ++v) {
    const std::size_t d = sz(m.dims()[v]);
    if (d == 0) continue;
    Mat flat(q, h.dim(), d * d);
    for (std::size_t k = 0; k < h.dim(); ++k)
      for (std::size_t e = 0; e < d * d; ++e) flat(k, e) = h.basis[k][v].data()[e];
    RrefResult r = ffla::rref(flat);
    std::vector<Mat> span;
    for (std::size_t k = 0; k < r.rank; ++k) {
      Mat b(q, d, d);
      for (std::size_t e = 0; e < d * d; ++e) b(e / d, e % d) = r.reduced(k, e);
      span.push_back(std::move(b));
    }
    if (span.empty() || !generic_determinant_nonzero(span, d, q)) return false;
  }
  return true;
}

Integer aut_count(const Rep& m, const Budget& budget) {
  if (m.is_zero()) return 1;
  HomSpace h = hom_space(m, m);
  checked_power(m.q(), h.dim(), budget.enumeration_cap, "aut_count");
  std::vector<std::uint32_t> c(h.dim(), 0);
  Integer count = 0;
  do {
    if (all_invertible(combine(h, c, m, m))) ++count;
  } while (ffla::odometer_step(c, m.q()));
  return count;
}

namespace {

enum class EndKind { Nilpotent, Unit, Mixed };

EndKind classify(const Morphism& f) {
  bool all_unit = true, all_nil = true;
  for (const auto& x : f) {
    if (x.rows() == 0) continue;
    if (ffla::determinant(x) == 0) all_unit = false;
    Mat p = x;
    for (std::size_t k = 1; k < x.rows(); ++k) p = p * x;
    if (!p.is_zero()) all_nil = false;
  }
  if (all_unit) return EndKind::Unit;
  if (all_nil) return EndKind::Nilpotent;
  return EndKind::Mixed;
}

}  // namespace

bool is_indecomposable(const Rep& m, const Budget& budget) {
  if (m.is_zero()) return false;
  HomSpace h = hom_space(m, m);
  if (h.dim() == 1) return true;
  // cheap witnesses first: basis elements and their pairwise sums
  for (std::size_t a = 0; a < h.dim(); ++a) {
    if (classify(h.basis[a]) == EndKind::Mixed) return false;
    for (std::size_t b = a + 1; b < h.dim(); ++b) {
      Morphism s = h.basis[a];
      for (std::size_t v = 0; v < s.size(); ++v) s[v] = s[v] + h.basis[b][v];
      if (classify(s) == EndKind::Mixed) return false;
    }
  }
  checked_power(m.q(), h.dim(), budget.enumeration_cap, "is_indecomposable");
  std::vector<std::uint32_t> c(h.dim(), 0);
  while (ffla::odometer_step(c, m.q()))
    if (classify(combine(h, c, m, m)) == EndKind::Mixed) return false;
  return true;
}

int end_residue_degree(const Rep& m, const Budget& budget) {
  require(is_indecomposable(m, budget), "end_residue_degree: indecomposable module required");
  const std::size_t e = hom_dim(m, m);
  Integer nonunits = Integer(1);
  for (std::size_t k = 0; k < e; ++k) nonunits *= m.q();
  nonunits -= aut_count(m, budget);
  int log = 0;
  while (nonunits > 1) {
    require(nonunits % m.q() == 0, "end_residue_degree: radical size is not a power of q");
    nonunits /= m.q();
    ++log;
  }
  return static_cast<int>(e) - log;
}

std::optional<Rep> restrict_to_path_algebra(const Rep& m) {
  if (m.algebra() == Algebra::PathAlgebra) return m;
  const std::size_t k = m.quiver().num_arrows();
  for (std::size_t a = k; a < 2 * k; ++a)
    if (!m.map(a).is_zero()) return std::nullopt;
  std::vector<Mat> maps(m.maps().begin(), m.maps().begin() + static_cast<std::ptrdiff_t>(k));
  return Rep::unchecked(m.quiver(), Algebra::PathAlgebra, m.q(), m.dims(), std::move(maps));
}

Rep lift_to_preprojective(const Rep& m) {
  require(m.algebra() == Algebra::PathAlgebra, "lift_to_preprojective: path-algebra module required");
  std::vector<Mat> maps = m.maps();
  for (const auto& a : m.quiver().arrows())
    maps.emplace_back(m.q(), sz(m.dim(a.source)), sz(m.dim(a.target)));
  return Rep::unchecked(m.quiver(), Algebra::Preprojective, m.q(), m.dims(), std::move(maps));
}

nlohmann::json to_json(const Rep& m) {
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& a : m.quiver().arrows()) arrows.push_back({a.source, a.target});
  nlohmann::json maps = nlohmann::json::array();
  for (const auto& x : m.maps()) maps.push_back(x.flat());
  return {{"algebra", to_string(m.algebra())},
          {"q", m.q()},
          {"quiver", {{"vertices", m.quiver().num_vertices()}, {"arrows", arrows}}},
          {"dims", m.dims()},
          {"maps", maps}};
}

Rep rep_from_json(const nlohmann::json& j) {
  try {
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("quiver").at("arrows")) arrows.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
    Quiver quiver(j.at("quiver").at("vertices").get<int>(), arrows);
    Algebra alg = algebra_from_string(j.at("algebra").get<std::string>());
    auto q = j.at("q").get<std::uint32_t>();
    auto dims = j.at("dims").get<Dims>();
    require(dims.size() == sz(quiver.num_vertices()), "rep_from_json: dims length mismatch");
    auto arr = algebra_arrows(quiver, alg);
    const auto& jm = j.at("maps");
    require(jm.size() == arr.size(), "rep_from_json: wrong number of maps");
    std::vector<Mat> maps;
    for (std::size_t a = 0; a < arr.size(); ++a)
      maps.push_back(Mat::from_flat(q, sz(dims[arr[a].target - 1]), sz(dims[arr[a].source - 1]),
                                    jm[a].get<std::vector<long long>>()));
    return Rep(quiver, alg, q, dims, std::move(maps));
  } catch (const nlohmann::json::exception& e) {
    argument_error(std::string("rep_from_json: ") + e.what());
  }
}

std::vector<ModuleClass> all_modules_of_dim(const Quiver& quiver, Algebra alg, std::uint32_t q, const Dims& d,
                                            const Budget& budget) {
  require(ffla::is_prime(q), "all_modules_of_dim: q must be prime");
  require(d.size() == sz(quiver.num_vertices()), "all_modules_of_dim: dimension vector length mismatch");
  int total = 0;
  for (int x : d) total += x;
  if (total > budget.max_total_dim || q > budget.max_q)
    throw BudgetError("all_modules_of_dim: total dimension " + std::to_string(total) + " or q " +
                      std::to_string(q) + " beyond configured caps");
  auto arrows = algebra_arrows(quiver, alg);
  std::size_t entries = 0;
  for (const auto& a : arrows) entries += sz(d[a.target - 1]) * sz(d[a.source - 1]);
  checked_power(q, entries, budget.enumeration_cap, "all_modules_of_dim");
  std::vector<ModuleClass> classes;
  std::vector<Fingerprint> fps;
  std::map<Fingerprint, std::vector<std::size_t>> buckets;
  std::vector<std::uint32_t> digits(entries, 0);
  do {
    std::vector<Mat> maps;
    std::size_t k = 0;
    for (const auto& a : arrows) {
      Mat m(q, sz(d[a.target - 1]), sz(d[a.source - 1]));
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = digits[k++];
      maps.push_back(std::move(m));
    }
    Rep cand = Rep::unchecked(quiver, alg, q, d, std::move(maps));
    if (!satisfies_relations(cand) || !is_nilpotent(cand)) continue;
    Fingerprint fp = fingerprint(cand);
    auto& bucket = buckets[fp];
    bool found = false;
    for (std::size_t idx : bucket)
      if (are_isomorphic(classes[idx].rep, cand, fps[idx], fp)) {
        ++classes[idx].raw_count;
        found = true;
        break;
      }
    if (!found) {
      bucket.push_back(classes.size());
      classes.push_back({std::move(cand), 1});
      fps.push_back(std::move(fp));
    }
  } while (ffla::odometer_step(digits, q));
  return classes;
}

namespace {

struct ExtensionData {
  std::vector<std::size_t> off;  // offset of xi_a in the unknown vector
  std::size_t unknowns = 0;
  Mat complement;                // rows: cocycles spanning a complement of the coboundaries
};

ExtensionData extension_data(const Rep& m, const Rep& n) {
  check_compatible(m, n, "extensions");
  const std::uint32_t q = m.q();
  const int nv = m.quiver().num_vertices();
  ExtensionData ed;
  ed.off.assign(m.num_arrows() + 1, 0);
  for (std::size_t a = 0; a < m.num_arrows(); ++a)
    ed.off[a + 1] = ed.off[a] + sz(n.dim(m.arrow(a).target)) * sz(m.dim(m.arrow(a).source));
  ed.unknowns = ed.off.back();
  if (ed.unknowns == 0) {
    ed.complement = Mat(q, 0, 0);
    return ed;
  }
  auto xi = [&](std::size_t a, std::size_t r, std::size_t c) {
    return ed.off[a] + r * sz(m.dim(m.arrow(a).source)) + c;
  };
  // cocycles
  Mat z;
  if (m.algebra() == Algebra::PathAlgebra) {
    z = Mat::identity(q, ed.unknowns);
  } else {
    std::size_t neq = 0;
    for (int i = 1; i <= nv; ++i) neq += sz(n.dim(i)) * sz(m.dim(i));
    Mat eq(q, neq, ed.unknowns);
    std::size_t row0 = 0;
    for (int i = 1; i <= nv; ++i) {
      const std::size_t ni = sz(n.dim(i)), mi = sz(m.dim(i));
      for (std::size_t a = 0; a < m.num_arrows(); ++a) {
        if (m.arrow(a).target != i) continue;
        const std::size_t ab = m.bar(a);
        const std::uint32_t eps = m.epsilon(a) > 0 ? 1 : q - 1;
        const std::size_t ns = sz(n.dim(m.arrow(a).source)), ms = sz(m.dim(m.arrow(a).source));
        for (std::size_t r = 0; r < ni; ++r)
          for (std::size_t c = 0; c < mi; ++c) {
            const std::size_t row = row0 + r * mi + c;
            // N_a xi_abar
            for (std::size_t k = 0; k < ns; ++k) {
              std::uint64_t coef = (static_cast<std::uint64_t>(n.map(a)(r, k)) * eps) % q;
              std::size_t var = xi(ab, k, c);
              eq(row, var) = static_cast<std::uint32_t>((eq(row, var) + coef) % q);
            }
            // xi_a M_abar
            for (std::size_t k = 0; k < ms; ++k) {
              std::uint64_t coef = (static_cast<std::uint64_t>(m.map(ab)(k, c)) * eps) % q;
              std::size_t var = xi(a, r, k);
              eq(row, var) = static_cast<std::uint32_t>((eq(row, var) + coef) % q);
            }
          }
      }
      row0 += ni * mi;
    }
    z = ffla::kernel_basis(eq);
  }
  // coboundaries: xi_a = f_t M_a - N_a f_s
  std::vector<std::size_t> foff(nv + 1, 0);
  for (int v = 0; v < nv; ++v) foff[v + 1] = foff[v] + sz(n.dims()[v]) * sz(m.dims()[v]);
  Mat dmat(q, foff[nv], ed.unknowns);  // row per f unknown: its image
  for (std::size_t a = 0; a < m.num_arrows(); ++a) {
    const int s = m.arrow(a).source - 1, t = m.arrow(a).target - 1;
    const std::size_t ms = sz(m.dims()[s]), mt = sz(m.dims()[t]), ns = sz(n.dims()[s]), nt = sz(n.dims()[t]);
    for (std::size_t r = 0; r < nt; ++r)
      for (std::size_t c = 0; c < ms; ++c) {
        const std::size_t col = xi(a, r, c);
        for (std::size_t k = 0; k < mt; ++k) {
          std::size_t fv = foff[t] + r * mt + k;
          dmat(fv, col) = (dmat(fv, col) + m.map(a)(k, c)) % q;
        }
        for (std::size_t k = 0; k < ns; ++k) {
          std::size_t fv = foff[s] + k * ms + c;
          dmat(fv, col) = (dmat(fv, col) + q - n.map(a)(r, k)) % q;
        }
      }
  }
  RrefResult acc = ffla::rref(dmat);
  Mat basis = acc.reduced.block(0, 0, acc.rank, ed.unknowns);
  std::vector<Mat> chosen;
  for (std::size_t k = 0; k < z.rows(); ++k) {
    Mat zr = z.row(k);
    if (ffla::in_row_space(zr, acc)) continue;
    chosen.push_back(zr);
    basis = ffla::vstack({basis, zr}, ed.unknowns);
    acc = ffla::rref(basis);
    basis = acc.reduced.block(0, 0, acc.rank, ed.unknowns);
  }
  ed.complement = chosen.empty() ? Mat(q, 0, ed.unknowns) : ffla::vstack(chosen, ed.unknowns);
  return ed;
}

}  // namespace

std::size_t ext1_dim(const Rep& m, const Rep& n) { return extension_data(m, n).complement.rows(); }

std::vector<Rep> extension_middle_terms(const Rep& m, const Rep& n, const Budget& budget) {
  ExtensionData ed = extension_data(m, n);
  const std::uint32_t q = m.q();
  const int nv = m.quiver().num_vertices();
  const std::size_t c = ed.complement.rows();
  checked_power(q, c, budget.enumeration_cap, "extension_middle_terms");
  Dims d(nv);
  for (int v = 0; v < nv; ++v) d[v] = n.dims()[v] + m.dims()[v];
  std::vector<Rep> out;
  std::vector<std::uint32_t> coeffs(c, 0);
  do {
    std::vector<std::uint32_t> x(ed.unknowns, 0);
    for (std::size_t k = 0; k < c; ++k) {
      if (coeffs[k] == 0) continue;
      for (std::size_t u = 0; u < ed.unknowns; ++u)
        x[u] = static_cast<std::uint32_t>((x[u] + static_cast<std::uint64_t>(coeffs[k]) * ed.complement(k, u)) % q);
    }
    std::vector<Mat> maps;
    for (std::size_t a = 0; a < m.num_arrows(); ++a) {
      const int s = m.arrow(a).source - 1, t = m.arrow(a).target - 1;
      const std::size_t ns = sz(n.dims()[s]), nt = sz(n.dims()[t]), ms = sz(m.dims()[s]);
      Mat l(q, sz(d[t]), sz(d[s]));
      l.set_block(0, 0, n.map(a));
      l.set_block(nt, ns, m.map(a));
      for (std::size_t r = 0; r < nt; ++r)
        for (std::size_t cc = 0; cc < ms; ++cc) l(r, ns + cc) = x[ed.off[a] + r * ms + cc];
      maps.push_back(std::move(l));
    }
    out.push_back(Rep::unchecked(m.quiver(), m.algebra(), q, d, std::move(maps)));
  } while (ffla::odometer_step(coeffs, q));
  return out;
}

}  // namespace preproj::rep
