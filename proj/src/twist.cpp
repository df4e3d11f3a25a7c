#include "preproj/twist.hpp"

#include <functional>
#include <optional>
#include <sstream>

namespace preproj::twist {

namespace {

using ffla::Mat;
using rep::Dims;

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

void require_preprojective(const Rep& m, const std::string& who) {
  require(m.algebra() == rep::Algebra::Preprojective, who + ": needs a preprojective module");
}

/// Arrows leaving i, with offsets of their targets inside W.
struct Neighbourhood {
  std::vector<std::size_t> out;
  std::vector<std::size_t> offset;
  std::size_t w = 0;
};

Neighbourhood neighbourhood(int i, const Rep& m) {
  Neighbourhood nb;
  for (std::size_t a = 0; a < m.num_arrows(); ++a) {
    if (m.arrow(a).source != i) continue;
    nb.out.push_back(a);
    nb.offset.push_back(nb.w);
    nb.w += sz(m.dim(m.arrow(a).target));
  }
  return nb;
}

/// W -> M_i assembled from the reversed arrows.
Mat in_map(int i, const Rep& m, const Neighbourhood& nb) {
  Mat b(m.q(), sz(m.dim(i)), nb.w);
  for (std::size_t k = 0; k < nb.out.size(); ++k) b.set_block(0, nb.offset[k], m.map(m.bar(nb.out[k])));
  return b;
}

/// M_i -> W with the signs of the outgoing arrows.
Mat out_map(int i, const Rep& m, const Neighbourhood& nb) {
  Mat a(m.q(), nb.w, sz(m.dim(i)));
  for (std::size_t k = 0; k < nb.out.size(); ++k) {
    const Mat& h = m.map(nb.out[k]);
    a.set_block(nb.offset[k], 0, m.epsilon(nb.out[k]) > 0 ? h : -h);
  }
  return a;
}

Mat random_invertible(std::mt19937_64& rng, std::uint32_t q, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> dist(0, q - 1);
  for (;;) {
    Mat g(q, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) g(r, c) = dist(rng);
    if (ffla::is_invertible(g)) return g;
  }
}

Rep conjugate(const Rep& m, std::mt19937_64& rng) {
  std::vector<Mat> g, ginv;
  for (int v = 1; v <= m.quiver().num_vertices(); ++v) {
    g.push_back(random_invertible(rng, m.q(), sz(m.dim(v))));
    ginv.push_back(*ffla::inverse(g.back()));
  }
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < m.num_arrows(); ++a)
    maps.push_back(g[sz(m.arrow(a).target - 1)] * m.map(a) * ginv[sz(m.arrow(a).source - 1)]);
  return Rep(m.quiver(), m.algebra(), m.q(), m.dims(), std::move(maps));
}

std::string dims_string(const Dims& d) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < d.size(); ++k) os << (k ? "," : "") << d[k];
  os << ')';
  return os.str();
}

}  // namespace

int head_dim(int i, const Rep& m) {
  require_preprojective(m, "head_dim");
  require(i >= 1 && i <= m.quiver().num_vertices(), "head_dim: vertex out of range");
  const Neighbourhood nb = neighbourhood(i, m);
  if (m.dim(i) == 0 || nb.w == 0) return m.dim(i);
  return m.dim(i) - static_cast<int>(ffla::rank(in_map(i, m, nb)));
}

RCObject twist_simple(int i, const RCObject& x, catalog::Catalog& cat) {
  require(x.kind == RCObject::Kind::Module, "twist_simple: expects S_j or S_j[1]");
  const Dims& d = cat.dims(x.handle);
  int j = 0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] == 0) continue;
    require(d[k] == 1 && j == 0, "twist_simple: expects S_j or S_j[1]");
    j = static_cast<int>(k) + 1;
  }
  require(j != 0, "twist_simple: expects S_j or S_j[1]");
  if (i == j) return RCObject::module(x.handle, 1 - x.parity);
  return RCObject::module(cat.intern(rep::extension_I(cat.quiver(), cat.q(), j, i)), x.parity);
}

Rep reflect_module(int i, const Rep& m) {
  require_preprojective(m, "reflect_module");
  require(i >= 1 && i <= m.quiver().num_vertices(), "reflect_module: vertex out of range");
  const std::uint32_t q = m.q();
  const Neighbourhood nb = neighbourhood(i, m);
  const Mat b = in_map(i, m, nb);
  const Mat a = out_map(i, m, nb);

  // RREF basis of ker b; coordinates of a kernel vector are its pivot entries
  std::size_t k = 0;
  Mat kappa(q, 0, nb.w);
  std::vector<std::size_t> pivots;
  if (nb.w > 0) {
    const Mat ker = ffla::kernel_basis(b);
    if (ker.rows() > 0) {
      const ffla::RrefResult r = ffla::rref(ker);
      k = r.rank;
      kappa = r.reduced.block(0, 0, k, nb.w);
      pivots = r.pivots;
    }
  }
  const Mat ab = nb.w > 0 && m.dim(i) > 0 ? a * b : Mat(q, nb.w, nb.w);
  const Mat kappa_t = kappa.transpose();

  Dims dims = m.dims();
  dims[sz(i - 1)] = static_cast<int>(k);
  std::vector<Mat> maps;
  for (std::size_t e = 0; e < m.num_arrows(); ++e) {
    const auto& arr = m.arrow(e);
    if (arr.source == i) {
      std::size_t idx = 0;
      while (nb.out[idx] != e) ++idx;
      const Mat blk = kappa_t.block(nb.offset[idx], 0, sz(m.dim(arr.target)), k);
      maps.push_back(m.epsilon(e) > 0 ? blk : -blk);
    } else if (arr.target == i) {
      const std::size_t h = m.bar(e);
      std::size_t idx = 0;
      while (nb.out[idx] != h) ++idx;
      const std::size_t cols = sz(m.dim(arr.source));
      Mat out(q, k, cols);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < cols; ++c) out(r, c) = ab(pivots[r], nb.offset[idx] + c);
      maps.push_back(out);
    } else {
      maps.push_back(m.map(e));
    }
  }
  return Rep(m.quiver(), m.algebra(), q, dims, std::move(maps));
}

bool ReflectContracts::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::string ReflectContracts::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < checks.size(); ++k) {
    if (k) os << "; ";
    os << '(' << k + 1 << ") " << (!checks[k].applicable ? "n/a" : checks[k].ok ? "ok" : "FAIL");
    if (!checks[k].detail.empty()) os << ' ' << checks[k].detail;
  }
  return os.str();
}

ReflectContracts check_reflect_contracts(int i, const Rep& m, std::mt19937_64& rng) {
  ReflectContracts out;
  auto& [c1, c2, c3, c4, c5] = out.checks;
  const Quiver& qv = m.quiver();

  std::optional<Rep> s;
  c3.applicable = true;
  try {
    s = reflect_module(i, m);
    c3.ok = rep::satisfies_relations(*s) && rep::is_nilpotent(*s);
  } catch (const std::invalid_argument& e) {
    c3.ok = false;
    c3.detail = e.what();
  }
  if (!s) {
    for (auto* c : {&c1, &c2, &c4}) c->ok = false;
    return out;
  }

  if (head_dim(i, m) == 0) {
    c1.applicable = true;
    const quiver::RootVec want = quiver::reflection(qv, i, quiver::RootVec(m.dims().begin(), m.dims().end()));
    c1.ok = quiver::RootVec(s->dims().begin(), s->dims().end()) == want;
    if (!c1.ok) c1.detail = "got " + dims_string(s->dims());
  }

  for (int j = 1; j <= qv.num_vertices(); ++j) {
    if (j == i) continue;
    Dims d(sz(qv.num_vertices()), 0);
    d[sz(j - 1)] = 1;
    if (m.dims() != d) continue;
    c2.applicable = true;
    c2.ok = rep::are_isomorphic(*s, rep::extension_I(qv, m.q(), j, i));
  }

  c4.applicable = true;
  c4.ok = rep::are_isomorphic(*s, reflect_module(i, conjugate(m, rng)));

  c5.applicable = true;
  const long long v0 = static_cast<long long>(rep::hom_dim(rep::simple(qv, m.algebra(), m.q(), i), m));
  const long long v1 = static_cast<long long>(rep::ext1_dim(rep::simple(qv, m.algebra(), m.q(), i), m));
  const long long ker = s->dim(i);
  c5.ok = v1 + m.dim(i) - v0 == ker;
  if (!c5.ok)
    c5.detail = "v1=" + std::to_string(v1) + " v0=" + std::to_string(v0) + " ker=" + std::to_string(ker);
  return out;
}

IntMatrix twist_k0_matrix(const Quiver& quiver, int i) {
  require(i >= 1 && i <= quiver.num_vertices(), "twist_k0_matrix: vertex out of range");
  catalog::Catalog cat(quiver, rep::Algebra::Preprojective, 2);
  const std::size_t n = sz(quiver.num_vertices());
  IntMatrix t(n, n);
  for (int j = 1; j <= quiver.num_vertices(); ++j) {
    const RCObject image = twist_simple(i, RCObject::module(cat.simple(j)), cat);
    const Dims& d = cat.dims(image.handle);
    for (std::size_t r = 0; r < n; ++r) t(r, sz(j - 1)) = image.parity == 0 ? d[r] : -d[r];
  }
  return t;
}

IntMatrix twist_word_k0(const Quiver& quiver, const std::vector<int>& word) {
  IntMatrix m = IntMatrix::identity(sz(quiver.num_vertices()));
  for (int i : word) m = m * twist_k0_matrix(quiver, i);
  return m;
}

IntMatrix weyl_image(const Quiver& quiver, const std::vector<int>& word) {
  return quiver::weyl_word_matrix(quiver, word);
}

bool epsilon_surjectivity_check(const Quiver& quiver) {
  for (int i = 1; i <= quiver.num_vertices(); ++i)
    if (!(twist_word_k0(quiver, {i}) == quiver::reflection_matrix(quiver, i) &&
          weyl_image(quiver, {i}) == quiver::reflection_matrix(quiver, i)))
      return false;
  return true;
}

PhiReport phi_f_invariance(int i, const std::vector<Triple>& triples, const Budget& budget) {
  PhiReport out;
  for (const auto& [x, y, l] : triples) {
    require(head_dim(i, x) == 0 && head_dim(i, y) == 0 && head_dim(i, l) == 0,
            "phi_f_invariance: inputs must have zero i-head");
    const Integer before = rootcat::triangle_count_R(x, y, l, budget);
    const Integer after =
        rootcat::triangle_count_R(reflect_module(i, x), reflect_module(i, y), reflect_module(i, l), budget);
    ++out.checked;
    if (before != after) {
      std::ostringstream os;
      os << "dims " << dims_string(x.dims()) << ", " << dims_string(y.dims()) << ", " << dims_string(l.dims())
         << ": " << before << " != " << after;
      out.violations.push_back(os.str());
    }
  }
  return out;
}

std::vector<Triple> phi_f_sample(catalog::Catalog& cat, int i, int max_total) {
  const Quiver& qv = cat.quiver();
  const std::size_t n = sz(qv.num_vertices());
  std::vector<Triple> out;
  const Rep zero = cat.rep(cat.zero());
  out.push_back({zero, zero, zero});

  std::vector<Dims> all;
  Dims d(n, 0);
  std::function<void(std::size_t, int)> visit = [&](std::size_t k, int left) {
    if (k == n) {
      int total = 0;
      for (int x : d) total += x;
      if (total > 0) all.push_back(d);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      d[k] = x;
      visit(k + 1, left - x);
    }
    d[k] = 0;
  };
  visit(0, max_total);

  auto zero_head = [&](catalog::Handle h) { return head_dim(i, cat.rep(h)) == 0; };
  std::vector<catalog::Handle> inds;
  for (const auto& dv : all)
    for (auto h : cat.classes_of_dim(dv))
      if (cat.is_indecomposable(h) && zero_head(h)) inds.push_back(h);
  for (auto hx : inds)
    for (auto hy : inds) {
      Dims dl = cat.dims(hx);
      int total = 0;
      for (std::size_t k = 0; k < n; ++k) total += (dl[k] += cat.dims(hy)[k]);
      if (total > max_total) continue;
      for (auto hl : cat.classes_of_dim(dl))
        if (zero_head(hl)) out.push_back({cat.rep(hx), cat.rep(hy), cat.rep(hl)});
    }
  return out;
}

}  // namespace preproj::twist
