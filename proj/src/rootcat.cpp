#include "preproj/rootcat.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "preproj/hall.hpp"
#include "preproj/modspan.hpp"

namespace preproj::rootcat {

namespace {

Integer mod_nonneg(const Integer& x, const Integer& m) {
  Integer r = x % m;
  return r < 0 ? Integer(r + m) : r;
}

Integer power(std::uint32_t q, std::size_t e) {
  Integer r = 1;
  for (std::size_t k = 0; k < e; ++k) r *= q;
  return r;
}

RootVec to_root(const Dims& d) { return RootVec(d.begin(), d.end()); }

std::optional<int> simple_vertex(const Dims& d) {
  std::optional<int> v;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] == 0) continue;
    if (d[k] != 1 || v) return std::nullopt;
    v = static_cast<int>(k) + 1;
  }
  return v;
}

void require_zero_or_indecomposable(const Rep& m, const std::string& role) {
  if (m.is_zero()) return;
  require(rep::is_indecomposable(m), "triangle_count_R: " + role + " must be indecomposable");
}

}  // namespace

RCObject RCObject::module(Handle h, int parity) {
  require(parity == 0 || parity == 1, "RCObject: parity must be 0 or 1");
  RCObject x;
  x.kind = Kind::Module;
  x.handle = h;
  x.parity = parity;
  return x;
}

RCObject RCObject::tube(int vertex, long long n) {
  require(n != 0, "RCObject: tube index must be nonzero");
  require(n != 1 && n != -1, "RCObject: Tube(i, +-1) is S_i or S_i[1]; use the module form");
  RCObject x;
  x.kind = Kind::Tube;
  x.vertex = vertex;
  x.n = n;
  return x;
}

Symbol Symbol::h(int i) {
  Symbol s;
  s.is_h = true;
  s.vertex = i;
  return s;
}

Symbol Symbol::u(RCObject x) {
  Symbol s;
  s.object = x;
  return s;
}

LieElement LieElement::of(Symbol s, std::optional<Integer> modulus) {
  LieElement e;
  e.modulus = std::move(modulus);
  e.add(s, 1);
  return e;
}

void LieElement::add(const Symbol& s, const Integer& c) {
  Integer v = coeff(s) + c;
  if (modulus) v = mod_nonneg(v, *modulus);
  if (v == 0)
    terms.erase(s);
  else
    terms[s] = v;
}

Integer LieElement::coeff(const Symbol& s) const {
  auto it = terms.find(s);
  return it == terms.end() ? Integer(0) : it->second;
}

LieElement operator+(const LieElement& a, const LieElement& b) {
  require(a.modulus == b.modulus, "LieElement: modulus mismatch");
  LieElement r = a;
  for (const auto& [s, c] : b.terms) r.add(s, c);
  return r;
}

LieElement operator-(const LieElement& a, const LieElement& b) { return a + scale(-1, b); }

LieElement scale(const Integer& s, const LieElement& a) {
  LieElement r;
  r.modulus = a.modulus;
  for (const auto& [k, c] : a.terms) r.add(k, s * c);
  return r;
}

long long sym_form_R(const Quiver& quiver, const RootVec& x, const RootVec& y) {
  return quiver::symmetric_form(quiver, x, y);
}

TriangleCount triangle_count_report(const Rep& m, const Rep& n, const Rep& l, const Budget& budget) {
  require(m.quiver() == l.quiver() && n.quiver() == l.quiver(), "triangle_count_R: quiver mismatch");
  require(m.algebra() == l.algebra() && n.algebra() == l.algebra(), "triangle_count_R: algebra mismatch");
  require(m.q() == l.q() && n.q() == l.q(), "triangle_count_R: field mismatch");
  require_zero_or_indecomposable(m, "M");
  require_zero_or_indecomposable(n, "N");
  TriangleCount out;
  for (std::size_t v = 0; v < l.dims().size(); ++v)
    if (m.dims()[v] + n.dims()[v] != l.dims()[v]) {
      out.value = 0;
      out.module_side = 0;
      if (l.algebra() == Algebra::Preprojective) out.closed_form = Rational(0);
      return out;
    }
  const rep::Fingerprint fm = rep::fingerprint(m);
  std::vector<rep::SubspaceTuple> subs;
  for (auto& u : rep::submodules_isomorphic_to(l, n, budget)) {
    Rep y = rep::quotient(l, u);
    if (rep::are_isomorphic(y, m, rep::fingerprint(y), fm)) subs.push_back(std::move(u));
  }
  out.module_side = subs.size();
  if (l.algebra() == Algebra::PathAlgebra) {
    out.value = out.module_side;
    return out;
  }
  const rep::HomSpace hom = rep::hom_space(l, n);
  Integer value = 0;
  for (const auto& u : subs) {
    std::vector<std::vector<long long>> rows;
    for (const auto& f : hom.basis) {
      std::vector<long long> row;
      for (std::size_t v = 0; v < f.size(); ++v) {
        if (u[v].rows() == 0 || f[v].rows() == 0) continue;
        const auto flat = (f[v] * u[v].transpose()).flat();
        row.insert(row.end(), flat.begin(), flat.end());
      }
      rows.push_back(std::move(row));
    }
    std::size_t rk = 0;
    if (!rows.empty() && !rows.front().empty())
      rk = ffla::rank(ffla::Mat::from_rows(l.q(), rows));
    value += power(l.q(), hom.dim() - rk);
  }
  out.value = value;
  const long long e_nl = rep::ext_dims_lambda(n, l).ext2, e_nn = rep::ext_dims_lambda(n, n).ext2;
  Rational cf(out.module_side);
  const long long e = e_nl - e_nn;
  if (e >= 0)
    cf *= Rational(power(l.q(), static_cast<std::size_t>(e)));
  else
    cf /= Rational(power(l.q(), static_cast<std::size_t>(-e)));
  out.closed_form = cf;
  return out;
}

Integer triangle_count_R(const Rep& m, const Rep& n, const Rep& l, const Budget& budget) {
  return triangle_count_report(m, n, l, budget).value;
}

RootCategory::RootCategory(Quiver quiver, Algebra alg, std::uint32_t q, bool reduce, Budget budget)
    : cat_(std::move(quiver), alg, q, budget) {
  if (reduce) {
    require(q >= 3, "RootCategory: reduction mod (q-1) needs q >= 3");
    modulus_ = Integer(q - 1);
  }
}

RCObject RootCategory::simple(int i, int parity) { return RCObject::module(cat_.simple(i), parity); }

RootVec RootCategory::k0_class(const RCObject& x) const {
  const int nv = cat_.quiver().num_vertices();
  if (x.kind == RCObject::Kind::Tube) {
    RootVec r(static_cast<std::size_t>(nv), 0);
    if (x.n % 2 != 0) r.at(static_cast<std::size_t>(x.vertex - 1)) = x.n > 0 ? 1 : -1;
    return r;
  }
  RootVec r = to_root(cat_.dims(x.handle));
  return x.parity == 0 ? r : quiver::scale(-1, r);
}

LieElement RootCategory::h(int i) const {
  require(i >= 1 && i <= cat_.quiver().num_vertices(), "RootCategory: vertex out of range");
  return LieElement::of(Symbol::h(i), modulus_);
}

LieElement RootCategory::u(const RCObject& x) const { return LieElement::of(Symbol::u(x), modulus_); }

LieElement RootCategory::u_simple(int i, int parity) { return u(simple(i, parity)); }

LieElement RootCategory::bracket(const LieElement& x, const LieElement& y) {
  require(x.modulus == modulus_ && y.modulus == modulus_, "RootCategory::bracket: coefficient ring mismatch");
  LieElement r;
  r.modulus = modulus_;
  for (const auto& [a, ca] : x.terms)
    for (const auto& [b, cb] : y.terms) {
      const LieElement ab = bracket_symbols(a, b);
      for (const auto& [s, c] : ab.terms) r.add(s, ca * cb * c);
    }
  return r;
}

Integer RootCategory::triangle_count(Handle m, Handle n, Handle l) {
  const auto key = std::make_tuple(m, n, l);
  if (auto it = counts_.find(key); it != counts_.end()) return it->second;
  Integer v = triangle_count_R(cat_.rep(m), cat_.rep(n), cat_.rep(l), cat_.budget());
  counts_.emplace(key, v);
  return v;
}

std::optional<tube::TubeElt> RootCategory::to_tube(const Symbol& s) const {
  if (s.is_h) return tube::TubeElt::basis(s.vertex, tube::TubeBasis::h(), modulus_);
  const RCObject& x = s.object;
  if (x.kind == RCObject::Kind::Tube) return tube::TubeElt::basis(x.vertex, tube::TubeBasis::u(x.n), modulus_);
  const auto v = simple_vertex(cat_.dims(x.handle));
  if (!v) return std::nullopt;
  return tube::TubeElt::basis(*v, tube::TubeBasis::u(x.parity == 0 ? 1 : -1), modulus_);
}

LieElement RootCategory::from_tube(const tube::TubeElt& e) {
  LieElement r;
  r.modulus = modulus_;
  if (e.h != 0) r.add(Symbol::h(e.vertex), e.h);
  for (const auto& [n, c] : e.u) {
    if (n == 1 || n == -1)
      r.add(Symbol::u(simple(e.vertex, n == 1 ? 0 : 1)), c);
    else
      r.add(Symbol::u(RCObject::tube(e.vertex, n)), c);
  }
  return r;
}

LieElement RootCategory::bracket_symbols(const Symbol& a, const Symbol& b) {
  LieElement r;
  r.modulus = modulus_;
  // (d) Cartan part
  if (a.is_h && b.is_h) return r;
  if (a.is_h) {
    const long long c = sym_form_R(quiver(), quiver::simple_root(quiver(), a.vertex), k0_class(b.object));
    r.add(b, c);
    return r;
  }
  if (b.is_h) return scale(-1, bracket_symbols(b, a));

  const RCObject& x = a.object;
  const RCObject& y = b.object;
  auto unsupported = [&]() -> LieElement {
    throw UnsupportedError("unsupported bracket pair: [" + symbol_name(a) + ", " + symbol_name(b) + "]");
  };

  if (x.kind == RCObject::Kind::Module && y.kind == RCObject::Kind::Module) {
    if (x.parity == y.parity) {
      // (a)
      require(cat_.is_indecomposable(x.handle) && cat_.is_indecomposable(y.handle),
              "RootCategory::bracket: module symbols must be indecomposable");
      std::vector<Handle> ls = cat_.extension_classes(x.handle, y.handle);
      const std::vector<Handle>& rev = cat_.extension_classes(y.handle, x.handle);
      ls.insert(ls.end(), rev.begin(), rev.end());
      std::sort(ls.begin(), ls.end());
      ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
      for (Handle l : ls) {
        if (!cat_.is_indecomposable(l)) continue;
        const Integer c = triangle_count(x.handle, y.handle, l) - triangle_count(y.handle, x.handle, l);
        r.add(Symbol::u(RCObject::module(l, x.parity)), c);
      }
      return r;
    }
    const auto vx = simple_vertex(cat_.dims(x.handle));
    const auto vy = simple_vertex(cat_.dims(y.handle));
    if (!vx || !vy) return unsupported();
    if (*vx != *vy) return r;  // (b)
    // (c)
    const int i = *vx;
    const Integer sign = x.parity == 0 ? 1 : -1;
    r.add(Symbol::h(i), -sign);
    r.add(Symbol::u(RCObject::tube(i, 2)), sign);
    r.add(Symbol::u(RCObject::tube(i, -2)), -sign);
    return r;
  }

  // (e) at least one tube operand
  const auto tx = to_tube(a);
  const auto ty = to_tube(b);
  if (!tx || !ty || tx->vertex != ty->vertex) return unsupported();
  return from_tube(tube::tube_bracket(*tx, *ty));
}

std::string RootCategory::symbol_name(const Symbol& s) const {
  if (s.is_h) return "h_" + std::to_string(s.vertex);
  const RCObject& x = s.object;
  if (x.kind == RCObject::Kind::Tube) return "u_T" + std::to_string(x.vertex) + "<" + std::to_string(x.n) + ">";
  return "u_" + cat_.label(x.handle) + (x.parity == 1 ? "[1]" : "");
}

bool RootCategory::symbol_less(const Symbol& a, const Symbol& b) const {
  auto rank = [](const Symbol& s) { return s.is_h ? 0 : s.object.kind == RCObject::Kind::Module ? 1 : 2; };
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  if (a.is_h) return a.vertex < b.vertex;
  const RCObject& x = a.object;
  const RCObject& y = b.object;
  if (x.kind == RCObject::Kind::Tube) return std::pair(x.vertex, x.n) < std::pair(y.vertex, y.n);
  if (x.handle != y.handle) return cat_.less(x.handle, y.handle);
  return x.parity < y.parity;
}

std::string RootCategory::tsv(const LieElement& e) const {
  std::vector<Symbol> keys;
  for (const auto& [s, c] : e.terms) keys.push_back(s);
  std::sort(keys.begin(), keys.end(), [&](const Symbol& a, const Symbol& b) { return symbol_less(a, b); });
  std::ostringstream os;
  for (const auto& s : keys) os << symbol_name(s) << '\t' << e.terms.at(s) << '\n';
  return os.str();
}

std::optional<RootVec> RootCategory::degree(const LieElement& e) const {
  std::optional<RootVec> d;
  for (const auto& [s, c] : e.terms) {
    RootVec k = s.is_h ? RootVec(static_cast<std::size_t>(cat_.quiver().num_vertices()), 0) : k0_class(s.object);
    if (d && *d != k) return std::nullopt;
    d = k;
  }
  return d;
}

std::map<RootVec, std::size_t> graded_dim_nplus(const Quiver& quiver, Algebra alg, std::uint32_t q, int degree_bound,
                                                const Budget& budget) {
  require(q >= 3, "graded_dim_nplus: q must be at least 3");
  require(degree_bound >= 1, "graded_dim_nplus: degree bound must be positive");
  if (degree_bound > budget.max_total_dim)
    throw BudgetError("graded_dim_nplus: degree bound " + std::to_string(degree_bound) + " exceeds max total dim " +
                      std::to_string(budget.max_total_dim));
  RootCategory rc(quiver, alg, q, true, budget);
  const int nv = quiver.num_vertices();
  std::vector<LieElement> gens;
  for (int i = 1; i <= nv; ++i) gens.push_back(rc.u_simple(i));

  std::map<RootVec, std::vector<LieElement>> spans;
  std::vector<LieElement> layer = gens;
  for (int d = 1; d <= degree_bound; ++d) {
    for (const auto& e : layer) spans[*rc.degree(e)].push_back(e);
    if (d == degree_bound) break;
    std::vector<LieElement> next;
    for (const auto& g : gens)
      for (const auto& y : layer) {
        LieElement z = rc.bracket(g, y);
        if (!z.is_zero()) next.push_back(std::move(z));
      }
    layer = std::move(next);
  }

  std::map<RootVec, std::size_t> out;
  RootVec d(static_cast<std::size_t>(nv), 0);
  // every nonzero dimension vector of total degree <= bound
  std::function<void(std::size_t, int)> visit = [&](std::size_t k, int left) {
    if (k == d.size()) {
      long long total = 0;
      for (long long x : d) total += x;
      if (total > 0) out[d] = 0;
      return;
    }
    for (int x = 0; x <= left; ++x) {
      d[k] = x;
      visit(k + 1, left - x);
    }
    d[k] = 0;
  };
  visit(0, degree_bound);

  for (auto& [deg, elems] : spans) {
    std::map<Symbol, std::size_t> col;
    for (const auto& e : elems)
      for (const auto& [s, c] : e.terms) col.emplace(s, 0);
    std::size_t k = 0;
    for (auto& [s, idx] : col) idx = k++;
    std::vector<std::vector<Integer>> rows;
    for (const auto& e : elems) {
      std::vector<Integer> row(col.size(), 0);
      for (const auto& [s, c] : e.terms) row[col.at(s)] = c;
      rows.push_back(std::move(row));
    }
    out[deg] = col.empty() ? 0 : modspan::free_rank_mod(rows, Integer(q - 1));
  }
  return out;
}

LieJacobiReport jacobi_generators(const Quiver& quiver, std::uint32_t q, const Budget& budget) {
  RootCategory rc(quiver, Algebra::Preprojective, q, true, budget);
  std::vector<LieElement> basis;
  for (int i = 1; i <= quiver.num_vertices(); ++i) {
    basis.push_back(rc.u_simple(i, 0));
    basis.push_back(rc.u_simple(i, 1));
    basis.push_back(rc.h(i));
  }
  LieJacobiReport rep;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      for (std::size_t k = j; k < basis.size(); ++k) {
        const LieElement &a = basis[i], &b = basis[j], &c = basis[k];
        try {
          const LieElement sum = rc.bracket(rc.bracket(a, b), c) + rc.bracket(rc.bracket(b, c), a) +
                                 rc.bracket(rc.bracket(c, a), b);
          ++rep.checked;
          if (!sum.is_zero())
            rep.violations.push_back("(" + rc.symbol_name(a.terms.begin()->first) + ", " +
                                     rc.symbol_name(b.terms.begin()->first) + ", " +
                                     rc.symbol_name(c.terms.begin()->first) + ") -> " + rc.tsv(sum));
        } catch (const UnsupportedError&) {
          ++rep.skipped;
        }
      }
  return rep;
}

}  // namespace preproj::rootcat
