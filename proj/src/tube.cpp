#include "preproj/tube.hpp"

#include <sstream>

#include "preproj/modspan.hpp"

namespace preproj::tube {

namespace {

Integer normalized(const Integer& c, const std::optional<Integer>& m) {
  if (!m) return c;
  Integer r = c % *m;
  return r < 0 ? Integer(r + *m) : r;
}

using Terms = std::map<TubeBasis, Integer>;

Terms negated(Terms t) {
  for (auto& [k, v] : t) v = -v;
  return t;
}

void put(Terms& t, TubeBasis b, long long c) {
  t[b] += c;
  if (t[b] == 0) t.erase(b);
}

bool odd(long long n) { return n % 2 != 0; }

}  // namespace

TubeBasis TubeBasis::u(long long n) {
  require(n != 0, "TubeBasis: u<0> does not exist");
  return {false, n};
}

std::string TubeBasis::to_string() const { return is_h ? "h" : "u<" + std::to_string(n) + ">"; }

TubeElt TubeElt::basis(int vertex, TubeBasis b, std::optional<Integer> modulus) {
  TubeElt e;
  e.vertex = vertex;
  e.modulus = modulus;
  e.add(b, 1);
  return e;
}

void TubeElt::add(TubeBasis b, const Integer& c) {
  if (b.is_h) {
    h = normalized(h + c, modulus);
    return;
  }
  require(b.n != 0, "TubeElt: u<0> does not exist");
  Integer v = normalized(coeff(b) + c, modulus);
  if (v == 0)
    u.erase(b.n);
  else
    u[b.n] = v;
}

Integer TubeElt::coeff(TubeBasis b) const {
  if (b.is_h) return h;
  auto it = u.find(b.n);
  return it == u.end() ? Integer(0) : it->second;
}

long long TubeElt::max_index() const {
  long long m = 0;
  for (const auto& [n, c] : u) m = std::max(m, n < 0 ? -n : n);
  return m;
}

bool TubeElt::operator==(const TubeElt& o) const {
  return vertex == o.vertex && modulus == o.modulus && h == o.h && u == o.u;
}

std::string TubeElt::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Integer& c, const std::string& name) {
    if (c == 0) return;
    Integer a = c;
    if (a < 0) {
      os << '-';
      a = -a;
    } else if (!first) {
      os << '+';
    }
    if (a != 1) os << a << '*';
    os << name;
    first = false;
  };
  term(h, "h");
  for (const auto& [n, c] : u) term(c, "u<" + std::to_string(n) + ">");
  if (first) os << '0';
  return os.str();
}

TubeElt operator+(const TubeElt& a, const TubeElt& b) {
  require(a.vertex == b.vertex && a.modulus == b.modulus, "TubeElt: mismatched vertex or modulus");
  TubeElt r = a;
  r.add(TubeBasis::h(), b.h);
  for (const auto& [n, c] : b.u) r.add(TubeBasis::u(n), c);
  return r;
}

TubeElt operator-(const TubeElt& a, const TubeElt& b) { return a + scale(-1, b); }

TubeElt scale(const Integer& s, const TubeElt& a) {
  TubeElt r;
  r.vertex = a.vertex;
  r.modulus = a.modulus;
  r.add(TubeBasis::h(), s * a.h);
  for (const auto& [n, c] : a.u) r.add(TubeBasis::u(n), s * c);
  return r;
}

Terms bracket_basis(TubeBasis a, TubeBasis b) {
  Terms r;
  if (a.is_h && b.is_h) return r;
  if (b.is_h) return negated(bracket_basis(b, a));
  if (a.is_h) {
    // (viii)
    if (!odd(b.n)) return r;
    put(r, b, b.n > 0 ? 2 : -2);
    return r;
  }
  const long long m = a.n, n = b.n;
  if (!odd(m) && !odd(n)) return r;                 // (i)
  if (odd(m) && odd(n) && (m > 0) == (n > 0)) return r;  // (ii)
  if (odd(m) && !odd(n)) return negated(bracket_basis(b, a));
  if (odd(m)) {
    // (vii): [u<2x-1>, u<-2y+1>]
    if (m < 0) return negated(bracket_basis(b, a));
    const long long x = (m + 1) / 2, y = (1 - n) / 2;
    if (x == y) {
      put(r, TubeBasis::h(), -1);
      put(r, TubeBasis::u(4 * x - 2), 1);
      put(r, TubeBasis::u(-4 * x + 2), -1);
    } else {
      put(r, TubeBasis::u(2 * (x + y) - 2), 1);
      put(r, TubeBasis::u(-2 * (x + y) + 2), -1);
      const long long lo = x < y ? 2 * (x - y) : 2 * (y - x);
      put(r, TubeBasis::u(lo), 1);
      put(r, TubeBasis::u(-lo), -1);
    }
    return r;
  }
  // m even, n odd: (iii)-(vi)
  const long long x = m > 0 ? m / 2 : -m / 2;
  const long long y = n > 0 ? (n + 1) / 2 : (1 - n) / 2;
  const bool small = x < y;
  if (m > 0 && n > 0) {  // (iii)
    put(r, TubeBasis::u(2 * (x + y) - 1), 1);
    if (small)
      put(r, TubeBasis::u(2 * (y - x) - 1), 1);
    else
      put(r, TubeBasis::u(2 * (x - y) + 1), -1);
  } else if (m > 0) {  // (iv)
    put(r, TubeBasis::u(-2 * (x + y) + 1), -1);
    if (small)
      put(r, TubeBasis::u(2 * (x - y) + 1), -1);
    else
      put(r, TubeBasis::u(2 * (y - x) - 1), 1);
  } else if (n > 0) {  // (v)
    put(r, TubeBasis::u(2 * (x + y) - 1), -1);
    if (small)
      put(r, TubeBasis::u(2 * (y - x) - 1), -1);
    else
      put(r, TubeBasis::u(2 * (x - y) + 1), 1);
  } else {  // (vi)
    put(r, TubeBasis::u(-2 * (x + y) + 1), 1);
    if (small)
      put(r, TubeBasis::u(2 * (x - y) + 1), 1);
    else
      put(r, TubeBasis::u(2 * (y - x) - 1), -1);
  }
  return r;
}

TubeElt tube_bracket(const TubeElt& a, const TubeElt& b) {
  require(a.vertex == b.vertex, "tube_bracket: elements at different vertices");
  require(a.modulus == b.modulus, "tube_bracket: elements over different coefficient rings");
  TubeElt r;
  r.vertex = a.vertex;
  r.modulus = a.modulus;
  auto terms = [](const TubeElt& e) {
    std::vector<std::pair<TubeBasis, Integer>> t;
    if (e.h != 0) t.emplace_back(TubeBasis::h(), e.h);
    for (const auto& [n, c] : e.u) t.emplace_back(TubeBasis::u(n), c);
    return t;
  };
  for (const auto& [x, cx] : terms(a))
    for (const auto& [y, cy] : terms(b))
      for (const auto& [z, c] : bracket_basis(x, y)) r.add(z, cx * cy * c);
  return r;
}

JacobiReport jacobi_check(int vertex, long long n_max, std::uint32_t q) {
  require(n_max >= 1, "jacobi_check: window must be positive");
  require(q == 0 || q >= 3, "jacobi_check: q must be at least 3 (or 0 for integer coefficients)");
  std::optional<Integer> mod;
  if (q != 0) mod = Integer(q - 1);
  std::vector<TubeBasis> basis{TubeBasis::h()};
  for (long long n = -n_max; n <= n_max; ++n)
    if (n != 0) basis.push_back(TubeBasis::u(n));
  JacobiReport rep;
  const long long limit = 3 * n_max;
  auto b = [&](TubeBasis x) { return TubeElt::basis(vertex, x, mod); };
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      for (std::size_t k = j; k < basis.size(); ++k) {
        const TubeElt a = b(basis[i]), c2 = b(basis[j]), c3 = b(basis[k]);
        const TubeElt ab = tube_bracket(a, c2), bc = tube_bracket(c2, c3), ca = tube_bracket(c3, a);
        const TubeElt sum = tube_bracket(ab, c3) + tube_bracket(bc, a) + tube_bracket(ca, c2);
        ++rep.triples;
        for (const TubeElt* e : {&ab, &bc, &ca, &sum})
          if (e->max_index() > limit) {
            rep.inconclusive = "term u<" + std::to_string(e->max_index()) + "> left the tracked window |n| <= " +
                               std::to_string(limit) + "; widen the window";
            return rep;
          }
        if (!sum.is_zero())
          rep.violations.push_back("(" + basis[i].to_string() + ", " + basis[j].to_string() + ", " +
                                   basis[k].to_string() + ") -> " + sum.to_string());
      }
  return rep;
}

std::string Sl2Report::to_string() const {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "window " << window << ", q " << q << ": " << (conclusive ? "closure stable" : "inconclusive");
  if (!note.empty()) os << " (" << note << ")";
  os << "; layers " << layers << ", ideal rows " << ideal_rows << "; generator in I: " << yn(ideal_generator_vanishes)
     << "; [h,u1]=2u1: " << yn(h_plus) << "; [h,u-1]=-2u-1: " << yn(h_minus) << "; [u1,u-1]=h: " << yn(bracket_h)
     << "; [u1,u-1]=-h: " << yn(bracket_minus_h) << "; u1 nonzero: " << yn(u1_nonzero)
     << "; E=u1,F=-u-1,H=h satisfy sl2: " << yn(rescaled_triple);
  return os.str();
}

Sl2Report sl2_quotient_check(int vertex, long long n_max, std::uint32_t q) {
  require(n_max >= 2, "sl2_quotient_check: window must contain u<2>");
  require(q >= 3, "sl2_quotient_check: q must be at least 3");
  Sl2Report rep;
  rep.window = n_max;
  rep.q = q;
  const Integer m = q - 1;
  const long long limit = 3 * n_max;
  // column 0 is h, then u<n> for n = -limit..limit, n != 0
  const std::size_t ncols = static_cast<std::size_t>(2 * limit + 1);
  auto column = [limit](long long n) { return static_cast<std::size_t>(n < 0 ? n + limit + 1 : n + limit); };
  bool escaped = false;
  auto vec = [&](const TubeElt& e) {
    std::vector<long long> v(ncols, 0);
    v[0] = static_cast<long long>(e.h);
    for (const auto& [n, c] : e.u) {
      if (n > limit || n < -limit) {
        escaped = true;
        continue;
      }
      v[column(n)] = static_cast<long long>(c);
    }
    return v;
  };
  auto b = [&](TubeBasis x) { return TubeElt::basis(vertex, x, m); };
  const TubeElt h = b(TubeBasis::h()), u1 = b(TubeBasis::u(1)), um1 = b(TubeBasis::u(-1));
  const std::vector<TubeElt> gens{u1, um1, h};
  const TubeElt w = b(TubeBasis::u(2)) - b(TubeBasis::u(-2));

  modspan::ModSpan ideal(static_cast<long long>(m), ncols);
  ideal.insert(vec(w));
  std::vector<TubeElt> frontier{w};
  while (!frontier.empty()) {
    ++rep.layers;
    std::vector<TubeElt> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        TubeElt y = tube_bracket(g, x);
        if (y.is_zero()) continue;
        if (y.max_index() > n_max) {
          rep.note = "ideal element " + y.to_string() + " leaves the window; raise the window";
          rep.ideal_rows = ideal.size();
          return rep;
        }
        if (ideal.insert(vec(y))) next.push_back(std::move(y));
      }
    frontier = std::move(next);
    if (rep.layers > static_cast<std::size_t>(4 * n_max)) {
      rep.note = "closure did not stabilize";
      rep.ideal_rows = ideal.size();
      return rep;
    }
  }
  rep.ideal_rows = ideal.size();
  auto in_ideal = [&](const TubeElt& e) { return ideal.contains(vec(e)); };
  const TubeElt br = tube_bracket(u1, um1);
  rep.ideal_generator_vanishes = in_ideal(w);
  rep.h_plus = in_ideal(tube_bracket(h, u1) - scale(2, u1));
  rep.h_minus = in_ideal(tube_bracket(h, um1) + scale(2, um1));
  rep.bracket_h = in_ideal(br - h);
  rep.bracket_minus_h = in_ideal(br + h);
  rep.u1_nonzero = !in_ideal(u1);
  // E = u1, F = -u-1, H = h: [E,F] = H, [H,E] = 2E, [H,F] = -2F
  const TubeElt f = scale(-1, um1);
  rep.rescaled_triple = in_ideal(tube_bracket(u1, f) - h) && rep.h_plus &&
                        in_ideal(tube_bracket(h, f) + scale(2, f));
  rep.conclusive = !escaped;
  if (escaped) rep.note = "a bracket left the tracked columns";
  return rep;
}

}  // namespace preproj::tube
