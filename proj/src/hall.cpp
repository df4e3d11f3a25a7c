#include "preproj/hall.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace preproj::hall {

namespace {

Integer mod_nonneg(const Integer& x, const Integer& m) {
  Integer r = x % m;
  return r < 0 ? Integer(r + m) : r;
}

}  // namespace

Integer hall_number(const Rep& m, const Rep& n, const Rep& l, const Budget& budget) {
  const Dims& dl = l.dims();
  for (std::size_t v = 0; v < dl.size(); ++v)
    if (m.dims()[v] + n.dims()[v] != dl[v]) return 0;
  const rep::Fingerprint fm = rep::fingerprint(m), fn = rep::fingerprint(n);
  Integer count = 0;
  for (const auto& u : rep::enumerate_submodules(l, n.dims(), budget)) {
    Rep x = rep::sub_to_rep(l, u);
    if (!rep::are_isomorphic(x, n, rep::fingerprint(x), fn)) continue;
    Rep y = rep::quotient(l, u);
    if (rep::are_isomorphic(y, m, rep::fingerprint(y), fm)) ++count;
  }
  return count;
}

Integer HallElement::coeff(Handle h) const {
  auto it = terms.find(h);
  return it == terms.end() ? Integer(0) : it->second;
}

void HallElement::add(Handle h, const Integer& c) {
  Integer v = coeff(h) + c;
  if (modulus) v = mod_nonneg(v, *modulus);
  if (v == 0)
    terms.erase(h);
  else
    terms[h] = v;
}

HallElement operator+(const HallElement& a, const HallElement& b) {
  require(a.modulus == b.modulus, "HallElement: modulus mismatch");
  HallElement r = a;
  for (const auto& [h, c] : b.terms) r.add(h, c);
  return r;
}

HallElement operator-(const HallElement& a, const HallElement& b) { return a + scale(-1, b); }

HallElement scale(const Integer& s, const HallElement& a) {
  HallElement r;
  r.modulus = a.modulus;
  for (const auto& [h, c] : a.terms) r.add(h, s * c);
  return r;
}

HallElement mod_reduce(const HallElement& a, const Integer& m) {
  require(m >= 1, "mod_reduce: modulus must be positive");
  require(!a.modulus || *a.modulus % m == 0, "mod_reduce: incompatible modulus");
  HallElement r;
  r.modulus = m;
  for (const auto& [h, c] : a.terms) r.add(h, c);
  return r;
}

HallAlgebra::HallAlgebra(Quiver quiver, Algebra alg, std::uint32_t q, Budget budget)
    : cat_(std::move(quiver), alg, q, budget) {}

HallElement HallAlgebra::one() { return basis(cat_.zero()); }

HallElement HallAlgebra::basis(Handle h) const {
  HallElement e;
  e.add(h, 1);
  return e;
}

HallElement HallAlgebra::generator(int i) { return basis(cat_.simple(i)); }

HallElement HallAlgebra::element_of(const Rep& m) { return basis(cat_.intern(m)); }

Integer HallAlgebra::hall_number(Handle m, Handle n, Handle l) {
  return hall::hall_number(cat_.rep(m), cat_.rep(n), cat_.rep(l), cat_.budget());
}

const std::vector<std::pair<Handle, Integer>>& HallAlgebra::product_terms(Handle m, Handle n) {
  auto key = std::make_pair(m, n);
  if (auto it = products_.find(key); it != products_.end()) return it->second;
  std::vector<std::pair<Handle, Integer>> out;
  // every L with g^L_{MN} != 0 is the middle term of an extension of M by N
  const std::vector<Handle> ls = cat_.extension_classes(m, n);
  for (Handle l : ls) {
    Integer g = hall_number(m, n, l);
    if (g != 0) out.emplace_back(l, g);
  }
  return products_.emplace(key, std::move(out)).first->second;
}

HallElement HallAlgebra::product(const HallElement& a, const HallElement& b) {
  require(a.modulus == b.modulus, "HallAlgebra::product: modulus mismatch");
  HallElement r;
  r.modulus = a.modulus;
  for (const auto& [x, cx] : a.terms)
    for (const auto& [y, cy] : b.terms)
      for (const auto& [l, g] : product_terms(x, y)) r.add(l, cx * cy * g);
  return r;
}

HallElement HallAlgebra::monomial(const std::vector<int>& word) {
  HallElement r = one();
  for (int i : word) r = product(r, generator(i));
  return r;
}

std::string HallAlgebra::tsv(const HallElement& e) const {
  std::vector<Handle> hs;
  for (const auto& [h, c] : e.terms) hs.push_back(h);
  std::sort(hs.begin(), hs.end(), [this](Handle a, Handle b) { return cat_.less(a, b); });
  std::ostringstream os;
  for (Handle h : hs) os << cat_.label(h) << '\t' << e.coeff(h) << '\n';
  return os.str();
}

int serre_degree(const Quiver& quiver, int i, int j) { return 1 + quiver.adjacency(i, j); }

HallElement serre_residue(HallAlgebra& h, int i, int j) {
  const Quiver& quiver = h.catalog().quiver();
  require(i != j, "serre_residue: vertices must differ");
  require(i >= 1 && j >= 1 && i <= quiver.num_vertices() && j <= quiver.num_vertices(),
          "serre_residue: vertex out of range");
  require(h.q() >= 3, "serre_residue: q = 2 makes every residue vacuous");
  const int n = serre_degree(quiver, i, j);
  const Integer m = h.q() - 1;
  HallElement total = mod_reduce(HallElement{}, m);
  for (int l = 0; l <= n; ++l) {
    std::vector<int> word(n - l, i);
    word.push_back(j);
    word.insert(word.end(), l, i);
    Integer c = ffla::binomial(n, l);
    if (l % 2) c = -c;
    total = total + mod_reduce(scale(c, h.monomial(word)), m);
  }
  return total;
}

std::string Filtration::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < steps.size(); ++k) os << (k ? "+" : "") << steps[k].first << '*' << steps[k].second;
  return os.str();
}

Filtration parse_filtration(const std::string& s, int default_vertex) {
  Filtration f;
  std::string token;
  std::istringstream in(s);
  auto vertex = [&](const std::string& v) {
    if (v == "i") return default_vertex;
    require(!v.empty() && std::all_of(v.begin(), v.end(), ::isdigit), "filtration: bad vertex '" + v + "'");
    return std::stoi(v);
  };
  require(!s.empty() && s.back() != '+', "filtration: empty term in '" + s + "'");
  while (std::getline(in, token, '+')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    require(!token.empty(), "filtration: empty term in '" + s + "'");
    int l = 1;
    std::string v = token;
    if (auto star = token.find('*'); star != std::string::npos) {
      std::string ls = token.substr(0, star);
      require(!ls.empty() && std::all_of(ls.begin(), ls.end(), ::isdigit), "filtration: bad multiplicity in '" + token + "'");
      l = std::stoi(ls);
      v = token.substr(star + 1);
    } else if (token.size() > 1 && token.back() == 'i') {
      std::string ls = token.substr(0, token.size() - 1);
      require(std::all_of(ls.begin(), ls.end(), ::isdigit), "filtration: bad term '" + token + "'");
      l = std::stoi(ls);
      v = "i";
    }
    require(l >= 1, "filtration: multiplicities must be positive");
    f.steps.emplace_back(l, vertex(v));
  }
  require(!f.steps.empty(), "filtration: empty");
  return f;
}

namespace {

bool dims_match(const Rep& m, const Filtration& lambda, std::size_t from) {
  Dims d(m.dims().size(), 0);
  for (std::size_t k = from; k < lambda.steps.size(); ++k) {
    const int v = lambda.steps[k].second;
    require(v >= 1 && v <= static_cast<int>(d.size()), "filtration: vertex out of range");
    d[v - 1] += lambda.steps[k].first;
  }
  return d == m.dims();
}

Integer count_top_down(const Rep& m, const Filtration& lambda, std::size_t k, const Budget& budget) {
  if (k == lambda.steps.size()) return m.is_zero() ? 1 : 0;
  if (!dims_match(m, lambda, k)) return 0;
  Dims sub = m.dims();
  sub[lambda.steps[k].second - 1] -= lambda.steps[k].first;
  Integer total = 0;
  // the quotient has dimension l*e_i, hence is S_i^l
  for (const auto& u : rep::enumerate_submodules(m, sub, budget))
    total += count_top_down(rep::sub_to_rep(m, u), lambda, k + 1, budget);
  return total;
}

Integer count_bottom_up(const Rep& m, const Filtration& lambda, std::size_t len, const Budget& budget) {
  if (len == 0) return m.is_zero() ? 1 : 0;
  Filtration head{{lambda.steps.begin(), lambda.steps.begin() + static_cast<std::ptrdiff_t>(len)}};
  if (!dims_match(m, head, 0)) return 0;
  const auto [l, i] = lambda.steps[len - 1];
  Dims d(m.dims().size(), 0);
  d[i - 1] = l;
  // group the semisimple submodules by the class of the quotient
  std::vector<std::pair<Rep, Integer>> classes;
  std::vector<rep::Fingerprint> fps;
  for (const auto& u : rep::enumerate_submodules(m, d, budget)) {
    Rep y = rep::quotient(m, u);
    rep::Fingerprint fy = rep::fingerprint(y);
    bool found = false;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (rep::are_isomorphic(classes[c].first, y, fps[c], fy)) {
        ++classes[c].second;
        found = true;
        break;
      }
    if (!found) {
      classes.emplace_back(std::move(y), 1);
      fps.push_back(std::move(fy));
    }
  }
  Integer total = 0;
  for (const auto& [y, size] : classes) total += size * count_bottom_up(y, lambda, len - 1, budget);
  return total;
}

}  // namespace

Integer filtration_count(const Rep& m, const Filtration& lambda, const Budget& budget) {
  return count_top_down(m, lambda, 0, budget);
}

Integer filtration_count_by_socle(const Rep& m, const Filtration& lambda, const Budget& budget) {
  return count_bottom_up(m, lambda, lambda.steps.size(), budget);
}

Rep RepTemplate::instantiate(std::uint32_t q) const {
  auto arrows = rep::algebra_arrows(quiver, algebra);
  require(maps.size() == arrows.size(), "RepTemplate: one map per arrow required");
  std::vector<ffla::Mat> ms;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    for (long long x : maps[a]) require(x >= -1 && x <= 1, "RepTemplate: entries must lie in {0, 1, -1}");
    ms.push_back(ffla::Mat::from_flat(q, static_cast<std::size_t>(dims[arrows[a].target - 1]),
                                      static_cast<std::size_t>(dims[arrows[a].source - 1]), maps[a]));
  }
  return Rep(quiver, algebra, q, dims, std::move(ms));
}

RepTemplate RepTemplate::of(const Rep& m) {
  RepTemplate t{m.quiver(), m.algebra(), m.dims(), {}};
  for (const auto& x : m.maps()) {
    std::vector<long long> flat = x.flat();
    for (auto& e : flat) {
      if (e == static_cast<long long>(m.q()) - 1 && m.q() > 2) e = -1;
      require(e >= -1 && e <= 1, "RepTemplate::of: entries must be 0, 1 or -1");
    }
    t.maps.push_back(std::move(flat));
  }
  return t;
}

HallPolynomialReport hall_polynomial(const Filtration& lambda, const RepTemplate& t,
                                     const std::vector<std::uint32_t>& probes, const Budget& budget) {
  require(probes.size() >= 2, "hall_polynomial: at least two probe primes required");
  HallPolynomialReport r;
  std::vector<std::pair<Integer, Integer>> points;
  for (std::uint32_t q : probes) {
    Integer c = filtration_count(t.instantiate(q), lambda, budget);
    r.counts.emplace_back(q, c);
    points.emplace_back(Integer(q), c);
  }
  r.fit = ffla::interpolate_integer_poly(points);
  return r;
}

Integer euler_char(const ffla::QPoly& p) { return p.eval(1); }

bool theta_compare(HallAlgebra& lambda_side, HallAlgebra& path_side, const std::vector<int>& word) {
  require(lambda_side.catalog().algebra() == Algebra::Preprojective &&
              path_side.catalog().algebra() == Algebra::PathAlgebra,
          "theta_compare: expected a preprojective and a path-algebra session");
  require(lambda_side.catalog().quiver() == path_side.catalog().quiver() && lambda_side.q() == path_side.q(),
          "theta_compare: sessions over different quivers or fields");
  require(lambda_side.q() >= 3, "theta_compare: q = 2 makes the comparison vacuous");
  const Integer m = lambda_side.q() - 1;
  HallElement lam = lambda_side.monomial(word);
  HallElement restricted = mod_reduce(HallElement{}, m);
  for (const auto& [h, c] : lam.terms) {
    auto r = rep::restrict_to_path_algebra(lambda_side.catalog().rep(h));
    if (r) restricted.add(path_side.catalog().intern(*r), c);
  }
  return restricted == mod_reduce(path_side.monomial(word), m);
}

bool theta_compare(const Quiver& quiver, const std::vector<int>& word, std::uint32_t q, const Budget& budget) {
  HallAlgebra lam(quiver, Algebra::Preprojective, q, budget);
  HallAlgebra path(quiver, Algebra::PathAlgebra, q, budget);
  return theta_compare(lam, path, word);
}

}  // namespace preproj::hall
