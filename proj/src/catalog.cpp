#include "preproj/catalog.hpp"

#include <algorithm>
#include <set>

namespace preproj::catalog {

Catalog::Catalog(Quiver quiver, Algebra alg, std::uint32_t q, Budget budget)
    : quiver_(std::move(quiver)), alg_(alg), q_(q), budget_(budget) {
  require(ffla::is_prime(q_), "Catalog: q must be prime");
}

std::optional<Handle> Catalog::find(const Rep& m) const {
  require(m.quiver() == quiver_ && m.algebra() == alg_ && m.q() == q_, "Catalog: module from another context");
  Fingerprint fp = rep::fingerprint(m);
  auto it = buckets_.find(fp);
  if (it == buckets_.end()) return std::nullopt;
  for (Handle h : it->second)
    if (rep::are_isomorphic(entries_[h].rep, m, entries_[h].fp, fp)) return h;
  return std::nullopt;
}

Handle Catalog::intern(const Rep& m) {
  require(m.quiver() == quiver_ && m.algebra() == alg_ && m.q() == q_, "Catalog: module from another context");
  Fingerprint fp = rep::fingerprint(m);
  auto& bucket = buckets_[fp];
  for (Handle h : bucket)
    if (rep::are_isomorphic(entries_[h].rep, m, entries_[h].fp, fp)) return h;
  Handle h = entries_.size();
  entries_.push_back({m, fp, std::nullopt, std::nullopt});
  bucket.push_back(h);
  return h;
}

bool Catalog::is_indecomposable(Handle h) {
  Entry& e = entries_.at(h);
  if (!e.indecomposable) e.indecomposable = rep::is_indecomposable(e.rep, budget_);
  return *e.indecomposable;
}

Integer Catalog::aut_count(Handle h) {
  Entry& e = entries_.at(h);
  if (!e.aut) e.aut = rep::aut_count(e.rep, budget_);
  return *e.aut;
}

Handle Catalog::zero() { return intern(rep::zero_rep(quiver_, alg_, q_)); }

Handle Catalog::simple(int i) { return intern(rep::simple(quiver_, alg_, q_, i)); }

bool Catalog::less(Handle a, Handle b) const {
  const Entry& x = entries_.at(a);
  const Entry& y = entries_.at(b);
  return std::tie(x.fp.dims, x.fp, a) < std::tie(y.fp.dims, y.fp, b);
}

void Catalog::sort_canonically(std::vector<Handle>& v) const {
  std::sort(v.begin(), v.end(), [this](Handle a, Handle b) { return less(a, b); });
}

std::string Catalog::label(Handle h) const { return "#" + std::to_string(h) + "{" + entries_.at(h).fp.to_string() + "}"; }

const std::vector<Handle>& Catalog::classes_of_dim(const Dims& d) {
  require(d.size() == static_cast<std::size_t>(quiver_.num_vertices()), "classes_of_dim: dimension vector length mismatch");
  if (auto it = by_dim_.find(d); it != by_dim_.end()) return it->second;
  int total = 0;
  for (int x : d) {
    require(x >= 0, "classes_of_dim: negative dimension");
    total += x;
  }
  if (total > budget_.max_total_dim)
    throw BudgetError("classes_of_dim: total dimension " + std::to_string(total) + " exceeds cap " +
                      std::to_string(budget_.max_total_dim));
  std::vector<Handle> out;
  if (total == 0) {
    out.push_back(zero());
  } else {
    // A nonzero nilpotent module has a simple quotient S_i, so it is the
    // middle term of an extension of S_i by a module of dimension d - e_i.
    std::set<Handle> seen;
    for (int i = 1; i <= quiver_.num_vertices(); ++i) {
      if (d[i - 1] == 0) continue;
      Dims smaller = d;
      --smaller[i - 1];
      const std::vector<Handle> subs = classes_of_dim(smaller);
      const Handle s = simple(i);
      for (Handle n : subs)
        for (Handle l : extension_classes(s, n)) seen.insert(l);
    }
    out.assign(seen.begin(), seen.end());
  }
  sort_canonically(out);
  return by_dim_.emplace(d, std::move(out)).first->second;
}

const std::vector<Handle>& Catalog::extension_classes(Handle m, Handle n) {
  auto key = std::make_pair(m, n);
  if (auto it = extensions_.find(key); it != extensions_.end()) return it->second;
  std::set<Handle> seen;
  const Rep mr = entries_.at(m).rep;
  const Rep nr = entries_.at(n).rep;
  for (const Rep& l : rep::extension_middle_terms(mr, nr, budget_)) seen.insert(intern(l));
  std::vector<Handle> out(seen.begin(), seen.end());
  sort_canonically(out);
  return extensions_.emplace(key, std::move(out)).first->second;
}

}  // namespace preproj::catalog
