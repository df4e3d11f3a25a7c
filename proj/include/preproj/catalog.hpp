#pragma once

// Session-wide registry of isomorphism classes of modules over one algebra.
// Each class gets a stable integer handle; universes of a given dimension
// vector are generated from iterated extensions by simples and memoized.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "preproj/rep.hpp"

namespace preproj::catalog {

using rep::Algebra;
using rep::Dims;
using rep::Fingerprint;
using rep::Quiver;
using rep::Rep;

using Handle = std::size_t;

class Catalog {
 public:
  Catalog(Quiver quiver, Algebra alg, std::uint32_t q, Budget budget = {});

  const Quiver& quiver() const { return quiver_; }
  Algebra algebra() const { return alg_; }
  std::uint32_t q() const { return q_; }
  const Budget& budget() const { return budget_; }
  std::size_t size() const { return entries_.size(); }

  /// Handle of the class of m, registering it when new.
  Handle intern(const Rep& m);
  /// Handle of an already registered class, if any.
  std::optional<Handle> find(const Rep& m) const;

  const Rep& rep(Handle h) const { return entries_.at(h).rep; }
  const Fingerprint& fingerprint(Handle h) const { return entries_.at(h).fp; }
  const Dims& dims(Handle h) const { return entries_.at(h).rep.dims(); }
  bool is_indecomposable(Handle h);
  Integer aut_count(Handle h);

  Handle zero();
  Handle simple(int i);

  /// Every class of dimension vector d, sorted canonically.
  const std::vector<Handle>& classes_of_dim(const Dims& d);
  /// Classes of middle terms L of extensions 0 -> N -> L -> M -> 0.
  const std::vector<Handle>& extension_classes(Handle m, Handle n);

  /// Canonical ordering: dimension vector, fingerprint, then handle.
  bool less(Handle a, Handle b) const;
  /// Human-readable label unique within the session.
  std::string label(Handle h) const;

 private:
  struct Entry {
    Rep rep;
    Fingerprint fp;
    std::optional<bool> indecomposable;
    std::optional<Integer> aut;
  };

  void sort_canonically(std::vector<Handle>& v) const;

  Quiver quiver_;
  Algebra alg_;
  std::uint32_t q_;
  Budget budget_;
  std::vector<Entry> entries_;
  std::map<Fingerprint, std::vector<Handle>> buckets_;
  std::map<Dims, std::vector<Handle>> by_dim_;
  std::map<std::pair<Handle, Handle>, std::vector<Handle>> extensions_;
};

}  // namespace preproj::catalog
