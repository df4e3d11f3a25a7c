#pragma once

// Spherical twists at the level of simples, the reflection functor Sigma_i on
// nilpotent preprojective modules, and their shadows on K0.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "preproj/catalog.hpp"
#include "preproj/quiver.hpp"
#include "preproj/rootcat.hpp"

namespace preproj::twist {

using quiver::IntMatrix;
using quiver::Quiver;
using rep::Rep;
using rootcat::RCObject;

/// Dimension of the S_i-isotypic part of the head of M.
int head_dim(int i, const Rep& m);

/// T_i on S_j and S_j[1]: S_i goes to S_i with flipped parity, S_j (j != i)
/// to I_{ji} with the same parity.
RCObject twist_simple(int i, const RCObject& x, catalog::Catalog& cat);

/// Sigma_i(M): the i-space becomes the kernel of the map into M_i from its
/// neighbours, every other space is kept.
Rep reflect_module(int i, const Rep& m);

struct ContractCheck {
  bool applicable = false;
  bool ok = true;
  std::string detail;
};

struct ReflectContracts {
  std::array<ContractCheck, 5> checks;
  bool ok() const;
  std::string to_string() const;
};

/// Contracts (1)-(5) of Sigma_i on M; (4) compares against a random
/// conjugate of M drawn from rng.
ReflectContracts check_reflect_contracts(int i, const Rep& m, std::mt19937_64& rng);

/// Column j is the class of T_i(S_j).
IntMatrix twist_k0_matrix(const Quiver& quiver, int i);
/// Product of twist_k0_matrix over the word, left to right.
IntMatrix twist_word_k0(const Quiver& quiver, const std::vector<int>& word);
IntMatrix weyl_image(const Quiver& quiver, const std::vector<int>& word);
/// Every simple reflection is the image of its one-letter word.
bool epsilon_surjectivity_check(const Quiver& quiver);

struct Triple {
  Rep x;
  Rep y;
  Rep l;
};

struct PhiReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// triangle_count_R(X,Y,L) against the same count on Sigma_i of each entry.
PhiReport phi_f_invariance(int i, const std::vector<Triple>& triples, const Budget& budget = {});

/// Triples with X, Y indecomposable, L of dimension dim X + dim Y with
/// |L| <= max_total, all with zero i-head; the zero triple comes first.
std::vector<Triple> phi_f_sample(catalog::Catalog& cat, int i, int max_total);

}  // namespace preproj::twist
