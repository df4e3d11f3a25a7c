#pragma once

// Agreement between the same-vertex generator bracket of the root category
// and the tube constants, plus the Hall-side orbit counts behind it.

#include <cstdint>
#include <string>

#include "preproj/common.hpp"
#include "preproj/quiver.hpp"

namespace preproj::tube {

/// rootcat bracket [u_{S_i}, u_{S_i[1]}] equals tube_bracket(u<1>, u<-1>)
/// under <2> = E_i, <-2> = E_i[1].
bool crosscheck_generator_bracket(int i, std::uint32_t q, const quiver::Quiver& quiver = quiver::Quiver::kronecker());

/// Orbits of Aut(S_i) x Aut(S_i[1]) on Hom(S_i, S_i[2]) ~ k^2, where units
/// a + b t of k[t]/t^2 act by (f0, f2) -> (a f0, a f2 + b f0), split by the
/// cone of the representative: zero (f0 != 0), E (f0 = 0 != f2), or the
/// split sum (f = 0).
struct OrbitCounts {
  Integer zero_cone = 0;
  Integer e_cone = 0;
  Integer split = 0;
};

OrbitCounts connecting_map_orbits(std::uint32_t q);

struct HallSideReport {
  OrbitCounts forward;
  OrbitCounts reverse;
  /// triangle_count_R in the two-vertex model with S_i at vertex 1 and
  /// S_i[1] at vertex 2.
  Integer model_forward = 0;
  Integer model_reverse = 0;
  bool ok() const;
  std::string to_string() const;
};

HallSideReport generator_pair_hall_side(std::uint32_t q);

}  // namespace preproj::tube
