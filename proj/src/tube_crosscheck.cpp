#include "preproj/tube_crosscheck.hpp"

#include <set>
#include <sstream>
#include <utility>

#include "preproj/rootcat.hpp"
#include "preproj/tube.hpp"

namespace preproj::tube {

bool crosscheck_generator_bracket(int i, std::uint32_t q, const quiver::Quiver& quiver) {
  require(q >= 3, "crosscheck_generator_bracket: q must be at least 3");
  require(i >= 1 && i <= quiver.num_vertices(), "crosscheck_generator_bracket: vertex out of range");
  rootcat::RootCategory rc(quiver, rep::Algebra::Preprojective, q, false);
  const rootcat::LieElement lhs = rc.bracket(rc.u_simple(i, 0), rc.u_simple(i, 1));

  const TubeElt t = tube_bracket(TubeElt::basis(i, TubeBasis::u(1)), TubeElt::basis(i, TubeBasis::u(-1)));
  rootcat::LieElement rhs;
  if (t.h != 0) rhs.add(rootcat::Symbol::h(i), t.h);
  for (const auto& [n, c] : t.u) {
    if (n == 1 || n == -1)
      rhs.add(rootcat::Symbol::u(rc.simple(i, n == 1 ? 0 : 1)), c);
    else
      rhs.add(rootcat::Symbol::u(rootcat::RCObject::tube(i, n)), c);
  }
  return lhs == rhs;
}

OrbitCounts connecting_map_orbits(std::uint32_t q) {
  require(ffla::is_prime(q), "connecting_map_orbits: q must be prime");
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  OrbitCounts out;
  for (std::uint32_t f0 = 0; f0 < q; ++f0)
    for (std::uint32_t f2 = 0; f2 < q; ++f2) {
      if (seen.count({f0, f2})) continue;
      for (std::uint32_t a = 1; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
          seen.insert({static_cast<std::uint32_t>((std::uint64_t{a} * f0) % q),
                       static_cast<std::uint32_t>((std::uint64_t{a} * f2 + std::uint64_t{b} * f0) % q)});
      if (f0 != 0)
        ++out.zero_cone;
      else if (f2 != 0)
        ++out.e_cone;
      else
        ++out.split;
    }
  return out;
}

bool HallSideReport::ok() const {
  return forward.zero_cone == 1 && forward.e_cone == 1 && reverse.zero_cone == 1 && reverse.e_cone == 1 &&
         model_forward == 1 && model_reverse == 1;
}

std::string HallSideReport::to_string() const {
  std::ostringstream os;
  os << "[S][S[1]]: F^0=" << forward.zero_cone << " F^E=" << forward.e_cone << "; [S[1]][S]: F^0="
     << reverse.zero_cone << " F^E[1]=" << reverse.e_cone << "; model F=" << model_forward << "," << model_reverse;
  return os.str();
}

HallSideReport generator_pair_hall_side(std::uint32_t q) {
  HallSideReport r;
  r.forward = connecting_map_orbits(q);
  r.reverse = connecting_map_orbits(q);
  const quiver::Quiver a2 = quiver::Quiver::a2();
  const auto alg = rep::Algebra::Preprojective;
  const rep::Rep s1 = rep::simple(a2, alg, q, 1), s2 = rep::simple(a2, alg, q, 2);
  const ffla::Mat one = ffla::Mat::from_rows(q, {{1}}), zero(q, 1, 1);
  const rep::Rep forward(a2, alg, q, {1, 1}, {one, zero});
  const rep::Rep reverse(a2, alg, q, {1, 1}, {zero, one});
  r.model_forward = rootcat::triangle_count_R(s1, s2, forward);
  r.model_reverse = rootcat::triangle_count_R(s2, s1, reverse);
  return r;
}

}  // namespace preproj::tube
