#pragma once

#include <vector>

#include "nilweyl/involutions.hpp"

namespace nilweyl {

// Longest element of the standard parabolic subgroup generated by J, built by
// greedy ascent. Raises NotFiniteError when its length would exceed cap.
Element longest_element(const Group& g, const std::vector<Gen>& j, int cap = 4096);

// A subset J of the generators together with a star; J* = sigma(J). Both
// parabolic subgroups must be finite.
struct ParabolicContext {
  Group group;
  std::vector<Gen> j;       // sorted
  std::vector<Gen> j_star;  // sorted image of j
  Star star;
  Element w_j;       // longest element of W_J
  Element w_j_star;  // longest element of W_J*
};

ParabolicContext make_parabolic_context(const Group& g, std::vector<Gen> j, Star st,
                                        int cap = 4096);

// w lies in {v : |v| = |w_J| + |w_J v|}, the maximal-length left coset
// representatives; equivalently J is contained in the left descent set.
bool is_in_jw(const Element& w, const ParabolicContext& ctx);
// Mirror condition on the right with J*.
bool is_in_wjstar(const Element& w, const ParabolicContext& ctx);

// Minimal-length representative of W_J x W_J*: strip left descents in J
// first, then right descents in J*, smallest generator first.
Element min_double_coset_rep(const Element& x, const ParabolicContext& ctx);

// Maximal-length representative of the double coset of z: w_J * z * w_J*
// (monoid products).
Element max_double_coset_rep(const Element& z, const ParabolicContext& ctx);

// pi restricted to the maximal coset representatives; the result lies in the
// twisted involutions that are maximal representatives on both sides.
// Raises Error unless is_in_jw(w).
TwistedInvolution jpi(const Element& w, const ParabolicContext& ctx);

// A preimage of x under the restricted pi, found by reducing to the minimal
// double-coset representative z, searching a length-bounded ball for e with
// pi(e) = z, and returning w_J * e. Raises Error if none exists in the ball.
Element jpi_preimage(const TwistedInvolution& x, const ParabolicContext& ctx, int max_len);

}  // namespace nilweyl
