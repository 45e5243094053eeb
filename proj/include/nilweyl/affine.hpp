#pragma once

#include <string>
#include <vector>

#include "nilweyl/parabolic.hpp"

namespace nilweyl {

// Working data for an affine Weyl group W = W_J x| T, where J is the set of
// finite nodes (the affine node is the last generator) and T is the lattice
// of translations, the kernel of the projection onto the finite quotient.
//
// The star is the identity on the affine node and minus-w0 on J. Building the
// context verifies that this permutation is a diagram automorphism, that
// s* = w_J s w_J on J, and that t* = w_J t^-1 w_J on sample translations;
// it also revalidates the registry data behind proj (see group.hpp) by
// checking the reflection word against the highest-root matrix and proj
// against every braid relation.
struct AffineContext {
  Group group;   // affine, rank n+1
  Group finite;  // finite quotient
  std::vector<Gen> j;
  Star star;
  Element w_j;                     // inside the affine group
  std::vector<Element> proj_gen;   // proj of each affine generator, finite elements
  std::vector<std::string> basis_names;  // translation basis, desk-scale types only
  std::vector<Element> basis;            // dominant, pairwise commuting
  ParabolicContext parabolic;
};

// finite_preset: "A1", "A2", ... as in build_group.
AffineContext build_affine_context(const std::string& finite_preset);

// Image of w in the finite quotient, folded over a reduced word.
Element linear_part(const Element& w, const AffineContext& ctx);

bool is_translation(const Element& w, const AffineContext& ctx);
// t is a translation and |w_J t| = |w_J| + |t|.
bool is_dominant_translation(const Element& w, const AffineContext& ctx);

// The unique member of W_J t whose left descent set contains J.
Element coset_rep(const Element& t, const AffineContext& ctx);
// Inverse direction: the unique translation in W_J v.
Element translation_of(const Element& v, const AffineContext& ctx);

// The squaring map on translations transported through the coset bijections:
// pi_prime(t) is the dominant translation t' with w_J t' = jpi(coset_rep(t)).
// On dominant translations pi_prime(t) = t^2.
Element pi_prime(const Element& t, const AffineContext& ctx);

// Exponents (one per basis element) with t = product of basis powers, each
// exponent <= bound. Requires a dominant translation and a tabulated basis.
std::vector<Int> factor_translation(const Element& t, const AffineContext& ctx, int bound);

struct TranslationRow {
  std::string t_word;
  bool dominant = false;
  std::string coset_word;           // canonical word of coset_rep(t)
  std::string jpi_word;             // canonical word of jpi(coset_rep(t))
  std::vector<Int> factorization;   // of t when dominant and a basis exists
};

// One row per translation of length <= max_len, sorted by (length, word).
std::vector<TranslationRow> translation_table(const AffineContext& ctx, int max_len);

}  // namespace nilweyl
