#include "nilweyl/parabolic.hpp"

#include <algorithm>

#include "nilweyl/demazure.hpp"

namespace nilweyl {

namespace {

void check_subset(const Group& g, const std::vector<Gen>& j) {
  for (Gen s : j)
    if (s < 1 || s > g.rank()) throw Error("generator index out of range in J");
}

}  // namespace

Element longest_element(const Group& g, const std::vector<Gen>& j, int cap) {
  check_subset(g, j);
  Element w = Element::identity(g);
  int len = 0;
  for (;;) {
    Gen pick = 0;
    for (Gen s : j)
      if (!w.right_descent(s)) {
        pick = s;
        break;
      }
    if (pick == 0) return w;
    w = w.mul_gen(pick);
    if (++len > cap) throw NotFiniteError("parabolic subgroup exceeds length cap");
  }
}

ParabolicContext make_parabolic_context(const Group& g, std::vector<Gen> j, Star st, int cap) {
  if (st.group() != g) throw Error("star built for a different group");
  check_subset(g, j);
  std::sort(j.begin(), j.end());
  j.erase(std::unique(j.begin(), j.end()), j.end());
  ParabolicContext ctx;
  ctx.group = g;
  ctx.j = j;
  ctx.star = st;
  for (Gen s : j) ctx.j_star.push_back(st.image(s));
  std::sort(ctx.j_star.begin(), ctx.j_star.end());
  ctx.w_j = longest_element(g, ctx.j, cap);
  ctx.w_j_star = longest_element(g, ctx.j_star, cap);
  if (left_descents(ctx.w_j) != ctx.j || right_descents(ctx.w_j) != ctx.j)
    throw Error("longest element descent sets do not match J");
  if (length(ctx.w_j) != length(ctx.w_j_star))
    throw Error("longest elements of J and J* have different lengths");
  return ctx;
}

bool is_in_jw(const Element& w, const ParabolicContext& ctx) {
  if (w.group() != ctx.group) throw Error("element of a different group");
  return length(w) == length(ctx.w_j) + length(multiply(ctx.w_j, w));
}

bool is_in_wjstar(const Element& w, const ParabolicContext& ctx) {
  if (w.group() != ctx.group) throw Error("element of a different group");
  return length(w) == length(ctx.w_j_star) + length(multiply(w, ctx.w_j_star));
}

Element min_double_coset_rep(const Element& x, const ParabolicContext& ctx) {
  if (x.group() != ctx.group) throw Error("element of a different group");
  Element v = x;
  for (;;) {
    Gen pick = 0;
    for (Gen s : ctx.j)
      if (v.left_descent(s)) {
        pick = s;
        break;
      }
    if (pick != 0) {
      v = v.gen_mul(pick);
      continue;
    }
    for (Gen s : ctx.j_star)
      if (v.right_descent(s)) {
        pick = s;
        break;
      }
    if (pick == 0) return v;
    v = v.mul_gen(pick);
  }
}

Element max_double_coset_rep(const Element& z, const ParabolicContext& ctx) {
  return demazure_product(ctx.w_j, demazure_product(z, ctx.w_j_star));
}

TwistedInvolution jpi(const Element& w, const ParabolicContext& ctx) {
  if (!is_in_jw(w, ctx))
    throw Error("jpi precondition failed: w is not a maximal coset representative");
  TwistedInvolution x = pi(w, ctx.star);
  if (!is_in_jw(x.element(), ctx) || !is_in_wjstar(x.element(), ctx))
    throw Error("jpi image escaped the expected coset representatives");
  return x;
}

Element jpi_preimage(const TwistedInvolution& x, const ParabolicContext& ctx, int max_len) {
  if (x.star() != ctx.star) throw Error("twisted involution built for a different star");
  if (!is_in_jw(x.element(), ctx) || !is_in_wjstar(x.element(), ctx))
    throw Error("jpi_preimage needs a maximal double coset representative");
  Element z = min_double_coset_rep(x.element(), ctx);
  if (!is_twisted_involution(z, ctx.star))
    throw Error("minimal double coset representative is not a twisted involution");
  for (const auto& level : ball(ctx.group, max_len)) {
    for (const Element& e : level) {
      if (pi(e, ctx.star).element() != z) continue;
      Element w = demazure_product(ctx.w_j, e);
      if (jpi(w, ctx) != x) throw Error("jpi_preimage construction failed to land on x");
      return w;
    }
  }
  throw Error("no preimage found within the length bound");
}

}  // namespace nilweyl
