#include "nilweyl/affine.hpp"

#include <algorithm>

#include "nilweyl/demazure.hpp"

namespace nilweyl {

namespace {

struct BasisWords {
  std::vector<std::string> names;
  std::vector<Word> words;
};

// Desk-scale translation bases; dominance and commutation are revalidated in
// build_affine_context.
const BasisWords* basis_words(const std::string& preset) {
  static const std::unordered_map<std::string, BasisWords> table = {
      {"A1", {{"A"}, {{2, 1}}}},
      {"A2", {{"A", "B", "C"}, {{3, 1, 2, 1}, {3, 2, 1, 3, 2, 1}, {3, 1, 2, 3, 1, 2}}}},
  };
  auto it = table.find(preset);
  return it == table.end() ? nullptr : &it->second;
}

// Matrix of the reflection in the root with simple-root coordinates c:
// column j is alpha_j - <alpha_j, theta^vee> * c, where the pairing comes
// from the coroot coordinates cv.
bool matches_reflection(const Element& r, const std::vector<Int>& c, const std::vector<Int>& cv) {
  const Group& g = r.group();
  int n = g.rank();
  for (int j = 1; j <= n; ++j) {
    Int pair = 0;
    for (int i = 1; i <= n; ++i) pair = checked_add(pair, checked_mul(cv[i - 1], g.cartan(i, j)));
    for (int k = 1; k <= n; ++k) {
      Int want = checked_sub(k == j ? 1 : 0, checked_mul(pair, c[k - 1]));
      if (r.act(k, j) != want) return false;
    }
  }
  return true;
}

std::vector<Int> coroot_coords_of(const Group& g, const std::vector<Int>& c) {
  std::vector<Int> d = symmetrizer(g);
  int n = g.rank();
  Int norm = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      norm = checked_add(norm, checked_mul(checked_mul(c[i - 1], c[j - 1]),
                                           checked_mul(d[i - 1], g.cartan(i, j))));
  Int half = norm / 2;
  std::vector<Int> cv(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Int num = checked_mul(c[i - 1], d[i - 1]);
    if (half == 0 || num % half != 0) throw Error("root has no integral coroot");
    cv[i - 1] = num / half;
  }
  return cv;
}

Element power(const Element& base, Int e) {
  Element acc = Element::identity(base.group());
  for (Int i = 0; i < e; ++i) acc = multiply(acc, base);
  return acc;
}

}  // namespace

AffineContext build_affine_context(const std::string& finite_preset) {
  const PresetRoots* roots = preset_roots(finite_preset);
  if (!roots) throw Error("unknown finite preset: " + finite_preset);
  AffineContext ctx;
  ctx.finite = build_group(finite_preset);
  ctx.group = build_group("affine:" + finite_preset);
  int n = ctx.finite.rank();
  for (Gen s = 1; s <= n; ++s) ctx.j.push_back(s);

  // Registry validation: the tabulated reflection word must produce exactly
  // the reflection in the tabulated highest root.
  Element refl = from_word(ctx.finite, roots->highest_root_reflection);
  std::vector<Int> cv = coroot_coords_of(ctx.finite, roots->highest_root);
  if (!matches_reflection(refl, roots->highest_root, cv))
    throw Error("highest-root reflection word does not match the tabulated root");
  if (int(roots->highest_root_reflection.size()) != length(refl))
    throw Error("highest-root reflection word is not reduced");

  for (Gen s = 1; s <= n; ++s) ctx.proj_gen.push_back(Element::identity(ctx.finite).mul_gen(s));
  ctx.proj_gen.push_back(refl);

  // proj respects every relation of the affine presentation, so it extends
  // to the quotient homomorphism.
  for (Gen a = 1; a <= n + 1; ++a) {
    for (Gen b = a; b <= n + 1; ++b) {
      int m = ctx.group.bond(a, b);
      if (m == kInfiniteBond) continue;
      Element p = Element::identity(ctx.finite);
      for (int k = 0; k < m; ++k)
        p = multiply(p, multiply(ctx.proj_gen[std::size_t(a - 1)], ctx.proj_gen[std::size_t(b - 1)]));
      if (!p.is_identity()) throw Error("projection violates a braid relation");
    }
  }

  Star fin_star = build_star(ctx.finite, "minus-w0");
  std::vector<Gen> perm;
  for (Gen s = 1; s <= n; ++s) perm.push_back(fin_star.image(s));
  perm.push_back(n + 1);
  ctx.star = build_star(ctx.group, perm);
  ctx.parabolic = make_parabolic_context(ctx.group, ctx.j, ctx.star);
  ctx.w_j = ctx.parabolic.w_j;

  // The two defining identities of the star: conjugation by w_J on the
  // finite part, and inversion-conjugation on translations (checked on a
  // sample ball; the basis elements below extend the sample).
  for (Gen s : ctx.j) {
    Element gen = Element::identity(ctx.group).mul_gen(s);
    if (apply_star(ctx.star, gen) != multiply(multiply(ctx.w_j, gen), ctx.w_j))
      throw Error("star does not conjugate the finite part by w_J");
  }
  auto check_translation_star = [&](const Element& t) {
    if (apply_star(ctx.star, t) != multiply(multiply(ctx.w_j, inverse(t)), ctx.w_j))
      throw Error("star does not invert translations up to w_J conjugation");
  };
  for (const auto& level : ball(ctx.group, 6))
    for (const Element& w : level)
      if (is_translation(w, ctx)) check_translation_star(w);

  if (const BasisWords* bw = basis_words(finite_preset)) {
    ctx.basis_names = bw->names;
    for (const Word& w : bw->words) {
      Element t = from_word(ctx.group, w);
      if (!is_dominant_translation(t, ctx)) throw Error("basis element is not dominant");
      check_translation_star(t);
      ctx.basis.push_back(t);
    }
    for (std::size_t i = 0; i < ctx.basis.size(); ++i)
      for (std::size_t k = i + 1; k < ctx.basis.size(); ++k)
        if (multiply(ctx.basis[i], ctx.basis[k]) != multiply(ctx.basis[k], ctx.basis[i]))
          throw Error("basis elements do not commute");
  }
  return ctx;
}

Element linear_part(const Element& w, const AffineContext& ctx) {
  if (w.group() != ctx.group) throw Error("element of a different group");
  Element acc = Element::identity(ctx.finite);
  for (Gen s : canonical_word(w)) acc = multiply(acc, ctx.proj_gen[std::size_t(s - 1)]);
  return acc;
}

bool is_translation(const Element& w, const AffineContext& ctx) {
  return linear_part(w, ctx).is_identity();
}

bool is_dominant_translation(const Element& w, const AffineContext& ctx) {
  if (!is_translation(w, ctx)) return false;
  return length(multiply(ctx.w_j, w)) == length(ctx.w_j) + length(w);
}

Element coset_rep(const Element& t, const AffineContext& ctx) {
  if (!is_translation(t, ctx)) throw Error("coset_rep expects a translation");
  Element v = t;
  int guard = length(ctx.w_j) + 1;
  for (;;) {
    Gen pick = 0;
    for (Gen s : ctx.j)
      if (!v.left_descent(s)) {
        pick = s;
        break;
      }
    if (pick == 0) return v;
    v = v.gen_mul(pick);
    if (--guard < 0) throw Error("coset ascent failed to terminate");
  }
}

Element translation_of(const Element& v, const AffineContext& ctx) {
  Element lin = linear_part(v, ctx);
  Element lifted = from_word(ctx.group, canonical_word(lin));
  Element t = multiply(inverse(lifted), v);
  if (!is_translation(t, ctx)) throw Error("no translation in the coset");
  return t;
}

Element pi_prime(const Element& t, const AffineContext& ctx) {
  if (!is_translation(t, ctx)) throw Error("pi_prime expects a translation");
  TwistedInvolution y = jpi(coset_rep(t, ctx), ctx.parabolic);
  Element out = multiply(ctx.w_j, y.element());
  if (!is_dominant_translation(out, ctx))
    throw Error("pi_prime image is not a dominant translation");
  return out;
}

std::vector<Int> factor_translation(const Element& t, const AffineContext& ctx, int bound) {
  if (ctx.basis.empty()) throw Error("no translation basis tabulated for this type");
  if (!is_dominant_translation(t, ctx)) throw Error("factor_translation expects a dominant translation");
  if (bound < 0) throw Error("negative exponent bound");
  std::size_t k = ctx.basis.size();
  std::vector<int> base_len(k);
  for (std::size_t i = 0; i < k; ++i) base_len[i] = length(ctx.basis[i]);
  int target = length(t);
  std::vector<Int> exp(k, 0);
  for (;;) {
    // Dominant products add lengths, so only tuples of matching total length
    // need the full product comparison.
    Int total = 0;
    for (std::size_t i = 0; i < k; ++i) total += checked_mul(exp[i], base_len[i]);
    if (total == target) {
      Element p = Element::identity(ctx.group);
      for (std::size_t i = 0; i < k; ++i) p = multiply(p, power(ctx.basis[i], exp[i]));
      if (p == t) return exp;
    }
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (exp[i] < bound) {
        ++exp[i];
        for (std::size_t r = i + 1; r < k; ++r) exp[r] = 0;
        break;
      }
      if (i == 0) throw Error("no factorization within the exponent bound");
    }
  }
}

std::vector<TranslationRow> translation_table(const AffineContext& ctx, int max_len) {
  std::vector<Element> trans;
  for (const auto& level : ball(ctx.group, max_len))
    for (const Element& w : level)
      if (is_translation(w, ctx)) trans.push_back(w);
  std::sort(trans.begin(), trans.end(), element_less);
  std::vector<TranslationRow> rows;
  for (const Element& t : trans) {
    TranslationRow row;
    row.t_word = canonical_string(t);
    row.dominant = is_dominant_translation(t, ctx);
    Element rep = coset_rep(t, ctx);
    row.coset_word = canonical_string(rep);
    row.jpi_word = canonical_string(jpi(rep, ctx.parabolic).element());
    if (row.dominant && !ctx.basis.empty())
      row.factorization = factor_translation(t, ctx, max_len);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace nilweyl
