#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "nilweyl/affine.hpp"
#include "nilweyl/demazure.hpp"
#include "test_util.hpp"

using namespace nilweyl;

namespace {

Element power(const Element& t, int m) {
  Element r = Element::identity(t.group());
  for (int k = 0; k < m; ++k) r = multiply(r, t);
  return r;
}

std::vector<Element> translations_up_to(const AffineContext& ctx, int max_len,
                                        bool dominant_only) {
  std::vector<Element> out;
  for (const auto& lv : ball(ctx.group, max_len))
    for (const Element& t : lv) {
      if (!is_translation(t, ctx)) continue;
      if (dominant_only && !is_dominant_translation(t, ctx)) continue;
      out.push_back(t);
    }
  return out;
}

}  // namespace

TEST_SUITE("affine") {

TEST_CASE("registry data validates for every finite preset") {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4",
                           "D4", "G2", "F4"}) {
    CAPTURE(name);
    AffineContext ctx = build_affine_context(name);
    CHECK(ctx.group.rank() == ctx.finite.rank() + 1);
    CHECK(int(ctx.j.size()) == ctx.finite.rank());
  }
  CHECK_THROWS_AS(build_affine_context("Z9"), Error);
  CHECK(preset_roots("A2") != nullptr);
  CHECK(preset_roots("affine:A1") == nullptr);
}

TEST_CASE("context shape for the two table types") {
  AffineContext a1 = build_affine_context("A1");
  CHECK(a1.star.is_identity_perm());
  CHECK(a1.w_j == from_word(a1.group, "1"));
  CHECK(a1.proj_gen[1] == from_word(a1.finite, "1"));
  CHECK(a1.basis_names == std::vector<std::string>{"A"});
  CHECK(a1.basis[0] == from_word(a1.group, "21"));

  AffineContext a2 = build_affine_context("A2");
  CHECK(a2.star.image(1) == 2);
  CHECK(a2.star.image(2) == 1);
  CHECK(a2.star.image(3) == 3);
  CHECK(a2.w_j == from_word(a2.group, "121"));
  CHECK(a2.basis_names == std::vector<std::string>{"A", "B", "C"});
  CHECK(a2.basis[0] == from_word(a2.group, "3121"));
  CHECK(a2.basis[1] == from_word(a2.group, "321321"));
  CHECK(a2.basis[2] == from_word(a2.group, "312312"));
}

TEST_CASE("linear part") {
  AffineContext a1 = build_affine_context("A1");
  CHECK(linear_part(from_word(a1.group, "21"), a1).is_identity());
  CHECK(linear_part(from_word(a1.group, "1"), a1) == from_word(a1.finite, "1"));
  AffineContext a2 = build_affine_context("A2");
  CHECK(linear_part(from_word(a2.group, "3121"), a2).is_identity());
  CHECK(linear_part(from_word(a2.group, "3"), a2) == from_word(a2.finite, "121"));
  // Multiplicative over products.
  oracle::SplitMix64 rng(0xabcdu);
  for (int k = 0; k < 50; ++k) {
    Element v = oracle::random_ascent_walk(a2.group, int(rng.below(7)), rng);
    Element w = oracle::random_ascent_walk(a2.group, int(rng.below(7)), rng);
    CHECK(linear_part(multiply(v, w), a2) ==
          multiply(linear_part(v, a2), linear_part(w, a2)));
  }
}

TEST_CASE("translation predicates") {
  AffineContext a1 = build_affine_context("A1");
  Element a = from_word(a1.group, "21");
  CHECK(is_translation(a, a1));
  CHECK(is_dominant_translation(a, a1));
  Element anti = from_word(a1.group, "12");
  CHECK(is_translation(anti, a1));
  CHECK_FALSE(is_dominant_translation(anti, a1));
  CHECK(is_dominant_translation(Element::identity(a1.group), a1));
  CHECK_FALSE(is_translation(from_word(a1.group, "1"), a1));
}

TEST_CASE("coset representatives") {
  AffineContext a1 = build_affine_context("A1");
  CHECK(coset_rep(Element::identity(a1.group), a1) == a1.w_j);
  CHECK(coset_rep(from_word(a1.group, "21"), a1) == from_word(a1.group, "121"));

  AffineContext a2 = build_affine_context("A2");
  CHECK(coset_rep(from_word(a2.group, "3121"), a2) == from_word(a2.group, "1213121"));

  for (const AffineContext* ctx : {&a1, &a2})
    for (const Element& t : translations_up_to(*ctx, 8, false)) {
      Element v = coset_rep(t, *ctx);
      for (Gen s : ctx->j) CHECK(v.left_descent(s));
      CHECK(translation_of(v, *ctx) == t);
    }
}

TEST_CASE("coset bijection within length 12") {
  for (const char* name : {"A1", "A2"}) {
    AffineContext ctx = build_affine_context(name);
    std::map<std::vector<Int>, int> image;
    for (const Element& t : translations_up_to(ctx, 12, false)) {
      Element v = coset_rep(t, ctx);
      CHECK(++image[v.act_matrix()] == 1);  // injective
    }
    // Every maximal left-coset representative arises from its translation.
    for (const auto& lv : ball(ctx.group, 12))
      for (const Element& v : lv) {
        if (!is_in_jw(v, ctx.parabolic)) continue;
        Element t = translation_of(v, ctx);
        CHECK(is_translation(t, ctx));
        CHECK(coset_rep(t, ctx) == v);
      }
  }
}

TEST_CASE("dominant translation laws") {
  for (const char* name : {"A1", "A2"}) {
    AffineContext ctx = build_affine_context(name);
    auto dom16 = translations_up_to(ctx, 16, true);
    CHECK(dom16.size() > 3);
    for (const Element& t : dom16) {
      Element conj = multiply(multiply(ctx.w_j, t), ctx.w_j);
      CHECK(length(conj) == length(t));
      CHECK(multiply(ctx.w_j, t) == demazure_product(conj, ctx.w_j));
    }
    auto dom12 = translations_up_to(ctx, 12, true);
    for (const Element& t : dom12)
      for (const Element& t2 : dom12) {
        Element tt = multiply(t, t2);
        CHECK(is_dominant_translation(tt, ctx));
        CHECK(length(tt) == length(t) + length(t2));
        CHECK(demazure_product(t, t2) == tt);
      }
  }
}

TEST_CASE("squaring map") {
  AffineContext a1 = build_affine_context("A1");
  CHECK(pi_prime(Element::identity(a1.group), a1).is_identity());
  Element a = from_word(a1.group, "21");
  CHECK(pi_prime(a, a1) == multiply(a, a));
  // Antidominant input transported through the coset bijection.
  CHECK(pi_prime(from_word(a1.group, "12"), a1) == a);

  for (const char* name : {"A1", "A2"}) {
    AffineContext ctx = build_affine_context(name);
    for (const Element& t : translations_up_to(ctx, 16, true))
      CHECK(pi_prime(t, ctx) == multiply(t, t));
  }
}

TEST_CASE("maximal two sided representatives are exactly w_J times dominants") {
  for (const char* name : {"A1", "A2"}) {
    AffineContext ctx = build_affine_context(name);
    std::set<std::vector<Int>> two_sided;
    for (const auto& lv : ball(ctx.group, 14))
      for (const Element& w : lv)
        if (is_in_jw(w, ctx.parabolic) && is_in_wjstar(w, ctx.parabolic))
          two_sided.insert(w.act_matrix());
    std::set<std::vector<Int>> from_dominants;
    int budget = 14 - length(ctx.w_j);
    for (const Element& t : translations_up_to(ctx, budget, true))
      from_dominants.insert(multiply(ctx.w_j, t).act_matrix());
    CHECK(two_sided == from_dominants);
  }
}

TEST_CASE("translation basis laws") {
  AffineContext a2 = build_affine_context("A2");
  const Element& a = a2.basis[0];
  const Element& b = a2.basis[1];
  const Element& c = a2.basis[2];
  for (const Element* t : {&a, &b, &c}) CHECK(is_dominant_translation(*t, a2));
  CHECK(multiply(a, b) == multiply(b, a));
  CHECK(multiply(a, c) == multiply(c, a));
  CHECK(multiply(b, c) == multiply(c, b));
  CHECK(power(a, 3) == multiply(b, c));
}

TEST_CASE("factorization of dominant translations") {
  AffineContext a1 = build_affine_context("A1");
  CHECK(factor_translation(Element::identity(a1.group), a1, 5) == std::vector<Int>{0});
  Element a = a1.basis[0];
  CHECK(factor_translation(multiply(a, a), a1, 5) == std::vector<Int>{2});
  CHECK_THROWS_AS(factor_translation(a, a1, 0), Error);
  CHECK_THROWS_AS(factor_translation(from_word(a1.group, "12"), a1, 5), Error);

  AffineContext a2 = build_affine_context("A2");
  Element bc = multiply(a2.basis[1], a2.basis[2]);
  auto f = factor_translation(bc, a2, 4);
  REQUIRE(f.size() == 3);
  Element prod = Element::identity(a2.group);
  for (std::size_t i = 0; i < 3; ++i) prod = multiply(prod, power(a2.basis[i], int(f[i])));
  CHECK(prod == bc);

  for (const Element& t : translations_up_to(a2, 12, true)) {
    auto e = factor_translation(t, a2, 4);
    Element p = Element::identity(a2.group);
    for (std::size_t i = 0; i < 3; ++i) p = multiply(p, power(a2.basis[i], int(e[i])));
    CHECK(p == t);
  }
}

TEST_CASE("rank one table") {
  AffineContext ctx = build_affine_context("A1");
  Element one = from_word(ctx.group, "1");
  Element two = from_word(ctx.group, "2");
  Element a = ctx.basis[0];
  for (int m = 0; m <= 8; ++m) {
    CAPTURE(m);
    Element t = power(a, m);
    CHECK(jpi(multiply(one, t), ctx.parabolic).element() ==
          multiply(one, power(a, 2 * m)));
    CHECK(jpi(multiply(multiply(one, t), two), ctx.parabolic).element() ==
          multiply(one, power(a, 2 * m + 1)));
  }
}

TEST_CASE("rank two table") {
  AffineContext ctx = build_affine_context("A2");
  Element head = from_word(ctx.group, "121");
  const Element& a = ctx.basis[0];
  const Element& b = ctx.basis[1];
  const Element& c = ctx.basis[2];
  auto abc = [&](int m, int n, int p) {
    return multiply(power(a, m), multiply(power(b, n), power(c, p)));
  };
  struct Form {
    const char* suffix;
    int da, db, dc;  // exponent shifts over (2m, 2n, 2p)
  };
  const Form forms[] = {{"", 0, 0, 0},    {"3", 1, 0, 0},   {"31", 0, 0, 1},
                        {"32", 0, 1, 0},  {"321", 2, 0, 0}, {"312", 2, 0, 0}};
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (int p = 0; p <= 2; ++p) {
        Element t = abc(m, n, p);
        for (const Form& f : forms) {
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(p);
          CAPTURE(f.suffix);
          Element w = multiply(multiply(head, t), from_word(ctx.group, f.suffix));
          Element expect = multiply(head, abc(2 * m + f.da, 2 * n + f.db, 2 * p + f.dc));
          CHECK(jpi(w, ctx.parabolic).element() == expect);
        }
        // The two length three suffixes collide.
        Element w321 = multiply(multiply(head, t), from_word(ctx.group, "321"));
        Element w312 = multiply(multiply(head, t), from_word(ctx.group, "312"));
        CHECK(w321 != w312);
        CHECK(jpi(w321, ctx.parabolic).element() == jpi(w312, ctx.parabolic).element());
      }
}

TEST_CASE("translation table rows") {
  AffineContext ctx = build_affine_context("A1");
  auto rows = translation_table(ctx, 6);
  REQUIRE(!rows.empty());
  CHECK(rows[0].t_word == "");
  CHECK(rows[0].dominant);
  CHECK(rows[0].coset_word == "1");
  CHECK(rows[0].jpi_word == "1");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const TranslationRow& r = rows[i];
    Element t = from_word(ctx.group, r.t_word);
    CHECK(is_translation(t, ctx));
    CHECK(r.dominant == is_dominant_translation(t, ctx));
    CHECK(canonical_string(coset_rep(t, ctx)) == r.coset_word);
    if (i) {
      const TranslationRow& q = rows[i - 1];
      CHECK((q.t_word.size() < r.t_word.size() ||
             (q.t_word.size() == r.t_word.size() && q.t_word < r.t_word)));
    }
  }
}

}  // TEST_SUITE
