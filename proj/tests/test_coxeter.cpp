#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "nilweyl/element.hpp"
#include "nilweyl/group.hpp"
#include "nilweyl/star.hpp"
#include "test_util.hpp"

using namespace nilweyl;

TEST_SUITE("coxeter") {

// The convention gate: library length, descent sets, and canonical words
// must agree with plain word enumeration before anything else is trusted.
TEST_CASE("length, descents, canonical word match word enumeration") {
  for (const char* name : {"A2", "B2"}) {
    Group g = build_group(name);
    auto wb = oracle::word_ball(g, 6);
    for (const auto& [x, w] : wb.order) {
      CAPTURE(name);
      CAPTURE(format_word(g, w));
      CHECK(length(x) == int(w.size()));
      CHECK(canonical_word(x) == w);
      for (Gen s = 1; s <= g.rank(); ++s) {
        int dl = wb.length_of(x.gen_mul(s));
        REQUIRE(dl >= 0);
        CHECK((dl == int(w.size()) - 1) == x.left_descent(s));
        CHECK((dl == int(w.size()) + 1) == !x.left_descent(s));
        int dr = wb.length_of(x.mul_gen(s));
        CHECK((dr == int(w.size()) - 1) == x.right_descent(s));
      }
    }
  }
}

TEST_CASE("preset groups") {
  Group a2 = build_group("A2");
  CHECK(a2.rank() == 2);
  CHECK(a2.bond(1, 2) == 3);
  CHECK(a2.cartan(1, 2) == -1);

  Group aff1 = build_group("affine:A1");
  CHECK(aff1.rank() == 2);
  CHECK(aff1.bond(1, 2) == kInfiniteBond);
  CHECK(aff1.cartan(1, 2) == -2);
  CHECK(aff1.cartan(2, 1) == -2);

  Group aff2 = build_group("affine:A2");
  CHECK(aff2.rank() == 3);
  CHECK(aff2.bond(1, 2) == 3);
  CHECK(aff2.bond(1, 3) == 3);
  CHECK(aff2.bond(2, 3) == 3);

  Group g2 = build_group("G2");
  CHECK(g2.bond(1, 2) == 6);
  Group b2 = build_group("B2");
  CHECK(b2.bond(1, 2) == 4);
  Group f4 = build_group("F4");
  CHECK(f4.rank() == 4);
  CHECK(f4.bond(2, 3) == 4);

  CHECK_THROWS_AS(build_group("H3"), Error);
  CHECK_THROWS_AS(build_group("affine:Z9"), Error);
}

TEST_CASE("explicit cartan validation") {
  CHECK(build_group(2, {2, -1, -1, 2}).bond(1, 2) == 3);
  CHECK(build_group(2, {2, -1, -2, 2}).bond(1, 2) == 4);
  CHECK(build_group(2, {2, -1, -3, 2}).bond(1, 2) == 6);
  CHECK(build_group(2, {2, -1, -4, 2}).bond(1, 2) == kInfiniteBond);
  CHECK(build_group(2, {2, 0, 0, 2}).bond(1, 2) == 2);
  CHECK_THROWS_AS(build_group(2, {1, -1, -1, 2}), Error);   // diagonal
  CHECK_THROWS_AS(build_group(2, {2, 1, -1, 2}), Error);    // positive off-diagonal
  CHECK_THROWS_AS(build_group(2, {2, 0, -1, 2}), Error);    // zero not symmetric
  CHECK_THROWS_AS(build_group(2, {2, -1, -1}), Error);      // wrong size
}

TEST_CASE("group json round trip") {
  Group g = build_group("B2");
  Group h = group_from_json(group_to_json(g));
  CHECK(g == h);
  CHECK(h.name() == "B2");
  Group k = group_from_json(R"({"rank":2,"cartan":[[2,-1],[-1,2]]})");
  CHECK(k.bond(1, 2) == 3);
  CHECK_THROWS_AS(group_from_json("{"), Error);
  CHECK_THROWS_AS(group_from_json(R"({"rank":2})"), Error);
}

TEST_CASE("word parsing") {
  Group g = build_group("A2");
  CHECK(parse_word(g, "121") == Word{1, 2, 1});
  CHECK(parse_word(g, "") == Word{});
  CHECK(parse_word(g, "1,2,1") == Word{1, 2, 1});
  CHECK(format_word(g, {1, 2, 1}) == "121");
  CHECK_THROWS_AS(parse_word(g, "103"), Error);
  CHECK_THROWS_AS(parse_word(g, "13"), Error);
  CHECK_THROWS_AS(parse_word(g, "1,x"), Error);
}

TEST_CASE("from_word basics") {
  Group g = build_group("A2");
  CHECK(from_word(g, "").is_identity());
  CHECK(length(from_word(g, "")) == 0);
  CHECK(from_word(g, "121") == from_word(g, "212"));
  CHECK(from_word(g, "11").is_identity());
  CHECK_THROWS_AS(from_word(g, Word{3}), Error);
}

TEST_CASE("multiply and inverse") {
  Group g = build_group("A2");
  CHECK(multiply(from_word(g, "12"), from_word(g, "21")).is_identity());
  CHECK(inverse(from_word(g, "12")) == from_word(g, "21"));
  Group aff = build_group("affine:A1");
  Element t = from_word(aff, "21");
  CHECK(length(multiply(t, t)) == 4);
  Group b2 = build_group("B2");
  CHECK_THROWS_AS(multiply(from_word(g, "1"), from_word(b2, "1")), Error);
}

TEST_CASE("length examples") {
  Group g = build_group("A2");
  CHECK(length(from_word(g, "121")) == 3);
  CHECK(length(from_word(g, "11")) == 0);
  Group aff = build_group("affine:A1");
  CHECK(length(from_word(aff, "2121")) == 4);
}

TEST_CASE("descent sets") {
  Group g = build_group("A2");
  CHECK(left_descents(from_word(g, "121")) == std::vector<Gen>{1, 2});
  CHECK(left_descents(from_word(g, "12")) == std::vector<Gen>{1});
  CHECK(right_descents(from_word(g, "12")) == std::vector<Gen>{2});
  CHECK(left_descents(Element::identity(g)).empty());
}

TEST_CASE("canonical word examples") {
  Group g = build_group("A2");
  CHECK(canonical_string(from_word(g, "212")) == "121");
  CHECK(canonical_string(Element::identity(g)) == "");
  Group aff = build_group("affine:A2");
  CHECK(from_word(aff, "1213212") == from_word(aff, "1213121"));
  CHECK(canonical_string(from_word(aff, "1213212")) == "1213121");
}

TEST_CASE("canonical word is a normal form") {
  Group g = build_group("B2");
  for (const auto& lv : ball(g, 4))
    for (const Element& x : lv) {
      Word c = canonical_word(x);
      CHECK(from_word(g, c) == x);
      CHECK(canonical_word(from_word(g, c)) == c);
      CHECK(int(c.size()) == length(x));
    }
}

TEST_CASE("length subadditivity and parity") {
  for (const char* name : {"A2", "B2"}) {
    Group g = build_group(name);
    auto all = full_group(g);
    for (const Element& a : all)
      for (const Element& b : all) {
        int lab = length(multiply(a, b));
        CHECK(lab <= length(a) + length(b));
        CHECK((lab - length(a) - length(b)) % 2 == 0);
      }
  }
}

TEST_CASE("star construction and diagram checks") {
  Group a2 = build_group("A2");
  Star sw = build_star(a2, "minus-w0");
  CHECK(sw.image(1) == 2);
  CHECK(sw.image(2) == 1);
  Group a1 = build_group("A1");
  CHECK(build_star(a1, "minus-w0").is_identity_perm());
  Group b2 = build_group("B2");
  CHECK(build_star(b2, "minus-w0").is_identity_perm());

  Group aff = build_group("affine:A2");
  Star st = build_star(aff, std::vector<Gen>{2, 1, 3});
  CHECK(st.image(3) == 3);
  CHECK_THROWS_AS(build_star(aff, std::vector<Gen>{2, 3, 1}), Error);  // not an involution
  Group b3 = build_group("B3");
  CHECK_THROWS_AS(build_star(b3, std::vector<Gen>{3, 2, 1}), Error);  // breaks bonds
}

TEST_CASE("apply_star") {
  Group aff = build_group("affine:A2");
  Star st = build_star(aff, std::vector<Gen>{2, 1, 3});
  CHECK(apply_star(st, from_word(aff, "1213")) == from_word(aff, "2123"));
  CHECK(apply_star(st, Element::identity(aff)).is_identity());

  Group a2 = build_group("A2");
  Star sw = build_star(a2, "minus-w0");
  CHECK(apply_star(sw, from_word(a2, "121")) == from_word(a2, "212"));

  // Automorphism laws over the whole group.
  auto all = full_group(a2);
  for (const Element& a : all) {
    CHECK(length(apply_star(sw, a)) == length(a));
    CHECK(apply_star(sw, apply_star(sw, a)) == a);
    for (const Element& b : all)
      CHECK(apply_star(sw, multiply(a, b)) ==
            multiply(apply_star(sw, a), apply_star(sw, b)));
  }
}

TEST_CASE("root sign coherence") {
  for (const char* name : {"A2", "B2", "G2", "affine:A2"}) {
    Group g = build_group(name);
    for (const auto& lv : ball(g, 8))
      for (const Element& x : lv)
        for (int j = 1; j <= g.rank(); ++j) {
          bool pos = false, neg = false;
          for (int i = 1; i <= g.rank(); ++i) {
            pos = pos || x.act(i, j) > 0;
            neg = neg || x.act(i, j) < 0;
          }
          CHECK(!(pos && neg));
          CHECK((pos || neg));
        }
  }
}

TEST_CASE("ball levels and group order") {
  Group a2 = build_group("A2");
  auto lv = ball(a2, 3);
  REQUIRE(lv.size() == 4);
  CHECK(lv[0].size() == 1);
  CHECK(lv[1].size() == 2);
  CHECK(lv[2].size() == 2);
  CHECK(lv[3].size() == 1);
  CHECK(full_group(a2).size() == 6);
  CHECK(full_group(build_group("B2")).size() == 8);
  CHECK(full_group(build_group("G2")).size() == 12);
  CHECK(full_group(build_group("A3")).size() == 24);
  CHECK_THROWS_AS(full_group(build_group("affine:A1"), 20), NotFiniteError);
}

TEST_CASE("element order is deterministic") {
  Group g = build_group("B2");
  auto all = full_group(g);
  std::sort(all.begin(), all.end(), element_less);
  std::vector<std::string> words;
  for (const Element& x : all) words.push_back(canonical_string(x));
  CHECK(words == std::vector<std::string>{"", "1", "2", "12", "21", "121", "212", "1212"});
}

TEST_CASE("overflow is detected, not wrapped") {
  Group aff = build_group("affine:A1");
  Element t = from_word(aff, "21");
  CHECK_THROWS_AS(
      [&] {
        Element x = t;
        for (int k = 0; k < 80; ++k) x = multiply(x, x);
        return x;
      }(),
      OverflowError);
}

TEST_CASE("symmetrizer") {
  CHECK(symmetrizer(build_group("A2")) == std::vector<Int>{1, 1});
  CHECK(symmetrizer(build_group("B2")) == std::vector<Int>{2, 1});
  CHECK(symmetrizer(build_group("G2")) == std::vector<Int>{3, 1});
  CHECK(symmetrizer(build_group("C3")) == std::vector<Int>{1, 1, 2});
}

}  // TEST_SUITE
