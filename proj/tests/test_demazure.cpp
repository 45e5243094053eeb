#include <vector>

#include "doctest.h"
#include "nilweyl/demazure.hpp"
#include "nilweyl/star.hpp"
#include "test_util.hpp"

using namespace nilweyl;

namespace {

std::vector<Element> up_to_length(const Group& g, int max_len) {
  std::vector<Element> out;
  for (const auto& lv : ball(g, max_len))
    for (const Element& x : lv) out.push_back(x);
  return out;
}

// Fold one word into an accumulator by the ascent rule; the product itself
// is defined over the canonical word, so folding arbitrary reduced words is
// the independence check.
Element fold_word(Element acc, const Word& w) {
  for (Gen s : w) {
    Element next = acc.mul_gen(s);
    if (length(next) > length(acc)) acc = next;
  }
  return acc;
}

}  // namespace

TEST_SUITE("demazure") {

TEST_CASE("product examples") {
  Group a2 = build_group("A2");
  CHECK(demazure_product(from_word(a2, "12"), from_word(a2, "21")) == from_word(a2, "121"));
  CHECK(demazure_product(from_word(a2, "121"), from_word(a2, "121")) == from_word(a2, "121"));
  Group b2 = build_group("B2");
  CHECK(demazure_product(from_word(b2, "12"), from_word(b2, "12")) == from_word(b2, "1212"));
  Element w = from_word(a2, "21");
  Element e = Element::identity(a2);
  CHECK(demazure_product(w, e) == w);
  CHECK(demazure_product(e, w) == w);
  for (Gen s = 1; s <= 2; ++s) {
    Element gs = from_word(a2, Word{s});
    CHECK(demazure_product(gs, gs) == gs);
  }
  CHECK_THROWS_AS(demazure_product(from_word(a2, "1"), from_word(b2, "1")), Error);
}

TEST_CASE("associativity") {
  for (const char* name : {"A2", "B2"}) {
    Group g = build_group(name);
    auto elems = up_to_length(g, 4);
    for (const Element& a : elems)
      for (const Element& b : elems)
        for (const Element& c : elems)
          CHECK(demazure_product(demazure_product(a, b), c) ==
                demazure_product(a, demazure_product(b, c)));
  }
  // Affine triples, deterministic sample.
  Group aff = build_group("affine:A2");
  oracle::SplitMix64 rng(0x5eedau);
  for (int k = 0; k < 200; ++k) {
    Element a = oracle::random_ascent_walk(aff, int(rng.below(7)), rng);
    Element b = oracle::random_ascent_walk(aff, int(rng.below(7)), rng);
    Element c = oracle::random_ascent_walk(aff, int(rng.below(7)), rng);
    CHECK(demazure_product(demazure_product(a, b), c) ==
          demazure_product(a, demazure_product(b, c)));
  }
}

TEST_CASE("inverse and star laws") {
  for (const char* name : {"A2", "B2"}) {
    Group g = build_group(name);
    auto elems = up_to_length(g, 4);
    std::vector<Star> stars = {build_star(g, "id"), build_star(g, "minus-w0")};
    for (const Element& a : elems)
      for (const Element& b : elems) {
        Element ab = demazure_product(a, b);
        CHECK(inverse(ab) == demazure_product(inverse(b), inverse(a)));
        for (const Star& st : stars)
          CHECK(apply_star(st, ab) ==
                demazure_product(apply_star(st, a), apply_star(st, b)));
      }
  }
}

TEST_CASE("segment laws") {
  for (const char* name : {"A2", "B2"}) {
    Group g = build_group(name);
    auto elems = up_to_length(g, 4);
    for (const Element& a : elems)
      for (const Element& b : elems) {
        Element ab = demazure_product(a, b);
        CHECK(length(ab) >= std::max(length(a), length(b)));
        CHECK(is_initial_segment(a, ab));
        CHECK(is_final_segment(b, ab));
      }
  }
}

TEST_CASE("segment examples") {
  Group a2 = build_group("A2");
  CHECK(is_initial_segment(from_word(a2, "12"), from_word(a2, "121")));
  CHECK(is_initial_segment(from_word(a2, "21"), from_word(a2, "121")));
  CHECK_FALSE(is_initial_segment(from_word(a2, "121"), from_word(a2, "12")));
  CHECK(is_final_segment(from_word(a2, "21"), from_word(a2, "121")));
  CHECK(is_initial_segment(Element::identity(a2), from_word(a2, "1")));
}

TEST_CASE("product is independent of the reduced word folded") {
  for (const char* name : {"A2", "B2"}) {
    Group g = build_group(name);
    auto elems = up_to_length(g, 5);
    for (const Element& w : elems)
      for (const Element& w2 : elems) {
        Element expect = demazure_product(w, w2);
        for (const Word& rw : oracle::all_reduced_words(g, w2, length(w2)))
          CHECK(fold_word(w, rw) == expect);
      }
  }
}

TEST_CASE("folding either factor gives the same product") {
  // Symmetric variant: peel the left factor's letters onto w2 from the right.
  for (const char* name : {"A2", "B2"}) {
    Group g = build_group(name);
    auto elems = up_to_length(g, 5);
    for (const Element& w : elems)
      for (const Element& w2 : elems) {
        Element acc = w2;
        Word cw = canonical_word(w);
        for (auto it = cw.rbegin(); it != cw.rend(); ++it) {
          Element next = acc.gen_mul(*it);
          if (length(next) > length(acc)) acc = next;
        }
        CHECK(acc == demazure_product(w, w2));
      }
  }
}

TEST_CASE("dominant translations multiply by concatenation") {
  Group aff = build_group("affine:A1");
  Element t = from_word(aff, "21");
  CHECK(demazure_product(t, t) == multiply(t, t));
  CHECK(canonical_string(demazure_product(t, t)) == "2121");
}

}  // TEST_SUITE
