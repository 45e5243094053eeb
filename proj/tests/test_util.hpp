#pragma once

// Brute-force oracles for the test suite. Everything here enumerates words
// directly and never consults the library's length, descent, or canonical
// word machinery, so agreement with the library is a meaningful check.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "nilweyl/element.hpp"
#include "nilweyl/group.hpp"

namespace oracle {

using nilweyl::Element;
using nilweyl::Gen;
using nilweyl::Group;
using nilweyl::Int;
using nilweyl::Word;

// Elements are keyed by their raw action matrix.
using Key = std::vector<Int>;

// Breadth-first enumeration of all products of generators, shortest words
// first and lexicographically smallest within a length. min_word therefore
// holds, per element, its length and its lex-least reduced word.
struct WordBall {
  std::map<Key, Word> min_word;
  std::vector<std::pair<Element, Word>> order;  // discovery order

  int length_of(const Element& x) const {
    auto it = min_word.find(x.act_matrix());
    return it == min_word.end() ? -1 : int(it->second.size());
  }
  const Word* word_of(const Element& x) const {
    auto it = min_word.find(x.act_matrix());
    return it == min_word.end() ? nullptr : &it->second;
  }
};

inline WordBall word_ball(const Group& g, int max_len) {
  WordBall b;
  Element e = Element::identity(g);
  b.min_word.emplace(e.act_matrix(), Word{});
  b.order.push_back({e, Word{}});
  std::vector<std::pair<Element, Word>> level = {{e, Word{}}};
  for (int len = 0; len < max_len && !level.empty(); ++len) {
    std::vector<std::pair<Element, Word>> next;
    for (const auto& [x, w] : level) {
      for (Gen s = 1; s <= g.rank(); ++s) {
        Element y = x.mul_gen(s);
        if (b.min_word.count(y.act_matrix())) continue;
        Word wy = w;
        wy.push_back(s);
        b.min_word.emplace(y.act_matrix(), wy);
        b.order.push_back({y, wy});
        next.push_back({y, wy});
      }
    }
    level = std::move(next);
  }
  return b;
}

// All reduced words of x, by scanning every word of length len. Exponential;
// keep len small.
inline std::vector<Word> all_reduced_words(const Group& g, const Element& x, int len) {
  std::vector<Word> out;
  Word w;
  Element acc = Element::identity(g);
  auto rec = [&](auto&& self, const Element& cur) -> void {
    if (int(w.size()) == len) {
      if (cur == x) out.push_back(w);
      return;
    }
    for (Gen s = 1; s <= g.rank(); ++s) {
      w.push_back(s);
      self(self, cur.mul_gen(s));
      w.pop_back();
    }
  };
  rec(rec, acc);
  return out;
}

// Deterministic PRNG for reproducible pseudo-random cases.
struct SplitMix64 {
  std::uint64_t s;
  explicit SplitMix64(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// Random element of length exactly target_len, built by ascent steps. Works
// in infinite groups, where an ascent always exists.
inline Element random_ascent_walk(const Group& g, int target_len, SplitMix64& rng) {
  Element w = Element::identity(g);
  for (int k = 0; k < target_len; ++k) {
    std::vector<Gen> up;
    for (Gen s = 1; s <= g.rank(); ++s)
      if (!w.right_descent(s)) up.push_back(s);
    w = w.mul_gen(up[std::size_t(rng.below(up.size()))]);
  }
  return w;
}

}  // namespace oracle
