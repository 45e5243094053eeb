#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nilweyl/group.hpp"

namespace nilweyl {

// A group element in the geometric representation on the simple-root basis:
// column j of act() holds the coordinates of w(alpha_j). The inverse matrix
// is carried alongside so that both descent sets are sign tests on columns
// and inversion is a swap. All entries are exact integers.
class Element {
 public:
  Element() = default;

  static Element identity(const Group& g);

  const Group& group() const { return g_; }
  int rank() const { return g_.rank(); }
  bool is_identity() const;

  Int act(int i, int j) const { return fwd_[idx(i, j)]; }
  Int act_inv(int i, int j) const { return inv_[idx(i, j)]; }
  const std::vector<Int>& act_matrix() const { return fwd_; }

  Element mul_gen(Gen s) const;  // w * s
  Element gen_mul(Gen s) const;  // s * w

  // |ws| < |w|, read off the sign of column s of the action matrix.
  bool right_descent(Gen s) const;
  // |sw| < |w|, same test on the inverse matrix.
  bool left_descent(Gen s) const;

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }
  std::size_t hash() const;

 private:
  Group g_;
  std::vector<Int> fwd_, inv_;
  std::size_t idx(int i, int j) const { return std::size_t(i - 1) * g_.rank() + (j - 1); }
  void check_gen(Gen s) const;
  friend Element multiply(const Element&, const Element&);
  friend Element inverse(const Element&);
};

struct ElementHash {
  std::size_t operator()(const Element& a) const { return a.hash(); }
};

Element from_word(const Group& g, const Word& w);
Element from_word(const Group& g, const std::string& w);

Element multiply(const Element& a, const Element& b);
Element inverse(const Element& a);

// Minimal word length; computed by stripping left descents, memoized in the
// group's shared cache.
int length(const Element& a);

std::vector<Gen> left_descents(const Element& a);
std::vector<Gen> right_descents(const Element& a);

// Lexicographically smallest reduced word: repeatedly strip the smallest
// left descent.
Word canonical_word(const Element& a);
std::string canonical_string(const Element& a);

// Order used everywhere output must be deterministic: by length, then by
// canonical word lexicographically.
bool element_less(const Element& a, const Element& b);

// Elements grouped by length, ball[k] = all elements of length k. Level
// order is deterministic. Lengths are seeded into the group memo.
std::vector<std::vector<Element>> ball(const Group& g, int max_len);

// Every element of a finite group; raises NotFiniteError if lengths exceed cap.
std::vector<Element> full_group(const Group& g, int cap = 4096);

}  // namespace nilweyl
