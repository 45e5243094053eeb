#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "nilweyl/arith.hpp"

namespace nilweyl {

// Generators are 1-based; a word is a sequence of generator indices.
using Gen = int;
using Word = std::vector<Gen>;

// Bond value m_ij = 0 encodes an infinite bond.
constexpr int kInfiniteBond = 0;

// A Coxeter system presented by an integer generalized Cartan matrix C:
// C_ii = 2, off-diagonal entries <= 0, and C_ij = 0 iff C_ji = 0.
// The Coxeter matrix is derived from the products C_ij*C_ji.
//
// Group is an immutable value; copies share the underlying data, including a
// synchronized length memo used by element.cpp.
class Group {
 private:
  struct Data {
    int rank = 0;
    std::vector<Int> cartan;  // row-major
    std::vector<int> cox;
    std::string name;
    mutable std::mutex memo_mx;
    mutable std::unordered_map<std::string, int> length_memo;  // key: raw matrix bytes
  };

 public:
  Group() = default;

  int rank() const { return d_ ? d_->rank : 0; }
  Int cartan(int i, int j) const { return d_->cartan[idx(i, j)]; }
  // m_ij; diagonal is 1, kInfiniteBond means infinity.
  int bond(int i, int j) const { return d_->cox[idx(i, j)]; }
  const std::string& name() const { return d_->name; }

  bool valid() const { return static_cast<bool>(d_); }
  // Groups compare by Cartan matrix, not by identity of the shared data.
  bool operator==(const Group& o) const;
  bool operator!=(const Group& o) const { return !(*this == o); }

  // Length memo, keyed by the element's action matrix. Returns -1 on a miss.
  int memo_length(const std::vector<Int>& mat) const;
  void memo_store(const std::vector<Int>& mat, int len) const;

 private:
  friend Group build_group(int, const std::vector<Int>&, std::string);
  std::shared_ptr<const Data> d_;
  std::size_t idx(int i, int j) const { return std::size_t(i - 1) * d_->rank + (j - 1); }
};

// Validates the Cartan matrix and derives the Coxeter matrix.
Group build_group(int rank, const std::vector<Int>& cartan_row_major, std::string name = "");

// Presets: A1..A8, B2..B4, C3, C4, D4, G2, F4 and "affine:X" for each.
// The affine node is always the last generator index.
Group build_group(const std::string& preset);

// {"rank": n, "cartan": [[...], ...], "name": "..."} ("name" optional).
Group group_from_json(const std::string& json_text);
std::string group_to_json(const Group& g);

// Word notation: digit string for rank <= 9 ("121"), comma-separated indices
// for larger ranks ("1,2,12"). The empty string is the empty word. A comma
// form is accepted at any rank; a plain digit string is rejected for rank > 9.
Word parse_word(const Group& g, const std::string& text);
std::string format_word(const Group& g, const Word& w);

// Finite preset metadata used by the affine machinery: the highest root in
// simple-root coordinates and a word for the reflection in it. Both are
// registry data, revalidated against each other at affine-context build time.
struct PresetRoots {
  std::vector<Int> highest_root;
  Word highest_root_reflection;
};
// Returns nullptr for unknown or non-finite preset names.
const PresetRoots* preset_roots(const std::string& finite_preset);

// Symmetrizer of a Cartan matrix: smallest positive integers d with
// d_i C_ij = d_j C_ji. Requires a connected diagram (all presets are).
std::vector<Int> symmetrizer(const Group& g);

}  // namespace nilweyl
