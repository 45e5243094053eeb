#pragma once

#include <string>
#include <vector>

#include "nilweyl/element.hpp"

namespace nilweyl {

// An involutive diagram automorphism sigma of (W, S): a permutation of the
// generators with sigma^2 = id and m_{sigma(i), sigma(j)} = m_ij. Applied to
// elements letterwise on a reduced word.
class Star {
 public:
  Star() = default;

  const Group& group() const { return g_; }
  Gen image(Gen s) const { return perm_[std::size_t(s - 1)]; }
  bool is_identity_perm() const;
  const std::vector<Gen>& perm() const { return perm_; }

  bool operator==(const Star& o) const { return g_ == o.g_ && perm_ == o.perm_; }
  bool operator!=(const Star& o) const { return !(*this == o); }

 private:
  friend Star build_star(const Group&, const std::vector<Gen>&);
  Group g_;
  std::vector<Gen> perm_;
};

// kind: "id" (or "identity"), or "minus-w0" (conjugation by the longest
// element; finite groups only).
Star build_star(const Group& g, const std::string& kind);
Star build_star(const Group& g, const std::vector<Gen>& perm);

Word apply_star(const Star& st, const Word& w);
Element apply_star(const Star& st, const Element& a);

}  // namespace nilweyl
