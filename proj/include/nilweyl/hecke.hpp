#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nilweyl/involutions.hpp"

namespace nilweyl {

// Polynomial in one variable u over the integers, dense coefficients with no
// trailing zeros. Arithmetic is overflow-checked.
class UPoly {
 public:
  UPoly() = default;  // zero
  explicit UPoly(Int c0);
  static UPoly monomial(Int coeff, int deg);
  static UPoly from_coeffs(std::vector<Int> c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  Int coeff(int k) const;
  Int at_zero() const { return coeff(0); }
  const std::vector<Int>& coeffs() const { return c_; }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  std::string str() const;  // "u^2-u-1"

 private:
  std::vector<Int> c_;
  void trim();
};

// Free Z[u]-combination of group elements (the T basis of the generic-u
// algebra). Zero terms are dropped on insertion.
class HVec {
 public:
  HVec() = default;
  static HVec basis(const Element& w);

  void add(const Element& w, const UPoly& p);
  const std::unordered_map<Element, UPoly, ElementHash>& terms() const { return terms_; }
  // Sorted by (length, canonical word); all deterministic output goes
  // through this.
  std::vector<std::pair<Element, UPoly>> sorted_terms() const;
  bool operator==(const HVec& o) const { return terms_ == o.terms_; }
  bool operator!=(const HVec& o) const { return !(*this == o); }

 private:
  std::unordered_map<Element, UPoly, ElementHash> terms_;
};

// Z[u]-combination of twisted involutions (the a basis of the module M).
// Keys are validated against the star on insertion.
class MVec {
 public:
  MVec() = default;
  explicit MVec(Star st) : st_(std::move(st)), has_star_(true) {}
  static MVec basis(const TwistedInvolution& x);

  const Star& star() const { return st_; }
  void add(const Element& x, const UPoly& p);
  const std::unordered_map<Element, UPoly, ElementHash>& terms() const { return terms_; }
  std::vector<std::pair<Element, UPoly>> sorted_terms() const;
  bool operator==(const MVec& o) const { return terms_ == o.terms_; }
  bool operator!=(const MVec& o) const { return !(*this == o); }

 private:
  Star st_;
  bool has_star_ = false;
  std::unordered_map<Element, UPoly, ElementHash> terms_;
};

// Left multiplication by the generator basis element:
//   T_s T_w = T_sw                     on an ascent,
//   T_s T_w = u^2 T_sw + (u^2-1) T_w   on a descent.
HVec hecke_mul_gen(Gen s, const HVec& v);

// Module action of a generator on a_x, by the four-case rule:
//   ascent,  sx = x s* :  u a_x + (u+1) a_sx
//   descent, sx = x s* :  (u^2-u-1) a_x + (u^2-u) a_sx
//   ascent,  sx != x s*:  a_{s x s*}
//   descent, sx != x s*:  (u^2-1) a_x + u^2 a_{s x s*}
MVec module_act_gen(Gen s, const MVec& v);

// Iterated action over the canonical word of w, rightmost letter first.
MVec module_act(const Element& w, const MVec& v);

// Evaluate every coefficient at u = 0 and drop zero terms.
HVec specialize_u0(const HVec& v);
MVec specialize_u0(const MVec& v);

// Product of T basis elements in the specialization at u = 0, where
// T_s T_w is T_sw on an ascent and -T_w on a descent. Folds the canonical
// word of w2 into w tracking the sign flips; the element agrees with the
// monoid product and the sign with (-1)^(|w|+|w2|+|w*w2|).
std::pair<int, Element> nil_product(const Element& w, const Element& w2);

// One JSON object per term: {"word": "...", "poly": [c0, c1, ...]}, sorted.
std::string mvec_to_json(const MVec& v);
std::string hvec_to_json(const HVec& v);

}  // namespace nilweyl
