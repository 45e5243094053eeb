#include "nilweyl/hecke.hpp"

#include <algorithm>
#include <sstream>

namespace nilweyl {

UPoly::UPoly(Int c0) {
  if (c0 != 0) c_.push_back(c0);
}

UPoly UPoly::monomial(Int coeff, int deg) {
  UPoly p;
  if (coeff != 0) {
    p.c_.assign(std::size_t(deg) + 1, 0);
    p.c_[std::size_t(deg)] = coeff;
  }
  return p;
}

UPoly UPoly::from_coeffs(std::vector<Int> c) {
  UPoly p;
  p.c_ = std::move(c);
  p.trim();
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int UPoly::coeff(int k) const {
  return (k >= 0 && k < int(c_.size())) ? c_[std::size_t(k)] : 0;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (Int& v : r.c_) v = checked_neg(v);
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = checked_add(a.coeff(int(i)), b.coeff(int(i)));
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(a.c_[i], b.c_[j]));
  }
  r.trim();
  return r;
}

std::string UPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Int c = coeff(k);
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? "-" : "+");
    }
    Int mag = c < 0 ? -c : c;
    if (mag != 1 || k == 0) out << mag;
    if (k >= 1) out << "u";
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return out.str();
}

HVec HVec::basis(const Element& w) {
  HVec v;
  v.add(w, UPoly(1));
  return v;
}

void HVec::add(const Element& w, const UPoly& p) {
  if (p.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, p);
    return;
  }
  it->second = it->second + p;
  if (it->second.is_zero()) terms_.erase(it);
}

std::vector<std::pair<Element, UPoly>> HVec::sorted_terms() const {
  std::vector<std::pair<Element, UPoly>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return element_less(a.first, b.first); });
  return out;
}

MVec MVec::basis(const TwistedInvolution& x) {
  MVec v(x.star());
  v.add(x.element(), UPoly(1));
  return v;
}

void MVec::add(const Element& x, const UPoly& p) {
  if (!has_star_) throw Error("module vector has no star");
  if (p.is_zero()) return;
  auto it = terms_.find(x);
  if (it == terms_.end()) {
    if (!is_twisted_involution(x, st_)) throw Error("module basis index is not a twisted involution");
    terms_.emplace(x, p);
    return;
  }
  it->second = it->second + p;
  if (it->second.is_zero()) terms_.erase(it);
}

std::vector<std::pair<Element, UPoly>> MVec::sorted_terms() const {
  std::vector<std::pair<Element, UPoly>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return element_less(a.first, b.first); });
  return out;
}

HVec hecke_mul_gen(Gen s, const HVec& v) {
  HVec out;
  static const UPoly u_sq = UPoly::monomial(1, 2);
  static const UPoly u_sq_minus_1 = UPoly::from_coeffs({-1, 0, 1});
  for (const auto& [w, p] : v.terms()) {
    Element sw = w.gen_mul(s);
    if (!w.left_descent(s)) {
      out.add(sw, p);
    } else {
      out.add(sw, u_sq * p);
      out.add(w, u_sq_minus_1 * p);
    }
  }
  return out;
}

MVec module_act_gen(Gen s, const MVec& v) {
  MVec out(v.star());
  const Star& st = v.star();
  static const UPoly u = UPoly::monomial(1, 1);
  static const UPoly u_plus_1 = UPoly::from_coeffs({1, 1});
  static const UPoly u2_minus_u_minus_1 = UPoly::from_coeffs({-1, -1, 1});
  static const UPoly u2_minus_u = UPoly::from_coeffs({0, -1, 1});
  static const UPoly u2_minus_1 = UPoly::from_coeffs({-1, 0, 1});
  static const UPoly u2 = UPoly::monomial(1, 2);
  for (const auto& [x, p] : v.terms()) {
    Element sx = x.gen_mul(s);
    Element xs = x.mul_gen(st.image(s));
    bool commuting = (sx == xs);
    bool ascent = !x.left_descent(s);
    if (commuting && ascent) {
      out.add(x, u * p);
      out.add(sx, u_plus_1 * p);
    } else if (commuting) {
      out.add(x, u2_minus_u_minus_1 * p);
      out.add(sx, u2_minus_u * p);
    } else if (ascent) {
      out.add(sx.mul_gen(st.image(s)), p);
    } else {
      out.add(x, u2_minus_1 * p);
      out.add(sx.mul_gen(st.image(s)), u2 * p);
    }
  }
  return out;
}

MVec module_act(const Element& w, const MVec& v) {
  Word letters = canonical_word(w);
  MVec acc = v;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) acc = module_act_gen(*it, acc);
  return acc;
}

HVec specialize_u0(const HVec& v) {
  HVec out;
  for (const auto& [w, p] : v.terms()) out.add(w, UPoly(p.at_zero()));
  return out;
}

MVec specialize_u0(const MVec& v) {
  MVec out(v.star());
  for (const auto& [x, p] : v.terms()) out.add(x, UPoly(p.at_zero()));
  return out;
}

std::pair<int, Element> nil_product(const Element& w, const Element& w2) {
  if (w.group() != w2.group()) throw Error("elements of different groups");
  int sign = 1;
  Element acc = w;
  for (Gen s : canonical_word(w2)) {
    if (acc.right_descent(s))
      sign = -sign;
    else
      acc = acc.mul_gen(s);
  }
  return {sign, acc};
}

std::string mvec_to_json(const MVec& v) {
  std::ostringstream out;
  for (const auto& [x, p] : v.sorted_terms()) {
    out << "{\"word\":\"" << canonical_string(x) << "\",\"poly\":[";
    for (int k = 0; k <= p.degree(); ++k) {
      if (k) out << ",";
      out << p.coeff(k);
    }
    out << "]}\n";
  }
  return out.str();
}

std::string hvec_to_json(const HVec& v) {
  std::ostringstream out;
  for (const auto& [w, p] : v.sorted_terms()) {
    out << "{\"word\":\"" << canonical_string(w) << "\",\"poly\":[";
    for (int k = 0; k <= p.degree(); ++k) {
      if (k) out << ",";
      out << p.coeff(k);
    }
    out << "]}\n";
  }
  return out.str();
}

}  // namespace nilweyl
