#include "nilweyl/star.hpp"

#include <algorithm>

#include "nilweyl/parabolic.hpp"

namespace nilweyl {

bool Star::is_identity_perm() const {
  for (Gen s = 1; s <= g_.rank(); ++s)
    if (image(s) != s) return false;
  return true;
}

Star build_star(const Group& g, const std::vector<Gen>& perm) {
  int n = g.rank();
  if (int(perm.size()) != n) throw Error("star permutation must cover every generator");
  std::vector<bool> hit(std::size_t(n), false);
  for (Gen v : perm) {
    if (v < 1 || v > n) throw Error("star permutation index out of range");
    if (hit[std::size_t(v - 1)]) throw Error("star permutation is not a bijection");
    hit[std::size_t(v - 1)] = true;
  }
  for (Gen s = 1; s <= n; ++s)
    if (perm[std::size_t(perm[std::size_t(s - 1)] - 1)] != s)
      throw Error("star permutation must be an involution");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (g.bond(perm[std::size_t(i - 1)], perm[std::size_t(j - 1)]) != g.bond(i, j))
        throw Error("star permutation does not preserve the Coxeter matrix");
  Star st;
  st.g_ = g;
  st.perm_ = perm;
  return st;
}

Star build_star(const Group& g, const std::string& kind) {
  if (kind == "id" || kind == "identity") {
    std::vector<Gen> perm(std::size_t(g.rank()));
    for (Gen s = 1; s <= g.rank(); ++s) perm[std::size_t(s - 1)] = s;
    return build_star(g, perm);
  }
  if (kind == "minus-w0") {
    std::vector<Gen> full(std::size_t(g.rank()));
    for (Gen s = 1; s <= g.rank(); ++s) full[std::size_t(s - 1)] = s;
    Element w0 = longest_element(g, full, 4096);
    std::vector<Gen> perm(std::size_t(g.rank()), 0);
    for (Gen s = 1; s <= g.rank(); ++s) {
      Element c = multiply(multiply(w0, Element::identity(g).mul_gen(s)), w0);
      Gen img = 0;
      for (Gen t = 1; t <= g.rank(); ++t)
        if (c == Element::identity(g).mul_gen(t)) {
          img = t;
          break;
        }
      if (img == 0) throw Error("conjugation by the longest element does not permute generators");
      perm[std::size_t(s - 1)] = img;
    }
    return build_star(g, perm);
  }
  throw Error("unknown star kind: " + kind);
}

Word apply_star(const Star& st, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Gen s : w) {
    if (s < 1 || s > st.group().rank()) throw Error("generator index out of range in star");
    out.push_back(st.image(s));
  }
  return out;
}

Element apply_star(const Star& st, const Element& a) {
  if (st.group() != a.group()) throw Error("star and element belong to different groups");
  return from_word(a.group(), apply_star(st, canonical_word(a)));
}

}  // namespace nilweyl
