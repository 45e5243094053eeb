#include "nilweyl/demazure.hpp"

namespace nilweyl {

Element demazure_product(const Element& w, const Element& w2) {
  if (w.group() != w2.group()) throw Error("elements of different groups");
  Element acc = w;
  for (Gen s : canonical_word(w2))
    if (!acc.right_descent(s)) acc = acc.mul_gen(s);
  return acc;
}

bool is_initial_segment(const Element& w1, const Element& w2) {
  if (w1.group() != w2.group()) throw Error("elements of different groups");
  return length(w1) + length(multiply(inverse(w1), w2)) == length(w2);
}

bool is_final_segment(const Element& w1, const Element& w2) {
  return is_initial_segment(inverse(w1), inverse(w2));
}

}  // namespace nilweyl
