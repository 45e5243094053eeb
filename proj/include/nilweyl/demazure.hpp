#pragma once

#include "nilweyl/element.hpp"

namespace nilweyl {

// Monoid product w * w2: fold the canonical word of w2 into w left to right,
// appending a letter only when it increases length. Associative, with
// |w * w2| <= |w| + |w2| and equality exactly when the product is reduced.
Element demazure_product(const Element& w, const Element& w2);

// w1 is an initial segment of w2: some reduced word of w2 starts with a
// reduced word of w1, i.e. |w1| + |w1^-1 w2| = |w2|.
bool is_initial_segment(const Element& w1, const Element& w2);
bool is_final_segment(const Element& w1, const Element& w2);

}  // namespace nilweyl
