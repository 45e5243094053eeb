#pragma once

#include <unordered_map>
#include <vector>

#include "nilweyl/star.hpp"

namespace nilweyl {

bool is_twisted_involution(const Element& x, const Star& st);

// An element x with x* = x^-1. The constructor enforces the invariant.
class TwistedInvolution {
 public:
  TwistedInvolution(Element x, Star st);

  const Element& element() const { return x_; }
  const Star& star() const { return st_; }

  bool operator==(const TwistedInvolution& o) const { return st_ == o.st_ && x_ == o.x_; }
  bool operator!=(const TwistedInvolution& o) const { return !(*this == o); }

 private:
  Element x_;
  Star st_;
};

// A basis vector of the specialized module with a sign: sign * a_x.
struct SignedInvolution {
  int sign = 1;  // +1 or -1
  TwistedInvolution x;
};

class PhiCache {
 public:
  explicit PhiCache(Star st) : st_(std::move(st)) {}
  const Star& star() const { return st_; }
  std::unordered_map<Element, unsigned, ElementHash>& memo() { return memo_; }

 private:
  Star st_;
  std::unordered_map<Element, unsigned, ElementHash> memo_;
};

// Descent recursion: phi(e) = 0; pick a left descent s of x, then
//   phi(x) = phi(sx) + 1     when sx = x s*,
//   phi(x) = phi(s x s*)     otherwise (length drops by 2).
// The value is independent of the descent chosen. |x| == phi(x) (mod 2).
unsigned phi(const TwistedInvolution& x);
unsigned phi(const TwistedInvolution& x, PhiCache& cache);

// (|x| + phi(x)) / 2.
unsigned norm(const TwistedInvolution& x);
unsigned norm(const TwistedInvolution& x, PhiCache& cache);

// Action of a generator basis element on sign * a_x:
//   ascent, sx = x s* : sign * a_{sx}
//   ascent, sx != x s*: sign * a_{s x s*}
//   descent           : -sign * a_x
SignedInvolution act_gen(Gen s, const SignedInvolution& v);

// Action of the basis element indexed by w, evaluated letter by letter over
// the canonical word of w (rightmost letter first).
SignedInvolution act_iterative(const Element& w, const TwistedInvolution& x);

// Closed form of the same action: target = w * x * (w*)^-1 (monoid products)
// with sign (-1)^(|w| + ||x|| + ||target||).
SignedInvolution act_closed(const Element& w, const TwistedInvolution& x);

// pi(w) = w * (w*)^-1, always a twisted involution; surjective onto them.
TwistedInvolution pi(const Element& w, const Star& st);

struct InvolutionEntry {
  TwistedInvolution x;
  unsigned phi = 0;  // computed along BFS edges
};

// BFS edge x -> y by generator s; commuting records which ascent case fired
// (true: y = sx = x s*, length +1; false: y = s x s*, length +2).
struct InvolutionEdge {
  int from = 0, to = 0;
  Gen s = 0;
  bool commuting = false;
};

struct InvolutionSet {
  std::vector<InvolutionEntry> entries;  // sorted by (length, canonical word)
  std::vector<InvolutionEdge> edges;     // indices into entries
};

// All twisted involutions of length <= max_len, found by BFS over the two
// ascent moves starting from the identity.
InvolutionSet enumerate_involutions(const Group& g, const Star& st, int max_len);

// All w with |w| <= max_len and pi(w) = x, sorted by (length, canonical word).
std::vector<Element> find_preimages(const TwistedInvolution& x, int max_len);

}  // namespace nilweyl
