#include "nilweyl/involutions.hpp"

#include <algorithm>

#include "nilweyl/demazure.hpp"

namespace nilweyl {

bool is_twisted_involution(const Element& x, const Star& st) {
  return apply_star(st, x) == inverse(x);
}

TwistedInvolution::TwistedInvolution(Element x, Star st) : x_(std::move(x)), st_(std::move(st)) {
  if (x_.group() != st_.group()) throw Error("element and star belong to different groups");
  if (!is_twisted_involution(x_, st_)) throw Error("element is not a twisted involution");
}

namespace {

Gen smallest_left_descent(const Element& x) {
  for (Gen s = 1; s <= x.rank(); ++s)
    if (x.left_descent(s)) return s;
  throw Error("non-identity element with no descent");
}

unsigned phi_impl(const Element& x, const Star& st,
                  std::unordered_map<Element, unsigned, ElementHash>& memo) {
  if (x.is_identity()) return 0;
  auto it = memo.find(x);
  if (it != memo.end()) return it->second;
  Gen s = smallest_left_descent(x);
  Element sx = x.gen_mul(s);
  Element xs = x.mul_gen(st.image(s));
  unsigned val = (sx == xs) ? phi_impl(sx, st, memo) + 1
                            : phi_impl(sx.mul_gen(st.image(s)), st, memo);
  memo.emplace(x, val);
  return val;
}

}  // namespace

unsigned phi(const TwistedInvolution& x, PhiCache& cache) {
  if (cache.star() != x.star()) throw Error("phi cache built for a different star");
  return phi_impl(x.element(), x.star(), cache.memo());
}

unsigned phi(const TwistedInvolution& x) {
  PhiCache cache(x.star());
  return phi(x, cache);
}

unsigned norm(const TwistedInvolution& x, PhiCache& cache) {
  unsigned f = phi(x, cache);
  unsigned l = unsigned(length(x.element()));
  if ((l + f) % 2 != 0) throw Error("length and phi have different parity");
  return (l + f) / 2;
}

unsigned norm(const TwistedInvolution& x) {
  PhiCache cache(x.star());
  return norm(x, cache);
}

SignedInvolution act_gen(Gen s, const SignedInvolution& v) {
  const Element& x = v.x.element();
  const Star& st = v.x.star();
  if (v.sign != 1 && v.sign != -1) throw Error("sign must be +1 or -1");
  if (x.left_descent(s)) return {-v.sign, v.x};
  Element sx = x.gen_mul(s);
  Element xs = x.mul_gen(st.image(s));
  if (sx == xs) return {v.sign, TwistedInvolution(sx, st)};
  return {v.sign, TwistedInvolution(sx.mul_gen(st.image(s)), st)};
}

SignedInvolution act_iterative(const Element& w, const TwistedInvolution& x) {
  if (w.group() != x.element().group()) throw Error("elements of different groups");
  Word letters = canonical_word(w);
  SignedInvolution v{1, x};
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) v = act_gen(*it, v);
  return v;
}

SignedInvolution act_closed(const Element& w, const TwistedInvolution& x) {
  if (w.group() != x.element().group()) throw Error("elements of different groups");
  Element target =
      demazure_product(demazure_product(w, x.element()), inverse(apply_star(x.star(), w)));
  TwistedInvolution tx(target, x.star());
  unsigned exp = unsigned(length(w)) + norm(x) + norm(tx);
  return {exp % 2 == 0 ? 1 : -1, tx};
}

TwistedInvolution pi(const Element& w, const Star& st) {
  return TwistedInvolution(demazure_product(w, inverse(apply_star(st, w))), st);
}

InvolutionSet enumerate_involutions(const Group& g, const Star& st, int max_len) {
  if (st.group() != g) throw Error("star built for a different group");
  if (max_len < 0) throw Error("negative length bound");
  struct Node {
    Element x;
    unsigned phi;
    int len;
  };
  std::vector<Node> nodes;
  std::vector<InvolutionEdge> edges;
  std::unordered_map<Element, int, ElementHash> index;
  std::vector<std::vector<int>> buckets(std::size_t(max_len) + 1);
  Element e = Element::identity(g);
  nodes.push_back({e, 0, 0});
  index.emplace(e, 0);
  buckets[0].push_back(0);
  for (int len = 0; len <= max_len; ++len) {
    // Buckets may grow ahead of the cursor but never at or behind it.
    for (std::size_t bi = 0; bi < buckets[std::size_t(len)].size(); ++bi) {
      int xi = buckets[std::size_t(len)][bi];
      Element x = nodes[std::size_t(xi)].x;
      unsigned xphi = nodes[std::size_t(xi)].phi;
      for (Gen s = 1; s <= g.rank(); ++s) {
        if (x.left_descent(s)) continue;
        Element sx = x.gen_mul(s);
        Element xs = x.mul_gen(st.image(s));
        bool commuting = (sx == xs);
        Element y = commuting ? sx : sx.mul_gen(st.image(s));
        int ylen = len + (commuting ? 1 : 2);
        unsigned yphi = commuting ? xphi + 1 : xphi;
        if (ylen > max_len) continue;
        auto it = index.find(y);
        int yi;
        if (it == index.end()) {
          if (length(y) != ylen) throw Error("ascent move produced an unexpected length");
          yi = int(nodes.size());
          nodes.push_back({y, yphi, ylen});
          index.emplace(y, yi);
          buckets[std::size_t(ylen)].push_back(yi);
        } else {
          yi = it->second;
          if (nodes[std::size_t(yi)].phi != yphi)
            throw Error("BFS phi labels disagree along two paths");
        }
        edges.push_back({xi, yi, s, commuting});
      }
    }
  }
  std::vector<int> order(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
  std::vector<Word> words(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) words[i] = canonical_word(nodes[i].x);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (nodes[std::size_t(a)].len != nodes[std::size_t(b)].len)
      return nodes[std::size_t(a)].len < nodes[std::size_t(b)].len;
    return words[std::size_t(a)] < words[std::size_t(b)];
  });
  std::vector<int> rank_of(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank_of[std::size_t(order[i])] = int(i);
  InvolutionSet out;
  out.entries.reserve(nodes.size());
  for (int oi : order)
    out.entries.push_back({TwistedInvolution(nodes[std::size_t(oi)].x, st), nodes[std::size_t(oi)].phi});
  for (InvolutionEdge ed : edges) {
    ed.from = rank_of[std::size_t(ed.from)];
    ed.to = rank_of[std::size_t(ed.to)];
    out.edges.push_back(ed);
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const InvolutionEdge& a, const InvolutionEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.s != b.s) return a.s < b.s;
    return a.to < b.to;
  });
  return out;
}

std::vector<Element> find_preimages(const TwistedInvolution& x, int max_len) {
  const Group& g = x.element().group();
  std::vector<Element> hits;
  for (const auto& level : ball(g, max_len))
    for (const Element& w : level)
      if (pi(w, x.star()) == x) hits.push_back(w);
  std::sort(hits.begin(), hits.end(), element_less);
  return hits;
}

}  // namespace nilweyl
