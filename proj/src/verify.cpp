#include "nilweyl/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nilweyl/affine.hpp"
#include "nilweyl/demazure.hpp"
#include "nilweyl/hecke.hpp"

namespace nilweyl {
namespace {

// Accumulates one named check; keeps the first counterexample only.
class Prop {
 public:
  explicit Prop(std::string name) : name_(std::move(name)) {}

  void require(bool cond, const std::string& witness) {
    ++cases_;
    if (!cond && pass_) {
      pass_ = false;
      fail_ = "counterexample: " + witness;
    }
  }

  Check done() const {
    if (pass_) return {name_, true, std::to_string(cases_) + " cases"};
    return {name_, false, fail_};
  }

 private:
  std::string name_;
  bool pass_ = true;
  long cases_ = 0;
  std::string fail_;
};

std::string q(const Element& w) { return "\"" + canonical_string(w) + "\""; }

std::vector<Element> flat_ball(const Group& g, int max_len) {
  std::vector<Element> out;
  for (const auto& lv : ball(g, max_len))
    for (const Element& w : lv) out.push_back(w);
  return out;
}

std::vector<TwistedInvolution> involutions_in(const Group& g, const Star& st,
                                              int max_len) {
  std::vector<TwistedInvolution> out;
  InvolutionSet set = enumerate_involutions(g, st, max_len);
  for (const InvolutionEntry& e : set.entries) out.push_back(e.x);
  return out;
}

// Deterministic generator for reproducible sampling.
struct SplitMix64 {
  std::uint64_t s;
  explicit SplitMix64(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

Element random_walk(const Group& g, int target_len, SplitMix64& rng) {
  Element w = Element::identity(g);
  for (int k = 0; k < target_len; ++k) {
    std::vector<Gen> up;
    for (Gen s = 1; s <= Gen(g.rank()); ++s)
      if (!w.right_descent(s)) up.push_back(s);
    w = w.mul_gen(up[rng.below(up.size())]);
  }
  return w;
}

// Breadth-first search over words. Parents are visited in lexicographic
// order within each level, so the word recorded for an element is its
// lexicographically least reduced word; the level is its length. Both are
// independent of the descent-based routines under test.
struct WordSearch {
  std::map<std::vector<Int>, std::pair<int, Word>> info;
  const std::pair<int, Word>* find(const Element& w) const {
    auto it = info.find(w.act_matrix());
    return it == info.end() ? nullptr : &it->second;
  }
};

WordSearch word_search(const Group& g, int max_len) {
  WordSearch ws;
  std::vector<std::pair<Element, Word>> frontier;
  frontier.emplace_back(Element::identity(g), Word{});
  ws.info.emplace(frontier[0].first.act_matrix(), std::pair<int, Word>{0, {}});
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<Element, Word>> next;
    for (const auto& [w, word] : frontier)
      for (Gen s = 1; s <= Gen(g.rank()); ++s) {
        Element v = w.mul_gen(s);
        auto key = v.act_matrix();
        if (ws.info.count(key)) continue;
        Word nw = word;
        nw.push_back(s);
        ws.info.emplace(std::move(key), std::pair<int, Word>{len, nw});
        next.emplace_back(std::move(v), std::move(nw));
      }
    frontier = std::move(next);
  }
  return ws;
}

std::vector<Word> reduced_words(const Element& w) {
  if (w.is_identity()) return {Word{}};
  std::vector<Word> out;
  for (Gen s : left_descents(w))
    for (Word tail : reduced_words(w.gen_mul(s))) {
      Word full{s};
      full.insert(full.end(), tail.begin(), tail.end());
      out.push_back(std::move(full));
    }
  return out;
}

// phi computed from every descent at once; mismatched branches poison the
// value so the caller's comparison fails.
long phi_brute(const TwistedInvolution& x) {
  const Element& e = x.element();
  if (e.is_identity()) return 0;
  long value = -1;
  for (Gen s : left_descents(e)) {
    Element sx = e.gen_mul(s);
    Gen ss = x.star().image(s);
    long branch;
    if (sx == e.mul_gen(ss))
      branch = phi_brute(TwistedInvolution(sx, x.star())) + 1;
    else
      branch = phi_brute(TwistedInvolution(sx.mul_gen(ss), x.star()));
    if (value == -1) value = branch;
    if (branch != value) return -1000000;
  }
  return value;
}

// ---------------------------------------------------------------------------

SuiteReport suite_coxeter() {
  SuiteReport rep{"coxeter", {}};

  {
    Prop p("length, descents and canonical word match word search");
    for (const char* preset : {"A2", "B2"}) {
      Group g = build_group(preset);
      WordSearch ws = word_search(g, 6);
      for (const Element& w : flat_ball(g, 5)) {
        const auto* rec = ws.find(w);
        p.require(rec && rec->first == length(w), q(w) + " in " + preset);
        p.require(rec && rec->second == canonical_word(w),
                  q(w) + " canonical word in " + preset);
        if (!rec) continue;
        for (Gen s = 1; s <= Gen(g.rank()); ++s) {
          const auto* right = ws.find(w.mul_gen(s));
          const auto* left = ws.find(w.gen_mul(s));
          p.require(right && (right->first < rec->first) == w.right_descent(s),
                    q(w) + " right descent " + std::to_string(s));
          p.require(left && (left->first < rec->first) == w.left_descent(s),
                    q(w) + " left descent " + std::to_string(s));
        }
      }
    }
    rep.checks.push_back(p.done());
  }

  {
    Prop p("root coordinates stay sign coherent");
    for (const char* preset : {"A2", "B2", "G2", "affine:A2"}) {
      Group g = build_group(preset);
      for (const Element& w : flat_ball(g, 8))
        for (int jc = 1; jc <= g.rank(); ++jc) {
          bool pos = false, neg = false;
          for (int i = 1; i <= g.rank(); ++i) {
            if (w.act(i, jc) > 0) pos = true;
            if (w.act(i, jc) < 0) neg = true;
          }
          p.require(pos != neg, q(w) + " column " + std::to_string(jc));
        }
    }
    rep.checks.push_back(p.done());
  }

  {
    Prop p("star maps are length preserving automorphisms");
    auto run = [&p](const Star& st, const std::vector<Element>& all) {
      for (const Element& a : all) {
        Element as = apply_star(st, a);
        p.require(length(as) == length(a), q(a) + " star length");
        p.require(apply_star(st, inverse(a)) == inverse(as), q(a) + " star inverse");
        for (const Element& b : all)
          p.require(apply_star(st, multiply(a, b)) == multiply(as, apply_star(st, b)),
                    q(a) + " * " + q(b));
      }
    };
    Group a2 = build_group("A2");
    run(build_star(a2, "minus-w0"), full_group(a2));
    Group b2 = build_group("B2");
    run(build_star(b2, "id"), full_group(b2));
    AffineContext ctx = build_affine_context("A2");
    run(ctx.star, flat_ball(ctx.group, 4));
    rep.checks.push_back(p.done());
  }

  return rep;
}

SuiteReport suite_monoid() {
  SuiteReport rep{"monoid", {}};
  Group a2 = build_group("A2");
  Group b2 = build_group("B2");
  AffineContext aff = build_affine_context("A2");

  {
    Prop p("associative");
    for (const Group& g : {a2, b2}) {
      std::vector<Element> all = full_group(g);
      for (const Element& a : all)
        for (const Element& b : all)
          for (const Element& c : all)
            p.require(demazure_product(demazure_product(a, b), c) ==
                          demazure_product(a, demazure_product(b, c)),
                      q(a) + "," + q(b) + "," + q(c));
    }
    SplitMix64 rng(0x5eeda11u);
    for (int k = 0; k < 200; ++k) {
      Element a = random_walk(aff.group, int(rng.below(7)), rng);
      Element b = random_walk(aff.group, int(rng.below(7)), rng);
      Element c = random_walk(aff.group, int(rng.below(7)), rng);
      p.require(demazure_product(demazure_product(a, b), c) ==
                    demazure_product(a, demazure_product(b, c)),
                q(a) + "," + q(b) + "," + q(c));
    }
    rep.checks.push_back(p.done());
  }

  {
    Prop p("identity is the unit");
    for (const Group& g : {a2, b2, aff.group}) {
      Element e = Element::identity(g);
      for (const Element& w : flat_ball(g, 4)) {
        p.require(demazure_product(e, w) == w, q(w));
        p.require(demazure_product(w, e) == w, q(w));
      }
    }
    rep.checks.push_back(p.done());
  }

  {
    Prop p("inverse reverses the product");
    for (const Group& g : {a2, b2}) {
      std::vector<Element> all = full_group(g);
      for (const Element& a : all)
        for (const Element& b : all)
          p.require(inverse(demazure_product(a, b)) ==
                        demazure_product(inverse(b), inverse(a)),
                    q(a) + "," + q(b));
    }
    SplitMix64 rng(0x1e5e7u);
    for (int k = 0; k < 200; ++k) {
      Element a = random_walk(aff.group, int(rng.below(8)), rng);
      Element b = random_walk(aff.group, int(rng.below(8)), rng);
      p.require(inverse(demazure_product(a, b)) ==
                    demazure_product(inverse(b), inverse(a)),
                q(a) + "," + q(b));
    }
    rep.checks.push_back(p.done());
  }

  {
    Prop p("star distributes over the product");
    auto run = [&p](const Star& st, const std::vector<Element>& all) {
      for (const Element& a : all)
        for (const Element& b : all)
          p.require(apply_star(st, demazure_product(a, b)) ==
                        demazure_product(apply_star(st, a), apply_star(st, b)),
                    q(a) + "," + q(b));
    };
    run(build_star(a2, "minus-w0"), full_group(a2));
    run(build_star(a2, "id"), full_group(a2));
    run(build_star(b2, "id"), full_group(b2));
    run(aff.star, flat_ball(aff.group, 4));
    rep.checks.push_back(p.done());
  }

  {
    Prop p("factors are initial and final segments");
    for (const Group& g : {a2, b2}) {
      std::vector<Element> all = full_group(g);
      for (const Element& a : all)
        for (const Element& b : all) {
          Element ab = demazure_product(a, b);
          p.require(length(ab) >= std::max(length(a), length(b)),
                    q(a) + "," + q(b) + " length");
          p.require(is_initial_segment(a, ab), q(a) + "," + q(b) + " initial");
          p.require(is_final_segment(b, ab), q(a) + "," + q(b) + " final");
        }
    }
    rep.checks.push_back(p.done());
  }

  {
    Prop p("independent of the reduced word");
    for (const Group& g : {a2, b2})
      for (const Element& a : flat_ball(g, 5))
        for (const Element& b : flat_ball(g, 5)) {
          Element expect = demazure_product(a, b);
          for (const Word& word : reduced_words(b)) {
            Element acc = a;
            for (Gen s : word)
              if (!acc.right_descent(s)) acc = acc.mul_gen(s);
            p.require(acc == expect, q(a) + "," + q(b));
          }
        }
    rep.checks.push_back(p.done());
  }

  return rep;
}

SuiteReport suite_involutions() {
  SuiteReport rep{"involutions", {}};
  std::vector<std::pair<Group, Star>> cases;
  for (const char* preset : {"A2", "A3", "B2", "B3"}) {
    Group g = build_group(preset);
    cases.emplace_back(g, build_star(g, "id"));
    cases.emplace_back(g, build_star(g, "minus-w0"));
  }

  {
    Prop p("phi is independent of the descent chosen");
    for (const auto& [g, st] : cases)
      for (const TwistedInvolution& x : involutions_in(g, st, 8))
        p.require(phi_brute(x) == long(phi(x)), q(x.element()) + " in " + g.name());
    rep.checks.push_back(p.done());
  }

  {
    Prop p("length parity equals phi parity and the norm is whole");
    for (const auto& [g, st] : cases)
      for (const TwistedInvolution& x : involutions_in(g, st, 8)) {
        unsigned f = phi(x);
        unsigned l = unsigned(length(x.element()));
        p.require((l ^ f) % 2 == 0, q(x.element()) + " parity in " + g.name());
        p.require(2 * norm(x) == l + f, q(x.element()) + " norm in " + g.name());
      }
    rep.checks.push_back(p.done());
  }

  {
    Prop p("enumeration agrees with the definition");
    auto run = [&p](const Group& g, const Star& st, int bound) {
      std::set<std::vector<Int>> brute;
      for (const Element& w : flat_ball(g, bound))
        if (is_twisted_involution(w, st)) brute.insert(w.act_matrix());
      std::set<std::vector<Int>> fast;
      for (const TwistedInvolution& x : involutions_in(g, st, bound))
        fast.insert(x.element().act_matrix());
      p.require(fast == brute, g.name() + " set mismatch");
    };
    for (const auto& [g, st] : cases) run(g, st, 8);
    AffineContext ctx = build_affine_context("A2");
    run(ctx.group, ctx.star, 6);
    rep.checks.push_back(p.done());
  }

  {
    Prop p("graph edges re-evaluate");
    for (const auto& [g, st] : cases) {
      InvolutionSet set = enumerate_involutions(g, st, 8);
      for (const InvolutionEdge& ed : set.edges) {
        const Element& x = set.entries[std::size_t(ed.from)].x.element();
        const Element& y = set.entries[std::size_t(ed.to)].x.element();
        Element sx = x.gen_mul(ed.s);
        Element xs = x.mul_gen(st.image(ed.s));
        if (ed.commuting)
          p.require(sx == xs && y == sx && length(y) == length(x) + 1,
                    q(x) + " edge " + std::to_string(ed.s));
        else
          p.require(sx != xs && y == sx.mul_gen(st.image(ed.s)) &&
                        length(y) == length(x) + 2,
                    q(x) + " edge " + std::to_string(ed.s));
      }
    }
    rep.checks.push_back(p.done());
  }

  return rep;
}

SuiteReport suite_closed_form() {
  SuiteReport rep{"closed-form", {}};
  Prop p("closed action formula equals the letterwise action");
  auto run = [&p](const Group& g, const Star& st, int wb, int xb) {
    std::vector<Element> ws = flat_ball(g, wb);
    for (const TwistedInvolution& x : involutions_in(g, st, xb))
      for (const Element& w : ws) {
        SignedInvolution a = act_iterative(w, x);
        SignedInvolution b = act_closed(w, x);
        p.require(a.sign == b.sign && a.x == b.x,
                  "w=" + q(w) + " x=" + q(x.element()) + " in " + g.name());
      }
  };
  for (const char* preset : {"A3", "B3", "G2"}) {
    Group g = build_group(preset);
    run(g, build_star(g, "id"), 6, 6);
    run(g, build_star(g, "minus-w0"), 6, 6);
  }
  AffineContext ctx = build_affine_context("A2");
  run(ctx.group, ctx.star, 5, 6);
  rep.checks.push_back(p.done());
  return rep;
}

SuiteReport suite_oracle_u0() {
  SuiteReport rep{"oracle-u0", {}};

  {
    Prop p("specialized module action matches the signed action");
    auto run = [&p](const Group& g, const Star& st, int wb, int xb) {
      std::vector<Element> ws = flat_ball(g, wb);
      for (const TwistedInvolution& x : involutions_in(g, st, xb))
        for (const Element& w : ws) {
          SignedInvolution target = act_iterative(w, x);
          MVec expect(st);
          expect.add(target.x.element(), UPoly(Int(target.sign)));
          p.require(specialize_u0(module_act(w, MVec::basis(x))) == expect,
                    "w=" + q(w) + " x=" + q(x.element()) + " in " + g.name());
        }
    };
    for (const char* preset : {"A2", "B2"}) {
      Group g = build_group(preset);
      run(g, build_star(g, "id"), 5, 5);
      run(g, build_star(g, "minus-w0"), 5, 5);
    }
    AffineContext ctx = build_affine_context("A2");
    run(ctx.group, ctx.star, 4, 5);
    rep.checks.push_back(p.done());
  }

  {
    Prop p("quadratic relation holds on the module");
    UPoly u2 = UPoly::monomial(1, 2);
    UPoly u2m1 = UPoly::from_coeffs({-1, 0, 1});
    for (const char* preset : {"A2", "B2"}) {
      Group g = build_group(preset);
      for (const char* kind : {"id", "minus-w0"}) {
        Star st = build_star(g, kind);
        for (const TwistedInvolution& x : involutions_in(g, st, 6))
          for (Gen s = 1; s <= Gen(g.rank()); ++s) {
            MVec v = MVec::basis(x);
            MVec sv = module_act_gen(s, v);
            MVec rhs(st);
            for (const auto& [y, c] : sv.terms()) rhs.add(y, u2m1 * c);
            for (const auto& [y, c] : v.terms()) rhs.add(y, u2 * c);
            p.require(module_act_gen(s, sv) == rhs,
                      q(x.element()) + " s=" + std::to_string(s));
          }
      }
    }
    rep.checks.push_back(p.done());
  }

  {
    Prop p("braid relations hold on the module");
    for (const char* preset : {"A2", "B2", "G2"}) {
      Group g = build_group(preset);
      int m = g.bond(1, 2);
      Word left, right;
      for (int k = 0; k < m; ++k) {
        left.push_back(k % 2 ? 2 : 1);
        right.push_back(k % 2 ? 1 : 2);
      }
      for (const char* kind : {"id", "minus-w0"}) {
        Star st = build_star(g, kind);
        for (const TwistedInvolution& x : involutions_in(g, st, 6)) {
          MVec a = MVec::basis(x);
          MVec b = MVec::basis(x);
          for (auto it = left.rbegin(); it != left.rend(); ++it)
            a = module_act_gen(*it, a);
          for (auto it = right.rbegin(); it != right.rend(); ++it)
            b = module_act_gen(*it, b);
          p.require(a == b, q(x.element()) + " in " + g.name());
        }
      }
    }
    rep.checks.push_back(p.done());
  }

  return rep;
}

SuiteReport suite_nil_sign() {
  SuiteReport rep{"nil-sign", {}};

  {
    Prop p("sign law over every pair of the rank two type B group");
    Group g = build_group("B2");
    std::vector<Element> all = full_group(g);
    for (const Element& a : all)
      for (const Element& b : all) {
        auto [sign, prod] = nil_product(a, b);
        bool odd = (length(a) + length(b) + length(prod)) % 2 != 0;
        p.require(prod == demazure_product(a, b) && sign == (odd ? -1 : 1),
                  q(a) + "," + q(b));
      }
    rep.checks.push_back(p.done());
  }

  {
    Prop p("sign law on deterministic pseudo-random affine pairs");
    AffineContext ctx = build_affine_context("A2");
    SplitMix64 rng(0x0b5e55edu);
    for (int k = 0; k < 1000; ++k) {
      Element a = random_walk(ctx.group, int(rng.below(9)), rng);
      Element b = random_walk(ctx.group, int(rng.below(9)), rng);
      auto [sign, prod] = nil_product(a, b);
      bool odd = (length(a) + length(b) + length(prod)) % 2 != 0;
      p.require(prod == demazure_product(a, b) && sign == (odd ? -1 : 1),
                q(a) + "," + q(b));
    }
    rep.checks.push_back(p.done());
  }

  return rep;
}

SuiteReport suite_surjectivity() {
  SuiteReport rep{"surjectivity", {}};

  {
    Prop p("every twisted involution is hit");
    for (const char* preset : {"A1", "A2", "A3", "A4", "B2", "B3", "G2"}) {
      Group g = build_group(preset);
      std::vector<Element> all = full_group(g);
      int top = length(all.back());
      for (const char* kind : {"id", "minus-w0"}) {
        Star st = build_star(g, kind);
        std::set<std::vector<Int>> image;
        for (const Element& w : all) image.insert(pi(w, st).element().act_matrix());
        std::set<std::vector<Int>> target;
        for (const TwistedInvolution& x : involutions_in(g, st, top))
          target.insert(x.element().act_matrix());
        p.require(image == target, std::string(preset) + " star " + kind);
      }
    }
    rep.checks.push_back(p.done());
  }

  {
    Prop p("restricted preimages exist within the length of the target");
    for (const char* preset : {"A1", "A2"}) {
      AffineContext ctx = build_affine_context(preset);
      for (const TwistedInvolution& x : involutions_in(ctx.group, ctx.star, 8)) {
        if (!is_in_jw(x.element(), ctx.parabolic)) continue;
        if (!is_in_wjstar(x.element(), ctx.parabolic)) continue;
        Element w = jpi_preimage(x, ctx.parabolic, length(x.element()));
        p.require(jpi(w, ctx.parabolic) == x && length(w) <= length(x.element()),
                  q(x.element()) + " in affine " + preset);
      }
    }
    rep.checks.push_back(p.done());
  }

  return rep;
}

// Every interleaving of the two strip moves must reach the same element.
void strip_orders(const Element& w, const ParabolicContext& ctx,
                  std::set<std::vector<Int>>& reached) {
  bool moved = false;
  for (Gen s : ctx.j)
    if (w.left_descent(s)) {
      strip_orders(w.gen_mul(s), ctx, reached);
      moved = true;
    }
  for (Gen s : ctx.j_star)
    if (w.right_descent(s)) {
      strip_orders(w.mul_gen(s), ctx, reached);
      moved = true;
    }
  if (!moved) reached.insert(w.act_matrix());
}

SuiteReport suite_parabolic() {
  SuiteReport rep{"parabolic", {}};

  std::vector<ParabolicContext> ctxs;
  ctxs.push_back(build_affine_context("A1").parabolic);
  ctxs.push_back(build_affine_context("A2").parabolic);
  {
    Group a3 = build_group("A3");
    ctxs.push_back(make_parabolic_context(a3, {1, 2}, build_star(a3, "id")));
    Group b3 = build_group("B3");
    ctxs.push_back(make_parabolic_context(b3, {1, 2}, build_star(b3, "id")));
  }

  {
    Prop p("minimal representative ignores the strip order");
    for (const ParabolicContext& ctx : ctxs)
      for (const Element& w : flat_ball(ctx.group, 6)) {
        std::set<std::vector<Int>> reached;
        strip_orders(w, ctx, reached);
        p.require(reached.size() == 1 &&
                      *reached.begin() == min_double_coset_rep(w, ctx).act_matrix(),
                  q(w) + " in " + ctx.group.name());
      }
    rep.checks.push_back(p.done());
  }

  {
    Prop p("restricted map lands in the two sided representatives");
    for (const ParabolicContext& ctx : ctxs)
      for (const Element& w : flat_ball(ctx.group, 8)) {
        if (!is_in_jw(w, ctx)) continue;
        TwistedInvolution x = jpi(w, ctx);
        p.require(is_in_jw(x.element(), ctx) && is_in_wjstar(x.element(), ctx),
                  q(w) + " in " + ctx.group.name());
      }
    rep.checks.push_back(p.done());
  }

  {
    Prop p("round trip through the preimage");
    for (const ParabolicContext& ctx : ctxs)
      for (const Element& w : flat_ball(ctx.group, 8)) {
        if (!(is_in_jw(w, ctx) && is_in_wjstar(w, ctx))) continue;
        if (!is_twisted_involution(w, ctx.star)) continue;
        TwistedInvolution x(w, ctx.star);
        Element pre = jpi_preimage(x, ctx, length(w));
        p.require(jpi(pre, ctx) == x, q(w) + " in " + ctx.group.name());
      }
    rep.checks.push_back(p.done());
  }

  {
    Prop p("two sided representatives are twisted involutions");
    for (const char* preset : {"A1", "A2"}) {
      AffineContext ctx = build_affine_context(preset);
      for (const Element& w : flat_ball(ctx.group, 10)) {
        if (!(is_in_jw(w, ctx.parabolic) && is_in_wjstar(w, ctx.parabolic))) continue;
        p.require(is_twisted_involution(w, ctx.star),
                  q(w) + " in affine " + preset);
      }
    }
    rep.checks.push_back(p.done());
  }

  return rep;
}

SuiteReport suite_affine() {
  SuiteReport rep{"affine", {}};
  AffineContext a1 = build_affine_context("A1");
  AffineContext a2 = build_affine_context("A2");

  auto translations = [](const AffineContext& ctx, int bound, bool dominant) {
    std::vector<Element> out;
    for (const Element& w : flat_ball(ctx.group, bound)) {
      if (!is_translation(w, ctx)) continue;
      if (dominant && !is_dominant_translation(w, ctx)) continue;
      out.push_back(w);
    }
    return out;
  };

  {
    Prop p("conjugation by the longest finite element inverts translations");
    for (const AffineContext* ctx : {&a1, &a2})
      for (const Element& t : translations(*ctx, 16, true)) {
        Element conj = multiply(multiply(ctx->w_j, t), ctx->w_j);
        p.require(length(conj) == length(t) &&
                      multiply(ctx->w_j, t) == demazure_product(conj, ctx->w_j),
                  q(t));
      }
    rep.checks.push_back(p.done());
  }

  {
    Prop p("dominant translations multiply with adding lengths");
    for (const AffineContext* ctx : {&a1, &a2}) {
      auto dom = translations(*ctx, 12, true);
      for (const Element& t : dom)
        for (const Element& t2 : dom) {
          Element tt = multiply(t, t2);
          p.require(is_dominant_translation(tt, *ctx) &&
                        length(tt) == length(t) + length(t2) &&
                        demazure_product(t, t2) == tt,
                    q(t) + "," + q(t2));
        }
    }
    rep.checks.push_back(p.done());
  }

  {
    Prop p("squaring law on dominant translations");
    for (const AffineContext* ctx : {&a1, &a2})
      for (const Element& t : translations(*ctx, 16, true))
        p.require(pi_prime(t, *ctx) == multiply(t, t), q(t));
    rep.checks.push_back(p.done());
  }

  {
    Prop p("two sided representatives are the dominant coset images");
    for (const AffineContext* ctx : {&a1, &a2}) {
      std::set<std::vector<Int>> two_sided;
      for (const Element& w : flat_ball(ctx->group, 14))
        if (is_in_jw(w, ctx->parabolic) && is_in_wjstar(w, ctx->parabolic))
          two_sided.insert(w.act_matrix());
      std::set<std::vector<Int>> image;
      for (const Element& t : translations(*ctx, 14 - length(ctx->w_j), true))
        image.insert(multiply(ctx->w_j, t).act_matrix());
      p.require(two_sided == image, ctx->group.name());
    }
    rep.checks.push_back(p.done());
  }

  {
    Prop p("translations correspond to maximal coset representatives");
    for (const AffineContext* ctx : {&a1, &a2}) {
      for (const Element& t : translations(*ctx, 12, false)) {
        Element v = coset_rep(t, *ctx);
        p.require(is_in_jw(v, ctx->parabolic) && translation_of(v, *ctx) == t, q(t));
      }
      for (const Element& v : flat_ball(ctx->group, 12)) {
        if (!is_in_jw(v, ctx->parabolic)) continue;
        Element t = translation_of(v, *ctx);
        p.require(is_translation(t, *ctx) && coset_rep(t, *ctx) == v, q(v));
      }
    }
    rep.checks.push_back(p.done());
  }

  {
    Prop p("rank one closed form table");
    Element one = from_word(a1.group, "1");
    Element two = from_word(a1.group, "2");
    const Element& a = a1.basis[0];
    Element tm = Element::identity(a1.group);
    for (int m = 0; m <= 8; ++m) {
      Element t2m = Element::identity(a1.group);
      for (int k = 0; k < 2 * m; ++k) t2m = multiply(t2m, a);
      p.require(jpi(multiply(one, tm), a1.parabolic).element() ==
                    multiply(one, t2m),
                "m=" + std::to_string(m));
      p.require(jpi(multiply(multiply(one, tm), two), a1.parabolic).element() ==
                    multiply(multiply(one, t2m), a),
                "m=" + std::to_string(m) + " long form");
      tm = multiply(tm, a);
    }
    rep.checks.push_back(p.done());
  }

  {
    Prop p("rank two closed form table");
    Prop p2("rank two closed forms collide on the long suffixes");
    Element head = from_word(a2.group, "121");
    auto power = [&a2](const Element& b, int m) {
      Element r = Element::identity(a2.group);
      for (int k = 0; k < m; ++k) r = multiply(r, b);
      return r;
    };
    auto abc = [&](int m, int n, int pp) {
      return multiply(power(a2.basis[0], m),
                      multiply(power(a2.basis[1], n), power(a2.basis[2], pp)));
    };
    struct Form {
      const char* suffix;
      int da, db, dc;
    };
    const Form forms[] = {{"", 0, 0, 0},   {"3", 1, 0, 0},   {"31", 0, 0, 1},
                          {"32", 0, 1, 0}, {"321", 2, 0, 0}, {"312", 2, 0, 0}};
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n)
        for (int pp = 0; pp <= 2; ++pp) {
          Element t = abc(m, n, pp);
          std::string at = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                           " p=" + std::to_string(pp);
          for (const Form& f : forms) {
            Element w = multiply(multiply(head, t), from_word(a2.group, f.suffix));
            Element expect =
                multiply(head, abc(2 * m + f.da, 2 * n + f.db, 2 * pp + f.dc));
            p.require(jpi(w, a2.parabolic).element() == expect,
                      at + " suffix \"" + f.suffix + "\"");
          }
          Element w321 = multiply(multiply(head, t), from_word(a2.group, "321"));
          Element w312 = multiply(multiply(head, t), from_word(a2.group, "312"));
          p2.require(w321 != w312 &&
                         jpi(w321, a2.parabolic) == jpi(w312, a2.parabolic),
                     at);
        }
    rep.checks.push_back(p.done());
    rep.checks.push_back(p2.done());
  }

  {
    Prop p("translation basis is dominant, commuting and factors");
    for (const AffineContext* ctx : {&a1, &a2}) {
      for (const Element& b : ctx->basis)
        p.require(is_dominant_translation(b, *ctx), q(b));
      for (const Element& b : ctx->basis)
        for (const Element& c : ctx->basis)
          p.require(multiply(b, c) == multiply(c, b), q(b) + "," + q(c));
      for (const Element& t : translations(*ctx, 12, true)) {
        std::vector<Int> f = factor_translation(t, *ctx, 6);
        Element prod = Element::identity(ctx->group);
        for (std::size_t i = 0; i < f.size(); ++i)
          for (Int k = 0; k < f[i]; ++k) prod = multiply(prod, ctx->basis[i]);
        p.require(prod == t, q(t));
      }
    }
    Element a3 = multiply(a2.basis[0], multiply(a2.basis[0], a2.basis[0]));
    Prop p2("cube of the first basis translation splits");
    p2.require(a3 == multiply(a2.basis[1], a2.basis[2]), "basis relation");
    rep.checks.push_back(p.done());
    rep.checks.push_back(p2.done());
  }

  return rep;
}

SuiteReport dispatch(const std::string& name) {
  if (name == "coxeter") return suite_coxeter();
  if (name == "monoid") return suite_monoid();
  if (name == "involutions") return suite_involutions();
  if (name == "closed-form") return suite_closed_form();
  if (name == "oracle-u0") return suite_oracle_u0();
  if (name == "nil-sign") return suite_nil_sign();
  if (name == "surjectivity") return suite_surjectivity();
  if (name == "parabolic") return suite_parabolic();
  if (name == "affine") return suite_affine();
  throw Error("unknown suite: " + name);
}

}  // namespace

SuiteReport run_suite(const std::string& name) {
  if (name != "all") return dispatch(name);
  SuiteReport all{"all", {}};
  for (const std::string& n : suite_names()) {
    if (n == "all") continue;
    SuiteReport rep = dispatch(n);
    for (Check& c : rep.checks) {
      c.name = n + ": " + c.name;
      all.checks.push_back(std::move(c));
    }
  }
  return all;
}

std::vector<std::string> suite_names() {
  return {"coxeter",  "monoid",      "involutions", "closed-form", "oracle-u0",
          "nil-sign", "surjectivity", "parabolic",   "affine",      "all"};
}

}  // namespace nilweyl
