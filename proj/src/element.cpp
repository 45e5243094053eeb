#include "nilweyl/element.hpp"

#include <algorithm>
#include <unordered_set>

namespace nilweyl {

namespace {

// Sign of a root written in simple-root coordinates. Every column of a valid
// element matrix is a real root, hence has all entries of one sign; mixed or
// zero columns mean the matrix is not a group element.
bool column_negative(const std::vector<Int>& m, int n, int col) {
  bool pos = false, neg = false;
  for (int i = 0; i < n; ++i) {
    Int v = m[std::size_t(i) * n + col];
    pos = pos || v > 0;
    neg = neg || v < 0;
  }
  if (pos == neg) throw Error("matrix column is not sign-coherent");
  return neg;
}

std::vector<Int> mat_mul(const std::vector<Int>& a, const std::vector<Int>& b, int n) {
  std::vector<Int> r(std::size_t(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Int aik = a[std::size_t(i) * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) {
        std::size_t t = std::size_t(i) * n + j;
        r[t] = checked_add(r[t], checked_mul(aik, b[std::size_t(k) * n + j]));
      }
    }
  return r;
}

}  // namespace

Element Element::identity(const Group& g) {
  if (!g.valid()) throw Error("invalid group");
  Element e;
  e.g_ = g;
  int n = g.rank();
  e.fwd_.assign(std::size_t(n) * n, 0);
  for (int i = 0; i < n; ++i) e.fwd_[std::size_t(i) * n + i] = 1;
  e.inv_ = e.fwd_;
  return e;
}

bool Element::is_identity() const {
  int n = g_.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (fwd_[std::size_t(i) * n + j] != (i == j ? 1 : 0)) return false;
  return true;
}

void Element::check_gen(Gen s) const {
  if (s < 1 || s > g_.rank()) throw Error("generator index out of range: " + std::to_string(s));
}

// Generator matrix: s_a(alpha_j) = alpha_j - C_aj alpha_a, i.e.
// M_a = I - e_a (row a of C). Multiplying by M_a on the right is a rank-one
// column update; on the left, a row update. Both matrices of the pair are
// maintained: fwd picks up M_a on the side of the product, inv on the other.
Element Element::mul_gen(Gen s) const {
  check_gen(s);
  Element r = *this;
  int n = g_.rank();
  // fwd * M_s: entry (i,j) -= fwd(i,s) * C_sj
  std::vector<Int> col_s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) col_s[i] = fwd_[std::size_t(i) * n + (s - 1)];
  for (int j = 0; j < n; ++j) {
    Int c = g_.cartan(s, j + 1);
    if (c == 0) continue;
    for (int i = 0; i < n; ++i) {
      std::size_t k = std::size_t(i) * n + j;
      r.fwd_[k] = checked_sub(r.fwd_[k], checked_mul(col_s[i], c));
    }
  }
  // M_s * inv: row s -= (row s of C) * inv
  for (int j = 0; j < n; ++j) {
    Int acc = 0;
    for (int k = 0; k < n; ++k)
      acc = checked_add(acc, checked_mul(g_.cartan(s, k + 1), inv_[std::size_t(k) * n + j]));
    std::size_t t = std::size_t(s - 1) * n + j;
    r.inv_[t] = checked_sub(r.inv_[t], acc);
  }
  return r;
}

Element Element::gen_mul(Gen s) const {
  check_gen(s);
  Element r = *this;
  int n = g_.rank();
  for (int j = 0; j < n; ++j) {
    Int acc = 0;
    for (int k = 0; k < n; ++k)
      acc = checked_add(acc, checked_mul(g_.cartan(s, k + 1), fwd_[std::size_t(k) * n + j]));
    std::size_t t = std::size_t(s - 1) * n + j;
    r.fwd_[t] = checked_sub(r.fwd_[t], acc);
  }
  std::vector<Int> col_s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) col_s[i] = inv_[std::size_t(i) * n + (s - 1)];
  for (int j = 0; j < n; ++j) {
    Int c = g_.cartan(s, j + 1);
    if (c == 0) continue;
    for (int i = 0; i < n; ++i) {
      std::size_t k = std::size_t(i) * n + j;
      r.inv_[k] = checked_sub(r.inv_[k], checked_mul(col_s[i], c));
    }
  }
  return r;
}

bool Element::right_descent(Gen s) const {
  check_gen(s);
  return column_negative(fwd_, g_.rank(), s - 1);
}

bool Element::left_descent(Gen s) const {
  check_gen(s);
  return column_negative(inv_, g_.rank(), s - 1);
}

bool Element::operator==(const Element& o) const { return g_ == o.g_ && fwd_ == o.fwd_; }

std::size_t Element::hash() const {
  std::size_t h = 1469598103934665603ull ^ std::size_t(g_.rank());
  for (Int v : fwd_) {
    h ^= std::size_t(v);
    h *= 1099511628211ull;
  }
  return h;
}

Element from_word(const Group& g, const Word& w) {
  Element a = Element::identity(g);
  for (Gen s : w) a = a.mul_gen(s);
  return a;
}

Element from_word(const Group& g, const std::string& w) { return from_word(g, parse_word(g, w)); }

Element multiply(const Element& a, const Element& b) {
  if (a.group() != b.group()) throw Error("elements of different groups");
  Element r = a;
  int n = a.rank();
  r.fwd_ = mat_mul(a.fwd_, b.fwd_, n);
  r.inv_ = mat_mul(b.inv_, a.inv_, n);
  return r;
}

Element inverse(const Element& a) {
  Element r = a;
  std::swap(r.fwd_, r.inv_);
  return r;
}

std::vector<Gen> left_descents(const Element& a) {
  std::vector<Gen> d;
  for (Gen s = 1; s <= a.rank(); ++s)
    if (a.left_descent(s)) d.push_back(s);
  return d;
}

std::vector<Gen> right_descents(const Element& a) {
  std::vector<Gen> d;
  for (Gen s = 1; s <= a.rank(); ++s)
    if (a.right_descent(s)) d.push_back(s);
  return d;
}

Word canonical_word(const Element& a) {
  Word w;
  Element x = a;
  while (!x.is_identity()) {
    Gen s = 0;
    for (Gen i = 1; i <= x.rank(); ++i)
      if (x.left_descent(i)) {
        s = i;
        break;
      }
    if (s == 0) throw Error("non-identity element with no descent");
    w.push_back(s);
    x = x.gen_mul(s);
    if (w.size() > (std::size_t(1) << 24)) throw Error("descent stripping did not terminate");
  }
  return w;
}

std::string canonical_string(const Element& a) { return format_word(a.group(), canonical_word(a)); }

int length(const Element& a) {
  int hit = a.group().memo_length(a.act_matrix());
  if (hit >= 0) return hit;
  // Strip and memoize the whole descending chain; elements near the identity
  // recur across computations.
  std::vector<Element> chain;
  Element x = a;
  while (!x.is_identity()) {
    int h = a.group().memo_length(x.act_matrix());
    if (h >= 0) {
      for (int i = int(chain.size()) - 1; i >= 0; --i)
        a.group().memo_store(chain[std::size_t(i)].act_matrix(), h + int(chain.size()) - i);
      return h + int(chain.size());
    }
    chain.push_back(x);
    Gen s = 0;
    for (Gen i = 1; i <= x.rank(); ++i)
      if (x.left_descent(i)) {
        s = i;
        break;
      }
    if (s == 0) throw Error("non-identity element with no descent");
    x = x.gen_mul(s);
    if (chain.size() > (std::size_t(1) << 24)) throw Error("descent stripping did not terminate");
  }
  int len = int(chain.size());
  for (int i = 0; i < len; ++i) a.group().memo_store(chain[std::size_t(i)].act_matrix(), len - i);
  return len;
}

bool element_less(const Element& a, const Element& b) {
  int la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  return canonical_word(a) < canonical_word(b);
}

std::vector<std::vector<Element>> ball(const Group& g, int max_len) {
  if (max_len < 0) throw Error("negative radius");
  std::vector<std::vector<Element>> levels;
  std::unordered_set<Element, ElementHash> seen;
  Element e = Element::identity(g);
  g.memo_store(e.act_matrix(), 0);
  levels.push_back({e});
  seen.insert(e);
  for (int len = 0; len < max_len; ++len) {
    std::vector<Element> next;
    for (const Element& x : levels[std::size_t(len)]) {
      for (Gen s = 1; s <= g.rank(); ++s) {
        if (x.right_descent(s)) continue;
        Element y = x.mul_gen(s);
        if (seen.insert(y).second) {
          g.memo_store(y.act_matrix(), len + 1);
          next.push_back(y);
        }
      }
    }
    if (next.empty()) break;
    levels.push_back(std::move(next));
  }
  return levels;
}

std::vector<Element> full_group(const Group& g, int cap) {
  auto levels = ball(g, cap);
  if (int(levels.size()) == cap + 1) {
    // The ball may have stopped exactly at the longest element; probe one more.
    auto probe = ball(g, cap + 1);
    if (int(probe.size()) > cap + 1)
      throw NotFiniteError("group not exhausted within length cap");
  }
  std::vector<Element> all;
  for (auto& lv : levels)
    for (auto& x : lv) all.push_back(std::move(x));
  return all;
}

}  // namespace nilweyl
