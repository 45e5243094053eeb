#include "nilweyl/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace nilweyl {

namespace {

int bond_from_product(Int p) {
  if (p == 0) return 2;
  if (p == 1) return 3;
  if (p == 2) return 4;
  if (p == 3) return 6;
  return kInfiniteBond;  // p >= 4
}

std::string matrix_key(const std::vector<Int>& mat) {
  return std::string(reinterpret_cast<const char*>(mat.data()), mat.size() * sizeof(Int));
}

// Chain of single bonds, then overrides per family.
std::vector<Int> chain_cartan(int n) {
  std::vector<Int> c(std::size_t(n) * n, 0);
  for (int i = 0; i < n; ++i) c[std::size_t(i) * n + i] = 2;
  for (int i = 0; i + 1 < n; ++i) {
    c[std::size_t(i) * n + i + 1] = -1;
    c[std::size_t(i + 1) * n + i] = -1;
  }
  return c;
}

struct FinitePreset {
  std::vector<Int> cartan;
  PresetRoots roots;
};

// Highest roots and reflection words are registry data; build_affine_context
// revalidates the word against the reflection matrix derived from the root.
FinitePreset make_type_a(int n) {
  FinitePreset p;
  p.cartan = chain_cartan(n);
  p.roots.highest_root.assign(std::size_t(n), 1);
  Word w;
  for (int i = 1; i <= n; ++i) w.push_back(i);
  for (int i = n - 1; i >= 1; --i) w.push_back(i);
  p.roots.highest_root_reflection = w;
  return p;
}

FinitePreset make_type_b(int n) {
  FinitePreset p;
  p.cartan = chain_cartan(n);
  p.cartan[std::size_t(n - 1) * n + (n - 2)] = -2;  // C_{n,n-1}
  p.roots.highest_root.assign(std::size_t(n), 2);
  p.roots.highest_root[0] = 1;
  // Reflection in e1+e2: s1 r_{e1} r_{e2} written out.
  Word w;
  if (n == 2) {
    w = {2, 1, 2};
  } else {
    for (int i = 2; i <= n; ++i) w.push_back(i);
    for (int i = n - 1; i >= 1; --i) w.push_back(i);
    for (int i = 2; i <= n; ++i) w.push_back(i);
    for (int i = n - 1; i >= 2; --i) w.push_back(i);
  }
  p.roots.highest_root_reflection = w;
  return p;
}

FinitePreset make_type_c(int n) {
  FinitePreset p;
  p.cartan = chain_cartan(n);
  p.cartan[std::size_t(n - 2) * n + (n - 1)] = -2;  // C_{n-1,n}
  p.roots.highest_root.assign(std::size_t(n), 2);
  p.roots.highest_root[n - 1] = 1;
  // Reflection in 2 e1, the word 1 2 ... n ... 2 1.
  Word w;
  for (int i = 1; i <= n; ++i) w.push_back(i);
  for (int i = n - 1; i >= 1; --i) w.push_back(i);
  p.roots.highest_root_reflection = w;
  return p;
}

FinitePreset make_d4() {
  FinitePreset p;
  int n = 4;
  std::vector<Int> c(16, 0);
  for (int i = 0; i < n; ++i) c[std::size_t(i) * n + i] = 2;
  auto link = [&](int i, int j) {
    c[std::size_t(i - 1) * n + (j - 1)] = -1;
    c[std::size_t(j - 1) * n + (i - 1)] = -1;
  };
  link(1, 2);
  link(2, 3);
  link(2, 4);
  p.cartan = c;
  p.roots.highest_root = {1, 2, 1, 1};
  p.roots.highest_root_reflection = {2, 1, 3, 4, 2, 4, 3, 1, 2};
  return p;
}

FinitePreset make_g2() {
  FinitePreset p;
  p.cartan = {2, -1, -3, 2};
  p.roots.highest_root = {2, 3};
  p.roots.highest_root_reflection = {1, 2, 1, 2, 1};
  return p;
}

FinitePreset make_f4() {
  FinitePreset p;
  p.cartan = chain_cartan(4);
  p.cartan[2 * 4 + 1] = -2;  // C_{3,2}
  p.roots.highest_root = {2, 3, 4, 2};
  p.roots.highest_root_reflection = {1, 2, 3, 2, 4, 3, 2, 1, 2, 3, 4, 2, 3, 2, 1};
  return p;
}

const FinitePreset* find_finite_preset(const std::string& name) {
  static const std::unordered_map<std::string, FinitePreset> table = [] {
    std::unordered_map<std::string, FinitePreset> t;
    for (int n = 1; n <= 8; ++n) t["A" + std::to_string(n)] = make_type_a(n);
    for (int n = 2; n <= 4; ++n) t["B" + std::to_string(n)] = make_type_b(n);
    t["C3"] = make_type_c(3);
    t["C4"] = make_type_c(4);
    t["D4"] = make_d4();
    t["G2"] = make_g2();
    t["F4"] = make_f4();
    return t;
  }();
  auto it = table.find(name);
  return it == table.end() ? nullptr : &it->second;
}

// Coroot coordinates of the highest root: c^vee_i = c_i d_i / d_theta.
std::vector<Int> coroot_coords(const Group& g, const std::vector<Int>& c) {
  int n = g.rank();
  std::vector<Int> d = symmetrizer(g);
  Int theta_sq = 0;  // (theta, theta) with (alpha_i, alpha_j) = d_i C_ij
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      theta_sq = checked_add(theta_sq,
                             checked_mul(checked_mul(c[i - 1], c[j - 1]),
                                         checked_mul(d[i - 1], g.cartan(i, j))));
  if (theta_sq <= 0 || theta_sq % 2 != 0) throw Error("highest root has invalid norm");
  Int d_theta = theta_sq / 2;
  std::vector<Int> cv(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Int num = checked_mul(c[i - 1], d[i - 1]);
    if (num % d_theta != 0) throw Error("highest root coroot is not integral");
    cv[i - 1] = num / d_theta;
  }
  return cv;
}

Group build_affine(const std::string& finite_name) {
  const FinitePreset* fp = find_finite_preset(finite_name);
  if (!fp) throw Error("unknown finite preset: " + finite_name);
  Group fin = build_group(finite_name);
  int n = fin.rank();
  const std::vector<Int>& c = fp->roots.highest_root;
  std::vector<Int> cv = coroot_coords(fin, c);

  int m = n + 1;
  std::vector<Int> a(std::size_t(m) * m, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a[std::size_t(i - 1) * m + (j - 1)] = fin.cartan(i, j);
  a[std::size_t(m - 1) * m + (m - 1)] = 2;
  for (int j = 1; j <= n; ++j) {
    Int row = 0, col = 0;
    for (int i = 1; i <= n; ++i) {
      row = checked_add(row, checked_mul(fin.cartan(j, i), c[i - 1]));   // <theta, alpha_j^vee>
      col = checked_add(col, checked_mul(cv[i - 1], fin.cartan(i, j)));  // <alpha_j, theta^vee>
    }
    a[std::size_t(j - 1) * m + (m - 1)] = checked_neg(row);
    a[std::size_t(m - 1) * m + (j - 1)] = checked_neg(col);
  }
  return build_group(m, a, "affine:" + finite_name);
}

}  // namespace

bool Group::operator==(const Group& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->rank == o.d_->rank && d_->cartan == o.d_->cartan;
}

int Group::memo_length(const std::vector<Int>& mat) const {
  std::lock_guard<std::mutex> lk(d_->memo_mx);
  auto it = d_->length_memo.find(matrix_key(mat));
  return it == d_->length_memo.end() ? -1 : it->second;
}

void Group::memo_store(const std::vector<Int>& mat, int len) const {
  std::lock_guard<std::mutex> lk(d_->memo_mx);
  d_->length_memo.emplace(matrix_key(mat), len);
}

Group build_group(int rank, const std::vector<Int>& cartan, std::string name) {
  if (rank < 1) throw Error("rank must be positive");
  if (cartan.size() != std::size_t(rank) * rank) throw Error("cartan matrix size mismatch");
  for (int i = 0; i < rank; ++i) {
    if (cartan[std::size_t(i) * rank + i] != 2) throw Error("cartan diagonal entry must be 2");
    for (int j = 0; j < rank; ++j) {
      if (i == j) continue;
      Int cij = cartan[std::size_t(i) * rank + j];
      Int cji = cartan[std::size_t(j) * rank + i];
      if (cij > 0) throw Error("cartan off-diagonal entry must be <= 0");
      if ((cij == 0) != (cji == 0)) throw Error("cartan zero pattern must be symmetric");
    }
  }
  auto d = std::make_shared<Group::Data>();
  d->rank = rank;
  d->cartan = cartan;
  d->name = std::move(name);
  d->cox.assign(std::size_t(rank) * rank, 2);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      std::size_t k = std::size_t(i) * rank + j;
      d->cox[k] = (i == j) ? 1
                           : bond_from_product(checked_mul(cartan[k],
                                                           cartan[std::size_t(j) * rank + i]));
    }
  }
  Group g;
  g.d_ = std::move(d);
  return g;
}

Group build_group(const std::string& preset) {
  if (preset.rfind("affine:", 0) == 0) return build_affine(preset.substr(7));
  const FinitePreset* fp = find_finite_preset(preset);
  if (!fp) throw Error("unknown preset: " + preset);
  int n = 0;
  while (std::size_t(n) * n < fp->cartan.size()) ++n;
  return build_group(n, fp->cartan, preset);
}

const PresetRoots* preset_roots(const std::string& finite_preset) {
  const FinitePreset* fp = find_finite_preset(finite_preset);
  return fp ? &fp->roots : nullptr;
}

std::vector<Int> symmetrizer(const Group& g) {
  int n = g.rank();
  // Rational d_i tracked as num/den, propagated over diagram edges.
  std::vector<Int> num(std::size_t(n), 0), den(std::size_t(n), 1);
  auto gcd = [](Int a, Int b) { return std::gcd(a, b); };
  std::vector<int> stack;
  num[0] = 1;
  stack.push_back(1);
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 1; j <= n; ++j) {
      if (j == i || g.cartan(i, j) == 0) continue;
      // d_j = d_i * C_ij / C_ji
      Int nn = checked_mul(num[i - 1], g.cartan(i, j));
      Int dd = checked_mul(den[i - 1], g.cartan(j, i));
      if (nn < 0 && dd < 0) {
        nn = -nn;
        dd = -dd;
      }
      Int f = gcd(std::abs(nn), std::abs(dd));
      if (f > 1) {
        nn /= f;
        dd /= f;
      }
      if (num[j - 1] == 0) {
        num[j - 1] = nn;
        den[j - 1] = dd;
        stack.push_back(j);
      } else if (checked_mul(num[j - 1], dd) != checked_mul(nn, den[j - 1])) {
        throw Error("cartan matrix is not symmetrizable");
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (num[i] == 0) throw Error("symmetrizer requires a connected diagram");
  Int l = 1;
  for (int i = 0; i < n; ++i) l = checked_mul(l / gcd(l, den[i]), den[i]);
  std::vector<Int> d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) d[i] = checked_mul(num[i], l / den[i]);
  Int f = 0;
  for (int i = 0; i < n; ++i) f = gcd(f, d[i]);
  for (int i = 0; i < n; ++i) d[i] /= f;
  return d;
}

Group group_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad group JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rank") || !j.contains("cartan"))
    throw Error("group JSON needs \"rank\" and \"cartan\"");
  try {
    int rank = j.at("rank").get<int>();
    std::vector<Int> cartan;
    for (const auto& row : j.at("cartan")) {
      if (int(row.size()) != rank) throw Error("cartan row length mismatch");
      for (const auto& e : row) cartan.push_back(e.get<Int>());
    }
    if (int(cartan.size()) != rank * rank) throw Error("cartan must be rank x rank");
    std::string name = j.value("name", std::string());
    return build_group(rank, cartan, name);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad group JSON: ") + e.what());
  }
}

std::string group_to_json(const Group& g) {
  nlohmann::json j;
  j["rank"] = g.rank();
  auto rows = nlohmann::json::array();
  for (int i = 1; i <= g.rank(); ++i) {
    auto row = nlohmann::json::array();
    for (int k = 1; k <= g.rank(); ++k) row.push_back(g.cartan(i, k));
    rows.push_back(row);
  }
  j["cartan"] = rows;
  if (!g.name().empty()) j["name"] = g.name();
  return j.dump();
}

Word parse_word(const Group& g, const std::string& text) {
  Word w;
  if (text.empty()) return w;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw Error("empty index in word: \"" + text + "\"");
      for (char ch : tok)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw Error("bad character in word: \"" + text + "\"");
      if (tok.size() > 9) throw Error("generator index out of range: " + tok);
      long v = std::stol(tok);
      if (v < 1 || v > g.rank()) throw Error("generator index out of range: " + tok);
      w.push_back(int(v));
    }
    return w;
  }
  if (g.rank() > 9)
    throw Error("digit-string words are ambiguous for rank > 9; use the comma form");
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
      throw Error("bad character in word: \"" + text + "\"");
    int v = ch - '0';
    if (v > g.rank()) throw Error("generator index out of range: " + std::string(1, ch));
    w.push_back(v);
  }
  return w;
}

std::string format_word(const Group& g, const Word& w) {
  std::string out;
  bool commas = g.rank() > 9;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (commas && i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace nilweyl
