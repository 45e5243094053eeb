#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nilweyl/affine.hpp"
#include "nilweyl/demazure.hpp"
#include "nilweyl/verify.hpp"

using namespace nilweyl;

namespace {

// preset name, inline JSON ("{...}") or a *.json file path.
Group load_group(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') return group_from_json(spec);
  if (spec.size() > 5 && spec.compare(spec.size() - 5, 5, ".json") == 0) {
    std::ifstream in(spec, std::ios::binary);
    if (!in) throw Error("cannot read group file: " + spec);
    std::ostringstream text;
    text << in.rdbuf();
    return group_from_json(text.str());
  }
  return build_group(spec);
}

// "id" | "minus-w0" | "perm:1-2,3-3"; pairs are applied in both directions.
Star load_star(const Group& g, const std::string& spec) {
  if (spec.rfind("perm:", 0) != 0) return build_star(g, spec);
  std::vector<Gen> perm(std::size_t(g.rank()));
  std::vector<bool> fixed(std::size_t(g.rank()), false);
  for (int i = 0; i < g.rank(); ++i) perm[std::size_t(i)] = i + 1;
  std::istringstream in(spec.substr(5));
  std::string pair;
  while (std::getline(in, pair, ',')) {
    auto dash = pair.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == pair.size())
      throw Error("bad star pair: " + pair);
    long a, b;
    try {
      a = std::stol(pair.substr(0, dash));
      b = std::stol(pair.substr(dash + 1));
    } catch (const std::exception&) {
      throw Error("bad star pair: " + pair);
    }
    if (a < 1 || a > g.rank() || b < 1 || b > g.rank())
      throw Error("star pair out of range: " + pair);
    for (auto [x, y] : {std::pair<long, long>{a, b}, {b, a}}) {
      if (fixed[std::size_t(x - 1)] && perm[std::size_t(x - 1)] != Gen(y))
        throw Error("conflicting star pairs at generator " + std::to_string(x));
      perm[std::size_t(x - 1)] = Gen(y);
      fixed[std::size_t(x - 1)] = true;
    }
  }
  return build_star(g, perm);
}

// Node labels only; tabular output keeps the bare canonical word.
std::string dot_label(const Element& w) {
  std::string s = canonical_string(w);
  return s.empty() ? "e" : s;
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write: " + out_path);
  out << text;
  return 0;
}

void need_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw Error("format '" + format + "' is not supported by this command");
}

int run_demazure(const std::string& group_spec, const std::string& w1,
                 const std::string& w2, const std::string& format,
                 const std::string& out_path) {
  need_format(format, {"text", "json"});
  Group g = load_group(group_spec);
  Element p = demazure_product(from_word(g, w1), from_word(g, w2));
  std::ostringstream out;
  if (format == "json")
    out << "{\"word\":\"" << canonical_string(p) << "\",\"len\":" << length(p) << "}\n";
  else
    out << canonical_string(p) << "\n";
  return emit(out.str(), out_path);
}

int run_involutions(const std::string& group_spec, const std::string& star_spec,
                    int max_len, const std::string& format,
                    const std::string& out_path) {
  need_format(format, {"text", "json", "csv", "dot"});
  Group g = load_group(group_spec);
  Star st = load_star(g, star_spec);
  InvolutionSet set = enumerate_involutions(g, st, max_len);

  std::ostringstream out;
  if (format == "dot") {
    out << "digraph involutions {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < set.entries.size(); ++i)
      out << "  n" << i << " [label=\"" << dot_label(set.entries[i].x.element())
          << "\"];\n";
    for (const InvolutionEdge& e : set.edges)
      out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.s
          << (e.commuting ? ": sx=xs*" : ": sxs*") << "\"];\n";
    out << "}\n";
    return emit(out.str(), out_path);
  }
  if (format == "csv") out << "word,len,phi,norm\n";
  if (format == "text") out << "word\tlen\tphi\tnorm\n";
  for (const InvolutionEntry& e : set.entries) {
    const Element& x = e.x.element();
    unsigned len = unsigned(length(x));
    unsigned nrm = (len + e.phi) / 2;
    if (format == "json")
      out << "{\"word\":\"" << canonical_string(x) << "\",\"len\":" << len
          << ",\"phi\":" << e.phi << ",\"norm\":" << nrm << "}\n";
    else if (format == "csv")
      out << "\"" << canonical_string(x) << "\"," << len << "," << e.phi << ","
          << nrm << "\n";
    else
      out << canonical_string(x) << "\t" << len << "\t" << e.phi << "\t" << nrm << "\n";
  }
  return emit(out.str(), out_path);
}

int print_signed(const Element& w, const TwistedInvolution& x,
                 const std::string& format, const std::string& out_path) {
  int sign = (unsigned(length(w)) + norm(x)) % 2 ? -1 : 1;
  const Element& v = x.element();
  std::ostringstream out;
  if (format == "json")
    out << "{\"word\":\"" << canonical_string(v) << "\",\"sign\":" << sign
        << ",\"len\":" << length(v) << ",\"phi\":" << phi(x)
        << ",\"norm\":" << norm(x) << "}\n";
  else
    out << canonical_string(v) << "\nsign " << (sign > 0 ? "+1" : "-1") << "\n";
  return emit(out.str(), out_path);
}

int run_pi(const std::string& group_spec, const std::string& star_spec,
           const std::string& word, const std::string& format,
           const std::string& out_path) {
  need_format(format, {"text", "json"});
  Group g = load_group(group_spec);
  Star st = load_star(g, star_spec);
  Element w = from_word(g, word);
  return print_signed(w, pi(w, st), format, out_path);
}

int run_jpi(const std::string& group_spec, const std::string& star_spec,
            std::vector<Gen> jset, const std::string& word,
            const std::string& format, const std::string& out_path) {
  need_format(format, {"text", "json"});
  Group g = load_group(group_spec);
  Star st = load_star(g, star_spec);
  ParabolicContext ctx = make_parabolic_context(g, std::move(jset), st);
  Element w = from_word(g, word);
  return print_signed(w, jpi(w, ctx), format, out_path);
}

int run_affine_table(const std::string& group_spec, int max_exp,
                     const std::string& format, const std::string& out_path) {
  need_format(format, {"text", "json", "csv"});
  AffineContext ctx = build_affine_context(group_spec);
  if (ctx.basis.empty())
    throw Error("no tabulated translation basis for " + group_spec);

  struct Row {
    Element input, computed, expected;
  };
  std::vector<Row> rows;
  auto power = [&ctx](std::size_t i, int m) {
    Element r = Element::identity(ctx.group);
    for (int k = 0; k < m; ++k) r = multiply(r, ctx.basis[i]);
    return r;
  };

  if (ctx.basis.size() == 1) {
    Element one = from_word(ctx.group, "1");
    Element two = from_word(ctx.group, "2");
    for (int m = 0; m <= max_exp; ++m) {
      Element head = multiply(one, power(0, m));
      rows.push_back({head, jpi(head, ctx.parabolic).element(),
                      multiply(one, power(0, 2 * m))});
      Element head2 = multiply(head, two);
      rows.push_back({head2, jpi(head2, ctx.parabolic).element(),
                      multiply(one, power(0, 2 * m + 1))});
    }
  } else {
    Element head = from_word(ctx.group, "121");
    struct Form {
      const char* suffix;
      int da, db, dc;
    };
    const Form forms[] = {{"", 0, 0, 0},   {"3", 1, 0, 0},   {"31", 0, 0, 1},
                          {"32", 0, 1, 0}, {"321", 2, 0, 0}, {"312", 2, 0, 0}};
    for (int m = 0; m <= max_exp; ++m)
      for (int n = 0; n <= max_exp; ++n)
        for (int p = 0; p <= max_exp; ++p) {
          Element t = multiply(power(0, m), multiply(power(1, n), power(2, p)));
          for (const Form& f : forms) {
            Element input =
                multiply(multiply(head, t), from_word(ctx.group, f.suffix));
            Element expected = multiply(
                head, multiply(power(0, 2 * m + f.da),
                               multiply(power(1, 2 * n + f.db),
                                        power(2, 2 * p + f.dc))));
            rows.push_back({input, jpi(input, ctx.parabolic).element(), expected});
          }
        }
  }

  bool all_match = true;
  std::ostringstream out;
  if (format == "csv") out << "input,computed,expected,match\n";
  if (format == "text") out << "input\tcomputed\texpected\tmatch\n";
  for (const Row& r : rows) {
    bool match = r.computed == r.expected;
    all_match = all_match && match;
    if (format == "json")
      out << "{\"input\":\"" << canonical_string(r.input) << "\",\"computed\":\""
          << canonical_string(r.computed) << "\",\"expected\":\""
          << canonical_string(r.expected) << "\",\"match\":" << (match ? "true" : "false")
          << "}\n";
    else if (format == "csv")
      out << "\"" << canonical_string(r.input) << "\",\"" << canonical_string(r.computed)
          << "\",\"" << canonical_string(r.expected) << "\","
          << (match ? "true" : "false") << "\n";
    else
      out << canonical_string(r.input) << "\t" << canonical_string(r.computed) << "\t"
          << canonical_string(r.expected)
          << "\t" << (match ? "yes" : "NO") << "\n";
  }
  int rc = emit(out.str(), out_path);
  return rc != 0 ? rc : (all_match ? 0 : 1);
}

int run_verify(const std::string& suite, const std::string& format,
               const std::string& out_path) {
  need_format(format, {"text", "json"});
  SuiteReport rep = run_suite(suite);
  std::ostringstream out;
  if (format == "json") {
    nlohmann::json j;
    j["suite"] = rep.suite;
    j["pass"] = rep.pass();
    j["checks"] = nlohmann::json::array();
    for (const Check& c : rep.checks)
      j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out << j.dump() << "\n";
  } else {
    for (const Check& c : rep.checks)
      out << (c.pass ? "ok   " : "FAIL ") << c.name << " (" << c.detail << ")\n";
    out << (rep.pass() ? "pass" : "FAIL") << " " << rep.suite << "\n";
  }
  int rc = emit(out.str(), out_path);
  return rc != 0 ? rc : (rep.pass() ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter monoid products, twisted involutions and their tables"};
  app.require_subcommand(1);

  std::string group_spec, star_spec = "id", format = "text", out_path, suite = "all";
  std::string w1, w2;
  std::vector<Gen> jset;
  int max_len = 0;

  auto add_common = [&](CLI::App* cmd, bool with_star) {
    cmd->add_option("--group", group_spec,
                    "preset name, inline JSON or *.json file")
        ->required();
    if (with_star)
      cmd->add_option("--star", star_spec, "id, minus-w0 or perm:1-2,...");
    cmd->add_option("--format", format, "text, json, csv or dot")
        ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    cmd->add_option("--out", out_path, "write output to a file");
  };

  CLI::App* c_dem = app.add_subcommand("demazure", "monoid product of two words");
  add_common(c_dem, false);
  c_dem->add_option("w", w1, "left word")->required();
  c_dem->add_option("w2", w2, "right word")->required();

  CLI::App* c_inv =
      app.add_subcommand("involutions", "twisted involutions up to a length");
  add_common(c_inv, true);
  c_inv->add_option("--max-len", max_len, "largest length")
      ->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* c_pi = app.add_subcommand("pi", "image and sign of a word");
  add_common(c_pi, true);
  c_pi->add_option("w", w1, "word")->required();

  CLI::App* c_jpi =
      app.add_subcommand("jpi", "restricted image and sign of a word");
  add_common(c_jpi, true);
  c_jpi->add_option("--j", jset, "generators of the parabolic subgroup")
      ->required()
      ->delimiter(',');
  c_jpi->add_option("w", w1, "word")->required();

  CLI::App* c_tab = app.add_subcommand(
      "affine-table", "closed form table over the translation basis");
  add_common(c_tab, false);
  c_tab->add_option("--max-len", max_len, "largest basis exponent")
      ->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* c_ver = app.add_subcommand("verify", "run a property suite");
  c_ver->add_option("--suite", suite, "suite name or all");
  c_ver->add_option("--format", format, "text or json");
  c_ver->add_option("--out", out_path, "write output to a file");
  bool list_suites = false;
  c_ver->add_flag("--list", list_suites, "list suite names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_dem->parsed()) return run_demazure(group_spec, w1, w2, format, out_path);
    if (c_inv->parsed())
      return run_involutions(group_spec, star_spec, max_len, format, out_path);
    if (c_pi->parsed()) return run_pi(group_spec, star_spec, w1, format, out_path);
    if (c_jpi->parsed())
      return run_jpi(group_spec, star_spec, jset, w1, format, out_path);
    if (c_tab->parsed()) return run_affine_table(group_spec, max_len, format, out_path);
    if (c_ver->parsed()) {
      if (list_suites) {
        std::ostringstream out;
        for (const std::string& n : suite_names()) out << n << "\n";
        return emit(out.str(), out_path);
      }
      if (format == "text" && !c_ver->count("--format")) format = "json";
      return run_verify(suite, format, out_path);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
