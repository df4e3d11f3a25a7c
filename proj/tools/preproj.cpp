// preproj: batch front end for the Hall algebra, root category, tube and
// twist computations.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "preproj/acceptance.hpp"
#include "preproj/hall.hpp"
#include "preproj/quiver.hpp"
#include "preproj/rootcat.hpp"
#include "preproj/tube.hpp"

namespace {

using namespace preproj;
using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerify = 3;

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string quiver_path;
  std::uint32_t q = 3;
  int max_dim = Budget{}.max_total_dim;
  std::uint64_t budget = Budget{}.enumeration_cap;
  std::uint64_t seed = 20240601;
  std::string format = "tsv";

  quiver::Quiver quiver() const {
    return quiver_path.empty() ? quiver::Quiver::kronecker() : quiver::load_quiver(quiver_path);
  }
  Budget budgets() const {
    Budget b;
    b.enumeration_cap = budget;
    b.max_total_dim = max_dim;
    return b;
  }
  bool json_out() const { return format == "json"; }
  void validate() const {
    require(ffla::is_prime(q), "--q must be prime");
    require(max_dim > 0 && budget > 0, "budgets must be positive");
  }
};

std::vector<long long> parse_ints(const std::string& s) {
  std::vector<long long> out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    std::istringstream t(tok);
    long long v;
    while (t >> v) out.push_back(v);
    require(t.eof(), "not an integer list: " + s);
  }
  return out;
}

std::vector<int> parse_word(const std::vector<std::string>& parts) {
  std::vector<int> w;
  for (const auto& p : parts)
    for (long long v : parse_ints(p)) w.push_back(static_cast<int>(v));
  return w;
}

quiver::RootVec parse_root(const std::string& s, int n) {
  quiver::RootVec v = parse_ints(s);
  require(static_cast<int>(v.size()) == n, "dimension vector " + s + " needs " + std::to_string(n) + " entries");
  return v;
}

rep::Algebra parse_algebra(const std::string& s) { return rep::algebra_from_string(s); }

void cmd_form(const RunConfig& cfg, const std::string& xs, const std::string& ys) {
  const auto q = cfg.quiver();
  const auto x = parse_root(xs, q.num_vertices()), y = parse_root(ys, q.num_vertices());
  const long long e = quiver::euler_form_A(q, x, y), s = quiver::symmetric_form(q, x, y),
                  l = quiver::euler_form_lambda(q, x, y);
  if (cfg.json_out())
    std::cout << json{{"euler", e}, {"symmetric", s}, {"lambda", l}}.dump() << '\n';
  else
    std::cout << "euler\t" << e << "\nsymmetric\t" << s << "\nlambda\t" << l << '\n';
}

void print_hall(const RunConfig& cfg, const hall::HallAlgebra& h, const hall::HallElement& e) {
  if (!cfg.json_out()) {
    std::cout << h.tsv(e);
    return;
  }
  json rows = json::array();
  std::istringstream in(h.tsv(e));
  std::string line;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    rows.push_back({{"class", line.substr(0, tab)}, {"coefficient", line.substr(tab + 1)}});
  }
  std::cout << rows.dump() << '\n';
}

void cmd_hall(const RunConfig& cfg, const std::vector<int>& word, const std::string& alg) {
  hall::HallAlgebra h(cfg.quiver(), parse_algebra(alg), cfg.q, cfg.budgets());
  print_hall(cfg, h, h.monomial(word));
}

void cmd_serre(const RunConfig& cfg, int i, int j, const std::string& alg) {
  hall::HallAlgebra h(cfg.quiver(), parse_algebra(alg), cfg.q, cfg.budgets());
  const hall::HallElement r = hall::serre_residue(h, i, j);
  if (cfg.json_out()) {
    std::cout << json{{"residue_terms", r.terms.size()}, {"pass", r.is_zero()}}.dump() << '\n';
  } else if (r.is_zero()) {
    std::cout << "residue: 0 (PASS)\n";
  } else {
    std::cout << "residue:\n" << h.tsv(r) << "(FAIL)\n";
  }
  if (!r.is_zero()) throw VerificationFailure("nonzero Serre residue");
}

hall::RepTemplate parse_template(const RunConfig& cfg, const std::string& text, int vertex) {
  const auto q = cfg.quiver();
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    require(static_cast<bool>(in), "cannot open " + text.substr(1));
    return hall::RepTemplate::of(rep::rep_from_json(json::parse(in)));
  }
  // S<v> or S<v>^k, with S_i meaning the --vertex vertex
  require(text.size() >= 2 && text[0] == 'S', "template must be S<v>, S<v>^k or @file.json");
  const auto caret = text.find('^');
  std::string v = text.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
  if (!v.empty() && v.front() == '_') v.erase(0, 1);
  const int at = v == "i" ? vertex : std::stoi(v);
  const int k = caret == std::string::npos ? 1 : std::stoi(text.substr(caret + 1));
  require(k >= 1, "template power must be positive");
  const rep::Rep s = rep::simple(q, rep::Algebra::Preprojective, 2, at);
  return hall::RepTemplate::of(rep::direct_power(s, k));
}

void cmd_hallpoly(const RunConfig& cfg, const std::string& lambda, const std::string& templ, int vertex) {
  const auto lam = hall::parse_filtration(lambda, vertex);
  const auto t = parse_template(cfg, templ, vertex);
  const auto r = hall::hall_polynomial(lam, t, {2, 3, 5, 7}, cfg.budgets());
  if (cfg.json_out()) {
    json counts = json::array();
    for (const auto& [q, c] : r.counts) counts.push_back({{"q", q}, {"count", c.str()}});
    json j{{"counts", counts}, {"ok", r.fit.ok()}};
    if (r.fit.ok()) {
      j["polynomial"] = r.fit.poly->to_string();
      j["chi"] = hall::euler_char(*r.fit.poly).str();
    }
    std::cout << j.dump() << '\n';
  } else if (r.fit.ok()) {
    std::cout << r.fit.poly->to_string() << " ; chi=" << hall::euler_char(*r.fit.poly) << '\n';
  } else {
    for (const auto& [q, c] : r.counts) std::cout << "q=" << q << "\t" << c << '\n';
    std::cout << "no integer polynomial through the probes\n";
  }
  if (!r.fit.ok()) throw VerificationFailure("interpolation failed");
}

void cmd_weyl(const RunConfig& cfg, const std::vector<int>& word, int n_max) {
  const auto q = cfg.quiver();
  const auto m = quiver::weyl_word_matrix(q, word);
  const auto probe = quiver::weyl_order_probe(q, word, n_max);
  if (cfg.json_out()) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
      rows.push_back(row);
    }
    std::cout << json{{"matrix", rows}, {"order", probe.to_string()}}.dump() << '\n';
  } else {
    std::cout << m.to_string() << "\norder: " << probe.to_string() << '\n';
  }
}

tube::TubeBasis parse_tube_basis(const std::string& s) {
  if (s == "h") return tube::TubeBasis::h();
  std::string t = s;
  if (t.rfind("u", 0) == 0) t = t.substr(1);
  if (!t.empty() && t.front() == '<' && t.back() == '>') t = t.substr(1, t.size() - 2);
  return tube::TubeBasis::u(std::stoll(t));
}

void cmd_tube(const RunConfig& cfg, const std::string& op, const std::vector<std::string>& args, int vertex,
              long long n_max) {
  if (op == "bracket") {
    require(args.size() == 2, "tube bracket takes two basis names (h, u<n> or n)");
    const auto r = tube::tube_bracket(tube::TubeElt::basis(vertex, parse_tube_basis(args[0])),
                                      tube::TubeElt::basis(vertex, parse_tube_basis(args[1])));
    if (cfg.json_out())
      std::cout << json{{"bracket", r.to_string()}}.dump() << '\n';
    else
      std::cout << r.to_string() << '\n';
  } else if (op == "jacobi") {
    const auto r = tube::jacobi_check(vertex, n_max, cfg.q);
    if (cfg.json_out()) {
      json j{{"triples", r.triples}, {"violations", r.violations}, {"ok", r.ok()}};
      if (r.inconclusive) j["inconclusive"] = *r.inconclusive;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "triples\t" << r.triples << "\nviolations\t" << r.violations.size() << '\n';
      for (const auto& v : r.violations) std::cout << v << '\n';
      if (r.inconclusive) std::cout << "inconclusive\t" << *r.inconclusive << '\n';
    }
    if (!r.ok()) throw VerificationFailure("Jacobi check failed");
  } else if (op == "sl2") {
    const auto r = tube::sl2_quotient_check(vertex, n_max, cfg.q);
    if (cfg.json_out())
      std::cout << json{{"pass", r.pass()}, {"report", r.to_string()}}.dump() << '\n';
    else
      std::cout << r.to_string() << '\n' << (r.pass() ? "PASS" : "FAIL") << '\n';
    if (!r.pass()) throw VerificationFailure("sl2 quotient check failed");
  } else {
    argument_error("unknown tube operation " + op + " (bracket, jacobi, sl2)");
  }
}

rootcat::LieElement parse_generator(rootcat::RootCategory& rc, const std::string& s) {
  // h<i>, S<i>, S<i>[1], T<i><n>
  require(s.size() >= 2, "bad generator " + s);
  if (s[0] == 'h') return rc.h(std::stoi(s.substr(1)));
  if (s[0] == 'S') {
    const bool shifted = s.size() > 3 && s.substr(s.size() - 3) == "[1]";
    return rc.u_simple(std::stoi(s.substr(1, shifted ? s.size() - 4 : std::string::npos)), shifted ? 1 : 0);
  }
  if (s[0] == 'T') {
    const auto lt = s.find('<');
    require(lt != std::string::npos && s.back() == '>', "tube generator must look like T1<2>");
    return rc.u(rootcat::RCObject::tube(std::stoi(s.substr(1, lt - 1)), std::stoll(s.substr(lt + 1))));
  }
  argument_error("bad generator " + s + " (h1, S1, S1[1], T1<2>)");
}

void cmd_bracket(const RunConfig& cfg, const std::string& a, const std::string& b, const std::string& alg,
                 bool reduce) {
  rootcat::RootCategory rc(cfg.quiver(), parse_algebra(alg), cfg.q, reduce, cfg.budgets());
  const auto r = rc.bracket(parse_generator(rc, a), parse_generator(rc, b));
  if (!cfg.json_out()) {
    std::cout << rc.tsv(r);
    return;
  }
  json rows = json::array();
  std::istringstream in(rc.tsv(r));
  std::string line;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    rows.push_back({{"symbol", line.substr(0, tab)}, {"coefficient", line.substr(tab + 1)}});
  }
  std::cout << rows.dump() << '\n';
}

void cmd_verify(const RunConfig& cfg) {
  json rows = json::array();
  bool all = true;
  acceptance::run_all(cfg.seed, [&](const acceptance::CriterionResult& r) {
    all = all && r.pass;
    if (cfg.json_out())
      rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    else
      std::cout << r.line() << std::endl;
  });
  if (cfg.json_out()) std::cout << rows.dump() << '\n';
  if (!all) throw VerificationFailure("acceptance criteria failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall algebras, root categories and twists of preprojective algebras over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--quiver", cfg.quiver_path, "Quiver file (default: Kronecker)")->check(CLI::ExistingFile);
  app.add_option("--q", cfg.q, "Field size (prime)");
  app.add_option("--max-dim", cfg.max_dim, "Largest total dimension to enumerate");
  app.add_option("--budget", cfg.budget, "Enumeration cap");
  app.add_option("--seed", cfg.seed, "Seed for sampled checks");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));

  std::string x, y, algebra = "lambda", lambda, templ, op;
  std::vector<std::string> word, args;
  int i = 1, j = 2, vertex = 1, n_max = 10;
  long long window = 6;
  bool reduce = false;

  auto* form = app.add_subcommand("form", "Euler, symmetric and preprojective forms of two dimension vectors");
  form->add_option("x", x)->required();
  form->add_option("y", y)->required();

  auto* hallc = app.add_subcommand("hall", "Expand a monomial in the simple generators");
  hallc->add_option("word", word, "Vertices, e.g. 1 2 or 1,2")->required();
  hallc->add_option("--algebra", algebra, "lambda or path");

  auto* serre = app.add_subcommand("serre", "Serre residue mod (q-1)");
  serre->add_option("i", i)->required();
  serre->add_option("j", j)->required();
  serre->add_option("--algebra", algebra, "lambda or path");

  auto* hallpoly = app.add_subcommand("hallpoly", "Interpolate a filtration count as a polynomial in q");
  hallpoly->add_option("lambda", lambda, "e.g. i+i, 2i, 1*1+1*2")->required();
  hallpoly->add_option("template", templ, "S_i^2, S1, or @module.json")->required();
  hallpoly->add_option("--vertex", vertex, "Vertex named by i");

  auto* weyl = app.add_subcommand("weyl", "Weyl group element of a word and its order");
  weyl->add_option("word", word)->required();
  weyl->add_option("--n-max", n_max, "Largest power probed");

  auto* tubec = app.add_subcommand("tube", "Tube Lie algebra: bracket, jacobi or sl2");
  tubec->add_option("op", op)->required()->check(CLI::IsMember({"bracket", "jacobi", "sl2"}));
  tubec->add_option("args", args);
  tubec->add_option("--vertex", vertex);
  tubec->add_option("--n-max", window, "Window |n| <= N");

  auto* bracket = app.add_subcommand("bracket", "Lie bracket of two generators (h1, S1, S1[1], T1<2>)");
  bracket->add_option("x", x)->required();
  bracket->add_option("y", y)->required();
  bracket->add_option("--algebra", algebra, "lambda or path");
  bracket->add_flag("--reduce", reduce, "Coefficients mod (q-1)");

  auto* verify = app.add_subcommand("verify", "Run every acceptance check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    cfg.validate();
    if (*form) cmd_form(cfg, x, y);
    if (*hallc) cmd_hall(cfg, parse_word(word), algebra);
    if (*serre) cmd_serre(cfg, i, j, algebra);
    if (*hallpoly) cmd_hallpoly(cfg, lambda, templ, vertex);
    if (*weyl) cmd_weyl(cfg, parse_word(word), n_max);
    if (*tubec) cmd_tube(cfg, op, args, vertex, window);
    if (*bracket) cmd_bracket(cfg, x, y, algebra, reduce);
    if (*verify) cmd_verify(cfg);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitVerify;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
