// Command-line front door: builtin-space construction, verification suites,
// reduced-word and comparison-map tables, and exact hom homology.  Every run
// writes a machine-readable JSON report (to stdout by default) whose bytes
// depend only on the command-line configuration and seed.  Exit status: 0 when
// every check passed, 1 when some invariant failed, 2 on malformed input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pathcat/homology.hpp"
#include "pathcat/phi.hpp"
#include "pathcat/signs.hpp"
#include "pathcat/szczarba.hpp"
#include "pathcat/verify.hpp"

using json = nlohmann::ordered_json;
using namespace pathcat;

namespace {

// Builtin space grammar: delta:n, boundary:n, sphere:n, wedge:a+b, k1:n,
// file:path.
SSet parse_space(const std::string& desc) {
  auto colon = desc.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("space descriptor must be name:params");
  }
  std::string name = desc.substr(0, colon);
  std::string params = desc.substr(colon + 1);
  auto as_int = [&](const std::string& s) {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
    return v;
  };
  if (name == "delta") return standard_simplex(as_int(params));
  if (name == "boundary") return boundary(as_int(params));
  if (name == "sphere") return sphere(as_int(params));
  if (name == "k1") return k1_thickening(standard_simplex(as_int(params)));
  if (name == "wedge") {
    auto plus = params.find('+');
    if (plus == std::string::npos) {
      throw std::invalid_argument("wedge wants a+b");
    }
    return wedge_of_spheres(as_int(params.substr(0, plus)),
                            as_int(params.substr(plus + 1)));
  }
  if (name == "file") return sset_from_json_file(params);
  throw std::invalid_argument("unknown space kind: " + name);
}

CobarMode parse_mode(const std::string& s) {
  if (s == "plain") return CobarMode::kPlain;
  if (s == "extended") return CobarMode::kExtended;
  throw std::invalid_argument("mode must be plain or extended");
}

struct Report {
  json doc;
  bool any_failed = false;

  explicit Report(const std::string& command) {
    doc["command"] = command;
    doc["signs"] = signs::kSignTableVersion;
    doc["config"] = json::object();
    doc["checks"] = json::array();
  }
  void config(const std::string& key, const json& value) {
    doc["config"][key] = value;
  }
  void check(const std::string& name, bool ok, const std::string& witness) {
    json c;
    c["name"] = name;
    c["status"] = ok ? "pass" : "fail";
    if (!ok) {
      c["witness"] = witness;
      any_failed = true;
    }
    doc["checks"].push_back(c);
  }
  // A table is a header row plus data rows of strings.
  json& table(const std::string& name, const std::vector<std::string>& header) {
    if (!doc.contains("tables")) doc["tables"] = json::object();
    json& t = doc["tables"][name];
    t["header"] = header;
    t["rows"] = json::array();
    return t;
  }
};

void add_row(json& table, const std::vector<std::string>& cells) {
  table["rows"].push_back(cells);
}

std::string tsv_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\t') {
      out += ' ';
    } else {
      out += c;
    }
  }
  return out;
}

void print_tsv(std::ostream& os, const json& tables) {
  bool first = true;
  for (const auto& [name, t] : tables.items()) {
    if (!first) os << "\n";
    first = false;
    os << "# " << name << "\n";
    std::string line;
    for (const auto& h : t["header"]) {
      if (!line.empty()) line += '\t';
      line += tsv_escape(h.get<std::string>());
    }
    os << line << "\n";
    for (const auto& row : t["rows"]) {
      line.clear();
      for (const auto& cell : row) {
        if (!line.empty()) line += '\t';
        line += tsv_escape(cell.get<std::string>());
      }
      os << line << "\n";
    }
  }
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (int x : v) {
    if (!out.empty()) out += ",";
    out += std::to_string(x);
  }
  return out;
}

std::string int_to_string(const Int& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Per-command table builders --------------------------------------------------

void run_validate(Report& rep, const std::string& space) {
  SSet X = parse_space(space);
  rep.config("space", space);
  std::vector<std::string> violations = validate(X);
  std::string witness;
  for (const std::string& v : violations) {
    if (!witness.empty()) witness += "; ";
    witness += v;
  }
  rep.check("simplicial-identities:" + X.name, violations.empty(), witness);
  json& t = rep.table("summary", {"dim", "nondegenerate"});
  for (int d = 0; d <= X.top_dim(); ++d) {
    add_row(t, {std::to_string(d), std::to_string(X.count(d))});
  }
}

void run_words(Report& rep, const std::string& space, int from, int to,
               int max_len, const std::string& mode_name) {
  SSet X = parse_space(space);
  CobarMode mode = parse_mode(mode_name);
  rep.config("space", space);
  rep.config("from", from);
  rep.config("to", to);
  rep.config("max_len", max_len);
  rep.config("mode", mode_name);
  json& t = rep.table("words", {"length", "word"});
  for (const Monomial& m : setlike_monomials(X, from, to, max_len, mode)) {
    add_row(t, {std::to_string(m.letters.size()),
                monomial_to_string(X, m)});
  }
}

void run_szczarba(Report& rep, int n, int p, int q) {
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  rep.config("n", n);
  if (p >= 0) rep.config("p", p);
  if (q >= 0) rep.config("q", q);
  if ((p >= 0) != (q >= 0)) {
    throw std::invalid_argument("--p and --q must be given together");
  }
  if (p >= 0 && !(0 <= p && p < q && q <= n)) {
    throw std::invalid_argument("need 0 <= p < q <= n");
  }
  json& t = rep.table("szczarba", {"p", "q", "flag", "gamma", "word"});
  for (int pp = 0; pp <= n; ++pp) {
    for (int qq = pp + 1; qq <= n; ++qq) {
      if (p >= 0 && (pp != p || qq != q)) continue;
      for (const Flag& f : top_flags(n, pp, qq)) {
        add_row(t, {std::to_string(pp), std::to_string(qq), flag_to_string(f),
                    "(" + join_ints(flag_gamma(f)) + ")",
                    sz(f).to_string()});
      }
    }
  }
}

void run_cobar_basis(Report& rep, const std::string& space, int from, int to,
                     int degree, int cap, const std::string& mode_name) {
  SSet X = parse_space(space);
  CobarMode mode = parse_mode(mode_name);
  rep.config("space", space);
  rep.config("from", from);
  rep.config("to", to);
  rep.config("degree", degree);
  rep.config("word_cap", cap);
  rep.config("mode", mode_name);
  json& t = rep.table("basis", {"length", "word"});
  for (const Monomial& m : hom_basis(X, from, to, degree, mode, cap)) {
    add_row(t, {std::to_string(m.letters.size()),
                monomial_to_string(X, m)});
  }
}

void run_homology(Report& rep, const std::string& space, int from, int to,
                  int max_degree, int cap, const std::string& mode_name) {
  SSet X = parse_space(space);
  CobarMode mode = parse_mode(mode_name);
  rep.config("space", space);
  rep.config("from", from);
  rep.config("to", to);
  rep.config("max_degree", max_degree);
  rep.config("word_cap", cap);
  rep.config("mode", mode_name);
  HomologySummary h = hom_homology(X, from, to, max_degree, mode, cap);
  json& t = rep.table("homology", {"degree", "betti", "torsion", "truncated"});
  for (const DegreeHomology& d : h.degrees) {
    std::string tor;
    for (const Int& v : d.torsion) {
      if (!tor.empty()) tor += ",";
      tor += int_to_string(v);
    }
    add_row(t, {std::to_string(d.degree), std::to_string(d.betti), tor,
                d.truncated ? "yes" : "no"});
  }
  json sizes = json::array();
  for (std::size_t s : h.basis_sizes) sizes.push_back(s);
  rep.doc["basis_sizes"] = sizes;
}

void run_phi(Report& rep, const std::string& space,
             const std::vector<std::string>& letter_ids,
             const std::string& mode_name) {
  SSet X = parse_space(space);
  CobarMode mode = parse_mode(mode_name);
  rep.config("space", space);
  rep.config("letters", letter_ids);
  rep.config("mode", mode_name);
  if (letter_ids.empty()) {
    throw std::invalid_argument("phi wants at least one letter id");
  }
  // A leading '~' marks a formal inverse (edges only, extended mode).
  std::vector<CobarLetter> letters;
  for (const std::string& id : letter_ids) {
    CobarLetter l;
    if (!id.empty() && id[0] == '~') {
      l.inverse = true;
      l.simplex = X.ref(id.substr(1));
    } else {
      l.simplex = X.ref(id);
    }
    letters.push_back(l);
  }
  Monomial m = make_monomial(X, letters, 0, mode);
  rep.config("word", monomial_to_string(X, m));
  GChain image = phi(X, m);
  json& t = rep.table("phi", {"coefficient", "word"});
  for (const auto& [w, c] : image) {
    add_row(t, {int_to_string(c), gkan_to_string(X, w)});
  }
  rep.doc["level"] = m.degree();
}

void run_verify(Report& rep, const std::string& suite, unsigned seed) {
  rep.config("suite", suite);
  rep.config("seed", seed);
  for (const CheckResult& c : run_suite(suite, seed)) {
    rep.check(c.name, c.ok, c.witness);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact chain-level path-category toolkit"};
  app.require_subcommand(1);

  std::string space, mode = "plain", format = "json", report_path = "-";
  std::string suite = "all";
  std::vector<std::string> letter_ids;
  int from = 0, to = 0, max_len = 5, degree = 0, cap = -1, max_degree = 3;
  int n = 3, p = -1, q = -1;
  unsigned seed = 7;

  app.add_option("--format", format, "json (report to stdout) or tsv (tables)")
      ->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--report", report_path,
                 "file for the JSON report; '-' means stdout");

  CLI::App* c_validate = app.add_subcommand("validate", "simplicial identities");
  c_validate->add_option("--space", space)->required();

  CLI::App* c_words = app.add_subcommand("words", "reduced-word tables");
  c_words->add_option("--space", space)->required();
  c_words->add_option("--from", from);
  c_words->add_option("--to", to);
  c_words->add_option("--max-len", max_len);
  c_words->add_option("--mode", mode);

  CLI::App* c_sz = app.add_subcommand("szczarba", "comparison-map tables");
  c_sz->add_option("--n", n)->required();
  c_sz->add_option("--p", p);
  c_sz->add_option("--q", q);

  CLI::App* c_basis = app.add_subcommand("cobar-basis", "hom-basis tables");
  c_basis->add_option("--space", space)->required();
  c_basis->add_option("--from", from);
  c_basis->add_option("--to", to);
  c_basis->add_option("--degree", degree)->required();
  c_basis->add_option("--cap", cap);
  c_basis->add_option("--mode", mode);

  CLI::App* c_hom = app.add_subcommand("homology", "exact hom homology");
  c_hom->add_option("--space", space)->required();
  c_hom->add_option("--from", from);
  c_hom->add_option("--to", to);
  c_hom->add_option("--max-degree", max_degree);
  c_hom->add_option("--cap", cap);
  c_hom->add_option("--mode", mode);

  CLI::App* c_phi = app.add_subcommand("phi", "loop-groupoid chain image");
  c_phi->add_option("--space", space)->required();
  c_phi->add_option("--letters", letter_ids,
                    "simplex ids, '~' prefix for an inverse edge")
      ->required();
  c_phi->add_option("--mode", mode);

  CLI::App* c_verify = app.add_subcommand("verify", "invariant batteries");
  c_verify->add_option("--suite", suite)
      ->check(CLI::IsMember(verify_suite_names()));
  c_verify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exits 0; bad flags exit 2
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    Report rep(sub->get_name());
    if (sub == c_validate) {
      run_validate(rep, space);
    } else if (sub == c_words) {
      run_words(rep, space, from, to, max_len, mode);
    } else if (sub == c_sz) {
      run_szczarba(rep, n, p, q);
    } else if (sub == c_basis) {
      run_cobar_basis(rep, space, from, to, degree, cap, mode);
    } else if (sub == c_hom) {
      run_homology(rep, space, from, to, max_degree, cap, mode);
    } else if (sub == c_phi) {
      run_phi(rep, space, letter_ids, mode);
    } else {
      run_verify(rep, suite, seed);
    }

    std::string text = rep.doc.dump(2) + "\n";
    if (report_path == "-") {
      if (format == "tsv" && rep.doc.contains("tables")) {
        print_tsv(std::cout, rep.doc["tables"]);
      } else {
        std::cout << text;
      }
    } else {
      std::ofstream out(report_path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + report_path);
      out << text;
      if (format == "tsv" && rep.doc.contains("tables")) {
        print_tsv(std::cout, rep.doc["tables"]);
      }
    }
    return rep.any_failed ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
