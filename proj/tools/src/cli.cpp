#include "ncfactor_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ncfactor/als_io.hpp"
#include "ncfactor/errors.hpp"
#include "ncfactor/factorizer.hpp"
#include "ncfactor/hankel.hpp"
#include "ncfactor/minimizer.hpp"
#include "ncfactor/parser.hpp"

namespace ncfactor::cli {

namespace {

struct Config {
  std::string command;
  std::string expr;
  std::string file;
  std::string alphabet;
  bool json = false;
  bool trace = false;
  bool enumerate = false;
  bool oracle_check = false;
  bool descending = false;
  unsigned jobs = 1;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Alphabet parse_alphabet(const std::string& spec) {
  std::vector<std::string> letters;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    letters.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return Alphabet(letters);
}

// Expression text from the positional argument or --file, never both.
std::string expression_text(const Config& c) {
  if (!c.expr.empty() && !c.file.empty()) throw UsageError("give either an expression or --file, not both");
  if (!c.file.empty()) {
    std::string t = read_file(c.file);
    while (!t.empty() && (t.back() == '\n' || t.back() == '\r')) t.pop_back();
    return t;
  }
  if (c.expr.empty()) throw UsageError(c.command + " needs an expression or --file");
  return c.expr;
}

NcPolynomial input_poly(const Config& c, std::string& text) {
  text = expression_text(c);
  const Alphabet a = c.alphabet.empty() ? infer_alphabet(text) : parse_alphabet(c.alphabet);
  return parse_poly(text, a);
}

const char* side_name(StepSide s) {
  switch (s) {
    case StepSide::Left: return "left";
    case StepSide::Right: return "right";
    case StepSide::Special: return "special";
  }
  return "?";
}

std::string format_vector(const RationalVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
  return s + "]";
}

template <class Vec>
nlohmann::ordered_json json_vector(const Vec& v) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& x : v) j.push_back(x.str());
  return j;
}

// Sum of monomial systems, nothing merged: the starting point for `minimize EXPR`.
Als naive_als(const NcPolynomial& p) {
  if (p.is_zero()) return Als(p.alphabet(), 0);
  std::optional<Als> acc;
  for (const auto& [w, c] : p.terms()) {
    Als m = als_monomial(p.alphabet(), w, c);
    acc = acc ? als_add(*acc, m) : m;
  }
  return *acc;
}

bool trace_from_env() {
  const char* e = std::getenv("NCFACTOR_TRACE");
  return e && *e && std::string(e) != "0";
}

// -- commands -----------------------------------------------------------------

int cmd_rank(const Config& c, std::ostream& out, std::ostream& err) {
  std::string text;
  const NcPolynomial p = input_poly(c, text);
  const std::size_t rank = als_from_poly(p).dim();
  std::optional<std::size_t> oracle;
  if (c.oracle_check) oracle = hankel_rank(p);
  if (c.json) {
    nlohmann::ordered_json j{{"input", print_poly(p)}, {"rank", rank}};
    if (oracle) {
      j["hankel_rank"] = *oracle;
      j["oracle_match"] = *oracle == rank;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "rank = " << rank << "\n";
    if (oracle) out << "hankel_rank = " << *oracle << (*oracle == rank ? " (match)" : " (MISMATCH)") << "\n";
  }
  if (oracle && *oracle != rank) {
    err << "error: minimal system dimension " << rank << " differs from Hankel rank " << *oracle << "\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_hankel(const Config& c, std::ostream& out) {
  std::string text;
  const NcPolynomial p = input_poly(c, text);
  const HankelMatrix h = hankel_matrix(p);
  const std::size_t rank = hankel_rank(p);
  if (c.json) {
    nlohmann::ordered_json j{{"input", print_poly(p)}, {"rank", rank}};
    auto words = [&](const std::vector<Word>& ws) {
      auto a = nlohmann::ordered_json::array();
      for (const auto& w : ws) a.push_back(format_word(w, p.alphabet()));
      return a;
    };
    j["rows"] = words(h.row_words);
    j["cols"] = words(h.col_words);
    j["entries"] = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < h.entries.rows(); ++r) {
      auto row = nlohmann::ordered_json::array();
      for (std::size_t k = 0; k < h.entries.cols(); ++k) row.push_back(h.entries(r, k).str());
      j["entries"].push_back(std::move(row));
    }
    out << j.dump(2) << "\n";
  } else {
    out << format_hankel(h) << "rank = " << rank << "\n";
  }
  return kOk;
}

int cmd_als(const Config& c, std::ostream& out) {
  std::string text;
  const NcPolynomial p = input_poly(c, text);
  const PreStandardAls s = als_from_poly(p);
  if (c.json) out << als_to_json(s.als()).dump(2) << "\n";
  else out << format_als(s.als()) << "\n";
  return kOk;
}

int cmd_minimize(const Config& c, std::ostream& out, std::ostream& err) {
  Als start{Alphabet::default_xyz(), 0};
  std::optional<NcPolynomial> expected;
  if (!c.file.empty() && c.expr.empty()) {
    start = als_from_json(nlohmann::json::parse(read_file(c.file)));
  } else {
    std::string text;
    expected = input_poly(c, text);
    start = naive_als(*expected);
  }
  const std::size_t before = start.dim();
  MinimizationTrace trace;
  const PreStandardAls m = minimize(start.is_unit_upper_triangular() ? start : pre_standardize(start).als(), &trace);

  bool ok = true;
  std::optional<std::size_t> oracle;
  const NcPolynomial solved = als_solve(m);
  if (c.oracle_check) {
    oracle = hankel_rank(solved);
    ok = *oracle == m.dim() && poly_equal(solved, als_evaluate(start));
    if (expected) ok = ok && poly_equal(solved, *expected);
  }

  if (c.json) {
    nlohmann::ordered_json j{{"dim_before", before}, {"dim", m.dim()}, {"element", print_poly(solved)}};
    if (c.trace) {
      auto steps = nlohmann::ordered_json::array();
      for (const auto& s : trace.steps)
        steps.push_back({{"side", side_name(s.side)},
                         {"k", s.k},
                         {"t", json_vector(s.t)},
                         {"u", json_vector(s.u)},
                         {"dim_before", s.dim_before},
                         {"dim_after", s.dim_after}});
      j["trace"] = {{"steps", steps}, {"stripped", trace.stripped}};
    }
    if (oracle) {
      j["hankel_rank"] = *oracle;
      j["oracle_match"] = ok;
    }
    j["als"] = als_to_json(m.als());
    out << j.dump(2) << "\n";
  } else {
    if (c.trace) {
      for (const auto& s : trace.steps) {
        out << "step " << side_name(s.side) << " k=" << s.k << ": dim " << s.dim_before << " -> " << s.dim_after;
        if (s.side != StepSide::Special) out << "  T = " << format_vector(s.t) << "  U = " << format_vector(s.u);
        out << "\n";
      }
      if (trace.stripped) out << "stripped " << trace.stripped << " zero-tail component(s)\n";
    }
    out << "dim " << before << " -> " << m.dim() << "\n" << format_als(m.als()) << "\n";
    out << "element = " << print_poly(solved) << "\n";
    if (oracle) out << "hankel_rank = " << *oracle << (ok ? " (match)" : " (MISMATCH)") << "\n";
  }
  if (!ok) {
    err << "error: oracle check failed\n";
    return kCheckFailed;
  }
  return kOk;
}

void print_certificate(const FactorizationCertificate& cert, bool trace, std::ostream& out) {
  out << "input: " << print_poly(cert.input) << "\n";
  if (cert.atoms.empty()) {
    out << "unit: " << cert.unit << " (no atoms)\n";
  } else {
    out << "atoms (product order):\n";
    for (std::size_t i = 0; i < cert.atoms.size(); ++i) {
      const auto& a = cert.atoms[i];
      out << "  " << i + 1 << ". " << print_poly(a.poly) << "   rank " << a.als.dim() << "   " << to_string(a.status)
          << "\n";
    }
    out << "unit: " << cert.unit << "\n";
  }
  if (trace) {
    for (const auto& n : cert.nodes) {
      out << "node " << n.path << " dim " << n.dim;
      if (n.split_k) out << " split at k=" << *n.split_k;
      out << "\n";
      for (const auto& r : n.ideals) {
        out << "  k=" << r.k << ": " << r.generator_count << " generators, basis " << r.basis_size << ", "
            << to_string(r.status) << "\n";
        for (const auto& g : r.basis) out << "    " << g << "\n";
      }
    }
  }
  if (cert.product_check) out << "VERIFIED product = input\n";
  for (std::size_t i = 0; i < cert.atoms.size(); ++i)
    if (cert.atoms[i].status == AtomStatus::SplitsOverClosure)
      out << "note: atom " << i + 1
          << " is irreducible over Q, but a nontrivial ideal means it factors over the algebraic closure\n";
}

int cmd_factor(const Config& c, std::ostream& out, std::ostream& err) {
  std::string text;
  const NcPolynomial p = input_poly(c, text);
  if (p.is_zero()) throw UsageError("cannot factor the zero polynomial");
  FactorOptions opt;
  opt.jobs = c.jobs;
  opt.descending = c.descending;
  opt.verify_bases = c.oracle_check;

  std::vector<FactorizationCertificate> certs;
  if (c.enumerate) certs = enumerate_factorizations(p, opt);
  else certs.push_back(factor(p, opt));

  bool ok = true;
  std::vector<VerifyReport> reports;
  if (c.oracle_check) {
    for (const auto& cert : certs) {
      reports.push_back(verify_certificate(cert, opt));
      ok = ok && reports.back().ok;
    }
  }

  if (c.json) {
    if (c.enumerate) {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& cert : certs) arr.push_back(certificate_to_json(cert));
      out << nlohmann::ordered_json{{"factorizations", arr}}.dump(2) << "\n";
    } else {
      auto j = certificate_to_json(certs.front());
      if (c.oracle_check) j["oracle_check"] = reports.front().ok;
      out << j.dump(2) << "\n";
    }
  } else {
    for (std::size_t i = 0; i < certs.size(); ++i) {
      if (c.enumerate) {
        out << "factorization " << i + 1 << " ranks (";
        const auto r = atom_ranks(certs[i]);
        for (std::size_t k = 0; k < r.size(); ++k) out << (k ? "," : "") << r[k];
        out << ")\n";
      }
      print_certificate(certs[i], c.trace, out);
      if (c.oracle_check) out << "oracle check: " << (reports[i].ok ? "PASS" : "FAIL") << "\n";
    }
  }
  for (const auto& r : reports)
    for (const auto& pr : r.problems) err << "error: " << pr << "\n";
  return ok ? kOk : kCheckFailed;
}

int cmd_verify(const Config& c, std::ostream& out) {
  const std::string path = !c.file.empty() ? c.file : c.expr;
  if (path.empty()) throw UsageError("verify needs a certificate file");
  const FactorizationCertificate cert = certificate_from_json(nlohmann::json::parse(read_file(path)));
  FactorOptions opt;
  opt.jobs = c.jobs;
  const VerifyReport r = verify_certificate(cert, opt);
  if (c.json) {
    out << nlohmann::ordered_json{{"ok", r.ok}, {"problems", r.problems}}.dump(2) << "\n";
  } else {
    out << (r.ok ? "PASS" : "FAIL") << "\n";
    for (const auto& pr : r.problems) out << "  " << pr << "\n";
  }
  return r.ok ? kOk : kCheckFailed;
}

void report_parse_error(const ParseError& e, const std::string& text, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  if (!text.empty() && text.find('\n') == std::string::npos && e.offset() <= text.size())
    err << "  " << text << "\n  " << std::string(e.offset(), ' ') << "^\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Factorization of non-commutative polynomials over Q", "ncfactor"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--alphabet", c.alphabet, "Comma-separated letters (default: x,y,z plus any others used)");
  app.add_flag("--json", c.json, "JSON output");
  app.add_flag("--trace", c.trace, "Print minimization steps / factorization ideals (also NCFACTOR_TRACE=1)");
  app.add_flag("--oracle-check", c.oracle_check, "Cross-check against independent oracles");
  app.add_option("--jobs", c.jobs, "Solve split ideals concurrently")->check(CLI::Range(1U, 256U));

  struct Spec {
    const char* name;
    const char* help;
  };
  for (const Spec& s : {Spec{"rank", "Dimension of a minimal linear system"},
                        Spec{"minimize", "Minimize an ALS file (--file) or the naive system of an expression"},
                        Spec{"factor", "Factorize into atoms"}, Spec{"hankel", "Hankel matrix and its rank"},
                        Spec{"als", "Minimal pre-standard ALS of an expression"},
                        Spec{"verify", "Check a certificate JSON file"}}) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", c.expr, s.name == std::string("verify") ? "Certificate file" : "Polynomial expression");
    sub->add_option("--file", c.file, "Read the input from a file");
    if (s.name == std::string("factor")) {
      sub->add_flag("--enumerate-factorizations", c.enumerate, "One factorization per atom-rank composition");
      sub->add_flag("--descending", c.descending, "Sweep split indices from the top");
    }
    sub->callback([&c, sub] { c.command = sub->get_name(); });
  }

  // "-x*y + z" is an expression, not a short flag: pass it after "--".
  std::vector<std::string> ordered, negative;
  for (const auto& a : args) {
    const bool looks_negative = a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h";
    (looks_negative ? negative : ordered).push_back(a);
  }
  if (!negative.empty() && std::find(ordered.begin(), ordered.end(), "--") == ordered.end()) {
    ordered.push_back("--");
    ordered.insert(ordered.end(), negative.begin(), negative.end());
  } else {
    ordered.insert(ordered.end(), negative.begin(), negative.end());
  }
  std::vector<std::string> rev(ordered.rbegin(), ordered.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  c.trace = c.trace || trace_from_env();

  std::string shown = c.expr;
  try {
    if (c.command == "rank") return cmd_rank(c, out, err);
    if (c.command == "hankel") return cmd_hankel(c, out);
    if (c.command == "als") return cmd_als(c, out);
    if (c.command == "minimize") return cmd_minimize(c, out, err);
    if (c.command == "factor") return cmd_factor(c, out, err);
    if (c.command == "verify") return cmd_verify(c, out);
  } catch (const ParseError& e) {
    report_parse_error(e, shown, err);
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidAls& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: unknown command\n";
  return kUsage;
}

}  // namespace ncfactor::cli
