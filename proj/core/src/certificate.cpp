#include <stdexcept>

#include "ncfactor/als_io.hpp"
#include "ncfactor/errors.hpp"
#include "ncfactor/factorizer.hpp"
#include "ncfactor/hankel.hpp"
#include "ncfactor/parser.hpp"

namespace ncfactor {

namespace {

PointStatus point_status_from(const std::string& s) {
  for (auto st : {PointStatus::Found, PointStatus::TrivialIdeal, PointStatus::NoRationalPoint, PointStatus::Blocked})
    if (s == to_string(st)) return st;
  throw InvalidAls("unknown ideal status '" + s + "'");
}

AtomStatus atom_status_from(const std::string& s) {
  for (auto st : {AtomStatus::Atom, AtomStatus::SplitsOverClosure, AtomStatus::Reducible})
    if (s == to_string(st)) return st;
  throw InvalidAls("unknown atom status '" + s + "'");
}

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidAls(std::string("certificate is missing '") + key + "'");
  return j.at(key);
}

}  // namespace

nlohmann::ordered_json certificate_to_json(const FactorizationCertificate& c) {
  nlohmann::ordered_json j;
  j["alphabet"] = c.input.alphabet().letters();
  j["input"] = print_poly(c.input);
  j["unit"] = c.unit.str();
  j["product_check"] = c.product_check;
  j["atoms"] = nlohmann::ordered_json::array();
  for (const auto& a : c.atoms) {
    nlohmann::ordered_json e;
    e["poly"] = print_poly(a.poly);
    e["rank"] = a.als.dim();
    e["status"] = to_string(a.status);
    e["als"] = als_to_json(a.als.als());
    j["atoms"].push_back(std::move(e));
  }
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : c.nodes) {
    nlohmann::ordered_json e;
    e["path"] = n.path;
    e["dim"] = n.dim;
    e["split_k"] = n.split_k ? nlohmann::ordered_json(*n.split_k) : nlohmann::ordered_json(nullptr);
    e["ideals"] = nlohmann::ordered_json::array();
    for (const auto& r : n.ideals)
      e["ideals"].push_back({{"k", r.k},
                             {"generators", r.generator_count},
                             {"basis_size", r.basis_size},
                             {"status", to_string(r.status)},
                             {"basis", r.basis}});
    j["nodes"].push_back(std::move(e));
  }
  j["bases_verified"] = c.bases_verified;
  return j;
}

FactorizationCertificate certificate_from_json(const nlohmann::json& j) {
  const Alphabet alphabet(field(j, "alphabet").get<std::vector<std::string>>());
  FactorizationCertificate c{parse_poly(field(j, "input").get<std::string>(), alphabet), 1, {}, false, {}, 0};
  if (j.contains("unit")) c.unit = Rational::parse(j.at("unit").get<std::string>());
  if (j.contains("product_check")) c.product_check = j.at("product_check").get<bool>();
  if (j.contains("bases_verified")) c.bases_verified = j.at("bases_verified").get<std::size_t>();
  for (const auto& e : field(j, "atoms")) {
    Als a = als_from_json(field(e, "als"));
    if (!(a.alphabet() == alphabet)) throw InvalidAls("atom system uses a different alphabet");
    c.atoms.push_back({parse_poly(field(e, "poly").get<std::string>(), alphabet), PreStandardAls(std::move(a)),
                       atom_status_from(field(e, "status").get<std::string>())});
  }
  if (j.contains("nodes")) {
    for (const auto& e : j.at("nodes")) {
      NodeRecord n{field(e, "path").get<std::string>(), field(e, "dim").get<std::size_t>(), {}, std::nullopt};
      if (e.contains("split_k") && !e.at("split_k").is_null()) n.split_k = e.at("split_k").get<std::size_t>();
      for (const auto& r : field(e, "ideals")) {
        IdealRecord rec{field(r, "k").get<std::size_t>(), field(r, "generators").get<std::size_t>(),
                        field(r, "basis_size").get<std::size_t>(),
                        point_status_from(field(r, "status").get<std::string>()), {}};
        if (r.contains("basis")) rec.basis = r.at("basis").get<std::vector<std::string>>();
        n.ideals.push_back(std::move(rec));
      }
      c.nodes.push_back(std::move(n));
    }
  }
  return c;
}

VerifyReport verify_certificate(const FactorizationCertificate& c, const FactorOptions& options) {
  VerifyReport r;
  auto problem = [&](std::string s) { r.problems.push_back(std::move(s)); };
  const NcPolynomial& p = c.input;

  if (p.is_zero()) problem("input is zero");
  if (!c.product_check) problem("product check flag is not set");

  if (p.is_constant()) {
    if (!c.atoms.empty()) problem("constant input must not list atoms");
    if (c.unit != p.constant_term()) problem("unit " + c.unit.str() + " differs from the constant input");
  } else if (c.atoms.empty()) {
    problem("non-constant input has an empty atom list");
  } else {
    std::vector<NcPolynomial> polys;
    for (const auto& a : c.atoms) polys.push_back(a.poly);
    const NcPolynomial prod = poly_scale(c.unit, poly_product(polys));
    if (!poly_equal(prod, p)) problem("product of atoms differs from input by " + print_poly(prod - p));

    const std::size_t rank = hankel_rank(p);
    if (c.atoms.size() + 1 > rank)
      problem(std::to_string(c.atoms.size()) + " atoms exceed the bound rank - 1 = " + std::to_string(rank - 1));

    for (std::size_t i = 0; i < c.atoms.size(); ++i) {
      const auto& a = c.atoms[i];
      const std::string tag = "atom " + std::to_string(i) + ": ";
      const NcPolynomial solved = als_solve(a.als);
      if (!poly_equal(solved, a.poly)) {
        problem(tag + "system solves to " + print_poly(solved) + ", not " + print_poly(a.poly));
        continue;
      }
      if (a.poly.is_constant()) problem(tag + "is a unit");
      if (a.als.dim() != hankel_rank(a.poly)) problem(tag + "system is not minimal");
      if (a.status == AtomStatus::Reducible) problem(tag + "recorded as reducible");
      const AtomTest t = is_atom(a.als, options);
      if (t.status != a.status)
        problem(tag + "recorded status " + to_string(a.status) + " but re-check gives " + to_string(t.status));
    }
  }
  r.ok = r.problems.empty();
  return r;
}

}  // namespace ncfactor
