#include "ncfactor/als_io.hpp"

#include <algorithm>
#include <sstream>

#include "ncfactor/errors.hpp"
#include "ncfactor/parser.hpp"

namespace ncfactor {

namespace {

std::string component_name(const Alphabet& a, std::size_t l) { return l == 0 ? "1" : a.name(static_cast<LetterIndex>(l - 1)); }

Rational scalar(const nlohmann::json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw InvalidAls("scalars must be \"p/q\" strings or integers");
}

RationalVector vector_from(const nlohmann::json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) throw InvalidAls(std::string(what) + " has the wrong length");
  RationalVector out;
  for (const auto& e : j) out.push_back(scalar(e));
  return out;
}

}  // namespace

nlohmann::ordered_json als_to_json(const Als& s) {
  nlohmann::ordered_json j;
  j["alphabet"] = s.alphabet().letters();
  j["dim"] = s.dim();
  auto u = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) u.push_back(i == 0 ? "1" : "0");
  j["u"] = u;
  auto coeffs = nlohmann::ordered_json::array();
  for (std::size_t l = 0; l < s.pencil_size(); ++l) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (std::size_t k = 0; k < s.dim(); ++k) row.push_back(s.coefficient(l)(i, k).str());
      rows.push_back(row);
    }
    nlohmann::ordered_json c;
    c["component"] = component_name(s.alphabet(), l);
    c["matrix"] = rows;
    coeffs.push_back(c);
  }
  j["coefficients"] = coeffs;
  auto v = nlohmann::ordered_json::array();
  for (const auto& e : s.v()) v.push_back(e.str());
  j["v"] = v;
  return j;
}

Als als_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidAls("ALS document must be an object");
  for (const char* key : {"alphabet", "dim", "coefficients", "v"})
    if (!j.contains(key)) throw InvalidAls(std::string("missing field '") + key + "'");
  Alphabet alphabet(j.at("alphabet").get<std::vector<std::string>>());
  const auto n = j.at("dim").get<std::size_t>();
  Als s(alphabet, n);
  s.v() = vector_from(j.at("v"), n, "v");
  if (j.contains("u")) {
    const auto u = vector_from(j.at("u"), n, "u");
    for (std::size_t i = 0; i < n; ++i)
      if (u[i] != Rational(i == 0 ? 1 : 0)) throw InvalidAls("u must be e_1");
  }
  const auto& coeffs = j.at("coefficients");
  if (!coeffs.is_array()) throw InvalidAls("coefficients must be an array");
  std::vector<bool> seen(s.pencil_size(), false);
  for (const auto& c : coeffs) {
    const auto name = c.at("component").get<std::string>();
    std::size_t l = 0;
    if (name != "1") {
      const auto idx = alphabet.index_of(name);
      if (!idx) throw InvalidAls("unknown component '" + name + "'");
      l = *idx + 1;
    }
    if (seen[l]) throw InvalidAls("duplicate component '" + name + "'");
    seen[l] = true;
    const auto& rows = c.at("matrix");
    if (!rows.is_array() || rows.size() != n) throw InvalidAls("matrix '" + name + "' has the wrong size");
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = vector_from(rows[i], n, "matrix row");
      for (std::size_t k = 0; k < n; ++k) s.coefficient(l)(i, k) = row[k];
    }
  }
  return s;
}

std::string format_entry(const Als& s, std::size_t i, std::size_t j) {
  return print_poly(s.entry_poly(i, j));
}

std::string format_als(const Als& s) {
  const std::size_t n = s.dim();
  std::ostringstream os;
  if (n == 0) {
    os << "(empty system: zero)\n";
    return os.str();
  }
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
  std::vector<std::size_t> width(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::string c = format_entry(s, i, j);
      if (c == "0") c = ".";
      cells[i][j] = c;
      width[j] = std::max(width[j], c.size());
    }
  auto pad = [](const std::string& t, std::size_t w) { return std::string(w - t.size(), ' ') + t; };
  auto dot = [](const Rational& r) { return r.is_zero() ? std::string(".") : r.str(); };

  os << "u = [1";
  for (std::size_t i = 1; i < n; ++i) os << " .";
  os << "]\nA =\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << "[";
    for (std::size_t j = 0; j < n; ++j) os << (j ? "  " : "") << pad(cells[i][j], width[j]);
    os << "]\n";
  }
  os << "v = [";
  for (std::size_t i = 0; i < n; ++i) os << (i ? " " : "") << dot(s.v()[i]);
  os << "]^T\n";
  return os.str();
}

}  // namespace ncfactor
