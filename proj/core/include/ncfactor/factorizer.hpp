#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncfactor/als.hpp"
#include "ncfactor/groebner.hpp"
#include "ncfactor/rational_points.hpp"

namespace ncfactor {

// Split indices k are 1-based: a split at k produces factors of ranks k+1 and n-k.

/// Unknowns of the transformation ansatz for dimension n: alpha_ij (i < j <= n-1)
/// then beta_ij (2 <= i < j <= n), each row-major. Named "a<i>_<j>" / "b<i>_<j>".
struct FactorAnsatz {
  std::size_t n = 0;
  std::vector<std::string> names;

  explicit FactorAnsatz(std::size_t dim);
  std::size_t nvars() const { return names.size(); }
  std::size_t alpha(std::size_t i, std::size_t j) const;  // 1-based
  std::size_t beta(std::size_t i, std::size_t j) const;   // 1-based
  AdmissibleTransformation transformation(const std::vector<Rational>& point) const;
};

/// Coefficients (constant and per letter) of the entries (i, j), i <= k, j >= k+2,
/// of P A Q under the ansatz; zero polynomials are omitted. Requires dim >= 3 and
/// 1 <= k <= n-2.
std::vector<CommPolynomial> build_ideal(const PreStandardAls& s, std::size_t k);

struct SplitPair {
  PreStandardAls left;
  PreStandardAls right;
};

/// Factors of dimensions k+1 and n-k read off P A Q. Throws std::logic_error if
/// the zero block is not present after applying t.
SplitPair split_at(const PreStandardAls& s, const AdmissibleTransformation& t, std::size_t k);

enum class AtomStatus {
  Atom,               // every ideal trivial (or dim <= 2)
  SplitsOverClosure,  // some ideal nontrivial but no rational point found
  Reducible,
};

const char* to_string(AtomStatus s);

struct IdealRecord {
  std::size_t k;
  std::size_t generator_count;
  std::size_t basis_size;
  PointStatus status;
  std::vector<std::string> basis;  // reduced basis, printed with the ansatz names
};

struct AtomTest {
  AtomStatus status = AtomStatus::Atom;
  std::size_t k = 0;  // split index when reducible
  std::vector<Rational> point;
  AdmissibleTransformation transformation;
  std::vector<IdealRecord> ideals;
};

struct FactorOptions {
  /// Sweep k = n-2 .. 1 instead of 1 .. n-2.
  bool descending = false;
  /// Ideals for different k solved concurrently; the lowest successful k in sweep
  /// order still wins.
  unsigned jobs = 1;
  FreeVariablePolicy policy{};
  /// Run the Buchberger postcondition check on every basis; throws on failure.
  bool verify_bases = false;
};

AtomTest is_atom(const PreStandardAls& s, const FactorOptions& options = {});

struct AtomEntry {
  NcPolynomial poly;
  PreStandardAls als;
  AtomStatus status;
};

struct NodeRecord {
  std::string path;  // "r", "r.0", "r.1", ...
  std::size_t dim;
  std::vector<IdealRecord> ideals;
  std::optional<std::size_t> split_k;
};

struct FactorizationCertificate {
  NcPolynomial input;
  /// Constant inputs only; otherwise 1 (units are absorbed into the last atom).
  Rational unit = 1;
  std::vector<AtomEntry> atoms;
  bool product_check = false;
  std::vector<NodeRecord> nodes;
  std::size_t bases_verified = 0;
};

/// Factorization into atoms in product order. Throws std::invalid_argument for 0.
FactorizationCertificate factor(const NcPolynomial& p, const FactorOptions& options = {});

/// One factorization per distinct ordered atom-rank composition reachable through
/// the split search (over every rational branch the solver returns).
std::vector<FactorizationCertificate> enumerate_factorizations(const NcPolynomial& p,
                                                              const FactorOptions& options = {},
                                                              std::size_t max_results = 64);

/// Ordered atom ranks of a certificate.
std::vector<std::size_t> atom_ranks(const FactorizationCertificate& c);

// -- certificate serialization and checking --------------------------------------------

nlohmann::ordered_json certificate_to_json(const FactorizationCertificate& c);
/// Throws InvalidAls / ParseError on malformed documents.
FactorizationCertificate certificate_from_json(const nlohmann::json& j);

struct VerifyReport {
  bool ok = false;
  std::vector<std::string> problems;
};

/// Recomputes the product, compares it with the input, checks every atom system
/// solves to its polynomial, re-runs the atom test, and applies the length bound.
VerifyReport verify_certificate(const FactorizationCertificate& c, const FactorOptions& options = {});

}  // namespace ncfactor
