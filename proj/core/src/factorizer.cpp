#include "ncfactor/factorizer.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>

#include "ncfactor/errors.hpp"
#include "ncfactor/hankel.hpp"
#include "ncfactor/minimizer.hpp"

namespace ncfactor {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

FactorAnsatz::FactorAnsatz(std::size_t dim) : n(dim) {
  for (std::size_t i = 1; i + 1 <= n; ++i)
    for (std::size_t j = i + 1; j + 1 <= n; ++j)
      names.push_back("a" + std::to_string(i) + "_" + std::to_string(j));
  for (std::size_t i = 2; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      names.push_back("b" + std::to_string(i) + "_" + std::to_string(j));
}

std::size_t FactorAnsatz::alpha(std::size_t i, std::size_t j) const {
  if (!(1 <= i && i < j && j <= n - 1)) return kNone;
  // Rows 1..i-1 contribute (n-1-r) entries each.
  std::size_t idx = 0;
  for (std::size_t r = 1; r < i; ++r) idx += n - 1 - r;
  return idx + (j - i - 1);
}

std::size_t FactorAnsatz::beta(std::size_t i, std::size_t j) const {
  if (!(2 <= i && i < j && j <= n)) return kNone;
  std::size_t idx = 0;
  for (std::size_t r = 1; r + 1 <= n; ++r) idx += (r + 1 <= n - 1) ? n - 1 - r : 0;
  for (std::size_t r = 2; r < i; ++r) idx += n - r;
  return idx + (j - i - 1);
}

AdmissibleTransformation FactorAnsatz::transformation(const std::vector<Rational>& point) const {
  auto t = AdmissibleTransformation::identity(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (const auto a = alpha(i, j); a != kNone) t.p(i - 1, j - 1) = point[a];
      if (const auto b = beta(i, j); b != kNone) t.q(i - 1, j - 1) = point[b];
    }
  return t;
}

std::vector<CommPolynomial> build_ideal(const PreStandardAls& s, std::size_t k) {
  const std::size_t n = s.dim();
  if (n < 3 || k < 1 || k > n - 2) throw std::out_of_range("ideal needs dim >= 3 and 1 <= k <= n-2");
  const FactorAnsatz ansatz(n);
  const std::size_t nv = ansatz.nvars();

  // Symbolic P (rows 1..k) and Q, 1-based.
  auto p_entry = [&](std::size_t i, std::size_t t) {
    if (i == t) return CommPolynomial::constant(nv, 1);
    const auto a = ansatz.alpha(i, t);
    return a == kNone ? CommPolynomial(nv) : CommPolynomial::variable(nv, a);
  };
  auto q_entry = [&](std::size_t m, std::size_t j) {
    if (m == j) return CommPolynomial::constant(nv, 1);
    const auto b = ansatz.beta(m, j);
    return b == kNone ? CommPolynomial(nv) : CommPolynomial::variable(nv, b);
  };

  std::vector<CommPolynomial> gens;
  for (std::size_t l = 0; l < s.als().pencil_size(); ++l) {
    const RationalMatrix& a = s.als().coefficient(l);
    for (std::size_t i = 1; i <= k; ++i) {
      // Row i of P * A_l.
      std::vector<CommPolynomial> pa(n + 1, CommPolynomial(nv));
      for (std::size_t t = i; t <= n; ++t) {
        const CommPolynomial pit = p_entry(i, t);
        if (pit.is_zero()) continue;
        for (std::size_t m = 1; m <= n; ++m)
          if (!a(t - 1, m - 1).is_zero()) pa[m] += a(t - 1, m - 1) * pit;
      }
      for (std::size_t j = k + 2; j <= n; ++j) {
        CommPolynomial e(nv);
        for (std::size_t m = 1; m <= j; ++m) {
          if (pa[m].is_zero()) continue;
          const CommPolynomial qmj = q_entry(m, j);
          if (!qmj.is_zero()) e += pa[m] * qmj;
        }
        if (!e.is_zero()) gens.push_back(std::move(e));
      }
    }
  }
  return gens;
}

SplitPair split_at(const PreStandardAls& s, const AdmissibleTransformation& t, std::size_t k) {
  const std::size_t n = s.dim();
  if (n < 3 || k < 1 || k > n - 2) throw std::out_of_range("split needs dim >= 3 and 1 <= k <= n-2");
  const Als a = apply_transformation(s.als(), t);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = k + 1; j < n; ++j)
      if (!a.entry_is_zero(i, j)) throw std::logic_error("transformation does not produce the zero block");
  if (!a.is_pre_standard()) throw std::logic_error("transformed system is not pre-standard");

  Als f(s.alphabet(), k + 1);
  Als g(s.alphabet(), n - k);
  for (std::size_t l = 0; l < a.pencil_size(); ++l) {
    f.coefficient(l) = a.coefficient(l).block(0, 0, k + 1, k + 1);
    g.coefficient(l) = a.coefficient(l).block(k, k, n - k, n - k);
  }
  f.v()[k] = 1;
  for (std::size_t i = 0; i < n - k; ++i) g.v()[i] = a.v()[k + i];
  return {PreStandardAls(std::move(f)), PreStandardAls(std::move(g))};
}

const char* to_string(AtomStatus s) {
  switch (s) {
    case AtomStatus::Atom: return "atom";
    case AtomStatus::SplitsOverClosure: return "splits-over-closure";
    case AtomStatus::Reducible: return "reducible";
  }
  return "unknown";
}

namespace {

struct LevelResult {
  IdealRecord record;
  std::vector<std::vector<Rational>> points;
  std::size_t verified = 0;
};

LevelResult solve_level(const PreStandardAls& s, std::size_t k, const FactorOptions& options,
                        std::size_t max_points) {
  const auto gens = build_ideal(s, k);
  const FactorAnsatz ansatz(s.dim());
  const IdealBasis basis = buchberger(gens, ansatz.nvars());
  LevelResult r;
  if (options.verify_bases) {
    if (!verify_groebner_basis(gens, basis).ok()) throw std::logic_error("Groebner basis failed its self-check");
    ++r.verified;
  }
  FreeVariablePolicy policy = options.policy;
  policy.max_points = max_points;
  const auto pts = rational_points(basis, policy, gens);
  r.record = {k, gens.size(), basis.generators.size(), pts.status, {}};
  for (const auto& g : basis.generators) r.record.basis.push_back(format_comm(g, ansatz.names));
  r.points = pts.points;
  return r;
}

std::vector<std::size_t> sweep_order(std::size_t n, bool descending) {
  std::vector<std::size_t> ks;
  for (std::size_t k = 1; k + 2 <= n; ++k) ks.push_back(k);
  if (descending) std::reverse(ks.begin(), ks.end());
  return ks;
}

// Results for every k in sweep order, stopping at the first success when sequential.
std::vector<LevelResult> sweep(const PreStandardAls& s, const FactorOptions& options, std::size_t max_points,
                               bool stop_at_first, std::size_t* verified) {
  const auto ks = sweep_order(s.dim(), options.descending);
  std::vector<LevelResult> out;
  const unsigned jobs = std::max(1U, options.jobs);
  for (std::size_t start = 0; start < ks.size(); start += jobs) {
    const std::size_t stop = std::min(ks.size(), start + jobs);
    std::vector<std::future<LevelResult>> futures;
    for (std::size_t i = start; i < stop; ++i) {
      const std::size_t k = ks[i];
      futures.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                   [&s, k, &options, max_points] { return solve_level(s, k, options, max_points); }));
    }
    bool found = false;
    for (auto& f : futures) {
      if (found && stop_at_first) {
        f.wait();  // finish but ignore: a lower k in sweep order already won
        continue;
      }
      out.push_back(f.get());
      if (verified) *verified += out.back().verified;
      found = found || out.back().record.status == PointStatus::Found;
    }
    if (found && stop_at_first) break;
  }
  return out;
}

AtomStatus leaf_status(const std::vector<LevelResult>& levels) {
  for (const auto& l : levels)
    if (l.record.status != PointStatus::TrivialIdeal) return AtomStatus::SplitsOverClosure;
  return AtomStatus::Atom;
}

AtomTest atom_test(const PreStandardAls& s, const FactorOptions& options, std::size_t* verified) {
  AtomTest t;
  t.transformation = AdmissibleTransformation::identity(s.dim());
  if (s.dim() <= 2) return t;
  const auto levels = sweep(s, options, 1, true, verified);
  for (const auto& l : levels) t.ideals.push_back(l.record);
  for (const auto& l : levels) {
    if (l.record.status == PointStatus::Found) {
      t.status = AtomStatus::Reducible;
      t.k = l.record.k;
      t.point = l.points.front();
      t.transformation = FactorAnsatz(s.dim()).transformation(t.point);
      return t;
    }
  }
  t.status = leaf_status(levels);
  return t;
}

struct Leaf {
  PreStandardAls als;
  AtomStatus status;
};

void factor_node(const PreStandardAls& s, const std::string& path, const FactorOptions& options,
                 std::vector<Leaf>& leaves, std::vector<NodeRecord>& nodes, std::size_t* verified) {
  const AtomTest t = atom_test(s, options, verified);
  nodes.push_back({path, s.dim(), t.ideals, t.status == AtomStatus::Reducible ? std::optional(t.k) : std::nullopt});
  if (t.status != AtomStatus::Reducible) {
    leaves.push_back({s, t.status});
    return;
  }
  const SplitPair parts = split_at(s, t.transformation, t.k);
  factor_node(minimize(parts.left), path + ".0", options, leaves, nodes, verified);
  factor_node(minimize(parts.right), path + ".1", options, leaves, nodes, verified);
}

// Deglex-least support word gets coefficient 1; the leftover scalars go to the last atom.
FactorizationCertificate finish(const NcPolynomial& p, const std::vector<Leaf>& leaves, std::vector<NodeRecord> nodes,
                                std::size_t verified) {
  FactorizationCertificate c{p, 1, {}, false, std::move(nodes), verified};
  Rational carry = 1;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const NcPolynomial q = als_solve(leaves[i].als);
    const Rational lead = q.terms().begin()->second;
    Rational scale = carry;
    if (i + 1 < leaves.size()) {
      scale = lead.inverse();
      carry *= lead;
    }
    PreStandardAls a(als_scale(leaves[i].als.als(), scale));
    c.atoms.push_back({poly_scale(scale, q), std::move(a), leaves[i].status});
  }
  std::vector<NcPolynomial> polys;
  for (const auto& a : c.atoms) polys.push_back(a.poly);
  c.product_check = poly_equal(poly_product(polys), p);
  if (!c.product_check) throw std::logic_error("factorization product does not reproduce the input");
  return c;
}

}  // namespace

AtomTest is_atom(const PreStandardAls& s, const FactorOptions& options) { return atom_test(s, options, nullptr); }

FactorizationCertificate factor(const NcPolynomial& p, const FactorOptions& options) {
  if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  if (p.is_constant()) {
    FactorizationCertificate c{p, p.constant_term(), {}, true, {}, 0};
    return c;
  }
  std::vector<Leaf> leaves;
  std::vector<NodeRecord> nodes;
  std::size_t verified = 0;
  factor_node(als_from_poly(p), "r", options, leaves, nodes, &verified);
  return finish(p, leaves, std::move(nodes), verified);
}

namespace {

using Composition = std::vector<std::size_t>;

struct Explored {
  std::map<Composition, std::vector<Leaf>> chains;
};

Explored explore(const PreStandardAls& s, const FactorOptions& options, std::size_t max_results,
                 std::size_t* verified) {
  Explored out;
  std::vector<LevelResult> levels;
  if (s.dim() > 2) levels = sweep(s, options, 8, false, verified);
  bool split = false;
  for (const auto& l : levels) {
    for (const auto& pt : l.points) {
      split = true;
      const auto parts = split_at(s, FactorAnsatz(s.dim()).transformation(pt), l.record.k);
      const Explored left = explore(minimize(parts.left), options, max_results, verified);
      const Explored right = explore(minimize(parts.right), options, max_results, verified);
      for (const auto& [cl, chain_l] : left.chains)
        for (const auto& [cr, chain_r] : right.chains) {
          if (out.chains.size() >= max_results) return out;
          Composition comp = cl;
          comp.insert(comp.end(), cr.begin(), cr.end());
          if (out.chains.count(comp)) continue;
          std::vector<Leaf> chain = chain_l;
          chain.insert(chain.end(), chain_r.begin(), chain_r.end());
          out.chains.emplace(std::move(comp), std::move(chain));
        }
    }
  }
  if (!split) out.chains.emplace(Composition{s.dim()}, std::vector<Leaf>{{s, leaf_status(levels)}});
  return out;
}

}  // namespace

std::vector<FactorizationCertificate> enumerate_factorizations(const NcPolynomial& p, const FactorOptions& options,
                                                              std::size_t max_results) {
  if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  if (p.is_constant()) return {factor(p, options)};
  std::size_t verified = 0;
  const Explored e = explore(als_from_poly(p), options, max_results, &verified);
  std::vector<FactorizationCertificate> out;
  for (const auto& [comp, chain] : e.chains) out.push_back(finish(p, chain, {}, 0));
  return out;
}

std::vector<std::size_t> atom_ranks(const FactorizationCertificate& c) {
  std::vector<std::size_t> r;
  for (const auto& a : c.atoms) r.push_back(a.als.dim());
  return r;
}

}  // namespace ncfactor
