#include "ncfactor/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

namespace ncfactor {

CommPolynomial reduce(const CommPolynomial& f, const std::vector<CommPolynomial>& g) {
  CommPolynomial p = f;
  CommPolynomial r(f.nvars());
  while (!p.is_zero()) {
    const CommMonomial lm = p.leading_monomial();
    const Rational lc = p.leading_coefficient();
    bool divided = false;
    for (const auto& gi : g) {
      if (gi.is_zero() || !gi.leading_monomial().divides(lm)) continue;
      p -= gi.times_term(lc / gi.leading_coefficient(), lm / gi.leading_monomial());
      divided = true;
      break;
    }
    if (!divided) {
      r.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return r;
}

CommPolynomial s_polynomial(const CommPolynomial& f, const CommPolynomial& g) {
  const CommMonomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.times_term(f.leading_coefficient().inverse(), l / f.leading_monomial()) -
         g.times_term(g.leading_coefficient().inverse(), l / g.leading_monomial());
}

namespace {

using Pair = std::pair<std::size_t, std::size_t>;  // i < j

Pair ordered(std::size_t a, std::size_t b) { return a < b ? Pair{a, b} : Pair{b, a}; }

IdealBasis unit_ideal(std::size_t nvars) {
  return {nvars, {CommPolynomial::constant(nvars, 1)}, true};
}

// Minimal and then fully interreduced basis.
std::vector<CommPolynomial> reduce_basis(std::vector<CommPolynomial> g) {
  std::sort(g.begin(), g.end(), [](const auto& a, const auto& b) {
    return a.leading_monomial() < b.leading_monomial();
  });
  std::vector<CommPolynomial> minimal;
  for (const auto& p : g) {
    bool redundant = false;
    for (const auto& q : minimal) redundant = redundant || q.leading_monomial().divides(p.leading_monomial());
    if (!redundant) minimal.push_back(p);
  }
  std::vector<CommPolynomial> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<CommPolynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    // Leading term is not divisible by any other leading monomial, so it survives.
    out.push_back(reduce(minimal[i], others).monic());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.leading_monomial() > b.leading_monomial();
  });
  return out;
}

// Each element replaced by its remainder modulo the others until nothing changes.
// Generates the same ideal; returns nullopt if a nonzero constant appears.
std::optional<std::vector<CommPolynomial>> interreduce(std::vector<CommPolynomial> g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::vector<CommPolynomial> others;
      for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i) others.push_back(g[j]);
      CommPolynomial r = reduce(g[i], others);
      if (r == g[i]) continue;
      changed = true;
      if (r.is_zero()) {
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
        --i;
        continue;
      }
      if (r.is_constant()) return std::nullopt;
      g[i] = r.monic();
    }
  }
  return g;
}

}  // namespace

IdealBasis buchberger(const std::vector<CommPolynomial>& gens, std::size_t nvars, BuchbergerStats* stats) {
  std::vector<CommPolynomial> g;
  for (const auto& p : gens) {
    if (p.nvars() != nvars) throw std::invalid_argument("generator has the wrong number of variables");
    if (p.is_zero()) continue;
    if (p.is_constant()) return unit_ideal(nvars);
    g.push_back(p.monic());
  }
  if (g.empty()) return {nvars, {}, true};
  // Start from an interreduced set; fewer and smaller pairs.
  auto start = interreduce(std::move(g));
  if (!start) return unit_ideal(nvars);
  g = std::move(*start);
  if (g.empty()) return {nvars, {}, true};

  std::set<Pair> pending;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;

  while (!pending.empty()) {
    // Normal strategy: smallest lcm in the term order, ties by index.
    auto best = pending.begin();
    CommMonomial best_lcm = lcm(g[best->first].leading_monomial(), g[best->second].leading_monomial());
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      CommMonomial l = lcm(g[it->first].leading_monomial(), g[it->second].leading_monomial());
      if (std::make_tuple(l.total_degree(), l) < std::make_tuple(best_lcm.total_degree(), best_lcm)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);
    ++st.pairs_considered;

    const auto& lmi = g[i].leading_monomial();
    const auto& lmj = g[j].leading_monomial();
    if (coprime(lmi, lmj)) {
      ++st.pairs_skipped;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = g[k].leading_monomial().divides(best_lcm) && !pending.count(ordered(i, k)) &&
              !pending.count(ordered(j, k));
    }
    if (chain) {
      ++st.pairs_skipped;
      continue;
    }

    CommPolynomial r = reduce(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) {
      ++st.reductions_to_zero;
      continue;
    }
    if (r.is_constant()) return unit_ideal(nvars);
    g.push_back(r.monic());
    const std::size_t added = g.size() - 1;
    for (std::size_t k = 0; k < added; ++k) pending.insert({k, added});
  }

  return {nvars, reduce_basis(std::move(g)), true};
}

BasisCheck verify_groebner_basis(const std::vector<CommPolynomial>& gens, const IdealBasis& basis) {
  BasisCheck check;
  check.inputs_reduce_to_zero = std::all_of(gens.begin(), gens.end(), [&](const auto& p) {
    return reduce(p, basis.generators).is_zero();
  });
  check.s_polynomials_reduce_to_zero = true;
  for (std::size_t j = 0; j < basis.generators.size() && check.s_polynomials_reduce_to_zero; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (!reduce(s_polynomial(basis.generators[i], basis.generators[j]), basis.generators).is_zero()) {
        check.s_polynomials_reduce_to_zero = false;
        break;
      }
    }
  return check;
}

}  // namespace ncfactor
