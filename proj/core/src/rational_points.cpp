#include "ncfactor/rational_points.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace ncfactor {

namespace {

Rational horner(const std::vector<Rational>& c, const Rational& x) {
  Rational acc;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool by_height(const Rational& a, const Rational& b) {
  const mpz_class ha = height(a);
  const mpz_class hb = height(b);
  if (ha != hb) return ha < hb;
  // Same order as the ladder: smaller magnitude first, positive before negative.
  const Rational ma = a.abs(), mb = b.abs();
  if (ma != mb) return ma < mb;
  return a > b;
}

}  // namespace

const char* to_string(PointStatus s) {
  switch (s) {
    case PointStatus::Found: return "rational-point";
    case PointStatus::TrivialIdeal: return "trivial";
    case PointStatus::NoRationalPoint: return "nontrivial-no-rational-point";
    case PointStatus::Blocked: return "blocked";
  }
  return "unknown";
}

std::vector<Rational> univariate_rational_roots(const CommPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("the zero polynomial has every root");
  if (p.is_constant()) return {};
  const auto var = p.sole_variable();
  if (!var) throw std::invalid_argument("polynomial is not univariate");

  const std::uint32_t deg = p.degree_in(*var);
  std::vector<Rational> c(deg + 1);
  for (const auto& [m, k] : p.terms()) c[m[*var]] = k;

  // Primitive integer form.
  mpz_class l = 1;
  for (const auto& k : c) {
    const mpz_class d = k.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> z;
  for (const auto& k : c) z.push_back(k.numerator() * (l / k.denominator()));

  std::vector<Rational> roots;
  std::size_t low = 0;
  while (z[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  std::vector<mpz_class> q(z.begin() + static_cast<std::ptrdiff_t>(low), z.end());
  const std::size_t d = q.size() - 1;

  if (d == 1) {
    roots.emplace_back(-q[0], q[1]);
  } else if (d == 2) {
    const mpz_class disc = q[1] * q[1] - 4 * q[2] * q[0];
    if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
      mpz_class s;
      mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
      roots.emplace_back(-q[1] + s, 2 * q[2]);
      if (s != 0) roots.emplace_back(-q[1] - s, 2 * q[2]);
    }
  } else if (d > 2) {
    std::vector<Rational> cq;
    for (const auto& e : q) cq.emplace_back(e, mpz_class(1));
    for (const auto& num : positive_divisors(q[0]))
      for (const auto& den : positive_divisors(q[d]))
        for (int sign : {1, -1}) {
          const Rational r(sign * num, den);
          if (horner(cq, r).is_zero() &&
              std::find(roots.begin(), roots.end(), r) == roots.end())
            roots.push_back(r);
        }
  }
  std::sort(roots.begin(), roots.end(), by_height);
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace {

class PointSearch {
 public:
  PointSearch(const FreeVariablePolicy& policy, const std::vector<CommPolynomial>& check, std::size_t nvars)
      : policy_(policy), check_(check), nvars_(nvars) {}

  void run(const IdealBasis& basis) {
    std::vector<std::optional<Rational>> assignment(nvars_);
    search(basis, assignment);
  }

  std::vector<std::vector<Rational>> points;
  std::size_t computations = 0;
  bool out_of_budget = false;

 private:
  bool enough() const { return policy_.max_points > 0 && points.size() >= policy_.max_points; }

  IdealBasis specialize(const IdealBasis& g, std::size_t var, const Rational& value) {
    std::vector<CommPolynomial> gens;
    for (const auto& p : g.generators) gens.push_back(p.substitute(var, value));
    ++computations;
    return buchberger(gens, nvars_);
  }

  void search(const IdealBasis& g, std::vector<std::optional<Rational>>& assignment) {
    if (enough() || out_of_budget || g.is_trivial()) return;
    std::optional<std::size_t> var;
    for (std::size_t i = nvars_; i-- > 0;) {
      if (!assignment[i]) {
        var = i;
        break;
      }
    }
    if (!var) {
      if (!g.generators.empty()) return;  // all variables fixed, ideal not zero: inconsistent
      std::vector<Rational> point;
      for (const auto& a : assignment) point.push_back(*a);
      for (const auto& p : check_)
        if (!p.evaluate(point).is_zero()) throw std::logic_error("rational point does not solve the system");
      points.push_back(std::move(point));
      return;
    }

    bool occurs = false;
    const CommPolynomial* univariate = nullptr;
    for (const auto& p : g.generators) {
      if (p.degree_in(*var) > 0) occurs = true;
      if (p.sole_variable() == var && !univariate) univariate = &p;
    }

    auto branch = [&](const Rational& value, const IdealBasis& next) {
      assignment[*var] = value;
      search(next, assignment);
      assignment[*var].reset();
    };

    if (!occurs) {
      branch(policy_.ladder.front(), g);
      return;
    }
    auto try_value = [&](const Rational& value) {
      if (computations >= policy_.budget) {
        out_of_budget = true;
        return;
      }
      const IdealBasis next = specialize(g, *var, value);
      if (!next.is_trivial()) branch(value, next);
    };
    if (univariate) {
      for (const auto& r : univariate_rational_roots(*univariate)) {
        if (enough() || out_of_budget) return;
        try_value(r);
      }
      return;
    }
    const std::size_t before = points.size();
    for (const auto& value : policy_.ladder) {
      if (enough() || out_of_budget || points.size() > before) return;
      try_value(value);
    }
  }

  const FreeVariablePolicy& policy_;
  const std::vector<CommPolynomial>& check_;
  std::size_t nvars_;
};

}  // namespace

RationalPointsResult rational_points(const IdealBasis& basis, const FreeVariablePolicy& policy,
                                     const std::vector<CommPolynomial>& check) {
  RationalPointsResult result;
  if (basis.is_trivial()) {
    result.status = PointStatus::TrivialIdeal;
    return result;
  }
  if (policy.ladder.empty()) throw std::invalid_argument("free-variable ladder must not be empty");
  const std::vector<CommPolynomial>& targets = check.empty() ? basis.generators : check;
  PointSearch search(policy, targets, basis.nvars);
  search.run(basis);
  result.points = std::move(search.points);
  result.basis_computations = search.computations;
  if (!result.points.empty()) {
    result.status = PointStatus::Found;
  } else {
    result.status = search.out_of_budget ? PointStatus::Blocked : PointStatus::NoRationalPoint;
  }
  return result;
}

}  // namespace ncfactor
