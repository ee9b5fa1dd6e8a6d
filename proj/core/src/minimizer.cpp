#include "ncfactor/minimizer.hpp"

#include <algorithm>

#include "ncfactor/errors.hpp"

namespace ncfactor {

namespace {

void require_triangular(const Als& s) {
  if (!s.is_unit_upper_triangular()) throw InvalidAls("minimization needs a unit upper triangular pencil");
}

// Drop trailing components with v_last = 0 (then s_last = 0).
std::size_t strip_zero_tail(Als& s) {
  std::size_t count = 0;
  while (s.dim() > 0 && s.v().back().is_zero()) {
    s.remove(s.dim() - 1);
    ++count;
  }
  return count;
}

Als renormalize(Als s) {
  const std::size_t last = s.dim() - 1;
  const Rational lambda = s.v()[last];
  for (std::size_t i = 0; i < last; ++i)
    if (!s.v()[i].is_zero()) s.add_row_multiple(i, last, -(s.v()[i] / lambda));
  return s;
}

}  // namespace

BlockDecomposition decompose(const Als& s, std::size_t k) {
  require_triangular(s);
  const std::size_t n = s.dim();
  if (k < 1 || k > n) throw std::out_of_range("block index out of range");
  const std::size_t c = k - 1;
  BlockDecomposition b;
  b.k = k;
  for (const auto& m : s.coefficients()) {
    b.a11.push_back(m.block(0, 0, c, c));
    b.a12.push_back(m.block(0, c, c, 1));
    b.a13.push_back(m.block(0, k, c, n - k));
    b.a23.push_back(m.block(c, k, 1, n - k));
    b.a33.push_back(m.block(k, k, n - k, n - k));
  }
  b.v1.assign(s.v().begin(), s.v().begin() + static_cast<std::ptrdiff_t>(c));
  b.v2 = {s.v()[c]};
  b.v3.assign(s.v().begin() + static_cast<std::ptrdiff_t>(k), s.v().end());
  return b;
}

Als reassemble(const Alphabet& alphabet, const BlockDecomposition& b) {
  const std::size_t c = b.k - 1;
  const std::size_t n = c + 1 + b.v3.size();
  Als s(alphabet, n);
  for (std::size_t l = 0; l < s.pencil_size(); ++l) {
    auto& m = s.coefficient(l);
    m.set_block(0, 0, b.a11[l]);
    m.set_block(0, c, b.a12[l]);
    m.set_block(0, b.k, b.a13[l]);
    m.set_block(c, b.k, b.a23[l]);
    m.set_block(b.k, b.k, b.a33[l]);
  }
  s.coefficient(0)(c, c) = 1;
  for (std::size_t i = 0; i < c; ++i) s.v()[i] = b.v1[i];
  s.v()[c] = b.v2[0];
  for (std::size_t i = 0; i < b.v3.size(); ++i) s.v()[b.k + i] = b.v3[i];
  return s;
}

LinearSystem left_min_equations(const Als& s, std::size_t k) {
  require_triangular(s);
  const std::size_t n = s.dim();
  if (k < 1 || k >= n) throw std::out_of_range("left minimization needs 1 <= k < n");
  const std::size_t m = n - k;        // block width
  const std::size_t r = k - 1;        // 0-based row k
  const std::size_t comps = s.pencil_size();
  const std::size_t eqs = comps * m + 1 + (k == 1 ? m : 0);
  LinearSystem sys{RationalMatrix(eqs, 2 * m), RationalVector(eqs)};
  std::size_t row = 0;
  for (std::size_t l = 0; l < comps; ++l) {
    const auto& a = s.coefficient(l);
    for (std::size_t jj = 0; jj < m; ++jj, ++row) {
      const std::size_t j = k + jj;
      if (l == 0) sys.a(row, jj) = 1;
      for (std::size_t ii = 0; ii < m; ++ii) sys.a(row, m + ii) = a(k + ii, j);
      sys.b[row] = -a(r, j);
    }
  }
  for (std::size_t ii = 0; ii < m; ++ii) sys.a(row, m + ii) = s.v()[k + ii];
  sys.b[row++] = -s.v()[r];
  if (k == 1) {
    for (std::size_t jj = 0; jj < m; ++jj, ++row) sys.a(row, jj) = 1;
  }
  return sys;
}

LinearSystem right_min_equations(const Als& s, std::size_t k) {
  require_triangular(s);
  const std::size_t n = s.dim();
  if (k < 2 || k > n) throw std::out_of_range("right minimization needs 1 < k <= n");
  const std::size_t m = k - 1;
  const std::size_t c = k - 1;  // 0-based column k
  const std::size_t comps = s.pencil_size();
  LinearSystem sys{RationalMatrix(comps * m + 1, 2 * m), RationalVector(comps * m + 1)};
  std::size_t row = 0;
  for (std::size_t l = 0; l < comps; ++l) {
    const auto& a = s.coefficient(l);
    for (std::size_t i = 0; i < m; ++i, ++row) {
      if (l == 0) sys.a(row, i) = 1;
      for (std::size_t j = 0; j < m; ++j) sys.a(row, m + j) = a(i, j);
      sys.b[row] = -a(i, c);
    }
  }
  sys.a(row, m) = 1;  // U_1 = 0
  return sys;
}

std::optional<MinimizationSolution> solve_left(const Als& s, std::size_t k) {
  const auto sys = left_min_equations(s, k);
  const auto x = solve_linear(sys.a, sys.b);
  if (!x) return std::nullopt;
  const std::size_t m = s.dim() - k;
  MinimizationSolution sol{StepSide::Left, k, {}, {}};
  sol.u.assign(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(m));
  sol.t.assign(x->begin() + static_cast<std::ptrdiff_t>(m), x->end());
  return sol;
}

std::optional<MinimizationSolution> solve_right(const Als& s, std::size_t k) {
  const auto sys = right_min_equations(s, k);
  const auto x = solve_linear(sys.a, sys.b);
  if (!x) return std::nullopt;
  const std::size_t m = k - 1;
  MinimizationSolution sol{StepSide::Right, k, {}, {}};
  sol.t.assign(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(m));
  sol.u.assign(x->begin() + static_cast<std::ptrdiff_t>(m), x->end());
  return sol;
}

Als apply_left_step(const Als& s, const MinimizationSolution& sol) {
  const std::size_t k = sol.k;
  Als r = s;
  for (std::size_t ii = 0; ii < sol.t.size(); ++ii) r.add_row_multiple(k - 1, k + ii, sol.t[ii]);
  for (std::size_t jj = 0; jj < sol.u.size(); ++jj) r.add_col_multiple(k + jj, k - 1, sol.u[jj]);
  for (std::size_t j = 0; j < r.dim(); ++j) {
    if (j != k - 1 && !r.entry_is_zero(k - 1, j))
      throw std::logic_error("left minimization step did not clear row k");
  }
  if (!r.v()[k - 1].is_zero()) throw std::logic_error("left minimization step left v_k nonzero");
  r.remove(k - 1);
  return r;
}

Als apply_right_step(const Als& s, const MinimizationSolution& sol) {
  const std::size_t k = sol.k;
  Als r = s;
  for (std::size_t i = 0; i < sol.t.size(); ++i) r.add_row_multiple(i, k - 1, sol.t[i]);
  for (std::size_t j = 0; j < sol.u.size(); ++j) r.add_col_multiple(k - 1, j, sol.u[j]);
  for (std::size_t i = 0; i < r.dim(); ++i) {
    if (i != k - 1 && !r.entry_is_zero(i, k - 1))
      throw std::logic_error("right minimization step did not clear column k");
  }
  r.remove(k - 1);
  return r;
}

bool special_left_case_applies(const Als& s) {
  if (!s.is_unit_upper_triangular() || s.dim() < 2 || s.v().back().is_zero()) return false;
  const std::size_t n = s.dim();
  return s.entry_is_constant(n - 2, n - 1) && !s.coefficient(0)(n - 2, n - 1).is_zero();
}

Als special_left_case(const Als& s) {
  if (!special_left_case_applies(s)) throw InvalidAls("special left case does not apply");
  Als r = renormalize(s);
  const std::size_t n = r.dim();
  const Rational alpha = -r.coefficient(0)(n - 2, n - 1);
  // Q: column n-1 += (1/alpha) column n.
  r.add_col_multiple(n - 2, n - 1, alpha.inverse());
  // P: row n-1 <- alpha * row n, row n <- old row n-1 (which now reads -alpha s_n = 0).
  Als out = r;
  for (std::size_t l = 0; l < r.pencil_size(); ++l) {
    for (std::size_t j = 0; j < n; ++j) {
      out.coefficient(l)(n - 2, j) = alpha * r.coefficient(l)(n - 1, j);
      out.coefficient(l)(n - 1, j) = r.coefficient(l)(n - 2, j);
    }
  }
  out.v()[n - 2] = alpha * r.v()[n - 1];
  out.v()[n - 1] = r.v()[n - 2];
  out.remove(n - 1);
  return out;
}

PreStandardAls minimize(const Als& input, MinimizationTrace* trace) {
  require_triangular(input);
  Als s = input;
  std::size_t stripped = strip_zero_tail(s);
  auto record = [&](StepSide side, std::size_t k, RationalVector t, RationalVector u, std::size_t before) {
    stripped += strip_zero_tail(s);
    if (trace) trace->steps.push_back({side, k, std::move(t), std::move(u), before, s.dim()});
  };

  std::size_t k = 2;
  while (s.dim() > 0 && k <= s.dim()) {
    const std::size_t n = s.dim();
    const std::size_t kp = n + 1 - k;
    const bool shrink_k = k > 2 && 2 * k > n + 1;
    if (auto sol = solve_left(s, kp)) {
      if (kp == 1) {
        if (trace) {
          trace->steps.push_back({StepSide::Left, 1, sol->t, sol->u, n, 0});
          trace->stripped = stripped;
        }
        return PreStandardAls::zero(s.alphabet());
      }
      s = apply_left_step(s, *sol);
      record(StepSide::Left, kp, sol->t, sol->u, n);
      if (shrink_k) --k;
      continue;
    }
    if (k == 2 && special_left_case_applies(s) && n == 2) {
      s = special_left_case(s);
      record(StepSide::Special, n, {}, {}, n);
      continue;
    }
    if (auto sol = solve_right(s, k)) {
      s = apply_right_step(s, *sol);
      record(StepSide::Right, k, sol->t, sol->u, n);
      if (shrink_k) --k;
      continue;
    }
    ++k;
  }
  if (trace) trace->stripped = stripped;
  if (s.dim() == 0) return PreStandardAls::zero(s.alphabet());
  return PreStandardAls(renormalize(std::move(s)));
}

PreStandardAls minimize(const PreStandardAls& s, MinimizationTrace* trace) {
  if (s.dim() == 0) return s;
  return minimize(s.als(), trace);
}

}  // namespace ncfactor
