#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncfactor/als.hpp"

namespace ncfactor {

// Pivot indices k in this header are 1-based, matching the block decomposition
// around row/column k. Systems passed here must be unit upper triangular; v may be
// arbitrary ("almost" pre-standard), which is the form intermediate steps produce.

/// Blocks of a unit upper triangular system around row/column k, one matrix per
/// pencil component. a22 is always the scalar 1 and is not stored.
struct BlockDecomposition {
  std::size_t k = 0;
  std::vector<RationalMatrix> a11, a12, a13, a23, a33;
  RationalVector v1, v2, v3;
};

BlockDecomposition decompose(const Als& s, std::size_t k);
Als reassemble(const Alphabet& alphabet, const BlockDecomposition& b);

/// Linear system a * x = b over Q.
struct LinearSystem {
  RationalMatrix a;
  RationalVector b;
};

enum class StepSide { Left, Right, Special };

struct MinimizationSolution {
  StepSide side;
  std::size_t k;
  RationalVector t;  // row block alpha_{k+1..n} (left) or column block (right)
  RationalVector u;  // beta block
};

/// Unknowns [U, T] = [beta_{k+1..n}, alpha_{k+1..n}]. For every pencil component
/// and column j > k one equation, plus v_k + T v_3 = 0; for k = 1 also U = 0 so the
/// transformation stays admissible. Requires 1 <= k < n.
LinearSystem left_min_equations(const Als& s, std::size_t k);
/// Unknowns [T, U], each of length k-1, for A_11 U + A_12 + T = 0 per component,
/// plus U_1 = 0 (admissibility). Requires 1 < k <= n.
LinearSystem right_min_equations(const Als& s, std::size_t k);

std::optional<MinimizationSolution> solve_left(const Als& s, std::size_t k);
std::optional<MinimizationSolution> solve_right(const Als& s, std::size_t k);

/// Apply the transformation of a solution and drop row/column k.
Als apply_left_step(const Als& s, const MinimizationSolution& sol);
Als apply_right_step(const Als& s, const MinimizationSolution& sol);

/// Removal of the last component when s_{n-1} = alpha * s_n with alpha != 0, i.e.
/// entry (n-1, n) is the constant -alpha once v is normalized. Throws InvalidAls if
/// the pattern does not apply.
bool special_left_case_applies(const Als& s);
Als special_left_case(const Als& s);

struct MinimizationStep {
  StepSide side;
  std::size_t k;
  RationalVector t;
  RationalVector u;
  std::size_t dim_before;
  std::size_t dim_after;
};

struct MinimizationTrace {
  std::vector<MinimizationStep> steps;
  /// Components dropped because their v entry was zero at the end of the system.
  std::size_t stripped = 0;
};

/// Minimal pre-standard system for the same element, or dimension 0 for zero.
PreStandardAls minimize(const Als& s, MinimizationTrace* trace = nullptr);
PreStandardAls minimize(const PreStandardAls& s, MinimizationTrace* trace = nullptr);

}  // namespace ncfactor
