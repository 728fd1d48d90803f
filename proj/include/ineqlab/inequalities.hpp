#pragma once

#include <optional>
#include <span>

#include "ineqlab/report.hpp"
#include "ineqlab/scalar_function.hpp"
#include "ineqlab/spaces.hpp"

// One checker per inequality. Every checker evaluates both sides on concrete
// operands and returns a report with margin = (claimed larger side) − (claimed
// smaller side). Operand shape errors throw; failed hypotheses on the scalar
// function (measured by grid audit, never trusted from declarations) leave
// the report inconclusive.
namespace ineqlab {

using Vec = std::span<const double>;

// Norm-space quadruple family ------------------------------------------------

/// ‖p−y‖ + ‖x−z‖ + ‖p−z‖ + ‖x−y‖ ≥ ‖p−x‖ + ‖y−z‖ in any normed space.
InequalityReport quadruple_norm(const Space& s, Vec p, Vec x, Vec y, Vec z);

/// Functional quadruple inequality in inner-product spaces for f ∈ S_0.
InequalityReport schotz_inner(const ScalarFunction& f, const Space& s, Vec p, Vec x, Vec y, Vec z);

/// N f(‖(u−v)/2‖) + N f(‖(u+v)/2‖) ≥ f(‖u‖) + f(‖v‖). N defaults to N(X).
InequalityReport functional_parallelogram(const ScalarFunction& f, const Space& s, Vec u, Vec v,
                                          std::optional<int> n = {});

/// (N/2)[f(‖u+x‖) + f(‖v+x‖) + f(‖x‖) + f(‖u+v+x‖)] ≥ f(‖u‖) + f(‖v‖).
InequalityReport four_point_functional(const ScalarFunction& f, const Space& s, Vec u, Vec v, Vec x,
                                       std::optional<int> n = {});

/// (N/2)[f(‖y−z‖) + f(‖r−q‖) + f(‖z−q‖) + f(‖y−r‖)] ≥ f(‖y−q‖) + f(‖z−r‖).
InequalityReport schotz_banach(const ScalarFunction& f, const Space& s, Vec y, Vec z, Vec q, Vec r,
                               std::optional<int> n = {});

/// Two-sided: ‖u‖^α + ‖v‖^α ≤ N(‖(u−v)/2‖^α + ‖(u+v)/2‖^α) ≤ N²(‖u‖^α + ‖v‖^α).
InequalityReport alfa_power(const Space& s, Vec u, Vec v, double alpha, std::optional<int> n = {});

/// Generalized parallelogram law, two links:
/// ‖u‖² + ‖v‖² ≤ 2C_NJ(‖(u−v)/2‖² + ‖(u+v)/2‖²) and ‖u+v‖² + ‖u−v‖² ≤ 2C_NJ(‖u‖² + ‖v‖²).
InequalityReport gen_parallelogram(const Space& s, Vec u, Vec v);

/// 2 f(|a−b|/2) + 2 f(|a+b|/2) ≥ f(|a|) + f(|b|).
InequalityReport clarkson_scalar(const ScalarFunction& f, double a, double b);

// L^p / Schatten family -------------------------------------------------------

/// Hanner: for p ≤ 2, ‖u+v‖^p + ‖u−v‖^p ≥ (‖u‖+‖v‖)^p + |‖u‖−‖v‖|^p;
/// reversed for p ≥ 2. Schatten operands are gated by the known cases.
InequalityReport hanner_classic(const Space& s, Vec u, Vec v);

/// f(‖u+v‖) + f(‖u−v‖) vs f(‖u‖+‖v‖) + f(|‖u‖−‖v‖|), oriented as Hanner.
InequalityReport hanner_functional(const ScalarFunction& f, const Space& s, Vec u, Vec v);

/// Two-sided easy Clarkson chain (vectors or Schatten matrices).
InequalityReport easy_clarkson(const Space& s, Vec u, Vec v);

/// Quadruple inequality in L^p: coefficient 1 for p ≤ 2, C(p)/2 for p ≥ 2.
InequalityReport lp_quadruple(const ScalarFunction& f, const Space& s, Vec q, Vec r, Vec y, Vec z);

/// Optimal 2-uniform convexity: ‖x‖² + ‖y‖² ≥ 2‖(x+y)/2‖² + 2(p−1)‖(x−y)/2‖²
/// for p ≤ 2, reversed for p ≥ 2.
InequalityReport two_unif_convexity_classic(const Space& s, Vec x, Vec y);

/// Functional 2-uniform convexity: coefficient ⌊2(p−1)⌋ for p ≤ 2; for p ≥ 2
/// 2 f(‖(x+y)/2‖) + 2 C̃(p) f(‖(x−y)/2‖) ≥ f(‖x‖) + f(‖y‖).
InequalityReport two_unif_convexity_functional(const ScalarFunction& f, const Space& s, Vec x, Vec y);

/// p ≥ 2: f(‖z−q‖) + f(‖y−r‖) + C̃(p)[f(‖y−z‖) + f(‖r−q‖)] ≥ f(‖y−q‖) + f(‖z−r‖).
InequalityReport two_unif_quadruple_p_ge_2(const ScalarFunction& f, const Space& s, Vec q, Vec r, Vec y, Vec z);

/// p ≥ 2 translated form: f(‖v‖) + f(‖x+y+v‖) + C̃(p)[f(‖x+u‖) + f(‖y+u‖)] ≥ f(‖x‖) + f(‖y‖).
/// With `shared_translation` the vector u is used in place of v as well.
InequalityReport two_unif_translated(const ScalarFunction& f, const Space& s, Vec x, Vec y, Vec u, Vec v,
                                     bool shared_translation);

// Determinantal family --------------------------------------------------------

/// det(A+B+C) + det C ≥ det(A+C) + det(B+C).
InequalityReport zhang_det(const PsdMatrix& a, const PsdMatrix& b, const PsdMatrix& c);

/// Links: (i) the functional Zhang inequality, (ii) its symmetrized
/// Popoviciu-like form. Margin is the smaller of the two.
InequalityReport zhang_functional(const ScalarFunction& f, const PsdMatrix& a, const PsdMatrix& b,
                                  const PsdMatrix& c);

/// Averaged variant f(det A)+f(det B)+f(det C))/3 + f(det((A+B+C)/3)) ≥
/// (2/3)[f(det((A+B)/2)) + f(det((B+C)/2)) + f(det((A+C)/2))]; not a theorem.
InequalityReport zhang_strengthened(const ScalarFunction& f, const PsdMatrix& a, const PsdMatrix& b,
                                    const PsdMatrix& c);

/// Serre for 2×2 PSD matrices: Σ det^{1/2}(pairs) ≥ Σ det^{1/2}(singles) + det^{1/2}(A+B+C).
InequalityReport serre_det(const PsdMatrix& a, const PsdMatrix& b, const PsdMatrix& c);

/// Σ f(det^{1/2}(pairs)) ≥ f(Σ det^{1/2}(singles)) + f(det^{1/2}(A+B+C)).
InequalityReport serre_functional(const ScalarFunction& f, const PsdMatrix& a, const PsdMatrix& b,
                                  const PsdMatrix& c);

// Euclidean triples -------------------------------------------------------------

/// Equality check: ‖x‖²+‖y‖²+‖z‖²+‖x+y+z‖² = ‖x+y‖²+‖y+z‖²+‖z+x‖².
InequalityReport frechet_identity(Vec x, Vec y, Vec z);

/// Hornich–Hlawka with exponent β = 2^{−n_power}.
InequalityReport hornich_hlawka(Vec x, Vec y, Vec z, int n_power);

enum class ConeMode { required, lifted };

/// Σ f(‖pair‖²) ≥ f(‖x‖²+‖y‖²+‖z‖²) + f(‖x+y+z‖²) + f(0) on the positive cone.
/// `lifted` skips the cone requirement (open-problem probing only).
InequalityReport frechet_functional(const ScalarFunction& f, Vec x, Vec y, Vec z, ConeMode cone = ConeMode::required);

/// [f(‖x‖)+f(‖y‖)+f(‖z‖)]/3 + f(‖x+y+z‖) ≥ (2/3)[f(‖x+y‖)+f(‖y+z‖)+f(‖z+x‖)].
InequalityReport popoviciu_vec(const ScalarFunction& f, Vec x, Vec y, Vec z, ConeMode cone = ConeMode::required);

/// ‖x+y+z‖² + ‖z‖² ≥ ‖x+z‖² + ‖y+z‖² on the positive cone.
InequalityReport strong_superadditivity(Vec x, Vec y, Vec z);

}  // namespace ineqlab
