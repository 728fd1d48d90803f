#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace ineqlab {

using Matrix = Eigen::MatrixXd;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class SpaceKind { lp, schatten, euclid };

/// Finite-dimensional normed space. ℓ^p_n stands in for L^p(μ); Schatten
/// operands are real m×m matrices stored row-major as m² coordinates.
class Space {
 public:
  static Space lp(double p, std::size_t dim);
  static Space schatten(double p, std::size_t m);
  static Space euclid(std::size_t dim);

  /// "lp:<p>:<dim>" (p may be "inf"), "schatten:<p>:<m>", "euclid:<dim>".
  /// Throws Error(BadSpaceSpec) on malformed text and Error(BadP) for p < 1.
  static Space parse(std::string_view spec);

  SpaceKind kind() const { return kind_; }
  double p() const { return p_; }
  /// Vector length, or matrix order m for Schatten spaces.
  std::size_t dim() const { return dim_; }
  /// Number of real coordinates of one element.
  std::size_t coords() const { return kind_ == SpaceKind::schatten ? dim_ * dim_ : dim_; }
  bool is_inner_product() const { return p_ == 2.0; }
  bool finite_p() const { return p_ < kInfinity; }

  double norm(std::span<const double> v) const;
  std::string spec() const;

 private:
  Space(SpaceKind kind, double p, std::size_t dim) : kind_(kind), p_(p), dim_(dim) {}

  SpaceKind kind_;
  double p_;
  std::size_t dim_;
};

struct LpSpace {
  double p = 2.0;
  std::size_t dim = 1;
};

struct LpVector {
  std::vector<double> coords;
  LpSpace space;
};

double lp_norm(std::span<const double> v, double p);
double lp_norm(const LpVector& v);

/// Descending singular values; SvdFailure on non-finite input.
std::vector<double> singular_values(const Matrix& t);

struct SchattenOperand {
  Matrix entries;
  double p = 2.0;
};

double schatten_norm(const Matrix& t, double p);
double schatten_norm(const SchattenOperand& t);

/// Row-major m×m view of `coords`.
Matrix as_matrix(std::span<const double> coords, std::size_t m);
std::vector<double> flatten(const Matrix& m);

/// Real symmetric positive semidefinite matrix: symmetric within 1e−12 and
/// smallest eigenvalue ≥ −1e−10 × spectral radius.
class PsdMatrix {
 public:
  explicit PsdMatrix(Matrix entries);

  const Matrix& entries() const { return entries_; }
  std::size_t order() const { return static_cast<std::size_t>(entries_.rows()); }

 private:
  Matrix entries_;
};

/// Clips the eigenvalues of a symmetric matrix at zero. NotSymmetric when
/// the input is not symmetric within 1e−12.
PsdMatrix psd_project(const Matrix& m);

bool is_symmetric(const Matrix& m, double tol = 1e-12);

/// Determinant of a PSD matrix, clipped to 0 when it lies in [−1e−10·scale, 0).
double psd_det(const Matrix& m);

// Geometric constants --------------------------------------------------------

/// 2^{2/t − 1} with t = min(p, p/(p−1)); 2 for p ∈ {1, ∞}.
double cnj_analytic(double p);

/// Analytic von Neumann–Jordan constant of a space (1 for Euclidean).
double cnj_of(const Space& space);

struct CnjSample {
  double max_ratio = 1.0;
  std::vector<double> u;
  std::vector<double> v;
  std::size_t trials = 0;
};

/// Max of (‖u+v‖² + ‖u−v‖²)/(2‖u‖² + 2‖v‖²) over seeded random pairs, with
/// the trivial pair (u, 0) giving the floor 1. Optional pairs are evaluated
/// before the random ones. A lower bound on the true constant.
CnjSample cnj_sampled(const Space& space, std::size_t trials, std::uint64_t seed,
                      const std::vector<std::pair<std::vector<double>, std::vector<double>>>& injected = {});

/// 2·cnj rounded when within 1e−9 of an integer, else 4. OutOfRange outside [1, 2].
int n_constant(double cnj);

/// N(X) from the analytic C_NJ of the space.
int n_constant(const Space& space);

/// 2^{p−1} when integral (within 1e−9), else ⌊2^{p−1} + 1⌋.
double c_constant(double p);

/// (p−1)/2 when integral (within 1e−9), else ⌊(p−1)/2 + 1⌋. Requires p ≥ 2.
double c_tilde(double p);

/// ⌊2(p−1)⌋ for 1 < p ≤ 2.
int floor_two_p_minus_one(double p);

enum class ConstantSource { analytic, sampled };

struct GeometricConstants {
  double cnj = 1.0;
  int n_of_x = 2;
  ConstantSource source = ConstantSource::analytic;
};

GeometricConstants geometric_constants(const Space& space);

}  // namespace ineqlab
