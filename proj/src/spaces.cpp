#include "ineqlab/spaces.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "ineqlab/error.hpp"
#include "ineqlab/sampling.hpp"

namespace ineqlab {

namespace {

void require_p(double p) {
  if (!(p >= 1.0)) {
    std::ostringstream msg;
    msg << "p must be >= 1, got " << p;
    throw Error(ErrorCode::BadP, msg.str());
  }
}

double parse_real(std::string_view text, std::string_view spec) {
  if (text == "inf" || text == "infinity") return kInfinity;
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw Error(ErrorCode::BadSpaceSpec, "bad number in '" + std::string(spec) + "'");
  return value;
}

std::size_t parse_size(std::string_view text, std::string_view spec) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || value == 0)
    throw Error(ErrorCode::BadSpaceSpec, "bad dimension in '" + std::string(spec) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

Space Space::lp(double p, std::size_t dim) {
  require_p(p);
  if (dim == 0) throw Error(ErrorCode::BadSpaceSpec, "dimension must be positive");
  return Space(SpaceKind::lp, p, dim);
}

Space Space::schatten(double p, std::size_t m) {
  require_p(p);
  if (!std::isfinite(p)) throw Error(ErrorCode::BadP, "Schatten index must be finite");
  if (m == 0) throw Error(ErrorCode::BadSpaceSpec, "matrix order must be positive");
  return Space(SpaceKind::schatten, p, m);
}

Space Space::euclid(std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::BadSpaceSpec, "dimension must be positive");
  return Space(SpaceKind::euclid, 2.0, dim);
}

Space Space::parse(std::string_view spec) {
  const auto parts = split(spec, ':');
  if (parts[0] == "euclid" && parts.size() == 2) return euclid(parse_size(parts[1], spec));
  if (parts[0] == "lp" && parts.size() == 3) return lp(parse_real(parts[1], spec), parse_size(parts[2], spec));
  if (parts[0] == "schatten" && parts.size() == 3)
    return schatten(parse_real(parts[1], spec), parse_size(parts[2], spec));
  throw Error(ErrorCode::BadSpaceSpec, "expected lp:p:dim, schatten:p:m or euclid:dim, got '" + std::string(spec) + "'");
}

double Space::norm(std::span<const double> v) const {
  if (v.size() != coords()) {
    std::ostringstream msg;
    msg << spec() << " expects " << coords() << " coordinates, got " << v.size();
    throw Error(ErrorCode::DimensionMismatch, msg.str());
  }
  if (kind_ == SpaceKind::schatten) return schatten_norm(as_matrix(v, dim_), p_);
  return lp_norm(v, p_);
}

std::string Space::spec() const {
  std::ostringstream out;
  switch (kind_) {
    case SpaceKind::euclid: out << "euclid:" << dim_; break;
    case SpaceKind::lp:
      out << "lp:";
      if (std::isfinite(p_)) out << p_; else out << "inf";
      out << ":" << dim_;
      break;
    case SpaceKind::schatten: out << "schatten:" << p_ << ":" << dim_; break;
  }
  return out.str();
}

double lp_norm(std::span<const double> v, double p) {
  double scale = 0.0;
  for (double c : v) scale = std::max(scale, std::abs(c));
  if (!std::isfinite(p) || scale == 0.0) return scale;
  if (p == 1.0) {
    double s = 0.0;
    for (double c : v) s += std::abs(c);
    return s;
  }
  // Scaled by the max entry so that large p neither overflows nor underflows.
  double s = 0.0;
  if (p == 2.0) {
    for (double c : v) s += (c / scale) * (c / scale);
    return scale * std::sqrt(s);
  }
  for (double c : v) s += std::pow(std::abs(c) / scale, p);
  return scale * std::pow(s, 1.0 / p);
}

double lp_norm(const LpVector& v) {
  if (v.coords.size() != v.space.dim) throw Error(ErrorCode::DimensionMismatch, "coords do not match the space");
  return lp_norm(v.coords, v.space.p);
}

std::vector<double> singular_values(const Matrix& t) {
  if (!t.allFinite()) throw Error(ErrorCode::SvdFailure, "matrix has non-finite entries");
  Eigen::JacobiSVD<Matrix> svd(t);
  if (svd.info() != Eigen::Success) throw Error(ErrorCode::SvdFailure, "SVD did not converge");
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

double schatten_norm(const Matrix& t, double p) {
  require_p(p);
  return lp_norm(singular_values(t), p);
}

double schatten_norm(const SchattenOperand& t) { return schatten_norm(t.entries, t.p); }

Matrix as_matrix(std::span<const double> coords, std::size_t m) {
  if (coords.size() != m * m) throw Error(ErrorCode::DimensionMismatch, "coordinate count is not m*m");
  Matrix out(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = coords[i * m + j];
  return out;
}

std::vector<double> flatten(const Matrix& m) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

bool is_symmetric(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
}

PsdMatrix::PsdMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
    throw Error(ErrorCode::NotPsd, "matrix must be square and nonempty");
  if (!entries_.allFinite()) throw Error(ErrorCode::NotPsd, "matrix has non-finite entries");
  if (!is_symmetric(entries_)) throw Error(ErrorCode::NotPsd, "matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(entries_, Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  const double radius = ev.cwiseAbs().maxCoeff();
  if (ev.minCoeff() < -1e-10 * radius) {
    std::ostringstream msg;
    msg << "smallest eigenvalue " << ev.minCoeff() << " is negative";
    throw Error(ErrorCode::NotPsd, msg.str());
  }
}

PsdMatrix psd_project(const Matrix& m) {
  if (!is_symmetric(m)) throw Error(ErrorCode::NotSymmetric, "psd_project needs a symmetric matrix");
  const Matrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym);
  const Eigen::VectorXd clipped = eig.eigenvalues().cwiseMax(0.0);
  Matrix out = eig.eigenvectors() * clipped.asDiagonal() * eig.eigenvectors().transpose();
  return PsdMatrix(0.5 * (out + out.transpose()));
}

double psd_det(const Matrix& m) {
  double d = m.determinant();
  const double scale = std::pow(std::max(1e-300, m.cwiseAbs().maxCoeff()), static_cast<double>(m.rows()));
  if (d < 0.0) {
    if (d < -1e-10 * scale) {
      std::ostringstream msg;
      msg << "determinant " << d << " of a PSD operand is negative";
      throw Error(ErrorCode::NegativeDeterminant, msg.str());
    }
    d = 0.0;
  }
  return d;
}

double cnj_analytic(double p) {
  require_p(p);
  if (p == 1.0 || !std::isfinite(p)) return 2.0;
  const double t = std::min(p, p / (p - 1.0));
  return std::exp2(2.0 / t - 1.0);
}

double cnj_of(const Space& space) { return space.kind() == SpaceKind::euclid ? 1.0 : cnj_analytic(space.p()); }

CnjSample cnj_sampled(const Space& space, std::size_t trials, std::uint64_t seed,
                      const std::vector<std::pair<std::vector<double>, std::vector<double>>>& injected) {
  CnjSample best;
  const std::size_t n = space.coords();
  best.u.assign(n, 0.0);
  best.u[0] = 1.0;
  best.v.assign(n, 0.0);

  std::vector<double> sum(n), diff(n);
  auto consider = [&](const std::vector<double>& u, const std::vector<double>& v) {
    const double nu = space.norm(u), nv = space.norm(v);
    const double denom = 2.0 * nu * nu + 2.0 * nv * nv;
    if (!(denom > 0.0)) return;
    for (std::size_t i = 0; i < n; ++i) {
      sum[i] = u[i] + v[i];
      diff[i] = u[i] - v[i];
    }
    const double a = space.norm(sum), b = space.norm(diff);
    const double ratio = (a * a + b * b) / denom;
    if (ratio > best.max_ratio) {
      best.max_ratio = ratio;
      best.u = u;
      best.v = v;
    }
  };

  for (const auto& [u, v] : injected) consider(u, v);
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto style = draw_style(rng);
    auto u = draw_coords(rng, n, style.style);
    auto v = draw_coords(rng, n, style.style);
    consider(u, v);
  }
  best.trials = trials + injected.size();
  return best;
}

int n_constant(double cnj) {
  if (!(cnj >= 1.0 - 1e-9 && cnj <= 2.0 + 1e-9)) {
    std::ostringstream msg;
    msg << "C_NJ must lie in [1, 2], got " << cnj;
    throw Error(ErrorCode::OutOfRange, msg.str());
  }
  const double twice = 2.0 * cnj;
  const double nearest = std::round(twice);
  return std::abs(twice - nearest) <= 1e-9 ? static_cast<int>(nearest) : 4;
}

int n_constant(const Space& space) { return n_constant(cnj_of(space)); }

double c_constant(double p) {
  require_p(p);
  const double v = std::exp2(p - 1.0);
  const double nearest = std::round(v);
  return std::abs(v - nearest) <= 1e-9 ? nearest : std::floor(v + 1.0);
}

double c_tilde(double p) {
  if (!(p >= 2.0)) throw Error(ErrorCode::BadP, "c_tilde needs p >= 2");
  const double v = (p - 1.0) / 2.0;
  const double nearest = std::round(v);
  return std::abs(v - nearest) <= 1e-9 ? nearest : std::floor(v + 1.0);
}

int floor_two_p_minus_one(double p) {
  if (!(p > 1.0 && p <= 2.0)) throw Error(ErrorCode::BadP, "floor(2(p-1)) is used for 1 < p <= 2");
  const double v = 2.0 * (p - 1.0);
  const double nearest = std::round(v);
  return static_cast<int>(std::abs(v - nearest) <= 1e-9 ? nearest : std::floor(v));
}

GeometricConstants geometric_constants(const Space& space) {
  GeometricConstants g;
  g.cnj = cnj_of(space);
  g.n_of_x = n_constant(g.cnj);
  g.source = ConstantSource::analytic;
  return g;
}

}  // namespace ineqlab
