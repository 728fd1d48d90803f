#include "ineqlab/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ineqlab/error.hpp"

namespace ineqlab {
namespace {

using Point = std::vector<double>;

Point lin(Vec a, double ca, Vec b, double cb) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ca * a[i] + cb * b[i];
  return out;
}
Point add(Vec a, Vec b) { return lin(a, 1.0, b, 1.0); }
Point sub(Vec a, Vec b) { return lin(a, 1.0, b, -1.0); }
Point add3(Vec a, Vec b, Vec c) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i] + c[i];
  return out;
}

void require_dims(const Space& s, std::initializer_list<Vec> points) {
  for (Vec v : points)
    if (v.size() != s.coords()) {
      std::ostringstream msg;
      msg << s.spec() << " expects " << s.coords() << " coordinates, got " << v.size();
      throw Error(ErrorCode::DimensionMismatch, msg.str());
    }
}

void require_same_dims(std::initializer_list<Vec> points) {
  const std::size_t n = points.begin()->size();
  for (Vec v : points)
    if (v.size() != n || n == 0) throw Error(ErrorCode::DimensionMismatch, "operands differ in dimension");
}

void require_cone(std::initializer_list<Vec> points) {
  for (Vec v : points)
    for (double c : v)
      if (c < 0.0) {
        std::ostringstream msg;
        msg << "coordinate " << c << " is negative";
        throw Error(ErrorCode::NotInPositiveCone, msg.str());
      }
}

// Lp-type norm index; the Euclidean space is ℓ² for these checks.
double finite_p_above_one(const Space& s) {
  const double p = s.p();
  if (!(p > 1.0) || !std::isfinite(p)) {
    std::ostringstream msg;
    msg << "needs finite p > 1, got " << s.spec();
    throw Error(ErrorCode::BadP, msg.str());
  }
  return p;
}

double euclid(Vec v) { return lp_norm(v, 2.0); }
double euclid_sq(Vec v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return s;
}

std::vector<HypothesisCheck> s0_gate(const ScalarFunction& f) {
  const ShapeFlags m = f.measured();
  return {{"f nondecreasing", m.nondecreasing},
          {"f convex", m.convex},
          {"f 3-concave", m.three_concave},
          {"f(0) = 0", m.vanishes_at_zero}};
}

int resolve_n(const Space& s, std::optional<int> n, std::vector<HypothesisCheck>& audit) {
  const int nx = n_constant(s);
  if (!n) return nx;
  std::ostringstream cond;
  cond << "N = " << *n << " >= N(X) = " << nx;
  audit.push_back({cond.str(), *n >= nx});
  return *n;
}

NamedOperand op(std::string name, Vec v) { return {std::move(name), {v.begin(), v.end()}}; }
NamedOperand op(std::string name, const PsdMatrix& m) { return {std::move(name), flatten(m.entries())}; }

std::string fmt(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

bool is_psd(const Matrix& m) {
  if (!is_symmetric(m)) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  return ev.minCoeff() >= -1e-10 * std::max(1e-300, ev.cwiseAbs().maxCoeff());
}

// Known Schatten-class cases of Hanner's inequality. Vector operands pass.
std::vector<HypothesisCheck> hanner_schatten_gate(const Space& s, Vec u, Vec v) {
  if (s.kind() != SpaceKind::schatten || s.p() == 2.0) return {};
  const double p = s.p();
  const std::size_t m = s.dim();
  if (p < 2.0) {
    if (p <= 4.0 / 3.0) return {{"Schatten: 1 < p <= 4/3", true}};
    const bool ok = is_psd(as_matrix(add(u, v), m)) && is_psd(as_matrix(sub(u, v), m));
    return {{"Schatten: p <= 4/3 or u+v, u-v PSD", ok}};
  }
  if (p >= 4.0) return {{"Schatten: p >= 4", true}};
  const bool ok = is_psd(as_matrix(u, m)) && is_psd(as_matrix(v, m));
  return {{"Schatten: p >= 4 or u, v PSD", ok}};
}

double sqrt_det(const Matrix& m) { return std::sqrt(psd_det(m)); }

void require_same_order(const PsdMatrix& a, const PsdMatrix& b, const PsdMatrix& c) {
  if (a.order() != b.order() || a.order() != c.order())
    throw Error(ErrorCode::DimensionMismatch, "matrices differ in order");
}

}  // namespace

InequalityReport quadruple_norm(const Space& s, Vec p, Vec x, Vec y, Vec z) {
  require_dims(s, {p, x, y, z});
  auto n = [&](Vec a, Vec b) { return s.norm(sub(a, b)); };
  auto r = make_report("quadruple_norm", n(p, y) + n(x, z) + n(p, z) + n(x, y), n(p, x) + n(y, z));
  r.inputs = {op("p", p), op("x", x), op("y", y), op("z", z)};
  return r;
}

InequalityReport schotz_inner(const ScalarFunction& f, const Space& s, Vec p, Vec x, Vec y, Vec z) {
  if (!s.is_inner_product()) throw Error(ErrorCode::NotInnerProduct, s.spec() + " is not an inner-product space");
  require_dims(s, {p, x, y, z});
  auto g = [&](Vec a, Vec b) { return f(s.norm(sub(a, b))); };
  auto audit = s0_gate(f);
  audit.push_back({"f nonnegative", f.measured().nonnegative});
  auto r = make_report("schotz_inner", g(p, y) + g(x, z) + g(p, z) + g(x, y), g(p, x) + g(y, z), std::move(audit));
  r.inputs = {op("p", p), op("x", x), op("y", y), op("z", z)};
  return r;
}

InequalityReport functional_parallelogram(const ScalarFunction& f, const Space& s, Vec u, Vec v,
                                          std::optional<int> n) {
  require_dims(s, {u, v});
  auto audit = s0_gate(f);
  const double nn = resolve_n(s, n, audit);
  const double lhs = nn * f(s.norm(lin(u, 0.5, v, -0.5))) + nn * f(s.norm(lin(u, 0.5, v, 0.5)));
  auto r = make_report("functional_parallelogram", lhs, f(s.norm(u)) + f(s.norm(v)), std::move(audit));
  r.inputs = {op("u", u), op("v", v), {"N", {nn}}};
  return r;
}

InequalityReport four_point_functional(const ScalarFunction& f, const Space& s, Vec u, Vec v, Vec x,
                                       std::optional<int> n) {
  require_dims(s, {u, v, x});
  auto audit = s0_gate(f);
  const double nn = resolve_n(s, n, audit);
  const double lhs =
      0.5 * nn * (f(s.norm(add(u, x))) + f(s.norm(add(v, x))) + f(s.norm(x)) + f(s.norm(add3(u, v, x))));
  auto r = make_report("four_point_functional", lhs, f(s.norm(u)) + f(s.norm(v)), std::move(audit));
  r.inputs = {op("u", u), op("v", v), op("x", x), {"N", {nn}}};
  return r;
}

InequalityReport schotz_banach(const ScalarFunction& f, const Space& s, Vec y, Vec z, Vec q, Vec r,
                               std::optional<int> n) {
  require_dims(s, {y, z, q, r});
  auto audit = s0_gate(f);
  const double nn = resolve_n(s, n, audit);
  auto g = [&](Vec a, Vec b) { return f(s.norm(sub(a, b))); };
  const double lhs = 0.5 * nn * (g(y, z) + g(r, q) + g(z, q) + g(y, r));
  auto rep = make_report("schotz_banach", lhs, g(y, q) + g(z, r), std::move(audit));
  rep.inputs = {op("y", y), op("z", z), op("q", q), op("r", r), {"N", {nn}}};
  return rep;
}

InequalityReport alfa_power(const Space& s, Vec u, Vec v, double alpha, std::optional<int> n) {
  if (!(alpha >= 1.0 && alpha <= 2.0)) throw Error(ErrorCode::BadAlpha, "alpha must lie in [1, 2], got " + fmt(alpha));
  require_dims(s, {u, v});
  std::vector<HypothesisCheck> audit;
  const double nn = resolve_n(s, n, audit);
  auto pw = [&](Vec w) { return std::pow(s.norm(w), alpha); };
  const double ends = pw(u) + pw(v);
  const double middle = nn * (pw(lin(u, 0.5, v, -0.5)) + pw(lin(u, 0.5, v, 0.5)));
  auto r = make_chain_report("alfa_power", {{"left", middle, ends, 0.0}, {"right", nn * nn * ends, middle, 0.0}},
                             std::move(audit));
  r.inputs = {op("u", u), op("v", v), {"alpha", {alpha}}, {"N", {nn}}};
  return r;
}

InequalityReport gen_parallelogram(const Space& s, Vec u, Vec v) {
  require_dims(s, {u, v});
  auto sq = [&](Vec w) {
    const double n = s.norm(w);
    return n * n;
  };
  const double cnj = cnj_of(s);
  const double ends = sq(u) + sq(v);
  const double sum = sq(add(u, v)), diff = sq(sub(u, v));
  auto r = make_chain_report("gen_parallelogram", {{"halves", 2.0 * cnj * (diff + sum) / 4.0, ends, 0.0},
                                                   {"sums", 2.0 * cnj * ends, sum + diff, 0.0}});
  r.inputs = {op("u", u), op("v", v), {"cnj", {cnj}}};
  return r;
}

InequalityReport clarkson_scalar(const ScalarFunction& f, double a, double b) {
  const ShapeFlags m = f.measured();
  auto audit = s0_gate(f);
  audit.push_back({"f nonnegative", m.nonnegative});
  const double lhs = 2.0 * f(std::abs(a - b) / 2.0) + 2.0 * f(std::abs(a + b) / 2.0);
  auto r = make_report("clarkson_scalar", lhs, f(std::abs(a)) + f(std::abs(b)), std::move(audit));
  r.inputs = {{"a", {a}}, {"b", {b}}};
  return r;
}

InequalityReport hanner_classic(const Space& s, Vec u, Vec v) {
  const double p = finite_p_above_one(s);
  require_dims(s, {u, v});
  const double nu = s.norm(u), nv = s.norm(v);
  const double mixed = std::pow(s.norm(add(u, v)), p) + std::pow(s.norm(sub(u, v)), p);
  const double plain = std::pow(nu + nv, p) + std::pow(std::abs(nu - nv), p);
  auto audit = hanner_schatten_gate(s, u, v);
  auto r = p <= 2.0 ? make_report("hanner_classic", mixed, plain, std::move(audit))
                    : make_report("hanner_classic", plain, mixed, std::move(audit));
  r.inputs = {op("u", u), op("v", v), {"p", {p}}};
  return r;
}

InequalityReport hanner_functional(const ScalarFunction& f, const Space& s, Vec u, Vec v) {
  const double p = finite_p_above_one(s);
  require_dims(s, {u, v});
  const ShapeFlags m = f.measured();
  const ShapeFlags root = f.measured_composite(1.0 / p);
  std::vector<HypothesisCheck> audit{{"f nondecreasing", m.nondecreasing}, {"f(0) = 0", m.vanishes_at_zero}};
  if (p <= 2.0) {
    audit.push_back({"f convex", m.convex});
    audit.push_back({"f(x^(1/p)) concave", root.concave});
  } else {
    // The majorization route for p >= 2 is the convex (Tomić–Weyl) one, so
    // f(x^(1/p)) must be convex; with concavity alone f = identity fails.
    audit.push_back({"f(x^(1/p)) convex", root.convex});
  }
  for (auto& h : hanner_schatten_gate(s, u, v)) audit.push_back(std::move(h));

  const double nu = s.norm(u), nv = s.norm(v);
  const double mixed = f(s.norm(add(u, v))) + f(s.norm(sub(u, v)));
  const double plain = f(nu + nv) + f(std::abs(nu - nv));
  auto r = p <= 2.0 ? make_report("hanner_functional", mixed, plain, std::move(audit))
                    : make_report("hanner_functional", plain, mixed, std::move(audit));
  r.inputs = {op("u", u), op("v", v), {"p", {p}}};
  return r;
}

InequalityReport easy_clarkson(const Space& s, Vec u, Vec v) {
  const double p = finite_p_above_one(s);
  require_dims(s, {u, v});
  const double ends = std::pow(s.norm(u), p) + std::pow(s.norm(v), p);
  const double mixed = std::pow(s.norm(sub(u, v)), p) + std::pow(s.norm(add(u, v)), p);
  const double low = p <= 2.0 ? std::exp2(p - 1.0) : 2.0;
  const double high = p <= 2.0 ? 2.0 : std::exp2(p - 1.0);
  auto r = make_chain_report("easy_clarkson", {{"lower", mixed, low * ends, 0.0}, {"upper", high * ends, mixed, 0.0}});
  r.inputs = {op("u", u), op("v", v), {"p", {p}}};
  return r;
}

InequalityReport lp_quadruple(const ScalarFunction& f, const Space& s, Vec q, Vec r, Vec y, Vec z) {
  const double p = finite_p_above_one(s);
  require_dims(s, {q, r, y, z});
  const ShapeFlags m = f.measured();
  std::vector<HypothesisCheck> audit{{"f nondecreasing", m.nondecreasing},
                                     {"f convex", m.convex},
                                     {"f(0) = 0", m.vanishes_at_zero},
                                     {"f(x^(1/p)) concave", f.measured_composite(1.0 / p).concave}};
  const double coeff = p <= 2.0 ? 1.0 : c_constant(p) / 2.0;
  auto g = [&](Vec a, Vec b) { return f(s.norm(sub(a, b))); };
  const double lhs = coeff * (g(y, z) + g(r, q) + g(z, q) + g(y, r));
  auto rep = make_report("lp_quadruple", lhs, g(y, q) + g(z, r), std::move(audit));
  rep.inputs = {op("q", q), op("r", r), op("y", y), op("z", z), {"coefficient", {coeff}}};
  return rep;
}

InequalityReport two_unif_convexity_classic(const Space& s, Vec x, Vec y) {
  const double p = finite_p_above_one(s);
  require_dims(s, {x, y});
  auto sq = [&](Vec w) {
    const double n = s.norm(w);
    return n * n;
  };
  const double ends = sq(x) + sq(y);
  const double mid = 2.0 * sq(lin(x, 0.5, y, 0.5)) + 2.0 * (p - 1.0) * sq(lin(x, 0.5, y, -0.5));
  auto r = p <= 2.0 ? make_report("two_unif_convexity_classic", ends, mid)
                    : make_report("two_unif_convexity_classic", mid, ends);
  r.inputs = {op("x", x), op("y", y), {"p", {p}}};
  return r;
}

InequalityReport two_unif_convexity_functional(const ScalarFunction& f, const Space& s, Vec x, Vec y) {
  const double p = finite_p_above_one(s);
  require_dims(s, {x, y});
  const double fx = f(s.norm(x)), fy = f(s.norm(y));
  const double fm = f(s.norm(lin(x, 0.5, y, 0.5)));
  const double fd = f(s.norm(lin(x, 0.5, y, -0.5)));
  if (p <= 2.0) {
    const ShapeFlags m = f.measured();
    std::vector<HypothesisCheck> audit{{"f nondecreasing", m.nondecreasing},
                                       {"f(0) = 0", m.vanishes_at_zero},
                                       {"f(x^(1/2)) convex", f.measured_composite(0.5).convex}};
    const int k = floor_two_p_minus_one(p);
    auto r = make_report("two_unif_convexity_functional", fx + fy, 2.0 * fm + k * fd, std::move(audit));
    r.inputs = {op("x", x), op("y", y), {"p", {p}}, {"coefficient", {static_cast<double>(k)}}};
    if (k == 0) r.notes.push_back("degenerate coefficient floor(2(p-1)) = 0");
    return r;
  }
  const double ct = c_tilde(p);
  auto r = make_report("two_unif_convexity_functional", 2.0 * fm + 2.0 * ct * fd, fx + fy, s0_gate(f));
  r.inputs = {op("x", x), op("y", y), {"p", {p}}, {"coefficient", {2.0 * ct}}};
  return r;
}

InequalityReport two_unif_quadruple_p_ge_2(const ScalarFunction& f, const Space& s, Vec q, Vec r, Vec y, Vec z) {
  const double p = finite_p_above_one(s);
  if (p < 2.0) throw Error(ErrorCode::BadP, "two_unif_quadruple_p_ge_2 needs p >= 2");
  require_dims(s, {q, r, y, z});
  const double ct = c_tilde(p);
  auto g = [&](Vec a, Vec b) { return f(s.norm(sub(a, b))); };
  const double lhs = g(z, q) + g(y, r) + ct * (g(y, z) + g(r, q));
  auto rep = make_report("two_unif_quadruple_p_ge_2", lhs, g(y, q) + g(z, r), s0_gate(f));
  rep.inputs = {op("q", q), op("r", r), op("y", y), op("z", z), {"c_tilde", {ct}}};
  return rep;
}

InequalityReport two_unif_translated(const ScalarFunction& f, const Space& s, Vec x, Vec y, Vec u, Vec v,
                                     bool shared_translation) {
  const double p = finite_p_above_one(s);
  if (p < 2.0) throw Error(ErrorCode::BadP, "two_unif_translated needs p >= 2");
  require_dims(s, {x, y, u, v});
  const Vec w = shared_translation ? u : v;
  const double ct = c_tilde(p);
  const double lhs = f(s.norm(w)) + f(s.norm(add3(x, y, w))) + ct * (f(s.norm(add(x, u))) + f(s.norm(add(y, u))));
  auto rep = make_report("two_unif_translated", lhs, f(s.norm(x)) + f(s.norm(y)), s0_gate(f));
  rep.inputs = {op("x", x), op("y", y), op("u", u), op("v", w), {"c_tilde", {ct}}};
  if (shared_translation) rep.notes.push_back("shared translation: v = u");
  return rep;
}

InequalityReport zhang_det(const PsdMatrix& a, const PsdMatrix& b, const PsdMatrix& c) {
  require_same_order(a, b, c);
  const Matrix& A = a.entries();
  const Matrix& B = b.entries();
  const Matrix& C = c.entries();
  auto r = make_report("zhang_det", psd_det(A + B + C) + psd_det(C), psd_det(A + C) + psd_det(B + C));
  r.inputs = {op("A", a), op("B", b), op("C", c)};
  return r;
}

InequalityReport zhang_functional(const ScalarFunction& f, const PsdMatrix& a, const PsdMatrix& b,
                                  const PsdMatrix& c) {
  require_same_order(a, b, c);
  const Matrix& A = a.entries();
  const Matrix& B = b.entries();
  const Matrix& C = c.entries();
  const ShapeFlags m = f.measured();
  const double fabc = f(psd_det(A + B + C));
  const double fab = f(psd_det(A + B)), fbc = f(psd_det(B + C)), fac = f(psd_det(A + C));
  const double singles = (f(psd_det(A)) + f(psd_det(B)) + f(psd_det(C))) / 3.0;
  auto r = make_chain_report("zhang_functional",
                             {{"functional", fabc + f(psd_det(C)), fac + fbc, 0.0},
                              {"symmetrized", singles + fabc, 2.0 / 3.0 * (fab + fbc + fac), 0.0}},
                             {{"f nondecreasing", m.nondecreasing}, {"f convex", m.convex}});
  r.inputs = {op("A", a), op("B", b), op("C", c)};
  return r;
}

InequalityReport zhang_strengthened(const ScalarFunction& f, const PsdMatrix& a, const PsdMatrix& b,
                                    const PsdMatrix& c) {
  require_same_order(a, b, c);
  const Matrix& A = a.entries();
  const Matrix& B = b.entries();
  const Matrix& C = c.entries();
  const double lhs = (f(psd_det(A)) + f(psd_det(B)) + f(psd_det(C))) / 3.0 + f(psd_det((A + B + C) / 3.0));
  const double rhs =
      2.0 / 3.0 * (f(psd_det((A + B) / 2.0)) + f(psd_det((B + C) / 2.0)) + f(psd_det((A + C) / 2.0)));
  const ShapeFlags m = f.measured();
  auto r = make_report("zhang_strengthened", lhs, rhs, {{"f nondecreasing", m.nondecreasing}, {"f convex", m.convex}});
  r.inputs = {op("A", a), op("B", b), op("C", c)};
  return r;
}

InequalityReport serre_det(const PsdMatrix& a, const PsdMatrix& b, const PsdMatrix& c) {
  require_same_order(a, b, c);
  const Matrix& A = a.entries();
  const Matrix& B = b.entries();
  const Matrix& C = c.entries();
  const double lhs = sqrt_det(A + B) + sqrt_det(B + C) + sqrt_det(C + A);
  const double rhs = sqrt_det(A) + sqrt_det(B) + sqrt_det(C) + sqrt_det(A + B + C);
  auto r = make_report("serre_det", lhs, rhs, {{"2x2 matrices", a.order() == 2}});
  r.inputs = {op("A", a), op("B", b), op("C", c)};
  return r;
}

InequalityReport serre_functional(const ScalarFunction& f, const PsdMatrix& a, const PsdMatrix& b,
                                  const PsdMatrix& c) {
  require_same_order(a, b, c);
  const Matrix& A = a.entries();
  const Matrix& B = b.entries();
  const Matrix& C = c.entries();
  const ShapeFlags m = f.measured();
  const double lhs = f(sqrt_det(A + B)) + f(sqrt_det(B + C)) + f(sqrt_det(C + A));
  const double rhs = f(sqrt_det(A) + sqrt_det(B) + sqrt_det(C)) + f(sqrt_det(A + B + C));
  auto r = make_report("serre_functional", lhs, rhs,
                       {{"2x2 matrices", a.order() == 2},
                        {"f nonnegative", m.nonnegative},
                        {"f nondecreasing", m.nondecreasing},
                        {"f concave", m.concave}});
  r.inputs = {op("A", a), op("B", b), op("C", c)};
  return r;
}

InequalityReport frechet_identity(Vec x, Vec y, Vec z) {
  require_same_dims({x, y, z});
  const double lhs = euclid_sq(x) + euclid_sq(y) + euclid_sq(z) + euclid_sq(add3(x, y, z));
  const double rhs = euclid_sq(add(x, y)) + euclid_sq(add(y, z)) + euclid_sq(add(z, x));
  InequalityReport r = make_report("frechet_identity", lhs, rhs);
  r.margin = -std::abs(lhs - rhs);
  r.holds = r.margin >= -r.tolerance;
  r.inputs = {op("x", x), op("y", y), op("z", z)};
  return r;
}

InequalityReport hornich_hlawka(Vec x, Vec y, Vec z, int n_power) {
  require_same_dims({x, y, z});
  if (n_power < 0 || n_power > 60) throw Error(ErrorCode::OutOfRange, "n_power must lie in [0, 60]");
  const double beta = std::ldexp(1.0, -n_power);
  auto pw = [&](const Point& v) { return std::pow(euclid(v), beta); };
  auto pv = [&](Vec v) { return std::pow(euclid(v), beta); };
  const double lhs = pv(x) + pv(y) + pv(z) + pw(add3(x, y, z));
  const double rhs = pw(add(x, y)) + pw(add(y, z)) + pw(add(z, x));
  auto r = make_report("hornich_hlawka", lhs, rhs);
  r.inputs = {op("x", x), op("y", y), op("z", z), {"beta", {beta}}};
  return r;
}

InequalityReport frechet_functional(const ScalarFunction& f, Vec x, Vec y, Vec z, ConeMode cone) {
  require_same_dims({x, y, z});
  if (cone == ConeMode::required) require_cone({x, y, z});
  const ShapeFlags m = f.measured();
  const double lhs = f(euclid_sq(add(x, y))) + f(euclid_sq(add(y, z))) + f(euclid_sq(add(z, x)));
  const double rhs = f(euclid_sq(x) + euclid_sq(y) + euclid_sq(z)) + f(euclid_sq(add3(x, y, z))) + f(0.0);
  auto r = make_report(cone == ConeMode::required ? "frechet_functional" : "frechet_functional_signed", lhs, rhs,
                       {{"f nondecreasing", m.nondecreasing}, {"f concave", m.concave}});
  r.inputs = {op("x", x), op("y", y), op("z", z)};
  return r;
}

InequalityReport popoviciu_vec(const ScalarFunction& f, Vec x, Vec y, Vec z, ConeMode cone) {
  require_same_dims({x, y, z});
  if (cone == ConeMode::required) require_cone({x, y, z});
  const ShapeFlags m = f.measured();
  std::vector<HypothesisCheck> audit{{"f nondecreasing", m.nondecreasing},
                                     {"f(0) = 0", m.vanishes_at_zero},
                                     {"f(x^(1/2)) convex", f.measured_composite(0.5).convex}};
  const double lhs = (f(euclid(x)) + f(euclid(y)) + f(euclid(z))) / 3.0 + f(euclid(add3(x, y, z)));
  const double rhs = 2.0 / 3.0 * (f(euclid(add(x, y))) + f(euclid(add(y, z))) + f(euclid(add(z, x))));
  auto r = make_report(cone == ConeMode::required ? "popoviciu_vec" : "popoviciu_vec_signed", lhs, rhs,
                       std::move(audit));
  r.inputs = {op("x", x), op("y", y), op("z", z)};
  return r;
}

InequalityReport strong_superadditivity(Vec x, Vec y, Vec z) {
  require_same_dims({x, y, z});
  require_cone({x, y, z});
  auto r = make_report("strong_superadditivity", euclid_sq(add3(x, y, z)) + euclid_sq(z),
                       euclid_sq(add(x, z)) + euclid_sq(add(y, z)));
  r.inputs = {op("x", x), op("y", y), op("z", z)};
  return r;
}

}  // namespace ineqlab
