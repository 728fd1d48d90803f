#include "ineqlab/scalar_function.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "ineqlab/audit.hpp"
#include "ineqlab/error.hpp"

namespace ineqlab {

std::string describe(const ShapeFlags& f) {
  std::ostringstream out;
  out << "{";
  const char* sep = "";
  auto put = [&](bool on, const char* name) {
    if (on) {
      out << sep << name;
      sep = ", ";
    }
  };
  put(f.nonnegative, "nonnegative");
  put(f.nondecreasing, "nondecreasing");
  put(f.convex, "convex");
  put(f.concave, "concave");
  put(f.three_convex, "three_convex");
  put(f.three_concave, "three_concave");
  put(f.vanishes_at_zero, "vanishes_at_zero");
  out << "}";
  return out.str();
}

std::vector<std::string> unconfirmed_flags(const ShapeFlags& declared, const ShapeFlags& measured) {
  std::vector<std::string> out;
  auto check = [&](bool d, bool m, const char* name) {
    if (d && !m) out.emplace_back(name);
  };
  check(declared.nonnegative, measured.nonnegative, "nonnegative");
  check(declared.nondecreasing, measured.nondecreasing, "nondecreasing");
  check(declared.convex, measured.convex, "convex");
  check(declared.concave, measured.concave, "concave");
  check(declared.three_convex, measured.three_convex, "three_convex");
  check(declared.three_concave, measured.three_concave, "three_concave");
  check(declared.vanishes_at_zero, measured.vanishes_at_zero, "vanishes_at_zero");
  return out;
}

struct ScalarFunction::Memo {
  std::mutex mutex;
  std::optional<ShapeFlags> self;
  std::map<double, ShapeFlags> composites;
};

ScalarFunction::ScalarFunction(std::string id, Eval eval, ShapeFlags declared, Interval domain,
                               std::vector<NamedParam> params, Eval derivative)
    : id_(std::move(id)),
      eval_(std::make_shared<const Eval>(std::move(eval))),
      declared_(declared),
      domain_(domain),
      params_(std::move(params)),
      derivative_(std::move(derivative)),
      memo_(std::make_shared<Memo>()) {}

double ScalarFunction::slope_at(double x) const {
  if (derivative_) return derivative_(x);
  const double h = 1e-6 * std::max(1.0, std::abs(x));
  const auto& f = *eval_;
  if (x - h < domain_.lo) return (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h);
  if (x + h > domain_.hi) return (3.0 * f(x) - 4.0 * f(x - h) + f(x - 2.0 * h)) / (2.0 * h);
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

ShapeFlags ScalarFunction::measured() const {
  {
    std::lock_guard lock(memo_->mutex);
    if (memo_->self) return *memo_->self;
  }
  const ShapeFlags flags = audit_shape(*this);
  std::lock_guard lock(memo_->mutex);
  memo_->self = flags;
  return flags;
}

ShapeFlags ScalarFunction::measured_composite(double alpha) const {
  {
    std::lock_guard lock(memo_->mutex);
    if (auto it = memo_->composites.find(alpha); it != memo_->composites.end()) return it->second;
  }
  const ShapeFlags flags = audit_shape(compose_power(*this, alpha));
  std::lock_guard lock(memo_->mutex);
  memo_->composites.emplace(alpha, flags);
  return flags;
}

namespace {

constexpr Interval kDefaultDomain{0.0, 100.0};
constexpr Interval kExpDomain{0.0, 10.0};

double parse_param(const std::string& id, const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::UnknownFunction, "bad parameter in '" + id + "'");
  }
  if (used != text.size() || !std::isfinite(value))
    throw Error(ErrorCode::UnknownFunction, "bad parameter in '" + id + "'");
  return value;
}

ShapeFlags power_flags(double alpha) {
  ShapeFlags s;
  s.nonnegative = true;
  s.nondecreasing = true;
  s.vanishes_at_zero = true;
  s.convex = alpha >= 1.0;
  s.concave = alpha <= 1.0;
  s.three_convex = alpha <= 1.0 || alpha >= 2.0;
  s.three_concave = alpha >= 1.0 && alpha <= 2.0;
  return s;
}

// Flags of x ↦ (1+x)^alpha − 1.
ShapeFlags shifted_power_flags(double alpha) {
  ShapeFlags s = power_flags(alpha);
  s.nonnegative = true;
  return s;
}

ShapeFlags flags(std::initializer_list<bool ShapeFlags::*> on) {
  ShapeFlags s;
  for (auto member : on) s.*member = true;
  return s;
}

using SF = ShapeFlags;

}  // namespace

ScalarFunction make_function(const std::string& id) {
  const auto colon = id.find(':');
  const std::string name = id.substr(0, colon);
  const bool has_param = colon != std::string::npos;
  auto param = [&]() {
    if (!has_param) throw Error(ErrorCode::UnknownFunction, "'" + name + "' needs a parameter");
    return parse_param(id, id.substr(colon + 1));
  };
  auto no_param = [&]() {
    if (has_param) throw Error(ErrorCode::UnknownFunction, "'" + name + "' takes no parameter");
  };

  if (name == "identity") {
    no_param();
    return ScalarFunction(id, [](double x) { return x; }, power_flags(1.0), kDefaultDomain, {},
                          [](double) { return 1.0; });
  }
  if (name == "sqrt") {
    no_param();
    return ScalarFunction(id, [](double x) { return std::sqrt(x); }, power_flags(0.5), kDefaultDomain);
  }
  if (name == "pow") {
    const double a = param();
    if (a <= 0.0) throw Error(ErrorCode::UnknownFunction, "pow exponent must be positive");
    // x^a with 0^a = 0; exact for the integer exponents used in tests.
    auto eval = [a](double x) {
      if (a == 1.0) return x;
      if (a == 2.0) return x * x;
      if (a == 3.0) return x * x * x;
      return x == 0.0 ? 0.0 : std::pow(x, a);
    };
    auto deriv = [a](double x) { return a == 1.0 ? 1.0 : (x == 0.0 ? (a > 1.0 ? 0.0 : HUGE_VAL) : a * std::pow(x, a - 1.0)); };
    return ScalarFunction(id, eval, power_flags(a), kDefaultDomain, {{"alpha", a}}, deriv);
  }
  if (name == "log1p") {
    no_param();
    return ScalarFunction(id, [](double x) { return std::log1p(x); }, power_flags(0.5), kDefaultDomain, {},
                          [](double x) { return 1.0 / (1.0 + x); });
  }
  if (name == "xlog1p") {
    no_param();
    return ScalarFunction(
        id, [](double x) { return x * std::log1p(x); }, power_flags(1.5), kDefaultDomain, {},
        [](double x) { return std::log1p(x) + x / (1.0 + x); });
  }
  if (name == "logcosh") {
    no_param();
    // log1p(2 sinh²(x/2)) near 0, x + log1p(e^{−2x}) − log 2 for large x.
    auto eval = [](double x) {
      if (std::abs(x) < 1.0) {
        const double s = std::sinh(0.5 * x);
        return std::log1p(2.0 * s * s);
      }
      return std::abs(x) + std::log1p(std::exp(-2.0 * std::abs(x))) - std::log(2.0);
    };
    return ScalarFunction(
        id, eval, power_flags(1.5),
        kDefaultDomain, {}, [](double x) { return std::tanh(x); });
  }
  if (name == "sqshift") {
    const double a = param();
    if (a <= 0.0) throw Error(ErrorCode::UnknownFunction, "sqshift needs alpha > 0");
    // (1 + a x²)^{1/2} − 1 written without cancellation.
    auto eval = [a](double x) {
      const double s = a * x * x;
      return s / (std::sqrt(1.0 + s) + 1.0);
    };
    auto deriv = [a](double x) { return a * x / std::sqrt(1.0 + a * x * x); };
    return ScalarFunction(id, eval, power_flags(1.5), kDefaultDomain, {{"alpha", a}}, deriv);
  }
  if (name == "exp_neg") {
    no_param();
    return ScalarFunction(id, [](double x) { return std::exp(-x); },
                          flags({&SF::nonnegative, &SF::convex, &SF::three_concave}), kDefaultDomain, {},
                          [](double x) { return -std::exp(-x); });
  }
  if (name == "inv1p") {
    no_param();
    return ScalarFunction(id, [](double x) { return 1.0 / (1.0 + x); },
                          flags({&SF::nonnegative, &SF::convex, &SF::three_concave}), kDefaultDomain, {},
                          [](double x) { return -1.0 / ((1.0 + x) * (1.0 + x)); });
  }
  if (name == "xfrac") {
    const double r = param();
    if (r <= 0.0) throw Error(ErrorCode::UnknownFunction, "xfrac needs r > 0");
    return ScalarFunction(id, [r](double x) { return x / (x + r); }, power_flags(0.5), kDefaultDomain,
                          {{"r", r}}, [r](double x) { return r / ((x + r) * (x + r)); });
  }
  if (name == "one_minus_exp") {
    const double t = param();
    if (t <= 0.0) throw Error(ErrorCode::UnknownFunction, "one_minus_exp needs t > 0");
    return ScalarFunction(id, [t](double x) { return -std::expm1(-t * x); }, power_flags(0.5), kDefaultDomain,
                          {{"t", t}}, [t](double x) { return t * std::exp(-t * x); });
  }
  if (name == "neg_xlogx") {
    no_param();
    return ScalarFunction(id, [](double x) { return x == 0.0 ? 0.0 : -x * std::log(x); },
                          flags({&SF::concave, &SF::three_convex, &SF::vanishes_at_zero}), kDefaultDomain);
  }
  if (name == "pow_shift") {
    const double a = param();
    if (a <= 0.0) throw Error(ErrorCode::UnknownFunction, "pow_shift needs alpha > 0");
    return ScalarFunction(
        id, [a](double x) { return std::expm1(a * std::log1p(x)); }, shifted_power_flags(a), kDefaultDomain,
        {{"alpha", a}}, [a](double x) { return a * std::pow(1.0 + x, a - 1.0); });
  }
  if (name == "exp") {
    no_param();
    return ScalarFunction(id, [](double x) { return std::exp(x); },
                          flags({&SF::nonnegative, &SF::nondecreasing, &SF::convex, &SF::three_convex}), kExpDomain,
                          {}, [](double x) { return std::exp(x); });
  }
  if (name == "expm1") {
    no_param();
    return ScalarFunction(id, [](double x) { return std::expm1(x); },
                          flags({&SF::nonnegative, &SF::nondecreasing, &SF::convex, &SF::three_convex,
                                 &SF::vanishes_at_zero}),
                          kExpDomain, {}, [](double x) { return std::exp(x); });
  }
  if (name == "expm1_minus_x") {
    no_param();
    // e^x − 1 − x; series near 0 avoids cancellation.
    auto eval = [](double x) {
      if (std::abs(x) < 1e-3) return x * x / 2.0 + x * x * x / 6.0 + x * x * x * x / 24.0;
      return std::expm1(x) - x;
    };
    return ScalarFunction(id, eval,
                          flags({&SF::nonnegative, &SF::nondecreasing, &SF::convex, &SF::three_convex,
                                 &SF::vanishes_at_zero}),
                          kExpDomain, {}, [](double x) { return std::expm1(x); });
  }
  if (name == "sinh") {
    no_param();
    return ScalarFunction(id, [](double x) { return std::sinh(x); },
                          flags({&SF::nonnegative, &SF::nondecreasing, &SF::convex, &SF::three_convex,
                                 &SF::vanishes_at_zero}),
                          kExpDomain, {}, [](double x) { return std::cosh(x); });
  }
  if (name == "cosh") {
    no_param();
    return ScalarFunction(id, [](double x) { return std::cosh(x); },
                          flags({&SF::nonnegative, &SF::nondecreasing, &SF::convex, &SF::three_convex}), kExpDomain,
                          {}, [](double x) { return std::sinh(x); });
  }
  throw Error(ErrorCode::UnknownFunction, "unknown function id '" + id + "'");
}

std::vector<std::string> catalog_ids() {
  return {"identity",        "sqrt",      "pow:<alpha>",       "log1p",         "xlog1p", "logcosh",
          "sqshift:<alpha>", "exp_neg",   "inv1p",             "xfrac:<r>",     "one_minus_exp:<t>",
          "neg_xlogx",       "pow_shift:<alpha>", "exp",       "expm1",         "expm1_minus_x",
          "sinh",            "cosh"};
}

bool is_completely_monotone(const ScalarFunction& f) { return f.id() == "exp_neg" || f.id() == "inv1p"; }

ScalarFunction compose_power(const ScalarFunction& f, double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::OutOfRange, "compose_power needs alpha > 0");
  const Interval src = f.domain();
  // x^alpha must stay inside f's domain.
  const double hi = std::min(std::pow(src.hi, 1.0 / alpha), 1e8);
  const double lo = src.lo <= 0.0 ? 0.0 : std::pow(src.lo, 1.0 / alpha);

  const ShapeFlags fd = f.declared();
  ShapeFlags declared;
  declared.nonnegative = fd.nonnegative;
  declared.vanishes_at_zero = fd.vanishes_at_zero;
  if (alpha <= 0.5) {
    if (fd.nondecreasing && fd.three_concave) {
      declared.nondecreasing = true;
      declared.concave = true;
    }
    if (fd.convex && fd.three_convex && f.slope_at(src.lo) <= 0.0) declared.convex = true;
  }

  std::ostringstream id;
  id << f.id() << "(x^" << alpha << ")";
  auto eval = [f, alpha](double x) { return f(x == 0.0 ? 0.0 : std::pow(x, alpha)); };
  return ScalarFunction(id.str(), eval, declared, Interval{lo, hi}, {{"alpha", alpha}});
}

ScalarFunction raise_power(const ScalarFunction& f, double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::OutOfRange, "raise_power needs alpha > 0");
  const ShapeFlags fd = f.declared();
  ShapeFlags declared;
  declared.nonnegative = fd.nonnegative;
  declared.vanishes_at_zero = fd.vanishes_at_zero;
  if (alpha <= 1.0 && fd.nonnegative && fd.nondecreasing && fd.concave && fd.three_convex) {
    declared.nondecreasing = true;
    declared.concave = true;
    declared.three_convex = true;
  }
  std::ostringstream id;
  id << "(" << f.id() << ")^" << alpha;
  auto eval = [f, alpha](double x) {
    const double v = f(x);
    return v <= 0.0 ? 0.0 : std::pow(v, alpha);
  };
  return ScalarFunction(id.str(), eval, declared, f.domain(), {{"alpha", alpha}});
}

ScalarFunction completely_monotone_shift(const ScalarFunction& f, double right_end, double slope) {
  if (!is_completely_monotone(f))
    throw Error(ErrorCode::PreconditionFailed, "'" + f.id() + "' is not a completely monotone catalog entry");
  if (!(right_end > 0.0)) throw Error(ErrorCode::DegenerateInterval, "right end must be positive");

  constexpr int kSlopeGrid = 257;
  double inf_slope = HUGE_VAL;
  for (int i = 0; i < kSlopeGrid; ++i)
    inf_slope = std::min(inf_slope, f.slope_at(right_end * i / (kSlopeGrid - 1)));
  if (slope < -inf_slope - 1e-12) {
    std::ostringstream msg;
    msg << "slope " << slope << " below required " << -inf_slope;
    throw Error(ErrorCode::SlopeTooSmall, msg.str());
  }

  ShapeFlags declared;
  declared.nonnegative = true;
  declared.nondecreasing = true;
  declared.convex = true;
  declared.three_concave = true;
  std::ostringstream id;
  id << f.id() << "+" << slope << "x";
  auto eval = [f, slope](double x) { return f(x) + slope * x; };
  return ScalarFunction(id.str(), eval, declared, Interval{0.0, right_end}, {{"slope", slope}});
}

}  // namespace ineqlab
