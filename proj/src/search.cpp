#include "ineqlab/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "ineqlab/error.hpp"
#include "ineqlab/inequalities.hpp"
#include "ineqlab/majorization.hpp"
#include "ineqlab/sampling.hpp"

namespace ineqlab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Operand generators --------------------------------------------------------

std::vector<double> axpy(const std::vector<double>& base, double t, const std::vector<double>& dir) {
  std::vector<double> out(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) out[i] = base[i] + t * dir[i];
  return out;
}

// Near-degenerate draws put the points close to one line, with a small
// transverse jitter; elsewhere points are i.i.d. in the drawn style.
Operands draw_points(Rng& rng, std::size_t n, std::size_t count) {
  const StyleDraw st = draw_style(rng);
  Operands out;
  if (st.near_degenerate) {
    const auto base = draw_coords(rng, n, DrawStyle::uniform);
    const auto dir = draw_coords(rng, n, DrawStyle::uniform);
    const double jitter = std::pow(10.0, -rng.uniform(1.0, 6.0));
    for (std::size_t k = 0; k < count; ++k) {
      auto p = axpy(base, rng.uniform(-1.0, 1.0), dir);
      const auto noise = draw_coords(rng, n, DrawStyle::uniform);
      for (std::size_t i = 0; i < n; ++i) p[i] += jitter * noise[i];
      out.push_back(std::move(p));
    }
    return out;
  }
  for (std::size_t k = 0; k < count; ++k) out.push_back(draw_coords(rng, n, st.style));
  return out;
}

Operands draw_cone_points(Rng& rng, std::size_t n, std::size_t count) {
  const StyleDraw st = draw_style(rng);
  Operands out;
  if (st.near_degenerate) {
    const auto base = draw_cone_coords(rng, n, DrawStyle::uniform);
    const double jitter = std::pow(10.0, -rng.uniform(1.0, 6.0));
    for (std::size_t k = 0; k < count; ++k) {
      auto p = base;
      const double c = rng.uniform();
      const auto noise = draw_cone_coords(rng, n, DrawStyle::uniform);
      for (std::size_t i = 0; i < n; ++i) p[i] = c * p[i] + jitter * noise[i];
      out.push_back(std::move(p));
    }
    return out;
  }
  for (std::size_t k = 0; k < count; ++k) out.push_back(draw_cone_coords(rng, n, st.style));
  return out;
}

// Signed triples; the degenerate draws are exactly collinear.
Operands draw_signed_triple(Rng& rng, std::size_t n) {
  const StyleDraw st = draw_style(rng);
  if (!st.near_degenerate) return draw_points(rng, n, 3);
  const auto dir = draw_coords(rng, n, DrawStyle::uniform);
  Operands out;
  for (int k = 0; k < 3; ++k) out.push_back(axpy(std::vector<double>(n, 0.0), rng.uniform(-1.0, 1.0), dir));
  return out;
}

Matrix symmetric_copy(const Matrix& a) {
  Matrix s = a;
  for (Eigen::Index i = 0; i < s.rows(); ++i)
    for (Eigen::Index j = i + 1; j < s.cols(); ++j) s(j, i) = s(i, j);
  return s;
}

// G Gᵀ / m with G of moderate size; degenerate draws zero some columns of G.
std::vector<double> draw_psd(Rng& rng, std::size_t m, bool degenerate) {
  const auto idx = static_cast<Eigen::Index>(m);
  Matrix g(idx, idx);
  const double scale = rng.uniform(0.2, 1.5);
  for (Eigen::Index i = 0; i < idx; ++i)
    for (Eigen::Index j = 0; j < idx; ++j) g(i, j) = scale * rng.uniform(-1.0, 1.0);
  if (degenerate) {
    const auto zeroed = 1 + rng.below(m);
    for (std::uint64_t k = 0; k < zeroed; ++k) g.col(static_cast<Eigen::Index>(rng.below(m))).setZero();
  }
  return flatten(symmetric_copy(g * g.transpose() / static_cast<double>(m)));
}

Operands draw_psd_triple(Rng& rng, std::size_t m) {
  const StyleDraw st = draw_style(rng);
  Operands out;
  for (int k = 0; k < 3; ++k) out.push_back(draw_psd(rng, m, st.near_degenerate && rng.uniform() < 0.5));
  return out;
}

// Pairs meeting the Schatten-class gate of Hanner's inequality at index p.
Operands draw_hanner_pair(Rng& rng, const Space& s) {
  if (s.kind() != SpaceKind::schatten || s.p() == 2.0 || s.p() <= 4.0 / 3.0 || s.p() >= 4.0)
    return draw_points(rng, s.coords(), 2);
  const std::size_t m = s.dim();
  auto a = draw_psd(rng, m, false);
  auto b = draw_psd(rng, m, rng.uniform() < 0.2);
  if (s.p() > 2.0) return {a, b};
  std::vector<double> u(a.size()), v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    u[i] = a[i] + b[i];
    v[i] = a[i] - b[i];
  }
  return {u, v};
}

// (x, y) admissible for the truncated majorization of the given kind. x is
// obtained from y padded with zeros by T-transforms, then shrunk (convex
// case) or given extra mass on its smallest entry (concave case).
Operands draw_majorization_pair(Rng& rng, std::size_t max_n, TruncatedCase which) {
  const std::size_t n = 2 + rng.below(std::max<std::size_t>(max_n, 2) - 1);
  const std::size_t m = 2 + rng.below(n - 1);
  const StyleDraw st = draw_style(rng);
  auto y = draw_cone_coords(rng, m, st.style);
  std::vector<double> x = y;
  x.resize(n, 0.0);
  const auto moves = 1 + rng.below(2 * n);
  for (std::uint64_t t = 0; t < moves && !st.near_degenerate; ++t) {
    const auto i = rng.below(n);
    auto j = rng.below(n - 1);
    if (j >= i) ++j;
    const double lam = rng.uniform();
    const double a = x[i], b = x[j];
    x[i] = lam * a + (1.0 - lam) * b;
    x[j] = lam * b + (1.0 - lam) * a;
  }
  for (std::size_t i = n - 1; i > 0; --i) std::swap(x[i], x[rng.below(i + 1)]);

  auto admissible = [&](const std::vector<double>& cand) {
    const Str sx(cand), sy(y);
    return which == TruncatedCase::convex ? truncated_convex_applicable(sx, sy).holds
                                          : truncated_concave_applicable(sx, sy).holds;
  };
  std::vector<double> cand = x;
  if (which == TruncatedCase::convex) {
    if (rng.uniform() < 0.5) {
      const double s = rng.uniform(0.5, 1.0);
      for (double& c : cand) c *= s;
    }
  } else {
    std::vector<double> sorted = x;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const auto low = static_cast<std::size_t>(std::min_element(x.begin(), x.end()) - x.begin());
    cand[low] += rng.uniform() * (sorted[m - 2] - x[low]);
  }
  if (admissible(cand)) return {cand, y};
  if (admissible(x)) return {x, y};
  y.resize(n, 0.0);
  return {y, std::vector<double>(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(m))};
}

// Registry --------------------------------------------------------------------

enum class Gen { points, cone, signed_triple, psd, scalar_pair, hanner_pair, tconvex, tconcave };

using Evaluator = std::function<InequalityReport(const Space&, const ScalarFunction*, const Params&, const Operands&)>;

struct CheckDef {
  std::string id;
  std::string space;
  std::string f;  // empty: no scalar function
  Gen gen;
  std::size_t arity;
  bool open_problem;
  Evaluator eval;
};

std::optional<int> int_param(const Params& p, const std::string& key) {
  const auto it = p.find(key);
  if (it == p.end()) return std::nullopt;
  return static_cast<int>(std::lround(it->second));
}

double real_param(const Params& p, const std::string& key, double fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

void require_euclidean(const Space& s) {
  if (s.kind() == SpaceKind::schatten || s.p() != 2.0)
    throw Error(ErrorCode::NotInnerProduct, "Euclidean check needs euclid:<dim>, got " + s.spec());
}

PsdMatrix psd(const Space& s, const std::vector<double>& coords) { return PsdMatrix(as_matrix(coords, s.dim())); }

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> d;
    auto add = [&](std::string id, std::string space, std::string f, Gen gen, std::size_t arity, Evaluator eval,
                   bool open = false) {
      d.push_back({std::move(id), std::move(space), std::move(f), gen, arity, open, std::move(eval)});
    };
    add("quadruple_norm", "lp:1:5", "", Gen::points, 4,
        [](const Space& s, const ScalarFunction*, const Params&, const Operands& o) {
          return quadruple_norm(s, o[0], o[1], o[2], o[3]);
        });
    add("schotz_inner", "euclid:3", "xlog1p", Gen::points, 4,
        [](const Space& s, const ScalarFunction* f, const Params&, const Operands& o) {
          return schotz_inner(*f, s, o[0], o[1], o[2], o[3]);
        });
    add("functional_parallelogram", "lp:1.5:4", "pow:1.5", Gen::points, 2,
        [](const Space& s, const ScalarFunction* f, const Params& p, const Operands& o) {
          return functional_parallelogram(*f, s, o[0], o[1], int_param(p, "N"));
        });
    add("four_point_functional", "lp:1:3", "xlog1p", Gen::points, 3,
        [](const Space& s, const ScalarFunction* f, const Params& p, const Operands& o) {
          return four_point_functional(*f, s, o[0], o[1], o[2], int_param(p, "N"));
        });
    add("schotz_banach", "lp:3:4", "pow:1.3", Gen::points, 4,
        [](const Space& s, const ScalarFunction* f, const Params& p, const Operands& o) {
          return schotz_banach(*f, s, o[0], o[1], o[2], o[3], int_param(p, "N"));
        });
    add("alfa_power", "lp:1.5:3", "", Gen::points, 2,
        [](const Space& s, const ScalarFunction*, const Params& p, const Operands& o) {
          return alfa_power(s, o[0], o[1], real_param(p, "alpha", 1.5), int_param(p, "N"));
        });
    add("gen_parallelogram", "lp:1.5:8", "", Gen::points, 2,
        [](const Space& s, const ScalarFunction*, const Params&, const Operands& o) {
          return gen_parallelogram(s, o[0], o[1]);
        });
    add("clarkson_scalar", "euclid:1", "pow:1.5", Gen::scalar_pair, 1,
        [](const Space&, const ScalarFunction* f, const Params&, const Operands& o) {
          if (o[0].size() != 2) throw Error(ErrorCode::DimensionMismatch, "clarkson_scalar takes one pair (a, b)");
          return clarkson_scalar(*f, o[0][0], o[0][1]);
        });
    add("hanner_classic", "lp:1.5:6", "", Gen::hanner_pair, 2,
        [](const Space& s, const ScalarFunction*, const Params&, const Operands& o) {
          return hanner_classic(s, o[0], o[1]);
        });
    add("hanner_functional", "lp:1.5:5", "pow:1.2", Gen::hanner_pair, 2,
        [](const Space& s, const ScalarFunction* f, const Params&, const Operands& o) {
          return hanner_functional(*f, s, o[0], o[1]);
        });
    add("easy_clarkson", "lp:1.5:6", "", Gen::points, 2,
        [](const Space& s, const ScalarFunction*, const Params&, const Operands& o) {
          return easy_clarkson(s, o[0], o[1]);
        });
    add("lp_quadruple", "lp:1.5:4", "pow:1.5", Gen::points, 4,
        [](const Space& s, const ScalarFunction* f, const Params&, const Operands& o) {
          return lp_quadruple(*f, s, o[0], o[1], o[2], o[3]);
        });
    add("two_unif_convexity_classic", "lp:1.5:6", "", Gen::points, 2,
        [](const Space& s, const ScalarFunction*, const Params&, const Operands& o) {
          return two_unif_convexity_classic(s, o[0], o[1]);
        });
    add("two_unif_convexity_functional", "lp:1.5:6", "pow:2", Gen::points, 2,
        [](const Space& s, const ScalarFunction* f, const Params&, const Operands& o) {
          return two_unif_convexity_functional(*f, s, o[0], o[1]);
        });
    add("two_unif_quadruple_p_ge_2", "lp:3:4", "identity", Gen::points, 4,
        [](const Space& s, const ScalarFunction* f, const Params&, const Operands& o) {
          return two_unif_quadruple_p_ge_2(*f, s, o[0], o[1], o[2], o[3]);
        });
    add("two_unif_translated", "lp:3:4", "pow:1.5", Gen::points, 4,
        [](const Space& s, const ScalarFunction* f, const Params& p, const Operands& o) {
          return two_unif_translated(*f, s, o[0], o[1], o[2], o[3], real_param(p, "shared", 0.0) != 0.0);
        });
    add("zhang_det", "schatten:2:3", "", Gen::psd, 3,
        [](const Space& s, const ScalarFunction*, const Params&, const Operands& o) {
          return zhang_det(psd(s, o[0]), psd(s, o[1]), psd(s, o[2]));
        });
    add("zhang_functional", "schatten:2:3", "pow:2", Gen::psd, 3,
        [](const Space& s, const ScalarFunction* f, const Params&, const Operands& o) {
          return zhang_functional(*f, psd(s, o[0]), psd(s, o[1]), psd(s, o[2]));
        });
    add(
        "zhang_strengthened", "schatten:2:2", "pow:2", Gen::psd, 3,
        [](const Space& s, const ScalarFunction* f, const Params&, const Operands& o) {
          return zhang_strengthened(*f, psd(s, o[0]), psd(s, o[1]), psd(s, o[2]));
        },
        true);
    add("serre_det", "schatten:2:2", "", Gen::psd, 3,
        [](const Space& s, const ScalarFunction*, const Params&, const Operands& o) {
          return serre_det(psd(s, o[0]), psd(s, o[1]), psd(s, o[2]));
        });
    add("serre_functional", "schatten:2:2", "sqrt", Gen::psd, 3,
        [](const Space& s, const ScalarFunction* f, const Params&, const Operands& o) {
          return serre_functional(*f, psd(s, o[0]), psd(s, o[1]), psd(s, o[2]));
        });
    add("frechet_identity", "euclid:6", "", Gen::signed_triple, 3,
        [](const Space& s, const ScalarFunction*, const Params&, const Operands& o) {
          require_euclidean(s);
          return frechet_identity(o[0], o[1], o[2]);
        });
    add("hornich_hlawka", "euclid:3", "", Gen::signed_triple, 3,
        [](const Space& s, const ScalarFunction*, const Params& p, const Operands& o) {
          require_euclidean(s);
          return hornich_hlawka(o[0], o[1], o[2], int_param(p, "n_power").value_or(0));
        });
    add("frechet_functional", "euclid:3", "sqrt", Gen::cone, 3,
        [](const Space& s, const ScalarFunction* f, const Params&, const Operands& o) {
          require_euclidean(s);
          return frechet_functional(*f, o[0], o[1], o[2], ConeMode::required);
        });
    add("popoviciu_vec", "euclid:3", "pow:2", Gen::cone, 3,
        [](const Space& s, const ScalarFunction* f, const Params&, const Operands& o) {
          require_euclidean(s);
          return popoviciu_vec(*f, o[0], o[1], o[2], ConeMode::required);
        });
    add("strong_superadditivity", "euclid:4", "", Gen::cone, 3,
        [](const Space& s, const ScalarFunction*, const Params&, const Operands& o) {
          require_euclidean(s);
          return strong_superadditivity(o[0], o[1], o[2]);
        });
    add(
        "frechet_functional_signed", "euclid:2", "sqrt", Gen::signed_triple, 3,
        [](const Space& s, const ScalarFunction* f, const Params&, const Operands& o) {
          require_euclidean(s);
          return frechet_functional(*f, o[0], o[1], o[2], ConeMode::lifted);
        },
        true);
    add(
        "popoviciu_vec_signed", "euclid:2", "pow:2", Gen::signed_triple, 3,
        [](const Space& s, const ScalarFunction* f, const Params&, const Operands& o) {
          require_euclidean(s);
          return popoviciu_vec(*f, o[0], o[1], o[2], ConeMode::lifted);
        },
        true);
    add(
        "revhh_signed", "euclid:2", "sqrt", Gen::signed_triple, 3,
        [](const Space& s, const ScalarFunction* f, const Params&, const Operands& o) {
          require_euclidean(s);
          auto r = frechet_functional(*f, o[0], o[1], o[2], ConeMode::lifted);
          r.check_id = "revhh_signed";
          return r;
        },
        true);
    add("truncated_convex", "euclid:6", "pow:2", Gen::tconvex, 2,
        [](const Space&, const ScalarFunction* f, const Params&, const Operands& o) {
          return truncated_convex_inequality(*f, Str(o[0]), Str(o[1]));
        });
    add("truncated_concave", "euclid:6", "sqrt", Gen::tconcave, 2,
        [](const Space&, const ScalarFunction* f, const Params&, const Operands& o) {
          return truncated_concave_inequality(*f, Str(o[0]), Str(o[1]));
        });
    return d;
  }();
  return defs;
}

std::string resolve_alias(const std::string& id) {
  if (id == "hanner") return "hanner_classic";
  if (id == "zhang") return "zhang_det";
  if (id == "revhh") return "revhh_signed";
  if (id == "serre") return "serre_det";
  return id;
}

const CheckDef& find_def(const std::string& id) {
  const std::string key = resolve_alias(id);
  for (const auto& d : registry())
    if (d.id == key) return d;
  throw Error(ErrorCode::UnknownCheck, "no check named '" + id + "'");
}

// Probe accumulation ------------------------------------------------------------

struct Tally {
  double best = kInf;
  std::uint64_t best_index = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t probes = 0, violations = 0, inconclusive = 0, errors = 0;
  std::uint64_t error_index = std::numeric_limits<std::uint64_t>::max();
  std::string error;

  void add(std::uint64_t i, const BoundCheck& check, std::uint64_t seed) {
    ++probes;
    try {
      const InequalityReport r = check.evaluate(probe_operands(check, seed, i));
      if (std::isnan(r.margin)) throw Error(ErrorCode::OutOfRange, "margin is NaN");
      if (r.inconclusive) {
        ++inconclusive;
        return;
      }
      if (!r.holds) ++violations;
      if (r.margin < best || (r.margin == best && i < best_index)) {
        best = r.margin;
        best_index = i;
      }
    } catch (const std::exception& e) {
      ++errors;
      if (i < error_index) {
        error_index = i;
        error = e.what();
      }
    }
  }

  void merge(const Tally& o) {
    probes += o.probes;
    violations += o.violations;
    inconclusive += o.inconclusive;
    errors += o.errors;
    if (o.best < best || (o.best == best && o.best_index < best_index)) {
      best = o.best;
      best_index = o.best_index;
    }
    if (o.error_index < error_index) {
      error_index = o.error_index;
      error = o.error;
    }
  }
};

SearchResult finish(const BoundCheck& check, const Tally& t, std::uint64_t seed) {
  SearchResult r;
  r.check_id = check.check_id;
  r.space = check.space.spec();
  r.f_id = check.f_spec();
  r.seed = seed;
  r.open_problem = check.open_problem;
  r.probes = t.probes;
  r.violations = t.violations;
  r.inconclusive = t.inconclusive;
  r.errors = t.errors;
  r.first_error = t.error;
  r.worst_margin = t.best;
  if (t.best_index != std::numeric_limits<std::uint64_t>::max()) {
    r.worst_index = t.best_index;
    r.witness = probe_operands(check, seed, t.best_index);
    r.worst_report = check.evaluate(r.witness);
  }
  return r;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string row_label(const ProbeConfig& c) {
  std::ostringstream out;
  out << c.check_id << "@" << c.space;
  if (!c.f_id.empty()) out << "/" << c.f_id;
  for (const auto& [k, v] : c.params) out << "," << k << "=" << v;
  return out.str();
}

}  // namespace

BoundCheck bind_check(const ProbeConfig& config) {
  const CheckDef& def = find_def(config.check_id);
  const Space space = Space::parse(config.space.empty() ? def.space : config.space);
  std::optional<ScalarFunction> f;
  if (!def.f.empty()) {
    const std::string fid = def.id == "revhh_signed" || config.f_id.empty() ? def.f : config.f_id;
    f = make_function(fid);
  }
  BoundCheck b{def.id, space, f, config.params, def.open_problem, 0, {}, {}};
  if (def.gen == Gen::psd) b.symmetric_order = space.dim();

  const std::size_t coords = space.coords();
  const std::size_t arity = def.arity;
  switch (def.gen) {
    case Gen::points: b.draw = [coords, arity](Rng& r) { return draw_points(r, coords, arity); }; break;
    case Gen::cone: b.draw = [coords, arity](Rng& r) { return draw_cone_points(r, coords, arity); }; break;
    case Gen::signed_triple: b.draw = [coords](Rng& r) { return draw_signed_triple(r, coords); }; break;
    case Gen::psd: {
      const std::size_t m = space.dim();
      b.draw = [m](Rng& r) { return draw_psd_triple(r, m); };
      break;
    }
    case Gen::scalar_pair:
      b.draw = [](Rng& r) { return Operands{draw_coords(r, 2, draw_style(r).style)}; };
      break;
    case Gen::hanner_pair: b.draw = [space](Rng& r) { return draw_hanner_pair(r, space); }; break;
    case Gen::tconvex:
      b.draw = [coords](Rng& r) { return draw_majorization_pair(r, coords, TruncatedCase::convex); };
      break;
    case Gen::tconcave:
      b.draw = [coords](Rng& r) { return draw_majorization_pair(r, coords, TruncatedCase::concave); };
      break;
  }
  const Evaluator eval = def.eval;
  const Params params = config.params;
  b.evaluate = [eval, space, f, params](const Operands& o) {
    return eval(space, f ? &*f : nullptr, params, o);
  };
  return b;
}

std::vector<std::string> registered_checks() {
  std::vector<std::string> ids;
  for (const auto& d : registry()) ids.push_back(d.id);
  return ids;
}

bool is_open_problem(const std::string& check_id) { return find_def(check_id).open_problem; }

Operands probe_operands(const BoundCheck& check, std::uint64_t seed, std::uint64_t index) {
  Rng rng(probe_seed(seed, index));
  return check.draw(rng);
}

SearchResult probe_serial(const BoundCheck& check, std::uint64_t trials, std::uint64_t seed) {
  Tally t;
  for (std::uint64_t i = 0; i < trials; ++i) t.add(i, check, seed);
  return finish(check, t, seed);
}

SearchResult probe_parallel(const BoundCheck& check, std::uint64_t trials, std::uint64_t seed) {
  Tally total;
  const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel
  {
    Tally local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) local.add(static_cast<std::uint64_t>(i), check, seed);
#pragma omp critical
    total.merge(local);
  }
  return finish(check, total, seed);
}

SearchResult probe(const ProbeConfig& config, std::uint64_t trials, std::uint64_t seed, bool reference) {
  const BoundCheck check = bind_check(config);
  // Audits run once, before any worker thread asks for them.
  if (check.f) check.f->measured();
  return reference ? probe_serial(check, trials, seed) : probe_parallel(check, trials, seed);
}

SearchResult refine(const BoundCheck& check, const SearchResult& result, std::uint64_t budget) {
  if (budget == 0 || result.witness.empty()) return result;

  auto score = [&](const Operands& o) {
    try {
      const auto r = check.evaluate(o);
      return r.inconclusive || std::isnan(r.margin) ? kInf : r.margin;
    } catch (const std::exception&) {
      return kInf;
    }
  };

  // Free coordinates: (operand, i, j); for symmetric matrices j ≥ i only.
  struct Coord {
    std::size_t op, a, b;
  };
  std::vector<Coord> free;
  const std::size_t m = check.symmetric_order;
  for (std::size_t k = 0; k < result.witness.size(); ++k) {
    if (m > 0) {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) free.push_back({k, i * m + j, j * m + i});
    } else {
      for (std::size_t i = 0; i < result.witness[k].size(); ++i) free.push_back({k, i, i});
    }
  }

  Operands ops = result.witness;
  double best = score(ops);
  double scale = 0.0;
  for (const auto& v : ops)
    for (double c : v) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) scale = 1.0;

  std::uint64_t evals = 0;
  double step = 0.1 * scale;
  while (step >= 1e-6 && evals < budget) {
    bool improved = false;
    for (const Coord& c : free) {
      for (double sign : {1.0, -1.0}) {
        if (evals >= budget) break;
        Operands cand = ops;
        cand[c.op][c.a] += sign * step;
        if (c.b != c.a) cand[c.op][c.b] = cand[c.op][c.a];
        const double s = score(cand);
        ++evals;
        if (s < best) {
          best = s;
          ops = std::move(cand);
          improved = true;
          break;
        }
      }
      if (improved || evals >= budget) break;
    }
    if (!improved) step *= 0.5;
  }

  SearchResult out = result;
  out.refined = true;
  out.refine_evaluations = evals;
  if (best < result.worst_margin) {
    out.worst_margin = best;
    out.witness = ops;
    out.worst_report = check.evaluate(ops);
  }
  return out;
}

ZhangFalsifier falsify_strengthened_zhang() {
  Matrix a = Matrix::Identity(2, 2);
  Matrix b(2, 2);
  b << 1, 0, 0, 2;
  Matrix c(2, 2);
  c << 1, 1, 1, 2;
  const PsdMatrix pa(a), pb(b), pc(c);
  const ScalarFunction sq = make_function("pow:2");
  const InequalityReport full = zhang_functional(sq, pa, pb, pc);
  const Slack& first = full.links.front();
  InequalityReport original = make_report("zhang_functional", first.lhs, first.rhs, full.hypothesis_audit);
  original.inputs = full.inputs;
  ZhangFalsifier z{zhang_strengthened(sq, pa, pb, pc), std::move(original)};
  return z;
}

InequalityReport falsify_two_unif_p_ge_2() {
  const std::vector<double> x{1.0, 0.0}, y{0.0, 1.0};
  return two_unif_convexity_functional(make_function("pow:2"), Space::lp(3.0, 2), x, y);
}

SearchResult probe_open_problem(const std::string& which, std::uint64_t trials, std::uint64_t seed, bool reference) {
  if (!is_open_problem(which) || resolve_alias(which) == "zhang_strengthened")
    throw Error(ErrorCode::UnknownCheck, "'" + which + "' is not an open-problem probe");
  return probe(ProbeConfig{which, "euclid:2", "", {}}, trials, seed, reference);
}

std::vector<SuiteRow> acceptance_suite(std::uint64_t trials) {
  std::vector<ProbeConfig> c{
      {"quadruple_norm", "lp:1:5", "", {}},
      {"quadruple_norm", "lp:2:3", "", {}},
      {"schotz_inner", "euclid:3", "xlog1p", {}},
      {"functional_parallelogram", "lp:1.5:4", "pow:1.5", {}},
      {"functional_parallelogram", "euclid:2", "identity", {}},
      {"four_point_functional", "lp:1:3", "xlog1p", {}},
      {"schotz_banach", "lp:3:4", "pow:1.3", {}},
      {"alfa_power", "lp:1.5:3", "", {{"alpha", 1.5}}},
      {"alfa_power", "lp:3:4", "", {{"alpha", 1.0}}},
      {"clarkson_scalar", "euclid:1", "pow:1.5", {}},
      {"clarkson_scalar", "euclid:1", "xlog1p", {}},
      {"hanner_classic", "lp:1.5:6", "", {}},
      {"hanner_classic", "lp:3:6", "", {}},
      {"hanner_classic", "schatten:1.2:3", "", {}},
      {"hanner_classic", "schatten:1.5:3", "", {}},
      {"hanner_classic", "schatten:3:3", "", {}},
      {"hanner_functional", "lp:1.5:5", "pow:1.2", {}},
      {"hanner_functional", "lp:3:5", "pow:3", {}},
      {"easy_clarkson", "lp:1.2:6", "", {}},
      {"easy_clarkson", "lp:1.5:6", "", {}},
      {"easy_clarkson", "lp:3:6", "", {}},
      {"easy_clarkson", "lp:4:6", "", {}},
      {"easy_clarkson", "schatten:1.2:3", "", {}},
      {"easy_clarkson", "schatten:1.5:3", "", {}},
      {"easy_clarkson", "schatten:3:3", "", {}},
      {"easy_clarkson", "schatten:4:3", "", {}},
      {"lp_quadruple", "lp:1.5:4", "pow:1.5", {}},
      {"lp_quadruple", "lp:3:4", "pow:2", {}},
      {"two_unif_convexity_classic", "lp:1.5:6", "", {}},
      {"two_unif_convexity_classic", "lp:3:6", "", {}},
      {"two_unif_convexity_classic", "schatten:1.5:3", "", {}},
      {"two_unif_convexity_functional", "lp:1.5:6", "pow:2", {}},
      {"two_unif_convexity_functional", "lp:3:6", "pow:1.5", {}},
      {"two_unif_quadruple_p_ge_2", "lp:3:4", "identity", {}},
      {"two_unif_quadruple_p_ge_2", "lp:4:4", "xlog1p", {}},
      {"zhang_det", "schatten:2:3", "", {}},
      {"zhang_functional", "schatten:2:3", "pow:2", {}},
      {"zhang_functional", "schatten:2:3", "expm1", {}},
      {"frechet_identity", "euclid:6", "", {}},
      {"hornich_hlawka", "euclid:3", "", {{"n_power", 0}}},
      {"hornich_hlawka", "euclid:3", "", {{"n_power", 1}}},
      {"hornich_hlawka", "euclid:3", "", {{"n_power", 2}}},
      {"frechet_functional", "euclid:3", "sqrt", {}},
      {"frechet_functional", "euclid:3", "log1p", {}},
      {"popoviciu_vec", "euclid:3", "pow:2", {}},
      {"serre_det", "schatten:2:2", "", {}},
      {"serre_functional", "schatten:2:2", "sqrt", {}},
      {"strong_superadditivity", "euclid:4", "", {}},
      {"truncated_convex", "euclid:6", "pow:2", {}},
      {"truncated_concave", "euclid:6", "sqrt", {}},
      {"gen_parallelogram", "lp:1:8", "", {}},
      {"gen_parallelogram", "lp:1.5:8", "", {}},
      {"gen_parallelogram", "lp:2:8", "", {}},
      {"gen_parallelogram", "lp:3:8", "", {}},
      {"gen_parallelogram", "lp:inf:8", "", {}},
  };
  std::vector<SuiteRow> rows;
  for (auto& cfg : c) rows.push_back({row_label(cfg), std::move(cfg), trials});
  return rows;
}

std::vector<SuiteRowResult> run_suite(const std::vector<SuiteRow>& rows, std::uint64_t seed, bool reference) {
  std::vector<SuiteRowResult> out;
  for (const auto& row : rows) {
    const auto start = std::chrono::steady_clock::now();
    SearchResult r = probe(row.config, row.trials, seed ^ fnv1a(row.label), reference);
    const auto stop = std::chrono::steady_clock::now();
    const double ms = reference ? 0.0 : std::chrono::duration<double, std::milli>(stop - start).count();
    out.push_back({row, std::move(r), ms});
  }
  return out;
}

}  // namespace ineqlab
