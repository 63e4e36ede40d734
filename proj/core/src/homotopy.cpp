#include "monovex/homotopy.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "monovex/arrangement.hpp"
#include "monovex/errors.hpp"

namespace monovex {

namespace {

void require_closed_nonempty(const SpanComplex& complex, const char* what) {
  if (complex.empty()) throw PreconditionError(std::string(what) + ": empty set");
  if (!complex.is_closed()) throw PreconditionError(std::string(what) + ": set must be closed");
}

// Cells of the lattice step * Z^n that meet some box of the closed complex.
CellSet cells_meeting(const SpanComplex& complex, const Dyadic& step) {
  const std::size_t n = complex.dim();
  CellSet cells(n);
  for (const auto& box : complex.boxes()) {
    Key lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = to_int64(ceil_ratio(box[i].lo(), step)) - 1;
      hi[i] = to_int64(floor_ratio(box[i].hi(), step));
    }
    Key k = lo;
    while (true) {
      cells.insert(k);
      std::size_t axis = n;
      while (axis-- > 0) {
        if (++k[axis] <= hi[axis]) break;
        k[axis] = lo[axis];
      }
      if (axis == static_cast<std::size_t>(-1)) break;
    }
  }
  return cells;
}

Point scaled_point(const Key& key, std::size_t offset, std::size_t n, const Dyadic& step) {
  Point p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = step * Dyadic(static_cast<long long>(key[offset + i]));
  return p;
}

Rational power_of_three(int k) {
  BigInt p = 1;
  for (int i = 0; i < k; ++i) p *= 3;
  return Rational(p);
}

std::string rational_str(const Rational& r) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) out << "/" << boost::multiprecision::denominator(r);
  return out.str();
}

}  // namespace

LatticeSample seed_boundary(const SpanComplex& complex, const Dyadic& delta) {
  require_closed_nonempty(complex, "seed_boundary");
  if (delta.sign() <= 0) throw PreconditionError("seed_boundary: delta must be positive");
  const std::size_t n = complex.dim();
  const Dyadic step = delta.half();
  CellSet x = cells_meeting(complex, step);
  CellSet t(1);
  t.insert(Key{0});
  std::vector<Dyadic> steps(2 * n, step);
  steps.push_back(Dyadic(1));
  LatticeSample sample{Lattice(steps), ExtensionDomain(std::vector<CellSet>{x, x, t}), {}};

  // lattice points of X
  std::vector<Key> vertices;
  {
    std::unordered_set<Key, KeyHash> seen;
    for (const auto& c : x.sorted()) {
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        Key v = c;
        for (std::size_t i = 0; i < n; ++i) v[i] += bits >> i & 1;
        if (seen.insert(v).second) vertices.push_back(v);
      }
    }
  }
  std::unordered_map<Key, Point, KeyHash> nearest;
  for (const auto& v : vertices) nearest.emplace(v, nearest_point(complex, scaled_point(v, 0, n, step)));
  for (const auto& a : vertices) {
    for (const auto& b : vertices) {
      for (std::int64_t s = 0; s <= 1; ++s) {
        Key k = a;
        k.insert(k.end(), b.begin(), b.end());
        k.push_back(s);
        sample.values.emplace(std::move(k), s == 0 ? nearest.at(a) : nearest.at(b));
      }
    }
  }
  return sample;
}

// ---------------------------------------------------------------- PathField

PathField::PathField(SpanComplex complex, Dyadic delta, int depth)
    : complex_(std::move(complex)), delta_(std::move(delta)) {
  require_closed_nonempty(complex_, "g_delta");
  if (delta_.sign() <= 0) throw PreconditionError("g_delta: delta must be positive");
  cell_ = delta_.half();
  const std::size_t n = complex_.dim();
  CellSet x = cells_meeting(complex_, cell_);
  CellSet t(1);
  t.insert(Key{0});
  std::vector<Dyadic> steps(2 * n, cell_);
  steps.push_back(Dyadic(1));

  auto nearest = std::make_shared<std::unordered_map<Key, Point, KeyHash>>();
  SpanComplex a = complex_;
  Dyadic step = cell_;
  ExtensionField::Seed seed = [nearest, a, step, n](const Key& k) -> Point {
    Key v(k.begin() + (k.back() == 0 ? 0 : static_cast<std::ptrdiff_t>(n)),
          k.begin() + (k.back() == 0 ? static_cast<std::ptrdiff_t>(n) : static_cast<std::ptrdiff_t>(2 * n)));
    auto it = nearest->find(v);
    if (it != nearest->end()) return it->second;
    Point p = nearest_point(a, scaled_point(v, 0, n, step));
    return nearest->emplace(std::move(v), std::move(p)).first->second;
  };
  field_ = std::make_unique<ExtensionField>(Lattice(steps), ExtensionDomain(std::vector<CellSet>{x, x, t}),
                                            std::move(seed), std::make_shared<const MonotoneRouter>(complex_),
                                            depth);
}

Key PathField::snap(const Point& x, const Point& y, const Dyadic& t) const {
  const std::size_t n = complex_.dim();
  const int d = field_->depth();
  const Dyadic fine = cell_.scaled(-d);
  Key k(2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    k[i] = to_int64(floor_ratio(x[i], fine));
    k[n + i] = to_int64(floor_ratio(y[i], fine));
  }
  k[2 * n] = to_int64(floor_ratio(t, Dyadic::pow2(-d)));
  return k;
}

Point PathField::operator()(const Point& x, const Point& y, const Dyadic& t) const {
  if (x.size() != complex_.dim() || y.size() != complex_.dim()) throw DimensionError("g_delta: dimension mismatch");
  if (!contains(complex_, x) || !contains(complex_, y)) throw PreconditionError("g_delta: arguments must lie in A");
  if (t.sign() < 0 || t > Dyadic(1)) throw PreconditionError("g_delta: t outside [0, 1]");
  return field_->value(snap(x, y, t));
}

std::size_t PathField::evaluations() const { return field_->evaluated(); }

PathField build_g_delta(const SpanComplex& complex, const Dyadic& delta, int depth) {
  return PathField(complex, delta, depth);
}

GDeltaAudit audit_g_delta(const PathField& g, const std::vector<Point>& points, int t_bits) {
  GDeltaAudit audit;
  const Dyadic& delta = g.delta();
  const long long steps = 1LL << t_bits;
  for (const auto& x : points) {
    for (const auto& y : points) {
      BoxRegion hull = BoxRegion::closed(x, y);
      for (long long j = 0; j <= steps; ++j) {
        Dyadic t = Dyadic(j).scaled(-t_bits);
        Point v = g(x, y, t);
        ++audit.samples;
        if (!contains(g.complex(), v)) ++audit.range_violations;
        Dyadic h = cheb_distance(v, hull).value;
        audit.max_hull = max(audit.max_hull, h);
        if (h > delta) ++audit.hull_violations;
        if (j == 0) {
          Dyadic d = cheb(x, v);
          audit.max_start = max(audit.max_start, d);
          if (d > delta) ++audit.start_violations;
        }
        if (j == steps) {
          Dyadic d = cheb(y, v);
          audit.max_end = max(audit.max_end, d);
          if (d > delta) ++audit.end_violations;
        }
      }
    }
  }
  return audit;
}

std::vector<Point> default_samples(const SpanComplex& complex) {
  std::vector<Point> out;
  Arrangement arr(complex);
  for (auto f : arr.members()) out.push_back(arr.representative(f));
  for (const auto& b : complex.boxes()) {
    for (auto& v : b.vertices()) {
      if (contains(complex, v)) out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ----------------------------------------------------------- Cantor schedule

Dyadic CantorSchedule::tail(int k) const { return delta0.scaled(-k); }

CantorSchedule cantor_schedule(int levels, const Dyadic& delta0) {
  if (levels < 1) throw PreconditionError("cantor_schedule: need at least one level");
  if (levels > 24) throw PreconditionError("cantor_schedule: at most 24 levels");
  if (delta0.sign() <= 0) throw PreconditionError("cantor_schedule: delta0 must be positive");
  CantorSchedule s;
  s.delta0 = delta0;
  for (int k = 1; k <= levels; ++k) {
    const Rational third = Rational(1) / power_of_three(k);
    std::vector<CantorInterval> level;
    const std::uint32_t choices = 1u << (k - 1);
    for (std::uint32_t bits = 0; bits < choices; ++bits) {
      Rational offset = 0;
      for (int j = 1; j <= k - 1; ++j) {
        if (bits >> (k - 1 - j) & 1) offset += Rational(2) / power_of_three(j);
      }
      level.push_back({third + offset, 2 * third + offset});
    }
    s.levels.push_back(std::move(level));
    s.deltas.push_back(delta0.scaled(-k));
  }
  return s;
}

// ----------------------------------------------------------------- homotopy

std::size_t HomotopyField::junction_violations() const {
  return static_cast<std::size_t>(
      std::count_if(junctions.begin(), junctions.end(), [](const JunctionDefect& j) { return j.defect > j.bound; }));
}

std::size_t HomotopyField::range_violations(const SpanComplex& complex) const {
  return static_cast<std::size_t>(std::count_if(samples.begin(), samples.end(),
                                                [&](const HomotopySample& s) { return !contains(complex, s.value); }));
}

std::size_t HomotopyField::endpoint_violations() const {
  std::size_t bad = 0;
  for (const auto& s : samples) {
    if (s.t == 0 && s.value != points[s.point]) ++bad;
    if (s.t == 1 && s.value != base) ++bad;
  }
  return bad;
}

HomotopyField cantor_homotopy(const SpanComplex& complex, const Point& y, const CantorSchedule& schedule,
                              const HomotopyParams& params) {
  require_closed_nonempty(complex, "cantor_homotopy");
  if (y.size() != complex.dim()) throw DimensionError("cantor_homotopy: base point dimension mismatch");
  if (!contains(complex, y)) throw PreconditionError("cantor_homotopy: base point " + y.str() + " not in A");
  if (params.lambda_bits < 0 || params.lambda_bits > 20) throw PreconditionError("cantor_homotopy: bad lambda_bits");

  HomotopyField out;
  out.base = y;
  out.schedule = schedule;
  out.points = params.points.empty() ? default_samples(complex) : params.points;
  for (const auto& x : out.points) {
    if (x.size() != complex.dim()) throw DimensionError("cantor_homotopy: sample dimension mismatch");
    if (!contains(complex, x)) throw PreconditionError("cantor_homotopy: sample " + x.str() + " not in A");
  }

  std::vector<std::unique_ptr<PathField>> g;
  for (const auto& d : schedule.deltas) g.push_back(std::make_unique<PathField>(complex, d, params.extension_depth));

  const long long steps = 1LL << params.lambda_bits;
  for (std::size_t p = 0; p < out.points.size(); ++p) {
    const Point& x = out.points[p];
    std::map<Rational, Point> ends{{Rational(0), x}, {Rational(1), y}};
    out.samples.push_back({p, Rational(0), x});
    out.samples.push_back({p, Rational(1), y});
    for (int k = 1; k <= schedule.depth(); ++k) {
      const Rational third = Rational(1) / power_of_three(k);
      const PathField& gk = *g[static_cast<std::size_t>(k - 1)];
      const auto& level = schedule.levels[static_cast<std::size_t>(k - 1)];
      for (std::size_t idx = 0; idx < level.size(); ++idx) {
        const auto& iv = level[idx];
        const Point left = ends.at(iv.lo - third);
        const Point right = ends.at(iv.hi + third);
        for (long long j = 0; j <= steps; ++j) {
          Dyadic lambda = Dyadic(j).scaled(-params.lambda_bits);
          Point v = gk(left, right, lambda);
          Rational t = iv.lo + lambda.to_rational() * (iv.hi - iv.lo);
          if (j == 0) {
            out.junctions.push_back({k, idx, false, p, cheb(v, left), schedule.deltas[k - 1]});
            ends.emplace(iv.lo, v);
          }
          if (j == steps) {
            out.junctions.push_back({k, idx, true, p, cheb(v, right), schedule.deltas[k - 1]});
            ends.emplace(iv.hi, v);
          }
          out.samples.push_back({p, std::move(t), std::move(v)});
        }
      }
    }
  }
  std::stable_sort(out.samples.begin(), out.samples.end(), [](const HomotopySample& a, const HomotopySample& b) {
    if (a.point != b.point) return a.point < b.point;
    return a.t < b.t;
  });
  return out;
}

HomotopyField contract_to_point(const SpanComplex& complex, const Point& x0, int levels, const Dyadic& delta0,
                                const HomotopyParams& params) {
  return cantor_homotopy(complex, x0, cantor_schedule(levels, delta0), params);
}

std::string homotopy_csv(const HomotopyField& field) {
  std::ostringstream out;
  out.precision(17);
  const std::size_t n = field.base.size();
  out << "point,t,t_exact";
  for (std::size_t i = 0; i < n; ++i) out << ",x" << i + 1;
  for (std::size_t i = 0; i < n; ++i) out << ",phi" << i + 1;
  out << "\n";
  for (const auto& s : field.samples) {
    out << s.point << "," << s.t.convert_to<double>() << "," << rational_str(s.t);
    for (const auto& c : field.points[s.point]) out << "," << c.to_double();
    for (const auto& c : s.value) out << "," << c.to_double();
    out << "\n";
  }
  return out.str();
}

std::vector<std::vector<Point>> homotopy_trajectories(const HomotopyField& field) {
  std::vector<std::vector<Point>> out(field.points.size());
  for (const auto& s : field.samples) out[s.point].push_back(s.value);
  return out;
}

}  // namespace monovex
