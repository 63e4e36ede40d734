#include "monovex/retraction.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "monovex/errors.hpp"
#include "monovex/parallel.hpp"

namespace monovex {

namespace {

Dyadic times(long long k, const Dyadic& x) { return Dyadic(k) * x; }

Dyadic clamp(const Dyadic& v, const Dyadic& lo, const Dyadic& hi) { return max(lo, min(v, hi)); }

bool share_cell_1d(const Dyadic& a, const Dyadic& b, const Dyadic& eta) {
  const Dyadic& lo = min(a, b);
  const Dyadic& hi = max(a, b);
  return floor_ratio(lo, eta) >= ceil_ratio(hi, eta) - 1;
}

SpanComplex inflate(const SpanComplex& f1, const Dyadic& eta) {
  return minkowski_box(f1, open_ball(Point(f1.dim()), eta));
}

// Merged projection of the intervals is one connected piece.
bool connected(std::vector<Interval> iv) {
  std::sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) {
    if (a.lo() != b.lo()) return a.lo() < b.lo();
    return a.lo_closed() && !b.lo_closed();
  });
  Dyadic hi = iv.front().hi();
  bool hi_closed = iv.front().hi_closed();
  for (std::size_t k = 1; k < iv.size(); ++k) {
    const auto& next = iv[k];
    if (next.lo() > hi || (next.lo() == hi && !next.lo_closed() && !hi_closed)) return false;
    if (next.hi() > hi || (next.hi() == hi && next.hi_closed())) {
      hi = next.hi();
      hi_closed = next.hi_closed();
    }
  }
  return true;
}

}  // namespace

Dyadic eta_for(const Dyadic& d) {
  if (d.sign() <= 0) throw PreconditionError("eta: distance must be positive");
  int k = 0;
  while (times(100, Dyadic::pow2(-k)) > d) ++k;
  return Dyadic::pow2(-k);
}

SpanComplex nearest_point_map(const SpanComplex& a, const Point& x) {
  if (!a.is_closed()) throw PreconditionError("nearest_point_map: A must be closed");
  if (a.empty()) throw PreconditionError("nearest_point_map: A is empty");
  if (contains(a, x)) throw PreconditionError("nearest_point_map: x lies in A");
  Dyadic d = cheb_distance(x, a).value;
  return intersect_box(a, closed_ball(x, d));
}

SpanComplex snap_to_cells(const SpanComplex& f, const Dyadic& eta) {
  SpanComplex out(f.dim());
  for (const auto& b : f.boxes()) {
    std::vector<Interval> iv;
    for (const auto& side : b.intervals()) {
      Dyadic lo = eta * Dyadic(BigInt(ceil_ratio(side.lo(), eta) - 1), 0);
      Dyadic hi = eta * Dyadic(BigInt(floor_ratio(side.hi(), eta) + 1), 0);
      iv.push_back(Interval::closed(lo, hi));
    }
    out.add(BoxRegion(std::move(iv)));
  }
  return out.deduplicated();
}

ThickenedMap thicken(const SpanComplex& a, const Point& x) {
  ThickenedMap m;
  m.f = nearest_point_map(a, x);
  m.d = cheb_distance(x, a).value;
  m.eta = eta_for(m.d);
  m.f1 = snap_to_cells(m.f, m.eta);
  return m;
}

bool share_cell(const Point& p, const Point& q, const Dyadic& eta) {
  if (p.size() != q.size()) throw DimensionError("share_cell: dimension mismatch");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!share_cell_1d(p[i], q[i], eta)) return false;
  }
  return true;
}

MonotonePath repair_path(const SpanComplex& f1, const Dyadic& eta, const Point& y, const Point& z,
                         const Point& y_prime, const Point& z_prime, const MonotonePath& gamma_prime) {
  const std::size_t n = f1.dim();
  for (const auto* p : {&y, &z, &y_prime, &z_prime}) {
    if (p->size() != n) throw DimensionError("repair_path: dimension mismatch");
  }
  if (gamma_prime.waypoints.empty() || gamma_prime.front() != y_prime || gamma_prime.back() != z_prime) {
    throw PreconditionError("repair_path: gamma' must run from y' to z'");
  }
  if (!share_cell(y, y_prime, eta) || !share_cell(z, z_prime, eta)) {
    throw PreconditionError("repair_path: y, y' (or z, z') do not share an eta-cell");
  }
  if (!contains(f1, y) || !contains(f1, z)) throw PreconditionError("repair_path: endpoints must lie in F1");

  std::vector<bool> straight(n);
  std::vector<Dyadic> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    straight[i] = share_cell_1d(y[i], z[i], eta);
    lo[i] = min(y[i], z[i]);
    hi[i] = max(y[i], z[i]);
  }

  const auto& w = gamma_prime.waypoints;
  const std::size_t m = w.size() - 1;
  int bits = 0;
  while ((std::size_t{1} << bits) < std::max<std::size_t>(m, 1)) ++bits;

  std::vector<Point> out{y};
  auto push = [&](const Point& p) {
    if (out.back() != p) out.push_back(p);
  };
  for (std::size_t k = 0; k <= m; ++k) {
    Dyadic t = (k == m) ? Dyadic(1) : Dyadic(BigInt(k), static_cast<std::uint32_t>(bits));
    Point c(n);
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = straight[i] ? y[i] + t * (z[i] - y[i]) : clamp(w[k][i], lo[i], hi[i]);
    }
    push(c);
  }
  push(z);

  auto path = MonotonePath::through(std::move(out));
  if (!validate_monotone(path, f1)) throw InvariantError("repair_path: repaired path failed validation");
  return path;
}

std::vector<Point> ball_probes(const Point& x, const Dyadic& radius, std::size_t count) {
  const std::size_t n = x.size();
  std::vector<Point> out;
  if (count == 0 || n == 0) return out;

  // a full grid of offsets k * radius / 2^s with |k| < 2^s
  int s = 0;
  auto grid_size = [n](int s) {
    std::size_t side = (std::size_t{2} << s) - 1, total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= side;
    return total;
  };
  while (s < 20 && grid_size(s + 1) <= count) ++s;
  const std::int64_t half = std::int64_t{1} << s;
  std::vector<std::int64_t> k(n, 1 - half);
  const Dyadic unit = radius.scaled(-s);
  while (true) {
    Point p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = x[i] + unit * Dyadic(static_cast<long long>(k[i]));
    out.push_back(std::move(p));
    std::size_t axis = n;
    while (axis-- > 0) {
      if (++k[axis] < half) break;
      k[axis] = 1 - half;
    }
    if (axis == static_cast<std::size_t>(-1)) break;
  }

  std::mt19937_64 rng(PointHash{}(x) ^ count);
  constexpr std::int64_t kBits = 20;
  std::uniform_int_distribution<std::int64_t> offset(-(std::int64_t{1} << kBits) + 1, (std::int64_t{1} << kBits) - 1);
  const Dyadic fine = radius.scaled(-static_cast<int>(kBits));
  while (out.size() < count) {
    Point p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = x[i] + fine * Dyadic(static_cast<long long>(offset(rng)));
    out.push_back(std::move(p));
  }
  return out;
}

LocalRadius local_radius(const SpanComplex& a, const Point& x, std::size_t probes, int max_halvings) {
  if (max_halvings < 1) throw PreconditionError("local_radius: need at least one candidate");
  const ThickenedMap base = thicken(a, x);
  LocalRadius result;
  for (int j = 1; j <= max_halvings && probes > 0; ++j) {
    Dyadic delta = base.eta.scaled(-j);
    bool ok = true;
    for (const auto& y : ball_probes(x, delta, probes)) {
      ++result.probes_checked;
      if (contains(a, y)) {
        ok = false;
        break;
      }
      ThickenedMap t = thicken(a, y);
      if (t.eta > base.eta || !is_subset(t.f1, base.f1)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      result.delta = delta;
      result.verified = true;
      return result;
    }
  }
  result.delta = base.eta.scaled(-max_halvings);
  result.verified = false;
  return result;
}

QueryEntry query(const SpanComplex& a, const Point& y, std::size_t probes) {
  QueryEntry e;
  e.y = y;
  e.map = thicken(a, y);
  auto r = local_radius(a, y, probes);
  e.scales.d = e.map.d;
  e.scales.eps = e.map.d.to_rational() / 10;
  e.scales.eta = e.map.eta;
  e.scales.delta = r.delta;
  e.scales.delta_verified = r.verified;
  e.scales.probes_checked = r.probes_checked;
  return e;
}

Neighborhood neighborhood_G(const Point& x, const std::vector<QueryEntry>& sample) {
  if (std::none_of(sample.begin(), sample.end(), [&](const QueryEntry& e) { return e.y == x; })) {
    throw PreconditionError("neighborhood_G: x must belong to the sample set");
  }
  Neighborhood nb;
  nb.g = SpanComplex(x.size());
  for (const auto& e : sample) {
    if (times(2, cheb(x, e.y)) < e.scales.delta) nb.members.push_back(e);
  }
  for (const auto& e : nb.members) {
    SpanComplex inflated = inflate(e.map.f1, e.scales.eta);
    for (const auto& b : inflated.boxes()) nb.g.add(b);
  }
  nb.g = nb.g.deduplicated();
  for (std::size_t i = 0; i < nb.members.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.members.size(); ++j) {
      const auto& p = nb.members[i];
      const auto& q = nb.members[j];
      bool forward = p.scales.eta <= q.scales.eta && is_subset(p.map.f1, q.map.f1);
      bool backward = q.scales.eta <= p.scales.eta && is_subset(q.map.f1, p.map.f1);
      if (!forward && !backward) {
        nb.q_order_ok = false;
        nb.warnings.push_back("Q(x) order: F1 at " + p.y.str() + " and " + q.y.str() + " are not nested");
      }
    }
  }
  return nb;
}

Neighborhood neighborhood_G(const SpanComplex& a, const Point& x, const std::vector<Point>& sample,
                            std::size_t probes) {
  std::vector<QueryEntry> entries(sample.size());
  parallel_for(sample.size(), [&](std::size_t i) { entries[i] = query(a, sample[i], probes); });
  return neighborhood_G(x, entries);
}

Point select_g(const SpanComplex& g) {
  const std::size_t n = g.dim();
  if (g.empty()) throw InvariantError("select_g: empty set");
  std::vector<BoxRegion> boxes = g.boxes();
  Point out(n);
  for (std::size_t axis = 0; axis < n; ++axis) {
    std::vector<Interval> iv;
    for (const auto& b : boxes) iv.push_back(b[axis]);
    if (iv.empty()) throw InvariantError("select_g: empty slice on axis " + std::to_string(axis));
    if (!connected(iv)) throw InvariantError("select_g: projection on axis " + std::to_string(axis) + " is not an interval");
    Dyadic lo = iv.front().lo(), hi = iv.front().hi();
    for (const auto& s : iv) {
      lo = min(lo, s.lo());
      hi = max(hi, s.hi());
    }
    out[axis] = midpoint(lo, hi);
    std::vector<BoxRegion> slice;
    for (const auto& b : boxes) {
      if (b[axis].contains(out[axis])) slice.push_back(b);
    }
    boxes = std::move(slice);
  }
  if (boxes.empty()) throw InvariantError("select_g: selection left the set");
  return out;
}

std::vector<QueryEntry> step_sample(const SpanComplex& a, const Point& x, const RetractionParams& params) {
  std::vector<QueryEntry> sample{query(a, x, params.probes)};
  if (!params.stencil) return sample;
  const Dyadic step = sample.front().scales.delta.scaled(-2);
  std::vector<Point> around;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (int sign : {-1, 1}) {
      Point y = x;
      y[i] += sign < 0 ? -step : step;
      if (!contains(a, y)) around.push_back(std::move(y));
    }
  }
  std::vector<QueryEntry> extra(around.size());
  parallel_for(around.size(), [&](std::size_t i) { extra[i] = query(a, around[i], params.probes); });
  sample.insert(sample.end(), extra.begin(), extra.end());
  return sample;
}

StepAudit retraction_step(const SpanComplex& a, const Point& x, const RetractionParams& params) {
  auto sample = step_sample(a, x, params);
  Neighborhood nb = neighborhood_G(x, sample);
  const QueryEntry& self = sample.front();

  StepAudit s;
  s.x = x;
  s.g = select_g(nb.g);
  s.d = self.scales.d;
  s.d_next = cheb_distance(s.g, a).value;
  s.q_size = nb.members.size();
  s.delta_verified = std::all_of(nb.members.begin(), nb.members.end(),
                                 [](const QueryEntry& e) { return e.scales.delta_verified; });
  s.q_order_ok = nb.q_order_ok;
  s.g_in_G = contains(nb.g, s.g);
  s.f_in_G = is_subset(self.map.f, nb.g);
  const Dyadic four_d = times(4, s.d);
  s.G_in_ball = std::all_of(nb.g.boxes().begin(), nb.g.boxes().end(), [&](const BoxRegion& b) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (times(3, abs(b[i].lo() - x[i])) > four_d || times(3, abs(b[i].hi() - x[i])) > four_d) return false;
    }
    return true;
  });
  s.ball_ok = times(3, cheb(s.g, x)) <= four_d;
  s.decay_ok = times(9, s.d_next) <= s.d;

  for (const auto& e : nb.members) {
    if (!contains(inflate(e.map.f1, e.scales.eta), s.g)) continue;
    Point z = nearest_point(e.map.f, s.g);
    Dyadic gap = max(cheb(x, e.y), cheb(s.g, z));
    bool eps = times(10, gap) < e.scales.d;
    bool tenths = times(100, gap) < times(3, e.scales.d);
    if (tenths || (eps && !s.within_eps)) {
      s.within_eps = eps;
      s.within_three_tenths = tenths;
      s.witness_x = e.y;
      s.witness_z = z;
    }
    if (tenths) break;
  }
  return s;
}

std::size_t Trajectory::violations() const {
  std::size_t count = 0;
  for (const auto& s : steps) count += s.ok() ? 0 : 1;
  for (bool ok : decay_ok) count += ok ? 0 : 1;
  return count;
}

Trajectory iterate_retraction(const SpanComplex& a, const Point& x, std::size_t iterations,
                              const RetractionParams& params) {
  if (contains(a, x)) throw PreconditionError("iterate_retraction: x lies in A");
  Trajectory t;
  t.start = x;
  t.d0 = cheb_distance(x, a).value;
  t.points.push_back(x);
  t.distances.push_back(t.d0);
  t.decay_ok.push_back(true);
  Dyadic power(1);
  for (std::size_t k = 1; k <= iterations; ++k) {
    const Point& current = t.points.back();
    if (contains(a, current)) {
      t.reached_set = true;
      break;
    }
    StepAudit s = retraction_step(a, current, params);
    power = times(9, power);
    t.points.push_back(s.g);
    t.distances.push_back(s.d_next);
    t.decay_ok.push_back(s.d_next * power <= t.d0);
    t.steps.push_back(std::move(s));
  }
  if (!t.reached_set && contains(a, t.points.back())) t.reached_set = true;
  return t;
}

std::string decay_csv(const Trajectory& trajectory) {
  std::ostringstream out;
  out.precision(17);
  out << "k,distance,bound,ok\n";
  const double d0 = trajectory.d0.to_double();
  double scale = 1.0;
  for (std::size_t k = 0; k < trajectory.distances.size(); ++k) {
    out << k << "," << trajectory.distances[k].to_double() << "," << d0 / scale << ","
        << (trajectory.decay_ok[k] ? "true" : "false") << "\n";
    scale *= 9.0;
  }
  return out.str();
}

ContinuityEstimate measure_continuity(const SpanComplex& a, const Point& x, const Dyadic& radius, std::size_t count,
                                      const RetractionParams& params) {
  ContinuityEstimate est;
  const Point gx = retraction_step(a, x, params).g;
  std::vector<Point> probes;
  for (auto& p : ball_probes(x, radius, count + 1)) {
    if (p != x && !contains(a, p)) probes.push_back(std::move(p));
  }
  std::vector<double> ratios(probes.size(), 0.0);
  parallel_for(probes.size(), [&](std::size_t i) {
    Point gy = retraction_step(a, probes[i], params).g;
    ratios[i] = cheb(gx, gy).to_double() / cheb(x, probes[i]).to_double();
  });
  est.samples = probes.size();
  for (double r : ratios) est.modulus = std::max(est.modulus, r);
  return est;
}

}  // namespace monovex
