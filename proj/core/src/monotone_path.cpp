#include "monovex/monotone_path.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "monovex/errors.hpp"
#include "monovex/parallel.hpp"

namespace monovex {

namespace {

using Index = Arrangement::Index;

// Movement rules for a cell walk: axis i may step by dir[i] while its index
// stays inside [lo[i], hi[i]].
struct Frame {
  std::vector<int> dir;
  Index lo, hi;
};

// Calls visit(flat) for each member cell reachable in one step from `cell`.
// A step changes a nonempty set of axes by one, all from open to point cells
// (into a face) or all from point to open cells (out of a face).
template <class Visit>
void for_each_step(const Arrangement& arr, std::size_t flat, const Frame& frame, Visit&& visit) {
  const std::size_t n = arr.dim();
  Index c = arr.unflatten(flat);
  std::size_t odd[32], even[32];
  std::size_t n_odd = 0, n_even = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (frame.dir[i] == 0) continue;
    std::int64_t t = static_cast<std::int64_t>(c[i]) + frame.dir[i];
    if (t < frame.lo[i] || t > frame.hi[i]) continue;
    if (c[i] % 2) {
      odd[n_odd++] = i;
    } else {
      even[n_even++] = i;
    }
  }
  auto expand = [&](const std::size_t* axes, std::size_t count) {
    for (std::uint32_t mask = 1; mask < (1u << count); ++mask) {
      std::int64_t next = static_cast<std::int64_t>(flat);
      for (std::size_t j = 0; j < count; ++j) {
        if (mask >> j & 1) next += frame.dir[axes[j]] * static_cast<std::int64_t>(arr.stride(axes[j]));
      }
      if (arr.member(static_cast<std::size_t>(next))) visit(static_cast<std::size_t>(next));
    }
  };
  expand(odd, n_odd);
  expand(even, n_even);
}

// Visited marks reused across searches by bumping an epoch.
struct Marks {
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;

  void begin(std::size_t size) {
    if (stamp.size() < size) stamp.resize(size, 0);
    if (++epoch == std::numeric_limits<std::uint32_t>::max()) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
  }
  bool test_and_set(std::size_t f) {
    if (stamp[f] == epoch) return false;
    stamp[f] = epoch;
    return true;
  }
  bool test(std::size_t f) const { return stamp[f] == epoch; }
};

void flood(const Arrangement& arr, std::size_t start, const Frame& frame, Marks& marks,
           std::vector<std::size_t>& queue) {
  queue.clear();
  marks.test_and_set(start);
  queue.push_back(start);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for_each_step(arr, queue[head], frame, [&](std::size_t next) {
      if (marks.test_and_set(next)) queue.push_back(next);
    });
  }
}

bool monotone_sequence(const std::vector<Point>& w, std::size_t axis, int sign) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    auto c = w[k + 1][axis] <=> w[k][axis];
    if (sign == 0 && c != 0) return false;
    if (sign > 0 && c < 0) return false;
    if (sign < 0 && c > 0) return false;
  }
  return true;
}

// Bounds of {t in [0,1] : a + t (b - a) in box} as an interval with flags.
struct TRange {
  Rational lo, hi;
  bool lo_closed, hi_closed;
};

std::optional<TRange> segment_range(const Point& a, const Point& b, const BoxRegion& box) {
  TRange r{Rational(0), Rational(1), true, true};
  auto tighten_lo = [&](const Rational& v, bool closed) {
    if (v > r.lo) {
      r.lo = v;
      r.lo_closed = closed;
    } else if (v == r.lo) {
      r.lo_closed = r.lo_closed && closed;
    }
  };
  auto tighten_hi = [&](const Rational& v, bool closed) {
    if (v < r.hi) {
      r.hi = v;
      r.hi_closed = closed;
    } else if (v == r.hi) {
      r.hi_closed = r.hi_closed && closed;
    }
  };
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Interval& iv = box[i];
    Dyadic d = b[i] - a[i];
    if (d.is_zero()) {
      if (!iv.contains(a[i])) return std::nullopt;
      continue;
    }
    Rational rd = d.to_rational();
    Rational tlo = (iv.lo() - a[i]).to_rational() / rd;
    Rational thi = (iv.hi() - a[i]).to_rational() / rd;
    if (d.sign() > 0) {
      tighten_lo(tlo, iv.lo_closed());
      tighten_hi(thi, iv.hi_closed());
    } else {
      tighten_lo(thi, iv.hi_closed());
      tighten_hi(tlo, iv.lo_closed());
    }
  }
  if (r.hi < r.lo) return std::nullopt;
  if (r.hi == r.lo && !(r.lo_closed && r.hi_closed)) return std::nullopt;
  return r;
}

int sign_of(const Dyadic& d) { return d.sign(); }

std::vector<Point> drop_repeats(std::vector<Point> w) {
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

// Exact (b - a) * (u - x) / (y - x) + a when dyadic.
std::optional<Dyadic> affine_dyadic(const Dyadic& a, const Dyadic& b, const Dyadic& x, const Dyadic& y,
                                    const Dyadic& u) {
  Rational v = (b - a).to_rational() * (u - x).to_rational() / (y - x).to_rational() + a.to_rational();
  BigInt den = boost::multiprecision::denominator(v);
  unsigned e = boost::multiprecision::lsb(den);
  if (den != (BigInt(1) << e)) return std::nullopt;
  return Dyadic(boost::multiprecision::numerator(v), e);
}

}  // namespace

SignPattern SignPattern::between(const Point& x, const Point& y) {
  if (x.size() != y.size()) throw DimensionError("sign pattern: dimension mismatch");
  SignPattern s;
  s.signs.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s.signs.push_back(sign_of(y[i] - x[i]));
  return s;
}

MonotonePath MonotonePath::through(std::vector<Point> waypoints) {
  if (waypoints.empty()) throw PreconditionError("path needs at least one waypoint");
  MonotonePath p;
  p.direction = SignPattern::between(waypoints.front(), waypoints.back());
  p.waypoints = std::move(waypoints);
  return p;
}

bool segment_in_complex(const Point& a, const Point& b, const SpanComplex& complex) {
  if (a.size() != complex.dim() || b.size() != complex.dim()) {
    throw DimensionError("segment_in_complex: dimension mismatch");
  }
  if (a == b) return contains(complex, a);
  std::vector<TRange> ranges;
  for (const auto& box : complex.boxes()) {
    if (auto r = segment_range(a, b, box)) ranges.push_back(std::move(*r));
  }
  std::sort(ranges.begin(), ranges.end(), [](const TRange& l, const TRange& r) {
    if (l.lo != r.lo) return l.lo < r.lo;
    return l.lo_closed && !r.lo_closed;
  });
  // [0, reach) is covered; reach itself iff reach_closed
  Rational reach(0);
  bool reach_closed = false;
  for (const auto& r : ranges) {
    bool joins = r.lo < reach || (r.lo == reach && (reach_closed || r.lo_closed));
    if (!joins) return false;
    if (r.hi > reach) {
      reach = r.hi;
      reach_closed = r.hi_closed;
    } else if (r.hi == reach) {
      reach_closed = reach_closed || r.hi_closed;
    }
  }
  return reach == Rational(1) && reach_closed;
}

bool validate_monotone(const MonotonePath& path, const SpanComplex& complex) {
  const auto& w = path.waypoints;
  if (w.empty()) return false;
  const std::size_t n = complex.dim();
  if (path.direction.signs.size() != n) return false;
  for (const auto& p : w) {
    if (p.size() != n) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    int s = path.direction.signs[i];
    if (s != sign_of(w.back()[i] - w.front()[i])) return false;
    if (!monotone_sequence(w, i, s)) return false;
  }
  if (!contains(complex, w.front())) return false;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (!segment_in_complex(w[k], w[k + 1], complex)) return false;
  }
  return true;
}

// ----------------------------------------------------------- MonotoneRouter

MonotoneRouter::MonotoneRouter(SpanComplex complex)
    : complex_(std::move(complex)), arrangement_(complex_) {}

std::optional<std::vector<std::size_t>> MonotoneRouter::cell_walk(std::size_t from, std::size_t to) const {
  const Arrangement& arr = arrangement_;
  const std::size_t n = arr.dim();
  Index a = arr.unflatten(from);
  Index b = arr.unflatten(to);
  Frame forward{std::vector<int>(n), Index(n), Index(n)};
  for (std::size_t i = 0; i < n; ++i) {
    forward.dir[i] = a[i] < b[i] ? 1 : (a[i] > b[i] ? -1 : 0);
    forward.lo[i] = std::min(a[i], b[i]);
    forward.hi[i] = std::max(a[i], b[i]);
  }
  Marks reach, back;
  std::vector<std::size_t> queue;
  reach.begin(arr.cell_count());
  flood(arr, from, forward, reach, queue);
  if (!reach.test(to)) return std::nullopt;

  // cells that can still reach `to`: reverse steps from `to` inside the
  // forward-reachable set
  Frame backward = forward;
  for (auto& d : backward.dir) d = -d;
  back.begin(arr.cell_count());
  queue.clear();
  back.test_and_set(to);
  queue.push_back(to);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for_each_step(arr, queue[head], backward, [&](std::size_t prev) {
      if (reach.test(prev) && back.test_and_set(prev)) queue.push_back(prev);
    });
  }

  std::vector<std::size_t> walk{from};
  std::size_t cur = from;
  while (cur != to) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for_each_step(arr, cur, forward, [&](std::size_t next) {
      if (back.test(next) && next < best) best = next;
    });
    if (best == std::numeric_limits<std::size_t>::max()) {
      throw InvariantError("cell walk lost its way to the target");
    }
    walk.push_back(best);
    cur = best;
  }
  return walk;
}

MonotonePath MonotoneRouter::realize(const std::vector<std::size_t>& cells, const Point& x,
                                     const Point& y) const {
  const Arrangement& arr = arrangement_;
  const std::size_t n = arr.dim();
  if (cells.size() == 1) {
    if (x == y) return MonotonePath::through({x});
    return MonotonePath::through({x, y});
  }
  std::vector<Index> idx;
  idx.reserve(cells.size());
  for (auto f : cells) idx.push_back(arr.unflatten(f));
  const std::size_t last = cells.size() - 1;
  std::vector<Point> w(cells.size(), Point(n));
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t first_cell = idx.front()[i];
    const std::uint32_t last_cell = idx.back()[i];
    for (std::size_t t = 0; t <= last; ++t) {
      std::uint32_t c = idx[t][i];
      if (c % 2 == 0) {
        w[t][i] = arr.axis_representative(i, c);
      } else if (c == first_cell && c == last_cell) {
        w[t][i] = t == last ? y[i] : x[i];
      } else if (c == first_cell) {
        w[t][i] = x[i];
      } else if (c == last_cell) {
        w[t][i] = y[i];
      } else {
        w[t][i] = arr.axis_representative(i, c);
      }
    }
  }
  return MonotonePath::through(drop_repeats(std::move(w)));
}

std::optional<MonotonePath> MonotoneRouter::route(const Point& x, const Point& y) const {
  if (x.size() != complex_.dim() || y.size() != complex_.dim()) {
    throw DimensionError("monotone_reachable: dimension mismatch");
  }
  auto cx = arrangement_.locate(x);
  auto cy = arrangement_.locate(y);
  if (!cx || !arrangement_.member(*cx)) throw PreconditionError("monotone_reachable: start point " + x.str() + " not in complex");
  if (!cy || !arrangement_.member(*cy)) throw PreconditionError("monotone_reachable: end point " + y.str() + " not in complex");
  auto walk = cell_walk(*cx, *cy);
  if (!walk) return std::nullopt;
  return realize(*walk, x, y);
}

std::optional<MonotonePath> monotone_reachable(const SpanComplex& complex, const Point& x, const Point& y) {
  return MonotoneRouter(complex).route(x, y);
}

// -------------------------------------------------------------- is_monovex

MonovexVerdict is_monovex(const SpanComplex& complex) {
  const Arrangement arr(complex);
  const auto& members = arr.members();
  const std::size_t n = arr.dim();
  if (members.size() <= 1 || n == 0) return {};

  std::vector<Index> index;
  index.reserve(members.size());
  for (auto f : members) index.push_back(arr.unflatten(f));

  Frame base{std::vector<int>(n, 1), Index(n, 0), Index(n)};
  for (std::size_t i = 0; i < n; ++i) base.hi[i] = static_cast<std::uint32_t>(arr.axis_size(i) - 1);

  // A monotone walk from t to s is the reverse of one from s to t, so only
  // targets with t[0] >= s[0] are checked from s (axis 0 moves up).
  const std::size_t orthants = std::size_t{1} << (n - 1);
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  auto first_failure = [&](std::size_t s) -> std::size_t {
    thread_local Marks marks;
    thread_local std::vector<std::size_t> queue;
    const Index& src = index[s];
    std::size_t worst = kNone;
    for (std::size_t o = 0; o < orthants; ++o) {
      Frame frame = base;
      for (std::size_t i = 1; i < n; ++i) frame.dir[i] = (o >> (i - 1) & 1) ? -1 : 1;
      marks.begin(arr.cell_count());
      flood(arr, members[s], frame, marks, queue);
      for (std::size_t t = 0; t < members.size(); ++t) {
        if (t == s) continue;
        const Index& dst = index[t];
        if (dst[0] < src[0]) continue;
        std::size_t which = 0;
        for (std::size_t i = 1; i < n; ++i) {
          if (dst[i] < src[i]) which |= std::size_t{1} << (i - 1);
        }
        if (which != o) continue;
        if (!marks.test(members[t])) {
          worst = std::min(worst, t);
          break;
        }
      }
    }
    return worst;
  };

  const std::size_t block = std::max<std::size_t>(64, 16 * worker_count());
  std::vector<std::size_t> failure(members.size(), kNone);
  for (std::size_t start = 0; start < members.size(); start += block) {
    std::size_t stop = std::min(members.size(), start + block);
    parallel_for(stop - start, [&](std::size_t k) { failure[start + k] = first_failure(start + k); });
    for (std::size_t s = start; s < stop; ++s) {
      if (failure[s] != kNone) {
        MonovexVerdict v;
        v.is_monovex = false;
        v.witness = std::make_pair(arr.representative(members[s]), arr.representative(members[failure[s]]));
        return v;
      }
    }
  }
  return {};
}

// ------------------------------------------------------------- Minkowski lift

MonotonePath lift_minkowski_path(const MonotonePath& gamma_prime, const Point& a_prime,
                                 const Point& b_prime, const BoxRegion& r) {
  const auto& u = gamma_prime.waypoints;
  if (u.empty()) throw PreconditionError("lift_minkowski_path: empty path");
  const std::size_t n = r.ambient_dim();
  if (a_prime.size() != n || b_prime.size() != n || u.front().size() != n) {
    throw DimensionError("lift_minkowski_path: dimension mismatch");
  }
  if (!r.contains(a_prime) || !r.contains(b_prime)) {
    throw PreconditionError("lift_minkowski_path: endpoint offset not in the box");
  }
  if (u.size() == 1) {
    if (a_prime == b_prime) return MonotonePath::through({u.front() + a_prime});
    return MonotonePath::through({u.front() + a_prime, u.front() + b_prime});
  }
  const std::size_t m = u.size() - 1;
  const Point& x = u.front();
  const Point& y = u.back();
  std::vector<Point> out(u.size(), Point(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Dyadic& a = a_prime[i];
    const Dyadic& b = b_prime[i];
    std::vector<Dyadic> d(u.size());
    if (x[i] == y[i]) {
      // frozen coordinate of gamma': the offset ramps from a to b on a
      // dyadic schedule
      int e = 0;
      while ((std::size_t{1} << e) < m) ++e;
      for (std::size_t k = 0; k < m; ++k) {
        d[k] = a + (b - a) * Dyadic(static_cast<long long>(k)).scaled(-e);
      }
      d[m] = b;
    } else {
      // the diagonal affine offset D gamma'_i + v when it stays dyadic
      bool exact = true;
      for (std::size_t k = 0; k <= m && exact; ++k) {
        auto v = affine_dyadic(a, b, x[i], y[i], u[k][i]);
        if (v) {
          d[k] = std::move(*v);
        } else {
          exact = false;
        }
      }
      if (!exact) {
        // Distribute |b - a| over the steps of gamma'_i so that u + d stays
        // monotone: against gamma' no step may exceed |du| unless the offset
        // dominates, in which case every step absorbs |du| and the surplus
        // goes first.
        const int su = sign_of(y[i] - x[i]);
        const int sd = sign_of(b - a);
        Dyadic total = abs(b - a);
        Dyadic capacity = abs(y[i] - x[i]);
        std::vector<Dyadic> alloc(m);
        if (sd == 0) {
          // nothing to distribute
        } else if (sd == su) {
          Dyadic remaining = total;
          for (std::size_t k = 0; k < m; ++k) {
            alloc[k] = min(abs(u[k + 1][i] - u[k][i]), remaining);
            remaining -= alloc[k];
          }
          alloc[m - 1] += remaining;
        } else if (capacity > total) {
          Dyadic remaining = total;
          for (std::size_t k = 0; k < m; ++k) {
            alloc[k] = min(abs(u[k + 1][i] - u[k][i]), remaining);
            remaining -= alloc[k];
          }
        } else {
          for (std::size_t k = 0; k < m; ++k) alloc[k] = abs(u[k + 1][i] - u[k][i]);
          alloc[0] += total - capacity;
        }
        d[0] = a;
        for (std::size_t k = 0; k < m; ++k) d[k + 1] = sd >= 0 ? d[k] + alloc[k] : d[k] - alloc[k];
      }
    }
    for (std::size_t k = 0; k <= m; ++k) out[k][i] = u[k][i] + d[k];
  }
  return MonotonePath::through(drop_repeats(std::move(out)));
}

}  // namespace monovex
