#include "monovex/rasterizer.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "monovex/errors.hpp"

namespace monovex {

namespace {

using i128 = __int128;

constexpr std::int64_t kMagnitude = std::int64_t{1} << 28;

// a * lambda + b * mu <= c
struct Constraint {
  i128 a, b, c;
};

class Scaler {
 public:
  void observe(const Dyadic& x) { exponent_ = std::max(exponent_, x.exponent()); }

  std::int64_t operator()(const Dyadic& x) const {
    BigInt v = x.mantissa() << (exponent_ - x.exponent());
    if (v >= kMagnitude || v <= -kMagnitude) {
      throw PreconditionError("rasterizer: coordinates too large or too fine for the exact test");
    }
    return v.convert_to<std::int64_t>();
  }

 private:
  std::uint32_t exponent_ = 0;
};

// Whether some (lambda, mu) in [0,1]^2 satisfies every constraint.
bool feasible(const std::vector<Constraint>& cs) {
  std::vector<Constraint> pos, neg, reduced;
  for (const auto& c : cs) {
    if (c.b > 0) {
      pos.push_back(c);
    } else if (c.b < 0) {
      neg.push_back(c);
    } else {
      reduced.push_back(c);
    }
  }
  for (const auto& p : pos) {
    for (const auto& q : neg) {
      reduced.push_back({-q.b * p.a + p.b * q.a, 0, -q.b * p.c + p.b * q.c});
    }
  }
  // lambda in [lo_num / lo_den, hi_num / hi_den]
  std::vector<std::pair<i128, i128>> lower, upper;
  for (const auto& c : reduced) {
    if (c.a == 0) {
      if (c.c < 0) return false;
    } else if (c.a > 0) {
      upper.push_back({c.c, c.a});
    } else {
      lower.push_back({-c.c, -c.a});
    }
  }
  for (const auto& l : lower) {
    for (const auto& u : upper) {
      if (l.first * u.second > u.first * l.second) return false;
    }
  }
  return true;
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

}  // namespace

void SegmentSet::add(Point a, Point b) {
  if (a.size() != b.size()) throw DimensionError("segment endpoints differ in dimension");
  if (segments.empty() && dim == 0) dim = a.size();
  if (a.size() != dim) throw DimensionError("segment dimension mismatch");
  segments.emplace_back(std::move(a), std::move(b));
}

VoxelGrid::VoxelGrid(Dyadic resolution, BoxRegion window) : h_(std::move(resolution)), window_(std::move(window)) {
  if (h_.sign() <= 0) throw PreconditionError("voxel resolution must be positive");
  if (!window_.is_closed()) throw PreconditionError("voxel window must be a closed box");
}

void VoxelGrid::insert(const Key& voxel) {
  if (voxel.size() != dim()) throw DimensionError("voxel dimension mismatch");
  set_.insert(voxel);
}

std::vector<Key> VoxelGrid::voxels() const {
  std::vector<Key> out(set_.begin(), set_.end());
  std::sort(out.begin(), out.end());
  return out;
}

BoxRegion VoxelGrid::voxel_box(const Key& voxel) const {
  std::vector<Interval> iv;
  for (auto k : voxel) {
    Dyadic lo = h_ * Dyadic(static_cast<long long>(k));
    iv.push_back(Interval::closed(lo, lo + h_));
  }
  return BoxRegion(std::move(iv));
}

VoxelGrid rasterize_minkowski(const SegmentSet& a, const SegmentSet& b, const Dyadic& h, const BoxRegion& window) {
  if (a.segments.empty() || b.segments.empty()) throw PreconditionError("rasterize_minkowski: empty segment set");
  const std::size_t n = window.ambient_dim();
  if (a.dim != n || b.dim != n) throw DimensionError("rasterize_minkowski: dimension mismatch");
  VoxelGrid grid(h, window);

  Scaler scale;
  scale.observe(h);
  for (const auto& iv : window.intervals()) {
    scale.observe(iv.lo());
    scale.observe(iv.hi());
  }
  for (const auto* set : {&a, &b}) {
    for (const auto& [p, q] : set->segments) {
      for (std::size_t i = 0; i < n; ++i) {
        scale.observe(p[i]);
        scale.observe(q[i]);
      }
    }
  }
  const i128 H = scale(h);
  std::vector<i128> wlo(n), whi(n);
  for (std::size_t i = 0; i < n; ++i) {
    wlo[i] = scale(window[i].lo());
    whi[i] = scale(window[i].hi());
  }

  for (const auto& [a0, a1] : a.segments) {
    for (const auto& [b0, b1] : b.segments) {
      std::vector<i128> p(n), u(n), v(n);
      Key lo(n), hi(n);
      bool empty = false;
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = scale(a0[i]) + scale(b0[i]);
        u[i] = scale(a1[i]) - scale(a0[i]);
        v[i] = scale(b1[i]) - scale(b0[i]);
        i128 mn = p[i] + std::min<i128>(u[i], 0) + std::min<i128>(v[i], 0);
        i128 mx = p[i] + std::max<i128>(u[i], 0) + std::max<i128>(v[i], 0);
        mn = std::max(mn, wlo[i]);
        mx = std::min(mx, whi[i]);
        if (mn > mx) empty = true;
        lo[i] = static_cast<std::int64_t>(ceil_div(mn, H) - 1);
        hi[i] = static_cast<std::int64_t>(floor_div(mx, H));
      }
      if (empty) continue;

      std::vector<Constraint> cs;
      cs.reserve(2 * n + 4);
      Key k = lo;
      while (true) {
        if (!grid.occupied(k)) {
          cs.clear();
          cs.push_back({-1, 0, 0});
          cs.push_back({1, 0, 1});
          cs.push_back({0, -1, 0});
          cs.push_back({0, 1, 1});
          bool skip = false;
          for (std::size_t i = 0; i < n && !skip; ++i) {
            i128 clo = std::max<i128>(H * k[i], wlo[i]);
            i128 chi = std::min<i128>(H * (k[i] + 1), whi[i]);
            if (clo > chi) {
              skip = true;
              break;
            }
            cs.push_back({u[i], v[i], chi - p[i]});
            cs.push_back({-u[i], -v[i], p[i] - clo});
          }
          if (!skip && feasible(cs)) grid.insert(k);
        }
        std::size_t axis = n;
        while (axis-- > 0) {
          if (++k[axis] <= hi[axis]) break;
          k[axis] = lo[axis];
        }
        if (axis == static_cast<std::size_t>(-1)) break;
      }
    }
  }
  return grid;
}

SpanComplex to_complex(const VoxelGrid& grid) {
  const std::size_t n = grid.dim();
  SpanComplex out(n);
  auto voxels = grid.voxels();
  const Dyadic& h = grid.resolution();
  std::size_t i = 0;
  while (i < voxels.size()) {
    std::size_t j = i;
    while (j + 1 < voxels.size() && std::equal(voxels[j].begin(), voxels[j].end() - 1, voxels[j + 1].begin()) &&
           voxels[j + 1].back() == voxels[j].back() + 1) {
      ++j;
    }
    std::vector<Interval> iv;
    for (std::size_t axis = 0; axis < n; ++axis) {
      Dyadic lo = h * Dyadic(static_cast<long long>(voxels[i][axis]));
      Dyadic hi = h * Dyadic(static_cast<long long>(voxels[j][axis] + 1));
      iv.push_back(Interval::closed(lo, hi));
    }
    out.add(BoxRegion(std::move(iv)));
    i = j + 1;
  }
  return out;
}

std::string voxel_off(const VoxelGrid& grid) {
  const std::size_t n = grid.dim();
  std::map<Key, std::size_t> vertex_index;
  std::vector<Key> vertices;
  std::vector<std::vector<std::size_t>> faces;
  auto vertex = [&](Key c) {
    c.resize(3, 0);
    auto [it, fresh] = vertex_index.emplace(c, vertices.size());
    if (fresh) vertices.push_back(c);
    return it->second;
  };
  for (const auto& v : grid.voxels()) {
    if (n == 1) {
      faces.push_back({vertex(Key{v[0]}), vertex(Key{v[0] + 1})});
    } else if (n == 2) {
      faces.push_back({vertex(Key{v[0], v[1]}), vertex(Key{v[0] + 1, v[1]}), vertex(Key{v[0] + 1, v[1] + 1}),
                       vertex(Key{v[0], v[1] + 1})});
    } else if (n == 3) {
      for (std::size_t axis = 0; axis < 3; ++axis) {
        for (int side = 0; side <= 1; ++side) {
          Key nb = v;
          nb[axis] += side ? 1 : -1;
          if (grid.occupied(nb)) continue;
          std::size_t u = (axis + 1) % 3, w = (axis + 2) % 3;
          Key c = v;
          c[axis] += side;
          std::vector<std::size_t> quad;
          for (auto [du, dw] : {std::pair{0, 0}, {1, 0}, {1, 1}, {0, 1}}) {
            Key q = c;
            q[u] += du;
            q[w] += dw;
            quad.push_back(vertex(q));
          }
          faces.push_back(std::move(quad));
        }
      }
    } else {
      throw PreconditionError("voxel_off: only dimensions 1 to 3");
    }
  }
  std::ostringstream out;
  out.precision(17);
  out << "OFF\n" << vertices.size() << " " << faces.size() << " 0\n";
  const double h = grid.resolution().to_double();
  for (const auto& c : vertices) out << c[0] * h << " " << c[1] * h << " " << c[2] * h << "\n";
  for (const auto& f : faces) {
    out << f.size();
    for (auto idx : f) out << " " << idx;
    out << "\n";
  }
  return out.str();
}

}  // namespace monovex
