#include "monovex/catalog.hpp"

#include "monovex/errors.hpp"

namespace monovex {

namespace {

Point pt(std::initializer_list<Dyadic> c) { return Point(c); }

BoxRegion box(std::initializer_list<Interval> iv) { return BoxRegion(std::vector<Interval>(iv)); }

Interval cl(const Dyadic& lo, const Dyadic& hi) { return Interval::closed(lo, hi); }

}  // namespace

SpanComplex example1(int k_squares) {
  if (k_squares < 1) throw PreconditionError("example1: K must be at least 1");
  SpanComplex out(2);
  for (int k = 0; k < k_squares; ++k) {
    Interval side = cl(Dyadic::pow2(-(k + 1)), Dyadic::pow2(-k));
    out.add(box({side, side}));
  }
  return out;
}

SpanComplex example2() {
  SpanComplex out(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::vector<Interval> iv(3, cl(-1, 1));
      iv[i] = Interval(-1, 0, true, false);
      iv[j] = cl(0, 1);
      out.add(BoxRegion(std::move(iv)));
    }
  }
  return out;
}

SpanComplex example2_closed(const Dyadic& eps) {
  if (eps.sign() <= 0 || eps >= Dyadic(1)) throw PreconditionError("example2_closed: eps must lie in (0, 1)");
  SpanComplex out(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::vector<Interval> iv(3, cl(-1, 1));
      iv[i] = cl(-1, -eps);
      iv[j] = cl(0, 1);
      out.add(BoxRegion(std::move(iv)));
    }
  }
  return out;
}

std::pair<SegmentSet, SegmentSet> example3_sets() {
  SegmentSet a, b;
  a.add(pt({0, 0, 0}), pt({0, 1, 1}));
  a.add(pt({0, 1, 1}), pt({1, 1, 2}));
  b.add(pt({0, 0, 0}), pt({-1, -1, 2}));
  return {a, b};
}

std::pair<SegmentSet, SegmentSet> example4_sets(const Dyadic& t) {
  if (t.sign() <= 0) throw PreconditionError("example4: T must be positive");
  SegmentSet a, b;
  a.add(pt({0, 0, 0}), pt({1, 0, 0}));
  a.add(pt({1, 0, 0}), pt({1, 1, 0}));
  a.add(pt({1, 1, 0}), pt({1, 1, 1}));
  b.add(pt({-t, -t, -t}), pt({t, t, t}));
  return {a, b};
}

BoxRegion sum_window(const SegmentSet& a, const SegmentSet& b, const Dyadic& h) {
  std::vector<Point> corners;
  for (const auto& [p, q] : a.segments) {
    for (const auto& [r, s] : b.segments) {
      corners.push_back(p + r);
      corners.push_back(p + s);
      corners.push_back(q + r);
      corners.push_back(q + s);
    }
  }
  BoxRegion hull = bhull(corners);
  std::vector<Interval> iv;
  for (const auto& side : hull.intervals()) iv.push_back(cl(side.lo() - h, side.hi() + h));
  return BoxRegion(std::move(iv));
}

VoxelGrid example3_raster(const Dyadic& h) {
  auto [a, b] = example3_sets();
  return rasterize_minkowski(a, b, h, sum_window(a, b, h));
}

VoxelGrid example4_raster(const Dyadic& h, const Dyadic& t) {
  auto [a, b] = example4_sets(t);
  return rasterize_minkowski(a, b, h, sum_window(a, b, h));
}

SpanComplex example3(const Dyadic& h) { return to_complex(example3_raster(h)); }

SpanComplex example4(const Dyadic& h, const Dyadic& t) { return to_complex(example4_raster(h, t)); }

SpanComplex lshape() {
  SpanComplex out(2);
  out.add(box({cl(0, 2), cl(0, 1)}));
  out.add(box({cl(0, 1), cl(0, 2)}));
  return out;
}

SpanComplex sshape() {
  SpanComplex out(2);
  out.add(box({cl(0, 3), cl(0, 1)}));
  out.add(box({cl(2, 3), cl(1, 2)}));
  out.add(box({cl(0, 3), cl(2, 3)}));
  return out;
}

std::vector<std::string> catalog_names() {
  return {"example1", "example2", "example2_closed", "example3", "example4", "lshape", "sshape"};
}

SpanComplex catalog(const std::string& name, const CatalogParams& params) {
  if (name == "example1") return example1(params.k_squares);
  if (name == "example2") return example2();
  if (name == "example2_closed") return example2_closed(params.eps);
  if (name == "example3") return example3(params.h.is_zero() ? Dyadic::pow2(-3) : params.h);
  if (name == "example4") return example4(params.h.is_zero() ? Dyadic::pow2(-4) : params.h, params.t);
  if (name == "lshape") return lshape();
  if (name == "sshape") return sshape();
  throw PreconditionError("unknown example '" + name + "'");
}

std::string catalog_help(const std::string& name) {
  if (name == "example1") {
    return "K squares [1/2^(k+1), 1/2^k]^2, k < K; the origin of the infinite union is omitted (--K)";
  }
  if (name == "example2") return "points of [-1,1]^3 with a negative and a nonnegative coordinate (half-open boxes)";
  if (name == "example2_closed") return "closed surrogate of example2 with x_i <= -eps (--eps)";
  if (name == "example3") return "outer voxel cover of A + B for the two-segment staircase and a slanted segment (--resolution, default 1/8)";
  if (name == "example4") {
    return "outer voxel cover of a three-segment staircase plus the diagonal cut to [-T,T] (--resolution, default 1/16; --T)";
  }
  if (name == "lshape") return "[0,2]x[0,1] union [0,1]x[0,2]";
  if (name == "sshape") return "S-shaped union of three rectangles; not monovex";
  throw PreconditionError("unknown example '" + name + "'");
}

}  // namespace monovex
