#include "monovex/cubical.hpp"

#include <algorithm>
#include <numeric>

#include "monovex/arrangement.hpp"
#include "monovex/errors.hpp"

namespace monovex {

namespace {

void xor_into(std::vector<std::uint32_t>& acc, const std::vector<std::uint32_t>& other,
              std::vector<std::uint32_t>& scratch) {
  scratch.clear();
  std::set_symmetric_difference(acc.begin(), acc.end(), other.begin(), other.end(), std::back_inserter(scratch));
  acc.swap(scratch);
}

std::size_t cube_dim(const Key& cube) {
  return static_cast<std::size_t>(std::count_if(cube.begin(), cube.end(), [](std::int64_t c) { return c % 2 != 0; }));
}

// Facets of a cube: c_i -/+ 1 on each odd axis.
template <class Visit>
void for_each_facet(const Key& cube, Visit&& visit) {
  Key f = cube;
  for (std::size_t i = 0; i < cube.size(); ++i) {
    if (cube[i] % 2 == 0) continue;
    f[i] = cube[i] - 1;
    visit(f);
    f[i] = cube[i] + 1;
    visit(f);
    f[i] = cube[i];
  }
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Reduced columns indexed by their lowest row.
struct PivotTable {
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> by_low;

  // Reduces v in place; true when something remains.
  bool reduce(std::vector<std::uint32_t>& v, std::vector<std::uint32_t>& scratch) const {
    while (!v.empty()) {
      auto it = by_low.find(v.back());
      if (it == by_low.end()) return true;
      xor_into(v, it->second, scratch);
    }
    return false;
  }
};

std::vector<std::size_t> betti_from(const std::vector<std::size_t>& counts, const std::vector<std::size_t>& ranks) {
  // ranks[k] = rank of the boundary from dimension k to k - 1 (ranks[0] = 0)
  std::vector<std::size_t> betti(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) {
    std::size_t next = k + 1 < ranks.size() ? ranks[k + 1] : 0;
    betti[k] = counts[k] - ranks[k] - next;
  }
  return betti;
}

}  // namespace

std::size_t gf2_rank(BoundaryMatrix matrix) {
  PivotTable pivots;
  std::vector<std::uint32_t> scratch;
  std::size_t rank = 0;
  for (auto& col : matrix.columns) {
    if (pivots.reduce(col, scratch)) {
      std::uint32_t low = col.back();
      pivots.by_low.emplace(low, std::move(col));
      ++rank;
    }
  }
  return rank;
}

// ----------------------------------------------------------- CubicalComplex

CubicalComplex::CubicalComplex(std::size_t dim, Lattice grid)
    : dim_(dim), grid_(std::move(grid)), cells_(dim + 1), index_(dim + 1) {
  if (grid_.dim() != dim_) throw DimensionError("cubical complex: grid dimension mismatch");
}

std::size_t CubicalComplex::total() const {
  std::size_t t = 0;
  for (const auto& c : cells_) t += c.size();
  return t;
}

void CubicalComplex::add_closed(const Key& cube) {
  if (cube.size() != dim_) throw DimensionError("cubical complex: cube dimension mismatch");
  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (cube[i] % 2 != 0) odd.push_back(i);
  }
  // every face: each odd coordinate becomes c - 1, c or c + 1
  std::size_t combos = 1;
  for (std::size_t j = 0; j < odd.size(); ++j) combos *= 3;
  for (std::size_t code = 0; code < combos; ++code) {
    Key f = cube;
    std::size_t rest = code;
    for (auto i : odd) {
      f[i] += static_cast<std::int64_t>(rest % 3) - 1;
      rest /= 3;
    }
    std::size_t k = cube_dim(f);
    auto [it, fresh] = index_[k].emplace(f, static_cast<std::uint32_t>(cells_[k].size()));
    if (fresh) cells_[k].push_back(std::move(f));
  }
}

void CubicalComplex::finalize() {
  for (std::size_t k = 0; k <= dim_; ++k) {
    std::sort(cells_[k].begin(), cells_[k].end());
    index_[k].clear();
    for (std::uint32_t j = 0; j < cells_[k].size(); ++j) index_[k].emplace(cells_[k][j], j);
  }
}

CubicalComplex CubicalComplex::from_complex(const SpanComplex& complex, const Lattice& grid) {
  const std::size_t n = complex.dim();
  if (grid.dim() != n) throw DimensionError("from_complex: grid dimension mismatch");
  CubicalComplex out(n, grid);
  for (const auto& box : complex.boxes()) {
    if (!box.is_closed()) throw PreconditionError("from_complex: complex must be closed");
    Key lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      Dyadic a = box[i].lo() - grid.origin()[i];
      Dyadic b = box[i].hi() - grid.origin()[i];
      BigInt fa = floor_ratio(a, grid.steps()[i]);
      BigInt fb = floor_ratio(b, grid.steps()[i]);
      if (fa != ceil_ratio(a, grid.steps()[i]) || fb != ceil_ratio(b, grid.steps()[i])) {
        throw PreconditionError("from_complex: box endpoints are not on the grid");
      }
      lo[i] = 2 * to_int64(fa);
      hi[i] = 2 * to_int64(fb);
    }
    Key c = lo;
    while (true) {
      std::size_t k = cube_dim(c);
      auto [it, fresh] = out.index_[k].emplace(c, static_cast<std::uint32_t>(out.cells_[k].size()));
      if (fresh) out.cells_[k].push_back(c);
      std::size_t axis = n;
      while (axis-- > 0) {
        if (++c[axis] <= hi[axis]) break;
        c[axis] = lo[axis];
      }
      if (axis == static_cast<std::size_t>(-1)) break;
    }
  }
  out.finalize();
  return out;
}

std::int64_t CubicalComplex::index_of(const Key& cube) const {
  const auto& idx = index_[cube_dim(cube)];
  auto it = idx.find(cube);
  return it == idx.end() ? -1 : static_cast<std::int64_t>(it->second);
}

bool CubicalComplex::face_closed() const {
  for (std::size_t k = 1; k <= dim_; ++k) {
    for (const auto& c : cells_[k]) {
      bool ok = true;
      for_each_facet(c, [&](const Key& f) { ok = ok && index_[k - 1].count(f) != 0; });
      if (!ok) return false;
    }
  }
  return true;
}

BoundaryMatrix CubicalComplex::boundary(std::size_t k) const {
  if (k == 0 || k > dim_) throw PreconditionError("boundary: dimension out of range");
  BoundaryMatrix m;
  m.rows = cells_[k - 1].size();
  m.columns.reserve(cells_[k].size());
  for (const auto& c : cells_[k]) {
    std::vector<std::uint32_t> col;
    for_each_facet(c, [&](const Key& f) {
      auto it = index_[k - 1].find(f);
      if (it == index_[k - 1].end()) throw InvariantError("boundary: complex is not face-closed");
      col.push_back(it->second);
    });
    std::sort(col.begin(), col.end());
    m.columns.push_back(std::move(col));
  }
  return m;
}

Point CubicalComplex::vertex_point(const Key& cube) const {
  Point p(dim_);
  for (std::size_t i = 0; i < dim_; ++i) p[i] = grid_.coordinate(i, cube[i] / 2);
  return p;
}

bool boundary_squared_zero(const CubicalComplex& complex) {
  for (std::size_t k = 2; k <= complex.dim(); ++k) {
    for (const auto& c : complex.cells(k)) {
      std::unordered_map<Key, int, KeyHash> parity;
      for_each_facet(c, [&](const Key& f) { for_each_facet(f, [&](const Key& g) { parity[g] ^= 1; }); });
      for (const auto& [g, p] : parity) {
        if (p != 0) return false;
      }
    }
  }
  return true;
}

BettiReport betti_numbers(const CubicalComplex& complex) {
  BettiReport report;
  const std::size_t n = complex.dim();
  std::vector<std::size_t> ranks(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) ranks[k] = gf2_rank(complex.boundary(k));
  for (std::size_t k = 0; k <= n; ++k) report.cells.push_back(complex.count(k));
  report.betti = betti_from(report.cells, ranks);

  long long chi = 0, alt = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    long long sign = k % 2 == 0 ? 1 : -1;
    chi += sign * static_cast<long long>(report.cells[k]);
    alt += sign * static_cast<long long>(report.betti[k]);
  }
  report.euler = chi;
  report.euler_consistent = chi == alt;

  std::size_t components = complex.count(0);
  if (n >= 1) {
    UnionFind uf(complex.count(0));
    for (const auto& col : complex.boundary(1).columns) {
      if (uf.unite(col[0], col[1])) --components;
    }
  }
  report.components_consistent = components == report.betti[0];
  report.boundary_squared_zero = boundary_squared_zero(complex);
  return report;
}

std::vector<std::vector<std::pair<Point, Point>>> h1_representatives(const CubicalComplex& complex) {
  std::vector<std::vector<std::pair<Point, Point>>> out;
  if (complex.dim() < 1) return out;
  const auto& vertices = complex.cells(0);
  const auto& edges = complex.cells(1);
  BoundaryMatrix d1 = complex.boundary(1);

  // spanning forest by BFS; every other edge closes a fundamental cycle
  const std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(vertices.size());
  for (std::uint32_t e = 0; e < edges.size(); ++e) {
    adj[d1.columns[e][0]].push_back({d1.columns[e][1], e});
    adj[d1.columns[e][1]].push_back({d1.columns[e][0], e});
  }
  std::vector<std::uint32_t> parent(vertices.size(), none), parent_edge(vertices.size(), none), depth(vertices.size(), 0);
  std::vector<char> in_tree(edges.size(), 0), seen(vertices.size(), 0);
  for (std::uint32_t root = 0; root < vertices.size(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::vector<std::uint32_t> queue{root};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      std::uint32_t v = queue[h];
      for (auto [w, e] : adj[v]) {
        if (seen[w]) continue;
        seen[w] = 1;
        parent[w] = v;
        parent_edge[w] = e;
        depth[w] = depth[v] + 1;
        in_tree[e] = 1;
        queue.push_back(w);
      }
    }
  }

  PivotTable boundaries;
  std::vector<std::uint32_t> scratch;
  if (complex.dim() >= 2) {
    BoundaryMatrix d2 = complex.boundary(2);
    for (auto& col : d2.columns) {
      if (boundaries.reduce(col, scratch)) {
        std::uint32_t low = col.back();
        boundaries.by_low.emplace(low, std::move(col));
      }
    }
  }

  for (std::uint32_t e = 0; e < edges.size(); ++e) {
    if (in_tree[e]) continue;
    std::vector<std::uint32_t> cycle{e};
    std::uint32_t a = d1.columns[e][0], b = d1.columns[e][1];
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      cycle.push_back(parent_edge[a]);
      a = parent[a];
    }
    std::sort(cycle.begin(), cycle.end());
    std::vector<std::uint32_t> reduced = cycle;
    if (!boundaries.reduce(reduced, scratch)) continue;
    // a new homology class; later cycles are reduced against it too
    std::uint32_t low = reduced.back();
    boundaries.by_low.emplace(low, reduced);
    std::vector<std::pair<Point, Point>> segs;
    for (auto idx : cycle) {
      Key lo = edges[idx], hi = edges[idx];
      for (std::size_t i = 0; i < lo.size(); ++i) {
        if (lo[i] % 2 != 0) {
          lo[i] -= 1;
          hi[i] += 1;
        }
      }
      segs.emplace_back(complex.vertex_point(lo), complex.vertex_point(hi));
    }
    out.push_back(std::move(segs));
  }
  return out;
}

Lattice aligned_grid(const SpanComplex& complex) {
  std::uint32_t e = 0;
  for (const auto& b : complex.boxes()) {
    for (const auto& iv : b.intervals()) e = std::max({e, iv.lo().exponent(), iv.hi().exponent()});
  }
  return Lattice::uniform(complex.dim(), Dyadic::pow2(-static_cast<int>(e)));
}

// ------------------------------------------------------------ order complex

std::vector<std::size_t> order_complex_betti(const SpanComplex& complex) {
  const std::size_t n = complex.dim();
  Arrangement arr(complex);
  const auto& members = arr.members();
  if (members.empty()) return std::vector<std::size_t>(n + 1, 0);

  // proper faces of each member cell that are members too
  std::unordered_map<std::size_t, std::uint32_t> local;
  for (std::uint32_t j = 0; j < members.size(); ++j) local.emplace(members[j], j);
  std::vector<std::vector<std::uint32_t>> below(members.size());
  for (std::uint32_t j = 0; j < members.size(); ++j) {
    auto idx = arr.unflatten(members[j]);
    std::vector<std::size_t> odd;
    for (std::size_t i = 0; i < n; ++i) {
      if (idx[i] % 2) odd.push_back(i);
    }
    std::size_t combos = 1;
    for (std::size_t t = 0; t < odd.size(); ++t) combos *= 3;
    for (std::size_t code = 1; code < combos; ++code) {
      std::int64_t flat = static_cast<std::int64_t>(members[j]);
      std::size_t rest = code;
      for (auto i : odd) {
        flat += (static_cast<std::int64_t>(rest % 3) == 1 ? -1 : (rest % 3 == 2 ? 1 : 0)) *
                static_cast<std::int64_t>(arr.stride(i));
        rest /= 3;
      }
      auto it = local.find(static_cast<std::size_t>(flat));
      if (it != local.end()) below[j].push_back(it->second);
    }
  }

  // simplices: chains c_0 > c_1 > ... in the face order
  std::vector<std::vector<Key>> chains(1);
  for (std::uint32_t j = 0; j < members.size(); ++j) chains[0].push_back(Key{j});
  constexpr std::size_t kLimit = 4'000'000;
  std::size_t total = members.size();
  for (std::size_t d = 1; d <= n; ++d) {
    std::vector<Key> next;
    for (const auto& c : chains[d - 1]) {
      for (auto f : below[static_cast<std::size_t>(c.back())]) {
        Key longer = c;
        longer.push_back(f);
        next.push_back(std::move(longer));
      }
    }
    total += next.size();
    if (total > kLimit) throw PreconditionError("order complex too large");
    if (next.empty()) break;
    chains.push_back(std::move(next));
  }

  std::vector<std::size_t> counts(n + 1, 0), ranks(n + 2, 0);
  for (std::size_t d = 0; d < chains.size(); ++d) counts[d] = chains[d].size();
  for (std::size_t d = 1; d < chains.size(); ++d) {
    std::unordered_map<Key, std::uint32_t, KeyHash> index;
    for (std::uint32_t j = 0; j < chains[d - 1].size(); ++j) index.emplace(chains[d - 1][j], j);
    BoundaryMatrix m;
    m.rows = chains[d - 1].size();
    for (const auto& c : chains[d]) {
      std::vector<std::uint32_t> col;
      for (std::size_t drop = 0; drop < c.size(); ++drop) {
        Key face;
        for (std::size_t t = 0; t < c.size(); ++t) {
          if (t != drop) face.push_back(c[t]);
        }
        col.push_back(index.at(face));
      }
      std::sort(col.begin(), col.end());
      m.columns.push_back(std::move(col));
    }
    ranks[d] = gf2_rank(std::move(m));
  }
  ranks.resize(n + 1);
  return betti_from(counts, ranks);
}

}  // namespace monovex
