#include "wgd/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "wgd/error.hpp"

namespace wgd {

namespace {

// ∫_0^u sqrt(r² - t²) dt for 0 <= u <= r.
double segment_primitive(double u, double r) {
  const double root = std::sqrt(std::max(0.0, r * r - u * u));
  return 0.5 * (u * root + r * r * std::asin(std::min(1.0, u / r)));
}

// Area of disk(0, r) ∩ [0, x] × [0, y] for x, y >= 0.
double corner_area(double x, double y, double r) {
  x = std::min(x, r);
  y = std::min(y, r);
  if (x <= 0.0 || y <= 0.0) return 0.0;
  if (x * x + y * y <= r * r) return x * y;
  // Below u = cut the strip is capped by y, beyond it by the arc.
  const double cut = std::sqrt(std::max(0.0, r * r - y * y));
  return y * cut + segment_primitive(x, r) - segment_primitive(cut, r);
}

// Oriented version of corner_area for any signs of x and y.
double signed_corner(double x, double y, double r) {
  const double s = (x < 0.0) != (y < 0.0) ? -1.0 : 1.0;
  return s * corner_area(std::abs(x), std::abs(y), r);
}

}  // namespace

double circle_square_area(double dx, double dy, double r) {
  if (!(r > 0.0) || !std::isfinite(r) || !std::isfinite(dx) ||
      !std::isfinite(dy)) {
    throw Error(ErrorKind::kInvalidArgument,
                "radius must be positive and offsets finite");
  }
  double x = std::abs(dx);
  double y = std::abs(dy);
  if (x > y) std::swap(x, y);

  const double near_x = std::max(0.0, x - 0.5);
  const double near_y = std::max(0.0, y - 0.5);
  if (near_x * near_x + near_y * near_y >= r * r) return 0.0;
  const double far_x = x + 0.5;
  const double far_y = y + 0.5;
  if (far_x * far_x + far_y * far_y <= r * r) return 1.0;

  const double x0 = x - 0.5, x1 = x + 0.5;
  const double y0 = y - 0.5, y1 = y + 0.5;
  const double area = signed_corner(x1, y1, r) - signed_corner(x0, y1, r) -
                      signed_corner(x1, y0, r) + signed_corner(x0, y0, r);
  return std::clamp(area, 0.0, 1.0);
}

std::string cell_label(const Cell& c) {
  return std::to_string(c.i) + "," + std::to_string(c.j);
}

std::vector<Cell> rectangle_cells(int width, int height) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(std::max(0, width * height)));
  for (int j = 0; j < height; ++j) {
    for (int i = 0; i < width; ++i) cells.push_back({i, j});
  }
  return cells;
}

WeightedGraph build_grid_graph(const GridInstance& instance,
                               LoopMode loop_mode) {
  const auto& cells = instance.cells;
  const double r = instance.radius;
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorKind::kInvalidArgument, "radius must be positive");
  }
  if (cells.size() < 2) {
    throw Error(ErrorKind::kTooFewCells, "need at least two cells");
  }
  std::map<Cell, Vertex> index;
  std::vector<std::string> labels;
  for (const Cell& c : cells) {
    if (!index.emplace(c, labels.size()).second) {
      throw Error(ErrorKind::kDuplicateCell,
                  "cell " + cell_label(c) + " listed twice");
    }
    labels.push_back(cell_label(c));
  }

  // Centres farther apart than r + √2/2 cannot overlap.
  const double reach = r + std::sqrt(0.5);
  const int span = static_cast<int>(std::ceil(reach));
  const double own = circle_square_area(0.0, 0.0, r);

  std::vector<IndexedEdge> edges;
  for (Vertex x = 0; x < cells.size(); ++x) {
    edges.push_back({x, x, own});
    for (int di = -span; di <= span; ++di) {
      for (int dj = -span; dj <= span; ++dj) {
        if (di == 0 && dj == 0) continue;
        if (std::hypot(di, dj) >= reach) continue;
        auto it = index.find({cells[x].i + di, cells[x].j + dj});
        if (it == index.end() || it->second <= x) continue;
        const double w = circle_square_area(di, dj, r);
        if (w > kMinOverlap) edges.push_back({x, it->second, w});
      }
    }
  }
  return WeightedGraph(cells.size(), edges, loop_mode, std::move(labels));
}

std::string_view to_string(DemandScheme scheme) noexcept {
  return scheme == DemandScheme::kHalfDegree ? "half-degree" : "physical";
}

Demands squares_demands(const WeightedGraph& g, DemandScheme scheme) {
  Demands d = Demands::zero(g.size());
  for (Vertex x = 0; x < g.size(); ++x) {
    if (scheme == DemandScheme::kHalfDegree) {
      d.a[x] = d.b[x] = g.degree(x) / 2.0;
    } else {
      double covered = 0.0;
      for (const Neighbor& nb : g.neighbors(x)) covered += nb.weight;
      covered += g.loop_weight(x);
      d.a[x] = d.b[x] = std::max(0.0, covered / 2.0 - g.loop_weight(x));
    }
  }
  return d;
}

SquaresResult solve_squares(const GridInstance& instance, DemandScheme scheme,
                            LoopMode loop_mode, const SolveOptions& options) {
  WeightedGraph grid = build_grid_graph(instance, loop_mode);
  const Demands demands = squares_demands(grid, scheme);

  ReducedInstance reduced;
  if (scheme == DemandScheme::kHalfDegree) {
    reduced = reduce_loops(grid, demands);
  } else {
    reduced.graph = without_loops(grid);
    reduced.demands = demands;
    reduced.precondition = check_feasibility(reduced.graph, reduced.demands);
  }

  SolveResult solved = solve(reduced.graph, reduced.demands, options);
  const Partition& p = solved.partition;

  SquaresDiagnostics diag;
  diag.graph_stable = verify_partition(reduced.graph, reduced.demands, p).empty();
  if (scheme == DemandScheme::kHalfDegree) {
    diag.graph_stable =
        diag.graph_stable && verify_partition(grid, demands, p).empty();
  }
  diag.precondition_held = reduced.precondition.feasible();
  diag.reduced_feasibility = std::move(reduced.precondition);
  diag.physical_margin.resize(grid.size());
  for (Vertex x = 0; x < grid.size(); ++x) {
    double same = grid.loop_weight(x);
    double opposite = 0.0;
    for (const Neighbor& nb : grid.neighbors(x)) {
      (p.side(nb.vertex) == p.side(x) ? same : opposite) += nb.weight;
    }
    diag.physical_margin[x] = same - opposite;
    if (diag.physical_margin[x] > 0.0) ++diag.strict_majority;
  }

  return {std::move(grid), solved.partition, std::move(solved.certificate),
          std::move(diag)};
}

}  // namespace wgd
