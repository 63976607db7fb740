#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wgd/graph.hpp"
#include "wgd/solver.hpp"

namespace wgd {

// Area of disk(0, r) ∩ the unit square centred at (dx, dy). Exactly
// symmetric under sign flips and swapping dx, dy; exactly 0 when the square
// misses the disk and exactly 1 when the disk covers it.
double circle_square_area(double dx, double dy, double r);

// Unit square [i, i+1] × [j, j+1].
struct Cell {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string cell_label(const Cell& c);

struct GridInstance {
  std::vector<Cell> cells;
  double radius = 1.0;
};

// width × height cells starting at (0, 0), row-major in j then i.
std::vector<Cell> rectangle_cells(int width, int height);

// Overlaps below this are dropped rather than stored as edges.
inline constexpr double kMinOverlap = 1e-12;

// Vertex k is cells[k], labelled "i,j"; w_xy is the area of y inside x's
// disk, and every cell carries the loop w_xx = circle_square_area(0, 0, r).
WeightedGraph build_grid_graph(const GridInstance& instance,
                               LoopMode loop_mode = LoopMode::kDouble);

enum class DemandScheme { kHalfDegree, kPhysicalMajority };

std::string_view to_string(DemandScheme scheme) noexcept;

// kHalfDegree: a = b = d_G / 2 on the grid graph itself (loops included).
// kPhysicalMajority: a = b = max(0, T/2 - w_xx) intended for the loopless
// graph, where T(x) is x's total covered area with the own square once.
Demands squares_demands(const WeightedGraph& g, DemandScheme scheme);

struct SquaresDiagnostics {
  bool graph_stable = false;
  // Same-colour covered area minus other-colour covered area, per cell.
  std::vector<double> physical_margin;
  std::size_t strict_majority = 0;
  bool precondition_held = false;
  FeasibilityReport reduced_feasibility;
};

struct SquaresResult {
  WeightedGraph graph;
  Partition partition;
  SolveCertificate certificate;
  SquaresDiagnostics diagnostics;
};

SquaresResult solve_squares(const GridInstance& instance, DemandScheme scheme,
                            LoopMode loop_mode = LoopMode::kDouble,
                            const SolveOptions& options = {});

}  // namespace wgd
