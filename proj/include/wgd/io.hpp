#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wgd/geometry.hpp"
#include "wgd/graph.hpp"
#include "wgd/solver.hpp"

namespace wgd::io {

// Shortest decimal that round-trips to the same double.
std::string format_real(double value);

// Whitespace-separated `u v w` per line; `u u w` is a loop; `#` starts a
// comment. Throws kParseError with the offending line number.
std::vector<LabeledEdge> parse_edges(std::istream& in);
WeightedGraph read_graph(const std::filesystem::path& path,
                         LoopMode loop_mode = LoopMode::kDouble);

// Canonical form: one line per edge with the lexicographically smaller
// label first, lines sorted by (first, second) label.
std::string format_edges(const WeightedGraph& g);

// `u a b` per line. Vertices not listed get a = b = 0; unknown labels are
// rejected.
Demands parse_demands(std::istream& in, const WeightedGraph& g);
Demands read_demands(const std::filesystem::path& path, const WeightedGraph& g);

// Lines in vertex order; vertices without any incident edge are omitted,
// since the edge-list format cannot name them.
std::string format_demands(const WeightedGraph& g, const Demands& demands);

// `i j` integer pairs per line.
std::vector<Cell> parse_cells(std::istream& in);
std::vector<Cell> read_cells(const std::filesystem::path& path);

// Partition given as two label lists (the "A" and "B" keys of a result).
Partition parse_partition_json(std::istream& in, const WeightedGraph& g);

struct SvgOptions {
  double unit = 24.0;
  std::optional<Cell> circle_at;
  double radius = 0.0;
};

inline constexpr std::string_view kSideAFill = "#1f77b4";
inline constexpr std::string_view kSideBFill = "#ff7f0e";

// One rect per cell, coloured by side; vertex k of `partition` is cells[k].
std::string render_svg(const std::vector<Cell>& cells,
                       const Partition& partition, const SvgOptions& options);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace wgd::io
