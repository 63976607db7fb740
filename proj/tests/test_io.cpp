#include <doctest.h>

#include <random>
#include <sstream>

#include "support.hpp"
#include "wgd/io.hpp"

using namespace wgd;
using namespace wgd::testing;

namespace {

WeightedGraph graph_from(const std::string& text,
                         LoopMode mode = LoopMode::kDouble) {
  std::istringstream in(text);
  return build_graph(io::parse_edges(in), mode);
}

}  // namespace

TEST_CASE("format_real round-trips") {
  CHECK(io::format_real(1.0) == "1");
  CHECK(io::format_real(0.1) == "0.1");
  CHECK(io::format_real(3.5) == "3.5");
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  for (int k = 0; k < 1000; ++k) {
    const double v = u(rng);
    CHECK(std::stod(io::format_real(v)) == v);
  }
}

TEST_CASE("parse_edges: comments, blanks and loops") {
  const auto g = graph_from("# header\n\nx y 1\ny z 2.5  # trailing\nz z 3\n");
  REQUIRE(g.size() == 3);
  CHECK(g.weight(*g.find("y"), *g.find("z")) == 2.5);
  CHECK(g.loop_weight(*g.find("z")) == 3.0);
}

TEST_CASE("parse_edges: malformed lines report the line number") {
  for (const std::string bad : {"x y\n", "x y 1 2\n", "x y abc\n", "x y 1e\n"}) {
    std::istringstream in("a b 1\n" + bad);
    try {
      io::parse_edges(in);
      FAIL("no error for " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kParseError);
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  CHECK(error_kind([] { graph_from("x y 0\n"); }) ==
        ErrorKind::kNonPositiveWeight);
  CHECK(error_kind([] { graph_from("x y 1\ny x 1\n"); }) ==
        ErrorKind::kDuplicateEdge);
}

TEST_CASE("format_edges: canonical output is a fixed point") {
  const std::string canonical = "a b 1\na c 0.25\nb b 2\nb c 3\n";
  const auto g = graph_from("c b 3\nb b 2\nc a 0.25\nb a 1\n");
  CHECK(io::format_edges(g) == canonical);
  CHECK(io::format_edges(graph_from(canonical)) == canonical);

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    RandomGraphSpec spec;
    spec.n = 2 + trial % 10;
    spec.loop_p = 0.3;
    const auto text = io::format_edges(random_graph(spec, rng));
    CHECK(io::format_edges(graph_from(text)) == text);
  }
}

TEST_CASE("demands files") {
  const auto g = graph_from("x y 1\ny z 1\n");
  std::istringstream in("# a b\nx 1 0.5\nz 0 2\n");
  const auto d = io::parse_demands(in, g);
  CHECK(d.a == std::vector<double>{1, 0, 0});
  CHECK(d.b == std::vector<double>{0.5, 0, 2});
  CHECK(io::format_demands(g, d) == "x 1 0.5\ny 0 0\nz 0 2\n");

  std::istringstream unknown("w 1 1\n");
  CHECK(error_kind([&] { io::parse_demands(unknown, g); }) ==
        ErrorKind::kUnknownVertex);
  std::istringstream twice("x 1 1\nx 2 2\n");
  CHECK(error_kind([&] { io::parse_demands(twice, g); }) ==
        ErrorKind::kParseError);
  std::istringstream negative("x -1 1\n");
  CHECK(error_kind([&] { io::parse_demands(negative, g); }).has_value());
}

TEST_CASE("cells files") {
  std::istringstream in("0 0\n1 0\n# c\n-2 3\n");
  const auto cells = io::parse_cells(in);
  REQUIRE(cells.size() == 3);
  CHECK(cells[2] == Cell{-2, 3});
  std::istringstream bad("0 0.5\n");
  CHECK(error_kind([&] { io::parse_cells(bad); }) == ErrorKind::kParseError);
}

TEST_CASE("partition JSON") {
  const auto g = graph_from("x y 1\ny z 1\n");
  std::istringstream in(R"({"A": ["y"], "B": ["x", "z"], "moves": 0})");
  const auto p = io::parse_partition_json(in, g);
  CHECK(p == Partition::from_side_a(set_of(3, {1})));

  std::istringstream missing(R"({"A": ["y"], "B": ["x"]})");
  CHECK(error_kind([&] { io::parse_partition_json(missing, g); }).has_value());
  std::istringstream unknown(R"({"A": ["q"], "B": ["x", "y", "z"]})");
  CHECK(error_kind([&] { io::parse_partition_json(unknown, g); }).has_value());
  std::istringstream junk("not json");
  CHECK(error_kind([&] { io::parse_partition_json(junk, g); }) ==
        ErrorKind::kParseError);
}

TEST_CASE("render_svg") {
  const auto cells = rectangle_cells(2, 2);
  const auto p = Partition::from_side_a(set_of(4, {0, 3}));
  io::SvgOptions options;
  const auto svg = io::render_svg(cells, p, options);
  CHECK(svg.rfind("<svg", 0) == 0);
  std::size_t rects = 0, fill_a = 0, fill_b = 0;
  for (std::size_t at = svg.find("<rect"); at != std::string::npos;
       at = svg.find("<rect", at + 1)) {
    ++rects;
  }
  for (std::size_t at = svg.find(io::kSideAFill); at != std::string::npos;
       at = svg.find(io::kSideAFill, at + 1)) {
    ++fill_a;
  }
  for (std::size_t at = svg.find(io::kSideBFill); at != std::string::npos;
       at = svg.find(io::kSideBFill, at + 1)) {
    ++fill_b;
  }
  CHECK(rects == 4);
  CHECK(fill_a == 2);
  CHECK(fill_b == 2);
  CHECK(svg.find("<circle") == std::string::npos);

  options.circle_at = Cell{1, 1};
  options.radius = 2.1;
  CHECK(io::render_svg(cells, p, options).find("<circle") != std::string::npos);
}
