#include "wgd/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <system_error>
#include <tuple>

#include <json.hpp>

#include "wgd/error.hpp"

namespace wgd::io {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::kParseError,
              "line " + std::to_string(line) + ": " + what);
}

// Non-empty, comment-stripped lines split on whitespace, with line numbers.
template <class OnLine>
void for_each_record(std::istream& in, OnLine&& on_line) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream tokens(raw);
    std::vector<std::string> fields;
    for (std::string t; tokens >> t;) fields.push_back(std::move(t));
    if (!fields.empty()) on_line(line_no, fields);
  }
}

double parse_real(std::size_t line, const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    parse_fail(line, "'" + text + "' is not a number");
  }
  return value;
}

int parse_int(std::size_t line, const std::string& text) {
  int value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    parse_fail(line, "'" + text + "' is not an integer");
  }
  return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kIoError, "cannot open " + path.string());
  }
  return in;
}

}  // namespace

std::string format_real(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::vector<LabeledEdge> parse_edges(std::istream& in) {
  std::vector<LabeledEdge> edges;
  for_each_record(in, [&](std::size_t line,
                          const std::vector<std::string>& f) {
    if (f.size() != 3) parse_fail(line, "expected 'u v w'");
    edges.push_back({f[0], f[1], parse_real(line, f[2])});
  });
  return edges;
}

WeightedGraph read_graph(const std::filesystem::path& path,
                         LoopMode loop_mode) {
  auto in = open_input(path);
  const auto edges = parse_edges(in);
  return build_graph(edges, loop_mode);
}

std::string format_edges(const WeightedGraph& g) {
  struct Row {
    std::string first, second;
    double weight;
  };
  std::vector<Row> rows;
  for (const IndexedEdge& e : g.edges()) {
    const std::string& u = g.label(e.u);
    const std::string& v = g.label(e.v);
    rows.push_back(u <= v ? Row{u, v, e.weight} : Row{v, u, e.weight});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& l, const Row& r) {
    return std::tie(l.first, l.second) < std::tie(r.first, r.second);
  });
  std::string out;
  for (const Row& r : rows) {
    out += r.first + ' ' + r.second + ' ' + format_real(r.weight) + '\n';
  }
  return out;
}

Demands parse_demands(std::istream& in, const WeightedGraph& g) {
  Demands d = Demands::zero(g.size());
  std::set<Vertex> seen;
  for_each_record(in, [&](std::size_t line,
                          const std::vector<std::string>& f) {
    if (f.size() != 3) parse_fail(line, "expected 'u a b'");
    const auto x = g.find(f[0]);
    if (!x) {
      throw Error(ErrorKind::kUnknownVertex, "line " + std::to_string(line) +
                                                 ": vertex '" + f[0] +
                                                 "' is not in the graph");
    }
    if (!seen.insert(*x).second) parse_fail(line, "vertex listed twice");
    d.a[*x] = parse_real(line, f[1]);
    d.b[*x] = parse_real(line, f[2]);
  });
  d.validate(g.size());
  return d;
}

Demands read_demands(const std::filesystem::path& path,
                     const WeightedGraph& g) {
  auto in = open_input(path);
  return parse_demands(in, g);
}

std::string format_demands(const WeightedGraph& g, const Demands& demands) {
  std::string out;
  for (Vertex x = 0; x < g.size(); ++x) {
    if (g.neighbors(x).empty() && g.loop_weight(x) == 0.0) continue;
    out += g.label(x) + ' ' + format_real(demands.a[x]) + ' ' +
           format_real(demands.b[x]) + '\n';
  }
  return out;
}

std::vector<Cell> parse_cells(std::istream& in) {
  std::vector<Cell> cells;
  for_each_record(in, [&](std::size_t line,
                          const std::vector<std::string>& f) {
    if (f.size() != 2) parse_fail(line, "expected 'i j'");
    cells.push_back({parse_int(line, f[0]), parse_int(line, f[1])});
  });
  return cells;
}

std::vector<Cell> read_cells(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_cells(in);
}

Partition parse_partition_json(std::istream& in, const WeightedGraph& g) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParseError,
                std::string("partition is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("A") || !doc.contains("B") ||
      !doc["A"].is_array() || !doc["B"].is_array()) {
    throw Error(ErrorKind::kParseError,
                "partition needs array fields \"A\" and \"B\"");
  }
  std::vector<int> assigned(g.size(), -1);
  auto take = [&](const nlohmann::json& list, Side side) {
    for (const auto& item : list) {
      if (!item.is_string()) {
        throw Error(ErrorKind::kParseError, "vertex labels must be strings");
      }
      const auto x = g.find(item.get<std::string>());
      if (!x) {
        throw Error(ErrorKind::kUnknownVertex,
                    "vertex '" + item.get<std::string>() +
                        "' is not in the graph");
      }
      if (assigned[*x] != -1) {
        throw Error(ErrorKind::kParseError,
                    "vertex '" + g.label(*x) + "' assigned twice");
      }
      assigned[*x] = static_cast<int>(side);
    }
  };
  take(doc["A"], Side::kA);
  take(doc["B"], Side::kB);
  std::vector<Side> sides;
  for (Vertex x = 0; x < g.size(); ++x) {
    if (assigned[x] == -1) {
      throw Error(ErrorKind::kParseError,
                  "vertex '" + g.label(x) + "' is on neither side");
    }
    sides.push_back(static_cast<Side>(assigned[x]));
  }
  return Partition(std::move(sides));
}

std::string render_svg(const std::vector<Cell>& cells,
                       const Partition& partition, const SvgOptions& options) {
  if (cells.size() != partition.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "partition does not match the cell list");
  }
  double min_x = cells.front().i, max_x = cells.front().i + 1.0;
  double min_y = cells.front().j, max_y = cells.front().j + 1.0;
  for (const Cell& c : cells) {
    min_x = std::min<double>(min_x, c.i);
    max_x = std::max<double>(max_x, c.i + 1.0);
    min_y = std::min<double>(min_y, c.j);
    max_y = std::max<double>(max_y, c.j + 1.0);
  }
  std::optional<std::pair<double, double>> centre;
  if (options.circle_at) {
    centre = {options.circle_at->i + 0.5, options.circle_at->j + 0.5};
    min_x = std::min(min_x, centre->first - options.radius);
    max_x = std::max(max_x, centre->first + options.radius);
    min_y = std::min(min_y, centre->second - options.radius);
    max_y = std::max(max_y, centre->second + options.radius);
  }
  const double u = options.unit;
  const double pad = 1.0;
  const double width = (max_x - min_x) * u + 2 * pad;
  const double height = (max_y - min_y) * u + 2 * pad;
  auto px = [&](double x) { return format_real((x - min_x) * u + pad); };
  auto py = [&](double y) { return format_real((max_y - y) * u + pad); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         format_real(width) + "\" height=\"" + format_real(height) +
         "\" viewBox=\"0 0 " + format_real(width) + ' ' + format_real(height) +
         "\">\n";
  for (Vertex k = 0; k < cells.size(); ++k) {
    const Cell& c = cells[k];
    const auto fill =
        partition.side(k) == Side::kA ? kSideAFill : kSideBFill;
    out += "  <rect x=\"" + px(c.i) + "\" y=\"" + py(c.j + 1.0) +
           "\" width=\"" + format_real(u) + "\" height=\"" + format_real(u) +
           "\" fill=\"" + std::string(fill) +
           "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  }
  if (centre) {
    out += "  <circle cx=\"" + px(centre->first) + "\" cy=\"" +
           py(centre->second) + "\" r=\"" + format_real(options.radius * u) +
           "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIoError, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(ErrorKind::kIoError, "failed writing " + path.string());
}

}  // namespace wgd::io
