#include "ramsey/ncolor.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "ramsey/error.hpp"

namespace ramsey {
namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

std::uint64_t parse_u64(std::string_view text, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad number '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_field(const std::string& tok, std::string_view key, std::size_t line_no) {
  if (tok.size() <= key.size() + 1 || tok.compare(0, key.size(), key) != 0 || tok[key.size()] != '=') {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": expected " + std::string(key) + "=<value>, got '" + tok + "'");
  }
  return parse_u64(std::string_view(tok).substr(key.size() + 1), line_no);
}

// Next non-blank, non-comment line; false at end of input.
bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

ColoredGraph parse_ncolor(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(in, line, line_no)) throw Error(ErrorCode::ParseError, "empty coloring spec");

  auto header = split_ws(line);
  if (header.size() < 4 || header.size() > 5 || header[0] != "ncolor") {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'ncolor n=.. r=.. v=..'");
  }
  const auto n = parse_field(header[1], "n", line_no);
  const auto r = parse_field(header[2], "r", line_no);
  const auto count = parse_field(header[3], "v", line_no);
  const auto base = header.size() == 5 ? parse_field(header[4], "base", line_no) : 0;
  if (n < 1 || n > 64 || r < 1 || r > kMaxColors || count > (1u << 24)) {
    throw Error(ErrorCode::ParseError, "header values out of range");
  }

  std::vector<Vertex> vertices(count);
  for (std::size_t i = 0; i < count; ++i) vertices[i] = static_cast<Vertex>(base + i);

  if (!next_line(in, line, line_no)) throw Error(ErrorCode::ParseError, "missing 'table' or 'oracle' line");
  auto mode = split_ws(line);
  if (mode.size() == 2 && mode[0] == "oracle") {
    const auto seed = parse_field(mode[1], "seed", line_no);
    if (next_line(in, line, line_no)) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": trailing content after oracle");
    }
    return make_graph(std::move(vertices), static_cast<int>(n), static_cast<int>(r),
                      ColoringSource::oracle(seed, static_cast<int>(r)));
  }
  if (mode.size() != 1 || mode[0] != "table") {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'table' or 'oracle seed=..'");
  }

  ColorTable table;
  while (next_line(in, line, line_no)) {
    auto toks = split_ws(line);
    if (toks.size() < 2) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": short entry");
    Edge edge;
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
      edge.push_back(static_cast<Vertex>(parse_u64(toks[i], line_no)));
    }
    ColorSet colors;
    std::string_view list = toks.back();
    while (!list.empty()) {
      const auto comma = list.find(',');
      const auto c = parse_u64(list.substr(0, comma), line_no);
      if (c < 1 || c > r) {
        throw Error(ErrorCode::ColorOutOfRange, "line " + std::to_string(line_no) + ": color " + std::to_string(c));
      }
      colors.insert(static_cast<Color>(c));
      list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    }
    std::sort(edge.begin(), edge.end());
    auto& slot = table[std::move(edge)];
    slot = slot | colors;
  }
  return make_graph(std::move(vertices), static_cast<int>(n), static_cast<int>(r),
                    ColoringSource::table(std::move(table)));
}

ColoredGraph parse_ncolor(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_ncolor(in);
}

ColoredGraph load_ncolor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return parse_ncolor(in);
}

std::string to_ncolor(const ColoredGraph& graph) {
  const auto& vs = graph.vertices();
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (vs[i] != vs[0] + i) throw Error(ErrorCode::InvalidArgument, "coloring spec needs contiguous vertex labels");
  }
  const Vertex base = vs.empty() ? 0 : vs.front();
  std::ostringstream out;
  out << "ncolor n=" << graph.arity() << " r=" << graph.color_count() << " v=" << vs.size();
  if (base != 0) out << " base=" << base;
  out << '\n';
  if (graph.source().kind() == ColoringSource::Kind::Oracle) {
    out << "oracle seed=" << graph.source().seed() << '\n';
    return out.str();
  }
  out << "table\n";
  for (const auto& edge : edges_of(graph)) {
    for (Vertex v : edge) out << v << ' ';
    const auto colors = colors_of(graph, edge).to_vector();
    for (std::size_t i = 0; i < colors.size(); ++i) out << (i ? "," : "") << colors[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace ramsey
