#include "orichrome/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "orichrome/error.hpp"

namespace orichrome {

namespace {

std::string_view strip_comment(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.remove_suffix(1);
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
  return line;
}

bool read_two(std::string_view line, long long& a, long long& b) {
  std::istringstream in{std::string(line)};
  std::string extra;
  return static_cast<bool>(in >> a >> b) && !(in >> extra);
}

}  // namespace

OrientedGraph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Arc> arcs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = strip_comment(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty()) continue;
    long long a = 0;
    long long b = 0;
    if (!read_two(line, a, b)) throw ParseError(line_no, "expected two integers, got '" + std::string(line) + "'");
    if (!have_header) {
      if (n < 0 || a < 0 || b < 0 || a > (1 << 24)) throw ParseError(line_no, "invalid header");
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ParseError(line_no, "arc endpoint out of range [0," + std::to_string(n) + ")");
    }
    if (static_cast<long long>(arcs.size()) >= m) throw ParseError(line_no, "more arcs than declared");
    arcs.push_back({static_cast<int>(a), static_cast<int>(b)});
  }
  if (!have_header) throw ParseError(line_no, "missing header line 'n m'");
  if (static_cast<long long>(arcs.size()) != m) {
    throw ParseError(line_no, "declared " + std::to_string(m) + " arcs, found " + std::to_string(arcs.size()));
  }
  return OrientedGraph::from_arcs(static_cast<int>(n), arcs);
}

std::string serialize_edge_list(const OrientedGraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Arc& a : g.arcs()) out << a.from << ' ' << a.to << '\n';
  return out.str();
}

nlohmann::json graph_to_json(const OrientedGraph& g) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.from, a.to});
  return {{"n", g.order()}, {"arcs", std::move(arcs)}};
}

OrientedGraph graph_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs")) {
      const int u = a.at(0).get<int>();
      const int v = a.at(1).get<int>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(1, "arc endpoint out of range");
      arcs.push_back({u, v});
    }
    return OrientedGraph::from_arcs(n, arcs);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("malformed graph JSON: ") + e.what());
  }
}

OrientedGraph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(1, e.what());
    }
    return graph_from_json(j);
  }
  return parse_edge_list(text);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

OrientedGraph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

}  // namespace orichrome
