#include "rminor/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace rminor {

namespace {

constexpr int kBias = 63;
constexpr long kMaxVertices = 4096;

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

}  // namespace

LabeledMultigraph parse_graph6(std::string_view line) {
  line = strip(line);
  constexpr std::string_view header = ">>graph6<<";
  if (line.starts_with(header)) line.remove_prefix(header.size());
  if (line.empty()) throw Error("graph6: empty input");
  for (char ch : line) {
    if (ch < kBias || ch > 126) throw Error("graph6: invalid character");
  }
  std::size_t pos = 0;
  long n = 0;
  if (line[0] != '~') {
    n = line[0] - kBias;
    pos = 1;
  } else if (line.size() >= 2 && line[1] == '~') {
    if (line.size() < 8) throw Error("graph6: truncated size field");
    for (std::size_t k = 2; k < 8; ++k) n = (n << 6) | (line[k] - kBias);
    pos = 8;
  } else {
    if (line.size() < 4) throw Error("graph6: truncated size field");
    for (std::size_t k = 1; k < 4; ++k) n = (n << 6) | (line[k] - kBias);
    pos = 4;
  }
  if (n > kMaxVertices) throw Error("graph6: too many vertices");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (line.size() - pos != need) throw Error("graph6: wrong length for " + std::to_string(n) + " vertices");

  LabeledMultigraph g;
  for (int v = 0; v < n; ++v) g.add_vertex(v);
  std::size_t k = 0;
  EdgeId id = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + k / 6] - kBias;
      if (byte & (1 << (5 - k % 6))) g.add_edge(id++, i, j);
    }
  }
  return g;
}

std::string to_graph6(const LabeledMultigraph& g) {
  if (!g.is_simple()) throw Error("graph6 encodes simple graphs only");
  const std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
  std::map<VertexId, int> rank;
  for (std::size_t i = 0; i < vs.size(); ++i) rank[vs[i]] = static_cast<int>(i);
  const long n = static_cast<long>(vs.size());
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    throw Error("graph6: too many vertices");
  }
  std::set<std::pair<int, int>> present;
  for (const auto& [id, e] : g.edges()) {
    const int a = rank.at(e.a), b = rank.at(e.b);
    present.emplace(std::min(a, b), std::max(a, b));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (present.contains({i, j}) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

nlohmann::ordered_json to_json(const LabeledMultigraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (VertexId v : g.vertices()) j["vertices"].push_back(v);
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [id, e] : g.edges()) {
    nlohmann::ordered_json edge;
    edge["id"] = id;
    edge["a"] = e.a;
    edge["b"] = e.b;
    j["edges"].push_back(std::move(edge));
  }
  return j;
}

LabeledMultigraph graph_from_json(const nlohmann::json& j) {
  try {
    LabeledMultigraph g;
    for (const auto& v : j.at("vertices")) g.add_vertex(v.get<VertexId>());
    for (const auto& e : j.at("edges")) {
      g.add_edge(e.at("id").get<EdgeId>(), e.at("a").get<VertexId>(), e.at("b").get<VertexId>());
    }
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed graph JSON: ") + ex.what());
  }
}

LabeledMultigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error(path + " is empty");
  if (text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
      throw Error(path + ": " + ex.what());
    }
    return graph_from_json(j);
  }
  const auto eol = text.find('\n', first);
  return parse_graph6(std::string_view(text).substr(first, eol == std::string::npos ? std::string::npos : eol - first));
}

std::vector<LabeledMultigraph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::vector<LabeledMultigraph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!strip(line).empty()) out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace rminor
