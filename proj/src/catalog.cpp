#include "orc/catalog.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

#include "orc/errors.hpp"
#include "orc/golay.hpp"

namespace orc {

namespace {

constexpr std::array<Edge, 80> kWellsEdges{{
    {0,3}, {0,5}, {0,8}, {0,17}, {0,30}, {1,2}, {1,4}, {1,9}, {1,16}, {1,31},
    {2,7}, {2,10}, {2,19}, {2,28}, {3,6}, {3,11}, {3,18}, {3,29}, {4,6}, {4,13},
    {4,20}, {4,26}, {5,7}, {5,12}, {5,21}, {5,27}, {6,15}, {6,22}, {6,24}, {7,14},
    {7,23}, {7,25}, {8,10}, {8,13}, {8,23}, {8,24}, {9,11}, {9,12}, {9,22}, {9,25},
    {10,15}, {10,21}, {10,26}, {11,14}, {11,20}, {11,27}, {12,15}, {12,18}, {12,28}, {13,14},
    {13,19}, {13,29}, {14,16}, {14,30}, {15,17}, {15,31}, {16,18}, {16,21}, {16,24}, {17,19},
    {17,20}, {17,25}, {18,23}, {18,26}, {19,22}, {19,27}, {20,23}, {20,28}, {21,22}, {21,29},
    {22,30}, {23,31}, {24,27}, {24,28}, {25,26}, {25,29}, {26,30}, {27,31}, {28,30}, {29,31},
}};

void require_count(std::string_view name, std::span<const int> params, std::size_t expected) {
  if (params.size() != expected) {
    throw InputError(std::string(name) + " takes " + std::to_string(expected) + " parameter(s), got " +
                     std::to_string(params.size()));
  }
}

void require_range(std::string_view name, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw InputError(std::string(name) + " parameter " + std::to_string(value) + " outside " + std::to_string(lo) +
                     ".." + std::to_string(hi));
  }
}

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_graph(n, edges);
}

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return build_graph(n, edges);
}

Graph complete_bipartite(int m, int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < n; ++v) edges.emplace_back(u, m + v);
  }
  return build_graph(m + n, edges);
}

Graph hamming(int d, int q) {
  long long count = 1;
  for (int i = 0; i < d; ++i) count *= q;
  const int n = static_cast<int>(count);
  std::vector<Edge> edges;
  for (int w = 0; w < n; ++w) {
    int place = 1;
    for (int i = 0; i < d; ++i, place *= q) {
      int digit = (w / place) % q;
      for (int other = digit + 1; other < q; ++other) edges.emplace_back(w, w + (other - digit) * place);
    }
  }
  return build_graph(n, edges);
}

Graph johnson(int n, int m) {
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) == m) subsets.push_back(s);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      if (std::popcount(subsets[i] & subsets[j]) == m - 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return build_graph(static_cast<int>(subsets.size()), edges);
}

Graph petersen() {
  std::vector<std::uint32_t> pairs;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) pairs.push_back((1u << a) | (1u << b));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if ((pairs[i] & pairs[j]) == 0) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return build_graph(10, edges);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto at = text.find(sep, start);
    parts.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

int parse_int(std::string_view token, const std::string& context) {
  int value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size() || token.empty()) {
    throw InputError(context + ": '" + std::string(token) + "' is not an integer");
  }
  return value;
}

std::pair<std::string, std::vector<int>> parse_spec(std::string_view spec) {
  auto parts = split(spec, ':');
  std::vector<int> params;
  for (std::size_t i = 1; i < parts.size(); ++i) params.push_back(parse_int(parts[i], "graph spec"));
  return {std::string(parts.front()), params};
}

IntersectionArray cycle_array(int n) {
  IntersectionArray arr;
  const int d = n / 2;
  for (int i = 0; i < d; ++i) arr.b.push_back(i == 0 ? 2 : 1);
  for (int i = 1; i <= d; ++i) arr.c.push_back(i == d && n % 2 == 0 ? 2 : 1);
  return arr;
}

std::optional<IntersectionArray> expected_array(const std::string& name, const std::vector<int>& p) {
  if (name == "cycle") return cycle_array(p[0]);
  if (name == "complete") return IntersectionArray{{p[0] - 1}, {1}};
  if (name == "complete_bipartite") {
    if (p[0] != p[1]) return std::nullopt;
    return IntersectionArray{{p[0], p[0] - 1}, {1, p[0]}};
  }
  if (name == "hypercube" || name == "hamming") {
    const int d = p[0];
    const int q = name == "hypercube" ? 2 : p[1];
    IntersectionArray arr;
    for (int i = 0; i < d; ++i) arr.b.push_back((d - i) * (q - 1));
    for (int i = 1; i <= d; ++i) arr.c.push_back(i);
    return arr;
  }
  if (name == "johnson") {
    const int n = p[0];
    const int m = p[1];
    IntersectionArray arr;
    for (int i = 0; i < std::min(m, n - m); ++i) arr.b.push_back((m - i) * (n - m - i));
    for (int i = 1; i <= std::min(m, n - m); ++i) arr.c.push_back(i * i);
    return arr;
  }
  if (name == "petersen") return IntersectionArray{{3, 2}, {1, 1}};
  if (name == "wells") return IntersectionArray{{5, 4, 1, 1}, {1, 1, 4, 5}};
  if (name == "golay_coset_shortened") return IntersectionArray{{22, 21, 20, 3, 2, 1}, {1, 2, 3, 20, 21, 22}};
  if (name == "golay_coset_truncated_shortened") {
    return IntersectionArray{{21, 20, 16, 6, 2, 1}, {1, 2, 6, 16, 20, 21}};
  }
  return std::nullopt;
}

std::string provenance_of(const std::string& name) {
  if (name == "wells") return "embedded adjacency data; 2-cover of the Clebsch graph";
  if (name == "golay_coset_shortened") return "coset graph of the [22,11,6] shortened Golay code";
  if (name == "golay_coset_truncated_shortened") {
    return "coset graph of the [21,11,5] code: Golay words with c_0 = c_1, coordinates 0 and 1 dropped";
  }
  if (name == "petersen") return "Kneser graph K(5,2)";
  return "classical family, closed-form array";
}

void validate_params(const std::string& name, const std::vector<int>& p) {
  if (name == "cycle") {
    require_count(name, p, 1);
    require_range(name, p[0], 3, 1 << 20);
  } else if (name == "complete") {
    require_count(name, p, 1);
    require_range(name, p[0], 2, 4096);
  } else if (name == "complete_bipartite") {
    require_count(name, p, 2);
    require_range(name, p[0], 1, 4096);
    require_range(name, p[1], 1, 4096);
  } else if (name == "hypercube") {
    require_count(name, p, 1);
    require_range(name, p[0], 1, 20);
  } else if (name == "hamming") {
    require_count(name, p, 2);
    require_range(name, p[0], 1, 20);
    require_range(name, p[1], 2, 64);
    long long count = 1;
    for (int i = 0; i < p[0]; ++i) count *= p[1];
    if (count > (1 << 20)) throw InputError("hamming graph too large");
  } else if (name == "johnson") {
    require_count(name, p, 2);
    require_range(name, p[0], 2, 24);
    require_range(name, p[1], 1, p[0] - 1);
  } else if (name == "petersen" || name == "wells" || name == "golay_coset_shortened" ||
             name == "golay_coset_truncated_shortened") {
    require_count(name, p, 0);
  } else {
    throw InputError("unknown graph family '" + name + "'");
  }
}

}  // namespace

std::string CatalogEntry::spec() const {
  std::string out = name;
  for (int p : params) out += ":" + std::to_string(p);
  return out;
}

std::vector<std::string> family_names() {
  return {"cycle",  "complete", "complete_bipartite", "hypercube", "hamming", "johnson",
          "petersen", "wells",  "golay_coset_shortened", "golay_coset_truncated_shortened"};
}

Graph golay_coset_shortened() { return coset_graph(shorten(golay_code(), 0)); }

Graph golay_coset_truncated_shortened() { return coset_graph(merge_coordinates(golay_code(), 0, 1)); }

Graph golay_coset_shorten_then_puncture() {
  auto shortened = shorten(golay_code(), 0);
  return coset_graph(puncture(shortened, shortened.length() - 1));
}

Graph generate(std::string_view name_view, std::span<const int> params) {
  const std::string name(name_view);
  const std::vector<int> p(params.begin(), params.end());
  validate_params(name, p);
  if (name == "cycle") return cycle(p[0]);
  if (name == "complete") return complete(p[0]);
  if (name == "complete_bipartite") return complete_bipartite(p[0], p[1]);
  if (name == "hypercube") return hamming(p[0], 2);
  if (name == "hamming") return hamming(p[0], p[1]);
  if (name == "johnson") return johnson(p[0], p[1]);
  if (name == "petersen") return petersen();
  if (name == "wells") return build_graph(32, kWellsEdges);
  if (name == "golay_coset_shortened") return golay_coset_shortened();
  return golay_coset_truncated_shortened();
}

Graph generate(std::string_view spec) {
  auto [name, params] = parse_spec(spec);
  return generate(name, params);
}

CatalogEntry describe(std::string_view spec) {
  auto [name, params] = parse_spec(spec);
  validate_params(name, params);
  CatalogEntry entry;
  entry.name = name;
  entry.params = params;
  entry.expected = expected_array(name, params);
  entry.vertex_transitive = !(name == "complete_bipartite" && params[0] != params[1]);
  entry.provenance = provenance_of(name);
  return entry;
}

std::vector<CatalogEntry> standard_catalog() {
  std::vector<CatalogEntry> out;
  for (const char* spec : {"complete:2", "complete:5", "cycle:6", "cycle:7", "complete_bipartite:3:3",
                           "complete_bipartite:3:4", "hypercube:3", "hypercube:4", "hypercube:5", "hypercube:6",
                           "hamming:2:3", "hamming:3:3", "johnson:5:2", "johnson:6:3", "petersen", "wells",
                           "golay_coset_shortened", "golay_coset_truncated_shortened"}) {
    out.push_back(describe(spec));
  }
  return out;
}

Graph load_edge_list(std::string_view text) {
  std::optional<int> n;
  std::vector<Edge> edges;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    auto number = [&](const std::string& t) {
      try {
        return parse_int(t, "value");
      } catch (const InputError&) {
        throw ParseError(line_no, "'" + t + "' is not an integer");
      }
    };
    if (!n) {
      if (tokens.size() != 1) throw ParseError(line_no, "expected the vertex count alone on the first line");
      n = number(tokens[0]);
      if (*n < 0) throw ParseError(line_no, "negative vertex count");
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected two endpoints, got " + std::to_string(tokens.size()) + " fields");
    int u = number(tokens[0]);
    int v = number(tokens[1]);
    if (u < 0 || v < 0 || u >= *n || v >= *n) {
      throw ParseError(line_no, "endpoint out of range 0.." + std::to_string(*n - 1));
    }
    if (u == v) throw ParseError(line_no, "self-loop at " + std::to_string(u));
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (!n) throw ParseError(line_no, "missing vertex count");
  return build_graph(*n, edges);
}

std::string save_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_edge_list(buffer.str());
}

}  // namespace orc
