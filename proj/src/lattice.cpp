#include "flatband/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace flatband {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    out.push_back({std::string(line.substr(start, i - start)),
                   static_cast<int>(start) + 1});
  }
  return out;
}

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

int32_t parse_int(const Token& t, int line) {
  int32_t value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ParseError("expected integer, got '" + t.text + "'", line, t.column);
  return value;
}

}  // namespace

QuotientGraph QuotientGraph::parse(std::string_view text) {
  QuotientGraph g;
  std::map<std::string, int> label_index;
  std::set<std::pair<std::pair<int, int>, IntVec>> seen_edges;
  bool have_dim = false, have_vertices = false;

  int line_no = 0;
  size_t pos = 0;
  std::vector<int> vertex_line;  // line on which each vertex was declared
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                       : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& kw = tokens[0].text;

    if (kw == "dim") {
      if (have_dim) throw ParseError("duplicate 'dim' line", line_no, tokens[0].column);
      if (tokens.size() != 2)
        throw ParseError("'dim' takes exactly one integer", line_no, tokens[0].column);
      int d = parse_int(tokens[1], line_no);
      if (d < 1) throw ParseError("dimension must be positive", line_no, tokens[1].column);
      g.dim_ = d;
      have_dim = true;
    } else if (kw == "vertices") {
      if (!have_dim)
        throw ParseError("'vertices' before 'dim'", line_no, tokens[0].column);
      if (have_vertices)
        throw ParseError("duplicate 'vertices' line", line_no, tokens[0].column);
      if (tokens.size() < 2)
        throw ParseError("'vertices' needs at least one label", line_no, tokens[0].column);
      for (size_t k = 1; k < tokens.size(); ++k) {
        const std::string& lab = tokens[k].text;
        if (!valid_label(lab))
          throw ParseError("invalid vertex label '" + lab + "'", line_no,
                           tokens[k].column);
        if (label_index.count(lab))
          throw ParseError("duplicate vertex label '" + lab + "'", line_no,
                           tokens[k].column);
        label_index[lab] = static_cast<int>(g.labels_.size());
        g.labels_.push_back(lab);
        vertex_line.push_back(line_no);
      }
      have_vertices = true;
    } else if (kw == "edge") {
      if (!have_vertices)
        throw ParseError("'edge' before 'vertices'", line_no, tokens[0].column);
      if (tokens.size() != 3 + static_cast<size_t>(g.dim_))
        throw ParseError("'edge' needs two labels and " + std::to_string(g.dim_) +
                             " offset coordinates",
                         line_no, tokens[0].column);
      auto vi = label_index.find(tokens[1].text);
      if (vi == label_index.end())
        throw ParseError("unknown vertex label '" + tokens[1].text + "'", line_no,
                         tokens[1].column);
      auto vj = label_index.find(tokens[2].text);
      if (vj == label_index.end())
        throw ParseError("unknown vertex label '" + tokens[2].text + "'", line_no,
                         tokens[2].column);
      QuotientEdge e;
      e.i = vi->second;
      e.j = vj->second;
      e.offset.resize(static_cast<size_t>(g.dim_));
      for (int k = 0; k < g.dim_; ++k)
        e.offset[static_cast<size_t>(k)] = parse_int(tokens[3 + static_cast<size_t>(k)], line_no);
      bool zero_offset = ivec_sup_norm(e.offset) == 0;
      if (e.i == e.j && zero_offset)
        throw ParseError("self-loop: edge connects a vertex to itself in the same cell",
                         line_no, tokens[1].column);
      auto key = std::make_pair(std::make_pair(e.i, e.j), e.offset);
      auto rkey = std::make_pair(std::make_pair(e.j, e.i), ivec_neg(e.offset));
      if (seen_edges.count(key) || seen_edges.count(rkey))
        throw ParseError("duplicate edge (or reverse of an existing edge)", line_no,
                         tokens[1].column);
      seen_edges.insert(key);
      g.edges_.push_back(std::move(e));
    } else {
      throw ParseError("unknown keyword '" + kw + "'", line_no, tokens[0].column);
    }
  }
  if (!have_dim) throw ParseError("missing 'dim' line", line_no, 1);
  if (!have_vertices) throw ParseError("missing 'vertices' line", line_no, 1);

  g.degrees_.assign(g.labels_.size(), 0);
  for (const auto& e : g.edges_) {
    g.degrees_[static_cast<size_t>(e.i)] += 1;
    g.degrees_[static_cast<size_t>(e.j)] += 1;
  }
  for (size_t i = 0; i < g.degrees_.size(); ++i) {
    if (g.degrees_[i] == 0)
      throw ParseError("vertex '" + g.labels_[i] + "' has degree 0", vertex_line[i], 1);
  }
  return g;
}

std::vector<CellVertex> QuotientGraph::neighbors(const CellVertex& v) const {
  std::vector<CellVertex> out;
  for (const auto& e : edges_) {
    if (e.i == v.vertex) out.push_back({ivec_add(v.cell, e.offset), e.j});
    if (e.j == v.vertex) out.push_back({ivec_sub(v.cell, e.offset), e.i});
  }
  return out;
}

std::set<IntVec> folner_ball(const QuotientGraph& g, int j) {
  std::set<IntVec> out;
  IntVec cur(static_cast<size_t>(g.dim()), static_cast<int32_t>(-j));
  while (true) {
    out.insert(cur);
    int k = 0;
    while (k < g.dim() && cur[static_cast<size_t>(k)] == j) {
      cur[static_cast<size_t>(k)] = static_cast<int32_t>(-j);
      ++k;
    }
    if (k == g.dim()) break;
    ++cur[static_cast<size_t>(k)];
  }
  return out;
}

std::set<CellVertex> cross_with_domain(const QuotientGraph& g,
                                       const std::set<IntVec>& cells) {
  std::set<CellVertex> out;
  for (const auto& c : cells)
    for (int w = 0; w < g.vertex_count(); ++w) out.insert({c, w});
  return out;
}

std::set<CellVertex> thick_boundary(const QuotientGraph& g,
                                    const std::set<CellVertex>& f, int r) {
  std::set<CellVertex> visited = f;
  std::set<CellVertex> layer = f;
  std::set<CellVertex> boundary;
  for (int round = 0; round < r; ++round) {
    std::set<CellVertex> next;
    for (const auto& v : layer) {
      for (const auto& w : g.neighbors(v)) {
        if (visited.insert(w).second) {
          next.insert(w);
          boundary.insert(w);
        }
      }
    }
    if (next.empty()) break;
    layer = std::move(next);
  }
  return boundary;
}

int FiniteSection::index_of(const CellVertex& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || !(*it == v)) return -1;
  return static_cast<int>(it - vertices.begin());
}

FiniteSection induced_section(const QuotientGraph& g, const std::set<CellVertex>& s) {
  FiniteSection sec;
  sec.vertices.assign(s.begin(), s.end());
  size_t n = sec.vertices.size();
  sec.degrees_internal.assign(n, 0);
  sec.degrees_ambient.assign(n, 0);
  std::set<std::pair<int, int>> pairs;
  for (size_t a = 0; a < n; ++a) {
    const CellVertex& v = sec.vertices[a];
    sec.degrees_ambient[a] = g.degree(v.vertex);
    for (const auto& w : g.neighbors(v)) {
      int b = sec.index_of(w);
      if (b < 0) continue;
      ++sec.degrees_internal[a];
      int lo = std::min(static_cast<int>(a), b), hi = std::max(static_cast<int>(a), b);
      pairs.insert({lo, hi});
    }
  }
  sec.adjacency.assign(pairs.begin(), pairs.end());
  return sec;
}

}  // namespace flatband
