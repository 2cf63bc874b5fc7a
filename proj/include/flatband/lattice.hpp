#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "flatband/common.hpp"

namespace flatband {

// One vertex of the infinite graph: a lattice cell plus an index into the
// fundamental domain.
struct CellVertex {
  IntVec cell;
  int vertex = 0;
  auto operator<=>(const CellVertex&) const = default;
};

struct QuotientEdge {
  int i = 0, j = 0;  // vertex indices into the fundamental domain
  IntVec offset;     // cell of the second endpoint relative to the first
};

// Finite description of a Z^d-periodic graph: fundamental-domain vertices and
// edges decorated with lattice offsets. Each edge is stored once; the reverse
// adjacency (j, i, -offset) is implied.
class QuotientGraph {
public:
  // Parses the line-oriented text format (see README: `dim`, `vertices`,
  // `edge` lines, '#' comments). Vertex order in the file fixes all matrix
  // row/column conventions downstream.
  static QuotientGraph parse(std::string_view text);

  int dim() const { return dim_; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& vertex_labels() const { return labels_; }
  const std::vector<QuotientEdge>& edges() const { return edges_; }

  // Degree in the infinite realization; an edge (i,i,g) counts twice.
  int degree(int i) const { return degrees_[static_cast<size_t>(i)]; }

  // Neighbours of a vertex of the infinite graph, generated from the edge
  // list; the order is deterministic (edge-list order).
  std::vector<CellVertex> neighbors(const CellVertex& v) const;

private:
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<QuotientEdge> edges_;
  std::vector<int> degrees_;
};

// Cells {g : |g|_inf <= j}; |result| = (2j+1)^d.
std::set<IntVec> folner_ball(const QuotientGraph& g, int j);

// All CellVertex pairs (cell, w) for cell in `cells`.
std::set<CellVertex> cross_with_domain(const QuotientGraph& g,
                                       const std::set<IntVec>& cells);

// {v not in F : d(v, F) <= r}, by r rounds of neighbour expansion.
std::set<CellVertex> thick_boundary(const QuotientGraph& g,
                                    const std::set<CellVertex>& f, int r);

// Finite induced subgraph on a vertex set, with both the internal degrees
// (within the section) and the ambient degrees (in the infinite graph).
struct FiniteSection {
  std::vector<CellVertex> vertices;           // sorted ascending
  std::vector<std::pair<int, int>> adjacency; // index pairs, first < second
  std::vector<int> degrees_internal;
  std::vector<int> degrees_ambient;

  int index_of(const CellVertex& v) const;    // -1 when absent
};

FiniteSection induced_section(const QuotientGraph& g, const std::set<CellVertex>& s);

}  // namespace flatband
