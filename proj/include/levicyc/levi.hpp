#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "levicyc/arrangement.hpp"

namespace levicyc {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
   public:
    explicit Graph(int n = 0) : adj_(n) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const;
    const std::vector<int> &neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    /// Throws BadParam on loops, duplicate edges or bad indices.
    void add_edge(int u, int v);

    /// Edges (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph &, const Graph &) = default;

   private:
    std::vector<std::vector<int>> adj_;
};

/// Levi graph of an arrangement. Vertices 0..s-1 are the points x1..xs,
/// vertices s..s+k-1 the lines y1..yk.
class LeviGraph {
   public:
    LeviGraph(int point_count, int line_count, std::vector<std::string> point_names,
              std::vector<std::string> line_names);

    int point_count() const { return s_; }
    int line_count() const { return k_; }
    int point_vertex(PointId p) const { return p.value; }
    int line_vertex(LineId l) const { return s_ + l.value; }
    bool is_point_vertex(int v) const { return v < s_; }

    /// "x<i>" for points and "y<j>" for lines, 1-based.
    std::string vertex_name(int v) const;

    void add_incidence(PointId p, LineId l) { graph_.add_edge(point_vertex(p), line_vertex(l)); }

    const Graph &graph() const { return graph_; }
    const std::vector<std::string> &point_names() const { return point_names_; }
    const std::vector<std::string> &line_names() const { return line_names_; }

    friend bool operator==(const LeviGraph &, const LeviGraph &) = default;

   private:
    int s_;
    int k_;
    std::vector<std::string> point_names_;
    std::vector<std::string> line_names_;
    Graph graph_;
};

LeviGraph build_levi(const Arrangement &arr);

/// Recovers the incidence from the line-part neighborhoods. Throws
/// InvalidArrangement if the graph is not the Levi graph of an arrangement.
Arrangement to_arrangement(const LeviGraph &g);

/// Replaces every edge uv by a path u - x_uv - v. Original vertices keep
/// their indices; the vertex for the e-th edge of g.edges() is n + e.
Graph subdivide(const Graph &g);

/// Length of a shortest cycle, or nullopt for a forest.
std::optional<int> girth(const Graph &g);

/// DOT text: graph `levi`, points as circles, lines as boxes.
std::string export_dot(const LeviGraph &g);

/// JSON mirror: counts, names and the edge list by vertex name.
std::string export_json(const LeviGraph &g);

/// Inverse of export_json. Throws ParseError on malformed input, unknown
/// vertices, duplicate or non-bipartite edges.
LeviGraph read_levi_json(const std::string &text);

}  // namespace levicyc
