#include "levicyc/levi.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include <json.hpp>

#include "levicyc/errors.hpp"

namespace levicyc {

using nlohmann::json;

int Graph::edge_count() const {
    size_t total = 0;
    for (const auto &a : adj_) total += a.size();
    return static_cast<int>(total / 2);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= vertex_count()) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

void Graph::add_edge(int u, int v) {
    const int n = vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) throw BadParam("edge endpoint out of range");
    if (u == v) throw BadParam("loops are not allowed");
    if (has_edge(u, v)) throw BadParam("duplicate edge");
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

LeviGraph::LeviGraph(int point_count, int line_count, std::vector<std::string> point_names,
                     std::vector<std::string> line_names)
    : s_(point_count),
      k_(line_count),
      point_names_(std::move(point_names)),
      line_names_(std::move(line_names)),
      graph_(point_count + line_count) {
    if (point_count < 0 || line_count < 0) throw BadParam("negative vertex count");
    if (static_cast<int>(point_names_.size()) != s_ || static_cast<int>(line_names_.size()) != k_)
        throw BadParam("name lists do not match the vertex counts");
}

std::string LeviGraph::vertex_name(int v) const {
    return is_point_vertex(v) ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - s_ + 1);
}

LeviGraph build_levi(const Arrangement &arr) {
    LeviGraph g(arr.point_count(), arr.line_count(), arr.point_names(), arr.line_names());
    for (int p = 0; p < arr.point_count(); ++p)
        for (int l : arr.lines_through(PointId{p})) g.add_incidence(PointId{p}, LineId{l});
    return g;
}

Arrangement to_arrangement(const LeviGraph &g) {
    Incidence inc{g.line_count(), std::vector<std::vector<int>>(g.point_count())};
    for (int l = 0; l < g.line_count(); ++l)
        for (int v : g.graph().neighbors(g.line_vertex(LineId{l}))) {
            if (!g.is_point_vertex(v)) throw InvalidArrangement("edge between two lines");
            inc.points[v].push_back(l);
        }
    return Arrangement(std::move(inc), g.line_names(), g.point_names());
}

Graph subdivide(const Graph &g) {
    auto edges = g.edges();
    const int n = g.vertex_count();
    Graph out(n + static_cast<int>(edges.size()));
    for (size_t e = 0; e < edges.size(); ++e) {
        int mid = n + static_cast<int>(e);
        out.add_edge(edges[e].first, mid);
        out.add_edge(mid, edges[e].second);
    }
    return out;
}

std::optional<int> girth(const Graph &g) {
    const int n = g.vertex_count();
    std::optional<int> best;
    std::vector<int> dist(n), parent(n);
    for (int src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        parent[src] = -1;
        std::deque<int> queue{src};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (parent[u] != v) {
                    int len = dist[u] + dist[v] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

namespace {

std::string dot_escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string export_dot(const LeviGraph &g) {
    std::ostringstream os;
    os << "graph levi {\n";
    for (int p = 0; p < g.point_count(); ++p)
        os << "  x" << p + 1 << " [shape=circle, color=red, label=\"" << dot_escape(g.point_names()[p]) << "\"];\n";
    for (int l = 0; l < g.line_count(); ++l)
        os << "  y" << l + 1 << " [shape=box, color=blue, label=\"" << dot_escape(g.line_names()[l]) << "\"];\n";
    for (auto [u, v] : g.graph().edges()) os << "  " << g.vertex_name(u) << " -- " << g.vertex_name(v) << ";\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const LeviGraph &g) {
    json j;
    j["point_count"] = g.point_count();
    j["line_count"] = g.line_count();
    j["point_names"] = g.point_names();
    j["line_names"] = g.line_names();
    json edges = json::array();
    for (auto [u, v] : g.graph().edges()) edges.push_back({g.vertex_name(u), g.vertex_name(v)});
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

LeviGraph read_levi_json(const std::string &text) {
    try {
        json j = json::parse(text);
        int s = j.at("point_count").get<int>();
        int k = j.at("line_count").get<int>();
        if (s < 0 || k < 0) throw ParseError("negative vertex count");
        std::vector<std::string> pn, ln;
        if (j.contains("point_names")) pn = j.at("point_names").get<std::vector<std::string>>();
        else
            for (int i = 1; i <= s; ++i) pn.push_back("P" + std::to_string(i));
        if (j.contains("line_names")) ln = j.at("line_names").get<std::vector<std::string>>();
        else
            for (int i = 1; i <= k; ++i) ln.push_back("L" + std::to_string(i));
        if (static_cast<int>(pn.size()) != s || static_cast<int>(ln.size()) != k)
            throw ParseError("name lists do not match the vertex counts");
        LeviGraph g(s, k, pn, ln);

        std::map<std::string, int> vertex;
        for (int v = 0; v < s + k; ++v) vertex[g.vertex_name(v)] = v;
        for (const auto &e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("an edge must be a pair of vertex names");
            std::string a = e[0].get<std::string>(), b = e[1].get<std::string>();
            auto ia = vertex.find(a), ib = vertex.find(b);
            if (ia == vertex.end()) throw ParseError("edge to unknown vertex " + a);
            if (ib == vertex.end()) throw ParseError("edge to unknown vertex " + b);
            int u = ia->second, v = ib->second;
            if (g.is_point_vertex(u) == g.is_point_vertex(v)) throw ParseError("edge " + a + " -- " + b + " is not bipartite");
            if (g.graph().has_edge(u, v)) throw ParseError("duplicate edge " + a + " -- " + b);
            if (g.is_point_vertex(u)) g.add_incidence(PointId{u}, LineId{v - s});
            else
                g.add_incidence(PointId{v}, LineId{u - s});
        }
        return g;
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed Levi JSON: ") + e.what());
    }
}

}  // namespace levicyc
