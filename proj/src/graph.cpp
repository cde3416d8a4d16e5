#include "ahtk/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace ahtk {

namespace {

void check_label(const std::string& label) {
    if (label.empty())
        throw validation_error("vertex label must be non-empty");
    for (unsigned char c : label) {
        if (std::isspace(c) || !std::isprint(c))
            throw validation_error("vertex label '" + label + "' contains whitespace or non-printable characters");
    }
}

}  // namespace

Graph Graph::make(std::vector<std::string> vertices,
                  std::vector<std::pair<std::string, std::string>> edges,
                  std::optional<std::string> base) {
    Graph g;
    for (const auto& v : vertices) check_label(v);
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw validation_error("duplicate vertex label");
    g.labels_ = std::move(vertices);
    g.adj_.assign(g.labels_.size(), {});

    std::set<std::pair<int, int>> edge_set;
    for (const auto& [a, b] : edges) {
        int u = g.index_of(a);
        int v = g.index_of(b);
        if (u == v)
            throw validation_error("self-loop at vertex '" + a + "' is not allowed");
        edge_set.emplace(std::min(u, v), std::max(u, v));
    }
    for (const auto& [u, v] : edge_set) {
        g.edges_.emplace_back(u, v);
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());

    if (base) g.base_ = g.index_of(*base);
    return g;
}

bool Graph::has_vertex(std::string_view label) const noexcept {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

int Graph::index_of(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        throw validation_error("unknown vertex '" + std::string(label) + "'");
    return static_cast<int>(it - labels_.begin());
}

const std::string& Graph::label(int v) const {
    if (v < 0 || v >= vertex_count())
        throw validation_error("vertex index out of range");
    return labels_[static_cast<size_t>(v)];
}

bool Graph::adjacent(int u, int v) const noexcept {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
    const auto& nbrs = adj_[static_cast<size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= vertex_count())
        throw validation_error("vertex index out of range");
    return adj_[static_cast<size_t>(v)];
}

std::optional<std::string> Graph::base_label() const {
    if (!base_) return std::nullopt;
    return labels_[static_cast<size_t>(*base_)];
}

bool Graph::operator==(const Graph& other) const {
    return labels_ == other.labels_ && edges_ == other.edges_ && base_ == other.base_;
}

Graph build_cycle(int k) {
    if (k < 3)
        throw validation_error("cycle needs at least 3 vertices, got " + std::to_string(k));
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < k; ++i) vertices.push_back("[" + std::to_string(i) + "]");
    for (int i = 0; i < k; ++i)
        edges.emplace_back(vertices[static_cast<size_t>(i)], vertices[static_cast<size_t>((i + 1) % k)]);
    return Graph::make(std::move(vertices), std::move(edges), "[0]");
}

Graph build_path(int n) {
    if (n < 0)
        throw validation_error("path length must be non-negative, got " + std::to_string(n));
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i <= n; ++i) vertices.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i)
        edges.emplace_back(std::to_string(i), std::to_string(i + 1));
    return Graph::make(std::move(vertices), std::move(edges), "0");
}

Graph cartesian_product(const Graph& a, const Graph& b) {
    auto pair_label = [](const std::string& x, const std::string& y) {
        return "(" + x + "," + y + ")";
    };
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& x : a.labels())
        for (const auto& y : b.labels()) vertices.push_back(pair_label(x, y));
    for (const auto& x : a.labels())
        for (const auto& [u, v] : b.edges())
            edges.emplace_back(pair_label(x, b.label(u)), pair_label(x, b.label(v)));
    for (const auto& [u, v] : a.edges())
        for (const auto& y : b.labels())
            edges.emplace_back(pair_label(a.label(u), y), pair_label(a.label(v), y));
    std::optional<std::string> base;
    if (a.base_label() && b.base_label()) base = pair_label(*a.base_label(), *b.base_label());
    return Graph::make(std::move(vertices), std::move(edges), std::move(base));
}

std::vector<std::string> closed_neighborhood(const Graph& g, std::string_view v) {
    int idx = g.index_of(v);
    std::vector<std::string> out;
    out.push_back(g.label(idx));
    for (int u : g.neighbors(idx)) out.push_back(g.label(u));
    std::sort(out.begin(), out.end());
    return out;
}

Graph star_subgraph(const Graph& g, std::string_view x) {
    int idx = g.index_of(x);
    std::vector<std::string> vertices = closed_neighborhood(g, x);
    std::vector<std::pair<std::string, std::string>> edges;
    for (int u : g.neighbors(idx)) edges.emplace_back(g.label(idx), g.label(u));
    std::optional<std::string> base;
    if (auto b = g.base_label(); b && std::find(vertices.begin(), vertices.end(), *b) != vertices.end())
        base = *b;
    return Graph::make(std::move(vertices), std::move(edges), std::move(base));
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int found = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v)) {
            if (!seen[static_cast<size_t>(u)]) {
                seen[static_cast<size_t>(u)] = 1;
                ++found;
                q.push(u);
            }
        }
    }
    return found == n;
}

bool has_short_cycle(const Graph& g) {
    // Triangle: an edge whose endpoints share a neighbor.
    for (const auto& [u, v] : g.edges()) {
        const auto& nu = g.neighbors(u);
        const auto& nv = g.neighbors(v);
        std::vector<int> common;
        std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
        if (!common.empty()) return true;
    }
    // 4-cycle: two distinct vertices with at least two common neighbors.
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const auto& nu = g.neighbors(u);
            const auto& nv = g.neighbors(v);
            std::vector<int> common;
            std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
            if (common.size() >= 2) return true;
        }
    }
    return false;
}

GraphHom GraphHom::make(GraphPtr source, GraphPtr target,
                        const std::vector<std::pair<std::string, std::string>>& assignment,
                        bool based) {
    if (!source || !target) throw validation_error("homomorphism requires source and target graphs");
    if (!is_graph_hom(assignment, *source, *target, based))
        throw validation_error("assignment is not a graph homomorphism");
    std::vector<int> map(static_cast<size_t>(source->vertex_count()), -1);
    for (const auto& [a, b] : assignment)
        map[static_cast<size_t>(source->index_of(a))] = target->index_of(b);
    return GraphHom(std::move(source), std::move(target), std::move(map), based);
}

GraphHom GraphHom::from_indices(GraphPtr source, GraphPtr target, std::vector<int> map, bool based) {
    if (!source || !target) throw validation_error("homomorphism requires source and target graphs");
    if (map.size() != static_cast<size_t>(source->vertex_count()))
        throw validation_error("vertex map must be total on the source graph");
    for (int t : map)
        if (t < 0 || t >= target->vertex_count())
            throw validation_error("vertex map image out of range");
    for (const auto& [u, v] : source->edges()) {
        int fu = map[static_cast<size_t>(u)];
        int fv = map[static_cast<size_t>(v)];
        if (!target->adjacent_or_equal(fu, fv))
            throw validation_error("map breaks the edge {" + source->label(u) + "," + source->label(v) + "}");
    }
    if (based) {
        if (!source->base_vertex() || !target->base_vertex())
            throw validation_error("based homomorphism requires base vertices on both graphs");
        if (map[static_cast<size_t>(*source->base_vertex())] != *target->base_vertex())
            throw validation_error("based homomorphism must map base to base");
    }
    return GraphHom(std::move(source), std::move(target), std::move(map), based);
}

GraphHom GraphHom::identity(GraphPtr g, bool based) {
    std::vector<int> map(static_cast<size_t>(g->vertex_count()));
    for (int i = 0; i < g->vertex_count(); ++i) map[static_cast<size_t>(i)] = i;
    GraphPtr target = g;
    return from_indices(std::move(g), std::move(target), std::move(map), based);
}

GraphHom GraphHom::constant(GraphPtr source, GraphPtr target, std::string_view value, bool based) {
    int t = target->index_of(value);
    std::vector<int> map(static_cast<size_t>(source->vertex_count()), t);
    return from_indices(std::move(source), std::move(target), std::move(map), based);
}

std::string GraphHom::apply_label(std::string_view v) const {
    return target_->label(apply(source_->index_of(v)));
}

bool GraphHom::is_onto() const {
    return image_size() == target_->vertex_count();
}

int GraphHom::image_size() const {
    std::set<int> image(map_.begin(), map_.end());
    return static_cast<int>(image.size());
}

bool GraphHom::operator==(const GraphHom& other) const {
    return *source_ == *other.source_ && *target_ == *other.target_ && map_ == other.map_ &&
           based_ == other.based_;
}

bool is_graph_hom(const std::vector<std::pair<std::string, std::string>>& assignment,
                  const Graph& g1, const Graph& g2, bool based) {
    std::vector<int> map(static_cast<size_t>(g1.vertex_count()), -1);
    for (const auto& [a, b] : assignment) {
        int u = g1.index_of(a);
        int t = g2.index_of(b);  // throws on unknown target label
        if (map[static_cast<size_t>(u)] != -1 && map[static_cast<size_t>(u)] != t)
            throw validation_error("vertex '" + a + "' is assigned twice");
        map[static_cast<size_t>(u)] = t;
    }
    for (int v = 0; v < g1.vertex_count(); ++v)
        if (map[static_cast<size_t>(v)] == -1)
            throw validation_error("map is partial: vertex '" + g1.label(v) + "' unassigned");

    for (const auto& [u, v] : g1.edges()) {
        if (!g2.adjacent_or_equal(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)]))
            return false;
    }
    if (based) {
        if (!g1.base_vertex() || !g2.base_vertex())
            throw validation_error("based check requires base vertices on both graphs");
        if (map[static_cast<size_t>(*g1.base_vertex())] != *g2.base_vertex()) return false;
    }
    return true;
}

GraphHom compose_hom(const GraphHom& f, const GraphHom& g) {
    if (!(f.target() == g.source()))
        throw validation_error("compose_hom: f.target must equal g.source");
    std::vector<int> map(static_cast<size_t>(f.source().vertex_count()));
    for (int v = 0; v < f.source().vertex_count(); ++v)
        map[static_cast<size_t>(v)] = g.apply(f.apply(v));
    return GraphHom::from_indices(f.source_ptr(), g.target_ptr(), std::move(map),
                                  f.based() && g.based());
}

}  // namespace ahtk
