#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ahtk/errors.hpp"

namespace ahtk {

/// Finite simple undirected graph with an optional distinguished (base) vertex.
/// Vertex labels are opaque printable tokens without whitespace, unique within
/// the graph. Internally vertices are indexed 0..n-1 in lexicographic label
/// order, which is also the canonical order used by the file format.
/// Immutable after construction.
class Graph {
public:
    Graph() = default;

    static Graph make(std::vector<std::string> vertices,
                      std::vector<std::pair<std::string, std::string>> edges,
                      std::optional<std::string> base = std::nullopt);

    int vertex_count() const noexcept { return static_cast<int>(labels_.size()); }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    bool has_vertex(std::string_view label) const noexcept;
    int index_of(std::string_view label) const;  // throws validation_error if unknown
    const std::string& label(int v) const;

    bool adjacent(int u, int v) const noexcept;
    bool adjacent_or_equal(int u, int v) const noexcept { return u == v || adjacent(u, v); }
    const std::vector<int>& neighbors(int v) const;

    std::optional<int> base_vertex() const noexcept { return base_; }
    std::optional<std::string> base_label() const;

    /// Edges as index pairs (u < v), sorted.
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    bool operator==(const Graph& other) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::optional<int> base_;
};

using GraphPtr = std::shared_ptr<const Graph>;

/// Cycle C_k with vertices "[0]".."[k-1]" and base "[0]". Requires k >= 3.
Graph build_cycle(int k);

/// Path I_n with vertices "0".."n" and base "0". Requires n >= 0.
Graph build_path(int n);

/// Cartesian product: vertices are pairs "(a,b)"; edge when one coordinate is
/// equal and the other adjacent. Base is the pair of bases when both exist.
Graph cartesian_product(const Graph& a, const Graph& b);

/// N[v]: the neighbors of v together with v itself, sorted lexicographically.
std::vector<std::string> closed_neighborhood(const Graph& g, std::string_view v);

/// Star N_x: vertex set N[x], edges only those incident to x.
Graph star_subgraph(const Graph& g, std::string_view x);

bool is_connected(const Graph& g);

/// True when g contains a 3-cycle or 4-cycle as a subgraph (not necessarily
/// induced). This is exactly the hypothesis that blocks homotopy lifting.
bool has_short_cycle(const Graph& g);

/// Vertex map between graphs where adjacent vertices land on equal or adjacent
/// vertices. Construction validates the edge condition (and the base condition
/// when based), so a GraphHom is a homomorphism by construction.
class GraphHom {
public:
    static GraphHom make(GraphPtr source, GraphPtr target,
                         const std::vector<std::pair<std::string, std::string>>& assignment,
                         bool based);
    static GraphHom from_indices(GraphPtr source, GraphPtr target, std::vector<int> map,
                                 bool based);
    static GraphHom identity(GraphPtr g, bool based = false);
    static GraphHom constant(GraphPtr source, GraphPtr target, std::string_view value,
                             bool based = false);

    const Graph& source() const noexcept { return *source_; }
    const Graph& target() const noexcept { return *target_; }
    const GraphPtr& source_ptr() const noexcept { return source_; }
    const GraphPtr& target_ptr() const noexcept { return target_; }

    int apply(int v) const { return map_.at(static_cast<size_t>(v)); }
    std::string apply_label(std::string_view v) const;
    const std::vector<int>& map() const noexcept { return map_; }
    bool based() const noexcept { return based_; }

    bool is_onto() const;
    int image_size() const;

    bool operator==(const GraphHom& other) const;

private:
    GraphHom(GraphPtr s, GraphPtr t, std::vector<int> m, bool based)
        : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)), based_(based) {}

    GraphPtr source_;
    GraphPtr target_;
    std::vector<int> map_;
    bool based_;
};

/// Edge-condition check for a candidate vertex assignment. The assignment must
/// be total on g1 with image labels in g2 (validation error otherwise); the
/// return value reports whether the map is a (based) graph homomorphism.
bool is_graph_hom(const std::vector<std::pair<std::string, std::string>>& assignment,
                  const Graph& g1, const Graph& g2, bool based);

/// Pointwise composition, v -> g(f(v)). Requires f.target == g.source.
/// Based iff both factors are based.
GraphHom compose_hom(const GraphHom& f, const GraphHom& g);

}  // namespace ahtk
