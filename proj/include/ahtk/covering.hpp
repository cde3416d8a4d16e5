#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "ahtk/homotopy.hpp"
#include "ahtk/int_path.hpp"

namespace ahtk {

/// True when p is onto and restricts to a bijection N[w] -> N[p(w)] for every
/// vertex w of its source.
bool check_local_isomorphism(const GraphHom& p);

/// A verified finite covering map p: total -> base.
class FiniteCover {
public:
    static FiniteCover make(GraphHom p);

    const Graph& total() const noexcept { return p_.source(); }
    const Graph& base_graph() const noexcept { return p_.target(); }
    const GraphPtr& total_ptr() const noexcept { return p_.source_ptr(); }
    const GraphPtr& base_ptr() const noexcept { return p_.target_ptr(); }
    const GraphHom& projection() const noexcept { return p_; }
    bool verified() const noexcept { return verified_; }

private:
    explicit FiniteCover(GraphHom p) : p_(std::move(p)), verified_(true) {}
    GraphHom p_;
    bool verified_;
};

/// The symbolic cyclic cover p_k: I_inf -> C_k, i -> [i mod k]. Lifted
/// vertices are plain integers; the infinite total graph is never built.
struct CyclicCover {
    int k = 0;
    static CyclicCover make(int k);  // k >= 3
};

using CoverSpec = std::variant<FiniteCover, CyclicCover>;

/// Index-residue bridge for the canonical cycle C_k (labels sort
/// lexicographically, so vertex index and residue differ once k > 10).
struct CycleView {
    int k = 0;
    std::vector<int> index_of_residue;
    std::vector<long> residue_of_index;

    static CycleView over(const Graph& g, int k);  // validates g == build_cycle(k)
    int index(long residue) const;
    long residue(int index) const;
};

/// Unique neighbor of w mapping to `target`; requires target in N[p(w)].
std::string local_inverse(const FiniteCover& c, std::string_view w, std::string_view target);
long local_inverse(const CyclicCover& c, long w, std::string_view target_label);

/// Path Lifting: the unique lift of f starting at `start` in the fiber of
/// f's start, built by iterating local inverses along the window.
StablePath lift_path(const FiniteCover& c, const StablePath& f, std::string_view start);
IntPath lift_path(const CyclicCover& c, const StablePath& f, long start);

/// Homotopy Lifting: requires a base graph with no 3- or 4-cycles
/// (girth_violation otherwise) and a lift of H's bottom face. Lifts every
/// column from the lifted bottom row and verifies the assembled grid; a
/// horizontal adjacency failure raises internal_inconsistency.
StableSquare lift_homotopy(const FiniteCover& c, const StableSquare& H,
                           const StablePath& lifted_bottom);
IntSquare lift_homotopy(const CyclicCover& c, const StableSquare& H, const IntPath& lifted_bottom);

namespace detail {
// Column-wise assembly with an optional girth guard; the unguarded form exists
// so tests can demonstrate how the assembly fails over short-cycle bases.
StableSquare lift_homotopy_columns(const FiniteCover& c, const StableSquare& H,
                                   const StablePath& lifted_bottom, bool enforce_girth);
IntSquare lift_homotopy_columns(const CyclicCover& c, const StableSquare& H,
                                const IntPath& lifted_bottom, bool enforce_girth);
}  // namespace detail

/// Pointwise composition of a homomorphism with a stable path.
StablePath compose_path(const GraphHom& f, const StablePath& path);

/// The induced map on loop classes applied to a representative:
/// gamma -> f o gamma, normalized. Requires f based and gamma a loop at the
/// source base.
StablePath induced_map_on_loop(const GraphHom& f, const StablePath& gamma);

/// Project a lift through a covering map back to the base.
StablePath project_path(const FiniteCover& c, const StablePath& tilde);
StablePath project_path(const CyclicCover& c, const GraphPtr& base, const IntPath& tilde);

struct LiftHomResult {
    std::optional<GraphHom> lift;
    /// When no lift exists: an edge of K on which the tree-built candidate
    /// fails, witnessing that the loop criterion is violated.
    std::optional<std::pair<std::string, std::string>> offending_edge;
    bool ok() const noexcept { return lift.has_value(); }
};

/// Lifting Criterion, constructively: build a candidate lift along a BFS
/// spanning tree of K from its base and verify it edge by edge. Requires a
/// connected base with no short cycles, connected K, and start in the fiber
/// over the base point.
LiftHomResult lift_hom_through_cover(const FiniteCover& c, const GraphHom& f,
                                     std::string_view start);

/// Checks p* o lift* = f* on sample loops, comparing normalized composites.
bool verify_functoriality(const FiniteCover& c, const GraphHom& f, const GraphHom& lifted,
                          std::span<const StablePath> loops);

}  // namespace ahtk
