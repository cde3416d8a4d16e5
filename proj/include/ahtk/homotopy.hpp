#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ahtk/square.hpp"

namespace ahtk {

/// Certificate check: H is a homotopy from f to g when the faces of f and g
/// agree in both directions, the boundary columns of H are constant at those
/// shared endpoints, and the bottom/top rows of H equal f/g as stable maps.
bool is_homotopy(const StableSquare& H, const StablePath& f, const StablePath& g);

/// True when f and g have equal faces and admit padded alignments of equal
/// window whose entries are pointwise equal-or-adjacent. Decided by dynamic
/// programming over monotone alignments of the stored windows.
bool one_step_related(const StablePath& f, const StablePath& g);

enum class SearchOutcome {
    found,        ///< certificate constructed and machine-checked
    faces_differ, ///< sound negative: the faces disagree
    exhausted,    ///< bounds exhausted; NOT a proof of non-homotopy
};

struct PathHomotopySearch {
    SearchOutcome outcome;
    std::optional<StableSquare> certificate;
    std::size_t states_explored = 0;
};

/// Breadth-first search for a homotopy certificate from f to h. States are
/// normalized paths with window length <= max_len; moves are single pointwise
/// steps (insert/delete a repeat, change one interior vertex, shift by one,
/// grow a spike out of a constant), each of which is one_step_related to its
/// predecessor, so a found chain stacks into a single grid with at most
/// max_rows rows that passes is_homotopy.
PathHomotopySearch find_path_homotopy(const StablePath& f, const StablePath& h, int max_len,
                                      int max_rows);

/// One homotopy step between graph homomorphisms: pointwise equal-or-adjacent.
bool map_one_step(const GraphHom& f, const GraphHom& g);

struct MapHomotopyChain {
    std::vector<GraphHom> frames;  // consecutive frames pointwise equal-or-adjacent
    bool based = false;
};

/// All graph homomorphisms source -> target (base-preserving when based),
/// sorted lexicographically by vertex map.
std::vector<GraphHom> enumerate_homs(const GraphPtr& source, const GraphPtr& target, bool based);

/// Exhaustive BFS over the finite homomorphism space under map_one_step.
/// An empty result is a sound negative: the component of f was fully explored.
std::optional<MapHomotopyChain> search_map_homotopy(const GraphHom& f, const GraphHom& g);

struct ContractionReport {
    bool contractible = false;
    bool based_mode = false;
    std::optional<MapHomotopyChain> chain;   // identity -> constant witness
    std::optional<std::string> target;       // vertex the graph contracts onto
    std::size_t reachable = 0;               // size of the identity's component
    std::size_t hom_count = 0;               // size of the full endomorphism space
};

/// Decides A-contractibility of a finite connected graph by exhaustive search
/// from the identity under the unbased one-step relation.
ContractionReport is_contractible(const GraphPtr& g);

/// Based variant: every frame fixes the given vertex.
ContractionReport is_contractible_based(const GraphPtr& g, std::string_view base);

/// Apply each frame of a map-homotopy chain to a path and stack the composites
/// into a square. With a based chain and a loop at the base this is a homotopy
/// certificate between loop and (last frame)∘loop.
StableSquare chain_applied_to_loop(const MapHomotopyChain& chain, const StablePath& loop);

}  // namespace ahtk
