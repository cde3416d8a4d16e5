#pragma once

#include <vector>

#include "ahtk/stable_path.hpp"

namespace ahtk {

/// Finite-grid representation of a stable map out of the infinite square.
/// `grid[r][c]` is the value at (offset1 + c, offset2 + r): rows are indexed
/// by axis 2, columns by axis 1, and the grid graph has no diagonal edges.
/// Construction checks both adjacency directions and trims non-minimal
/// boundary rows/columns; an axis with extent 1 is pinned at offset 0.
/// A square doubles as a homotopy certificate between its axis-2 faces.
class StableSquare {
public:
    static StableSquare make(GraphPtr g, long offset1, long offset2,
                             const std::vector<std::vector<std::string>>& rows);
    static StableSquare from_indices(GraphPtr g, long offset1, long offset2,
                                     std::vector<std::vector<int>> rows);

    const Graph& graph() const noexcept { return *graph_; }
    const GraphPtr& graph_ptr() const noexcept { return graph_; }

    long offset1() const noexcept { return offset1_; }  // m0(H,-1)
    long offset2() const noexcept { return offset2_; }  // m0(H,-2)
    long rows() const noexcept { return static_cast<long>(grid_.size()); }
    long cols() const noexcept { return static_cast<long>(grid_.front().size()); }
    const std::vector<std::vector<int>>& grid() const noexcept { return grid_; }

    /// Evaluate at any lattice point (a1 on axis 1, a2 on axis 2).
    int at(long a1, long a2) const;

    /// Boundary row (axis 2) or column (axis 1) as a normalized path.
    StablePath face(int axis, int dir) const;

    bool operator==(const StableSquare& other) const;

private:
    StableSquare(GraphPtr g, long o1, long o2, std::vector<std::vector<int>> grid);

    GraphPtr graph_;
    long offset1_ = 0;
    long offset2_ = 0;
    std::vector<std::vector<int>> grid_;
};

/// Repeat a path along the chosen axis, with extent 1 in that axis.
StableSquare degeneracy_square(const StablePath& f, int axis);

/// Stack a chain of pointwise-compatible paths (bottom first) into one grid
/// evaluated over a shared axis-1 window.
StableSquare stack_rows(const std::vector<StablePath>& rows);

}  // namespace ahtk
