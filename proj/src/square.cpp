#include "ahtk/square.hpp"

#include <algorithm>

namespace ahtk {

StableSquare::StableSquare(GraphPtr g, long o1, long o2, std::vector<std::vector<int>> grid)
    : graph_(std::move(g)), offset1_(o1), offset2_(o2), grid_(std::move(grid)) {}

StableSquare StableSquare::make(GraphPtr g, long offset1, long offset2,
                                const std::vector<std::vector<std::string>>& rows) {
    if (!g) throw validation_error("stable square requires a graph");
    std::vector<std::vector<int>> grid;
    for (const auto& row : rows) {
        std::vector<int> r;
        r.reserve(row.size());
        for (const auto& l : row) r.push_back(g->index_of(l));
        grid.push_back(std::move(r));
    }
    return from_indices(std::move(g), offset1, offset2, std::move(grid));
}

StableSquare StableSquare::from_indices(GraphPtr g, long offset1, long offset2,
                                        std::vector<std::vector<int>> rows) {
    if (!g) throw validation_error("stable square requires a graph");
    if (rows.empty() || rows.front().empty())
        throw validation_error("stable square grid must be non-empty");
    size_t width = rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != width) throw validation_error("stable square grid must be rectangular");
        for (int v : row)
            if (v < 0 || v >= g->vertex_count())
                throw validation_error("stable square vertex out of range");
        for (size_t j = 0; j + 1 < row.size(); ++j)
            if (!g->adjacent_or_equal(row[j], row[j + 1]))
                throw validation_error("stable square row breaks adjacency at '" +
                                       g->label(row[j]) + "','" + g->label(row[j + 1]) + "'");
    }
    for (size_t r = 0; r + 1 < rows.size(); ++r)
        for (size_t j = 0; j < width; ++j)
            if (!g->adjacent_or_equal(rows[r][j], rows[r + 1][j]))
                throw validation_error("stable square column breaks adjacency at '" +
                                       g->label(rows[r][j]) + "','" + g->label(rows[r + 1][j]) + "'");

    size_t rlo = 0, rhi = rows.size();
    while (rhi - rlo > 1 && rows[rlo] == rows[rlo + 1]) ++rlo;
    while (rhi - rlo > 1 && rows[rhi - 2] == rows[rhi - 1]) --rhi;
    std::vector<std::vector<int>> trimmed(rows.begin() + static_cast<long>(rlo),
                                          rows.begin() + static_cast<long>(rhi));
    long o2 = (trimmed.size() == 1) ? 0 : offset2 + static_cast<long>(rlo);

    auto column_equal = [&](size_t a, size_t b) {
        for (const auto& row : trimmed)
            if (row[a] != row[b]) return false;
        return true;
    };
    size_t clo = 0, chi = width;
    while (chi - clo > 1 && column_equal(clo, clo + 1)) ++clo;
    while (chi - clo > 1 && column_equal(chi - 2, chi - 1)) --chi;
    for (auto& row : trimmed)
        row = std::vector<int>(row.begin() + static_cast<long>(clo),
                               row.begin() + static_cast<long>(chi));
    long o1 = (chi - clo == 1) ? 0 : offset1 + static_cast<long>(clo);

    return StableSquare(std::move(g), o1, o2, std::move(trimmed));
}

int StableSquare::at(long a1, long a2) const {
    long r = std::clamp(a2 - offset2_, 0L, rows() - 1);
    long c = std::clamp(a1 - offset1_, 0L, cols() - 1);
    return grid_[static_cast<size_t>(r)][static_cast<size_t>(c)];
}

StablePath StableSquare::face(int axis, int dir) const {
    if ((axis != 1 && axis != 2) || (dir != -1 && dir != 1))
        throw validation_error("square face needs axis in {1,2} and direction in {-1,+1}");
    if (axis == 2) {
        const auto& row = (dir < 0) ? grid_.front() : grid_.back();
        return StablePath::from_indices(graph_, offset1_, row);
    }
    std::vector<int> col;
    size_t c = (dir < 0) ? 0 : static_cast<size_t>(cols() - 1);
    for (const auto& row : grid_) col.push_back(row[c]);
    return StablePath::from_indices(graph_, offset2_, std::move(col));
}

bool StableSquare::operator==(const StableSquare& other) const {
    if (offset1_ != other.offset1_ || offset2_ != other.offset2_ || grid_ != other.grid_)
        return false;
    return graph_ == other.graph_ || *graph_ == *other.graph_;
}

StableSquare degeneracy_square(const StablePath& f, int axis) {
    if (axis != 1 && axis != 2)
        throw validation_error("degeneracy axis must be 1 or 2");
    if (axis == 2)
        return StableSquare::from_indices(f.graph_ptr(), f.offset(), 0, {f.seq()});
    std::vector<std::vector<int>> grid;
    for (int v : f.seq()) grid.push_back({v});
    return StableSquare::from_indices(f.graph_ptr(), 0, f.offset(), std::move(grid));
}

StableSquare stack_rows(const std::vector<StablePath>& rows) {
    if (rows.empty()) throw validation_error("cannot stack an empty chain");
    const GraphPtr& g = rows.front().graph_ptr();
    bool any = false;
    long lo = 0, hi = 0;
    for (const auto& r : rows) {
        if (r.is_constant()) continue;
        if (!any) {
            lo = r.offset();
            hi = r.m_plus();
            any = true;
        } else {
            lo = std::min(lo, r.offset());
            hi = std::max(hi, r.m_plus());
        }
    }
    if (!any) {
        lo = rows.front().offset();
        hi = rows.front().m_plus();
    }
    std::vector<std::vector<int>> grid;
    for (const auto& r : rows) {
        std::vector<int> row;
        for (long a = lo; a <= hi; ++a) row.push_back(r.at(a));
        grid.push_back(std::move(row));
    }
    return StableSquare::from_indices(g, lo, 0, std::move(grid));
}

}  // namespace ahtk
