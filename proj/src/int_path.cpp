#include "ahtk/int_path.hpp"

#include <algorithm>
#include <cstdlib>

namespace ahtk {

IntPath IntPath::make(long offset, std::vector<long> raw) {
    if (raw.empty()) throw validation_error("integer path window must be non-empty");
    for (size_t j = 0; j + 1 < raw.size(); ++j)
        if (std::labs(raw[j + 1] - raw[j]) > 1)
            throw validation_error("consecutive integer path entries must differ by at most 1");
    size_t lo = 0, hi = raw.size();
    while (hi - lo > 1 && raw[lo] == raw[lo + 1]) ++lo;
    while (hi - lo > 1 && raw[hi - 2] == raw[hi - 1]) --hi;
    IntPath p;
    p.seq.assign(raw.begin() + static_cast<long>(lo), raw.begin() + static_cast<long>(hi));
    p.offset = (p.seq.size() == 1) ? 0 : offset + static_cast<long>(lo);
    return p;
}

long IntPath::at(long i) const {
    long j = std::clamp(i - offset, 0L, length() - 1);
    return seq[static_cast<size_t>(j)];
}

long IntPath::face(int dir) const {
    if (dir != -1 && dir != 1) throw validation_error("face direction must be -1 or +1");
    return dir < 0 ? seq.front() : seq.back();
}

IntSquare IntSquare::make(long offset1, long offset2, std::vector<std::vector<long>> rows) {
    if (rows.empty() || rows.front().empty())
        throw validation_error("integer square grid must be non-empty");
    size_t width = rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != width) throw validation_error("integer square grid must be rectangular");
        for (size_t j = 0; j + 1 < row.size(); ++j)
            if (std::labs(row[j + 1] - row[j]) > 1)
                throw validation_error("integer square row breaks adjacency");
    }
    for (size_t r = 0; r + 1 < rows.size(); ++r)
        for (size_t j = 0; j < width; ++j)
            if (std::labs(rows[r + 1][j] - rows[r][j]) > 1)
                throw validation_error("integer square column breaks adjacency");

    size_t rlo = 0, rhi = rows.size();
    while (rhi - rlo > 1 && rows[rlo] == rows[rlo + 1]) ++rlo;
    while (rhi - rlo > 1 && rows[rhi - 2] == rows[rhi - 1]) --rhi;
    std::vector<std::vector<long>> trimmed(rows.begin() + static_cast<long>(rlo),
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
        row = std::vector<long>(row.begin() + static_cast<long>(clo), row.begin() + static_cast<long>(chi));
    long o1 = (chi - clo == 1) ? 0 : offset1 + static_cast<long>(clo);

    IntSquare sq;
    sq.offset1 = o1;
    sq.offset2 = o2;
    sq.grid = std::move(trimmed);
    return sq;
}

long IntSquare::at(long a1, long a2) const {
    long r = std::clamp(a2 - offset2, 0L, rows() - 1);
    long c = std::clamp(a1 - offset1, 0L, cols() - 1);
    return grid[static_cast<size_t>(r)][static_cast<size_t>(c)];
}

IntPath IntSquare::face(int axis, int dir) const {
    if ((axis != 1 && axis != 2) || (dir != -1 && dir != 1))
        throw validation_error("square face needs axis in {1,2} and direction in {-1,+1}");
    if (axis == 2) {
        const auto& row = (dir < 0) ? grid.front() : grid.back();
        return IntPath::make(offset1, row);
    }
    std::vector<long> col;
    size_t c = (dir < 0) ? 0 : static_cast<size_t>(cols() - 1);
    for (const auto& row : grid) col.push_back(row[c]);
    return IntPath::make(offset2, std::move(col));
}

bool one_step_related(const IntPath& f, const IntPath& g) {
    if (f.face(-1) != g.face(-1) || f.face(+1) != g.face(+1)) return false;
    size_t n = f.seq.size(), m = g.seq.size();
    std::vector<char> prev(m, 0), cur(m, 0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (std::labs(f.seq[i] - g.seq[j]) > 1) {
                cur[j] = 0;
                continue;
            }
            if (i == 0 && j == 0)
                cur[j] = 1;
            else
                cur[j] = static_cast<char>((i > 0 && j > 0 && prev[j - 1]) || (i > 0 && prev[j]) ||
                                           (j > 0 && cur[j - 1]));
        }
        std::swap(prev, cur);
    }
    return prev[m - 1] != 0;
}

bool is_homotopy(const IntSquare& H, const IntPath& f, const IntPath& g) {
    if (f.face(-1) != g.face(-1) || f.face(+1) != g.face(+1)) return false;
    for (const auto& row : H.grid) {
        if (row.front() != f.face(-1)) return false;
        if (row.back() != f.face(+1)) return false;
    }
    return IntPath::make(H.offset1, H.grid.front()) == f &&
           IntPath::make(H.offset1, H.grid.back()) == g;
}

IntSquare stack_int_rows(const std::vector<IntPath>& rows) {
    if (rows.empty()) throw validation_error("cannot stack an empty chain");
    bool any = false;
    long lo = 0, hi = 0;
    for (const auto& r : rows) {
        if (r.is_constant()) continue;
        if (!any) {
            lo = r.offset;
            hi = r.m_plus();
            any = true;
        } else {
            lo = std::min(lo, r.offset);
            hi = std::max(hi, r.m_plus());
        }
    }
    if (!any) {
        lo = rows.front().offset;
        hi = rows.front().m_plus();
    }
    std::vector<std::vector<long>> grid;
    for (const auto& r : rows) {
        std::vector<long> row;
        for (long a = lo; a <= hi; ++a) row.push_back(r.at(a));
        grid.push_back(std::move(row));
    }
    return IntSquare::make(lo, 0, std::move(grid));
}

}  // namespace ahtk
