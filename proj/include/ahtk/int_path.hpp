#pragma once

#include <vector>

#include "ahtk/errors.hpp"

namespace ahtk {

/// Stable map from the infinite path into the infinite path itself. Lifts
/// through cyclic covers live here: vertices are plain integers, adjacent
/// integers differ by one. Same canonical form as StablePath (trimmed ends,
/// constants pinned at offset 0).
struct IntPath {
    long offset = 0;
    std::vector<long> seq;

    static IntPath make(long offset, std::vector<long> raw);

    long length() const noexcept { return static_cast<long>(seq.size()); }
    long m_plus() const noexcept { return offset + length() - 1; }
    bool is_constant() const noexcept { return seq.size() == 1; }
    long at(long i) const;
    long face(int dir) const;

    bool operator==(const IntPath&) const = default;
};

/// Rectangular grid of integers: a stable map out of the infinite square,
/// rows indexed by axis 2 and columns by axis 1.
struct IntSquare {
    long offset1 = 0;
    long offset2 = 0;
    std::vector<std::vector<long>> grid;

    static IntSquare make(long offset1, long offset2, std::vector<std::vector<long>> rows);

    long rows() const noexcept { return static_cast<long>(grid.size()); }
    long cols() const noexcept { return grid.empty() ? 0 : static_cast<long>(grid.front().size()); }
    long at(long a1, long a2) const;

    IntPath face(int axis, int dir) const;

    bool operator==(const IntSquare&) const = default;
};

bool one_step_related(const IntPath& f, const IntPath& g);
bool is_homotopy(const IntSquare& H, const IntPath& f, const IntPath& g);

/// Stack a chain of pointwise-compatible paths into one grid over a shared window.
IntSquare stack_int_rows(const std::vector<IntPath>& rows);

}  // namespace ahtk
