#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ahtk/graph.hpp"

namespace ahtk {

/// Finite-window representation of a stable map from the infinite path into a
/// graph. `seq[j]` is the value at integer `offset + j`; the map is constant
/// at `seq.front()` below `offset` and at `seq.back()` above `offset+len-1`.
///
/// Canonical form: leading/trailing constant runs are trimmed so that `offset`
/// is the greatest stabilization point on the left and `m_plus()` the least on
/// the right. A constant map is stored with a single entry at offset 0, so two
/// StablePaths are equal as functions iff their representations are equal.
class StablePath {
public:
    static StablePath make(GraphPtr g, long offset, const std::vector<std::string>& labels);
    static StablePath from_indices(GraphPtr g, long offset, std::vector<int> seq);

    const Graph& graph() const noexcept { return *graph_; }
    const GraphPtr& graph_ptr() const noexcept { return graph_; }

    long offset() const noexcept { return offset_; }           // m0(f,-1)
    long m_plus() const noexcept { return offset_ + length() - 1; }  // m0(f,+1)
    long length() const noexcept { return static_cast<long>(seq_.size()); }
    bool is_constant() const noexcept { return seq_.size() == 1; }
    const std::vector<int>& seq() const noexcept { return seq_; }

    /// Evaluate the stable map at any integer.
    int at(long i) const;
    const std::string& label_at(long i) const { return graph_->label(at(i)); }
    std::vector<std::string> seq_labels() const;

    /// Face in direction -1 (start) or +1 (end); an element of C_0.
    int face(int dir) const;
    const std::string& face_label(int dir) const { return graph_->label(face(dir)); }

    bool operator==(const StablePath& other) const;

private:
    StablePath(GraphPtr g, long offset, std::vector<int> seq);

    GraphPtr graph_;
    long offset_ = 0;
    std::vector<int> seq_;
};

/// Constant path at a vertex (the degeneracy of an element of C_0).
StablePath degeneracy_vertex(GraphPtr g, std::string_view v);

struct ConcatResult {
    StablePath path;
    /// Stabilization points of the concatenation before normalization:
    /// raw_m_plus = m0(f,+1) - m0(f,-1), raw_m_minus = m0(g,-1) - m0(g,+1).
    long raw_m_minus;
    long raw_m_plus;
};

/// Concatenation f.g: g on the non-positive axis, f on the non-negative axis,
/// joined at a = 0. Requires face(f,-1) == face(g,+1).
ConcatResult concat(const StablePath& f, const StablePath& g);

/// Reversal, i -> f(-i).
StablePath reverse(const StablePath& f);

/// Shift by n, i -> f(i-n). Same sequence at offset+n; a shifted constant is
/// the same map and stays pinned at offset 0.
StablePath shift(const StablePath& f, long n);

/// Insert `left+right` copies of f(b) immediately after position b, keeping
/// the start anchored at f's offset (the tails move outward relative to b).
/// Requires m0(f,-1) < b < m0(f,+1).
StablePath pad(const StablePath& f, long b, int left, int right);

/// True when both faces equal the graph's base vertex.
bool is_loop(const StablePath& f);

}  // namespace ahtk
