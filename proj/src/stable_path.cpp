#include "ahtk/stable_path.hpp"

#include <algorithm>

namespace ahtk {

StablePath::StablePath(GraphPtr g, long offset, std::vector<int> seq)
    : graph_(std::move(g)), offset_(offset), seq_(std::move(seq)) {}

StablePath StablePath::make(GraphPtr g, long offset, const std::vector<std::string>& labels) {
    if (!g) throw validation_error("stable path requires a graph");
    std::vector<int> seq;
    seq.reserve(labels.size());
    for (const auto& l : labels) seq.push_back(g->index_of(l));
    return from_indices(std::move(g), offset, std::move(seq));
}

StablePath StablePath::from_indices(GraphPtr g, long offset, std::vector<int> seq) {
    if (!g) throw validation_error("stable path requires a graph");
    if (seq.empty()) throw validation_error("stable path window must be non-empty");
    for (int v : seq)
        if (v < 0 || v >= g->vertex_count())
            throw validation_error("stable path vertex out of range");
    for (size_t j = 0; j + 1 < seq.size(); ++j) {
        if (!g->adjacent_or_equal(seq[j], seq[j + 1]))
            throw validation_error("consecutive path entries '" + g->label(seq[j]) + "' and '" +
                                   g->label(seq[j + 1]) + "' are neither equal nor adjacent");
    }
    size_t lo = 0, hi = seq.size();
    while (hi - lo > 1 && seq[lo] == seq[lo + 1]) ++lo;
    while (hi - lo > 1 && seq[hi - 2] == seq[hi - 1]) --hi;
    std::vector<int> trimmed(seq.begin() + static_cast<long>(lo), seq.begin() + static_cast<long>(hi));
    long new_offset = (trimmed.size() == 1) ? 0 : offset + static_cast<long>(lo);
    return StablePath(std::move(g), new_offset, std::move(trimmed));
}

int StablePath::at(long i) const {
    long j = std::clamp(i - offset_, 0L, length() - 1);
    return seq_[static_cast<size_t>(j)];
}

std::vector<std::string> StablePath::seq_labels() const {
    std::vector<std::string> out;
    out.reserve(seq_.size());
    for (int v : seq_) out.push_back(graph_->label(v));
    return out;
}

int StablePath::face(int dir) const {
    if (dir != -1 && dir != 1) throw validation_error("face direction must be -1 or +1");
    return dir < 0 ? seq_.front() : seq_.back();
}

bool StablePath::operator==(const StablePath& other) const {
    if (offset_ != other.offset_ || seq_ != other.seq_) return false;
    return graph_ == other.graph_ || *graph_ == *other.graph_;
}

StablePath degeneracy_vertex(GraphPtr g, std::string_view v) {
    int idx = g->index_of(v);
    return StablePath::from_indices(std::move(g), 0, {idx});
}

ConcatResult concat(const StablePath& f, const StablePath& g) {
    if (!(f.graph() == g.graph()))
        throw validation_error("concat requires paths over the same graph");
    if (f.face(-1) != g.face(+1))
        throw validation_error("concat requires face(f,-1) == face(g,+1), got '" +
                               f.face_label(-1) + "' vs '" + g.face_label(+1) + "'");
    // The join lives at a = 0: g re-anchored to end there, f to start there.
    std::vector<int> seq(g.seq().begin(), g.seq().end() - 1);
    seq.insert(seq.end(), f.seq().begin(), f.seq().end());
    long raw_m_minus = -(g.length() - 1);
    long raw_m_plus = f.length() - 1;
    return ConcatResult{StablePath::from_indices(f.graph_ptr(), raw_m_minus, std::move(seq)),
                        raw_m_minus, raw_m_plus};
}

StablePath reverse(const StablePath& f) {
    std::vector<int> seq(f.seq().rbegin(), f.seq().rend());
    return StablePath::from_indices(f.graph_ptr(), -f.m_plus(), std::move(seq));
}

StablePath shift(const StablePath& f, long n) {
    if (f.is_constant()) return f;
    return StablePath::from_indices(f.graph_ptr(), f.offset() + n, f.seq());
}

StablePath pad(const StablePath& f, long b, int left, int right) {
    if (left < 0 || right < 0) throw validation_error("pad widths must be non-negative");
    if (!(f.offset() < b && b < f.m_plus()))
        throw validation_error("pad position must lie strictly inside the active region");
    size_t jb = static_cast<size_t>(b - f.offset());
    std::vector<int> seq(f.seq());
    seq.insert(seq.begin() + static_cast<long>(jb) + 1, static_cast<size_t>(left + right),
               seq[jb]);
    return StablePath::from_indices(f.graph_ptr(), f.offset(), std::move(seq));
}

bool is_loop(const StablePath& f) {
    auto base = f.graph().base_vertex();
    if (!base) return false;
    return f.face(-1) == *base && f.face(+1) == *base;
}

}  // namespace ahtk
