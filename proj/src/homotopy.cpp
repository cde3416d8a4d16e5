#include "ahtk/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace ahtk {

bool is_homotopy(const StableSquare& H, const StablePath& f, const StablePath& g) {
    if (!(H.graph() == f.graph()) || !(f.graph() == g.graph()))
        throw validation_error("is_homotopy requires the square and both paths over one graph");
    if (f.face(-1) != g.face(-1) || f.face(+1) != g.face(+1)) return false;
    for (const auto& row : H.grid()) {
        if (row.front() != f.face(-1)) return false;
        if (row.back() != f.face(+1)) return false;
    }
    return StablePath::from_indices(H.graph_ptr(), H.offset1(), H.grid().front()) == f &&
           StablePath::from_indices(H.graph_ptr(), H.offset1(), H.grid().back()) == g;
}

bool one_step_related(const StablePath& f, const StablePath& g) {
    if (!(f.graph() == g.graph()))
        throw validation_error("one_step_related requires paths over the same graph");
    if (f.face(-1) != g.face(-1) || f.face(+1) != g.face(+1)) return false;
    const Graph& gr = f.graph();
    size_t n = f.seq().size(), m = g.seq().size();
    std::vector<char> prev(m, 0), cur(m, 0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (!gr.adjacent_or_equal(f.seq()[i], g.seq()[j])) {
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

namespace {

struct PathState {
    long offset = 0;
    std::vector<int> seq;
    bool operator==(const PathState&) const = default;
};

struct PathStateHash {
    size_t operator()(const PathState& s) const noexcept {
        size_t h = static_cast<size_t>(s.offset) * 0x9e3779b97f4a7c15ULL + 1;
        for (int v : s.seq) h = (h ^ static_cast<size_t>(v + 2)) * 0x100000001b3ULL;
        return h;
    }
};

PathState normalize_state(long offset, std::vector<int> seq) {
    size_t lo = 0, hi = seq.size();
    while (hi - lo > 1 && seq[lo] == seq[lo + 1]) ++lo;
    while (hi - lo > 1 && seq[hi - 2] == seq[hi - 1]) --hi;
    PathState s;
    s.seq.assign(seq.begin() + static_cast<long>(lo), seq.begin() + static_cast<long>(hi));
    s.offset = (s.seq.size() == 1) ? 0 : offset + static_cast<long>(lo);
    return s;
}

// Single pointwise moves. Every successor differs from `s` by at most one
// graph step at every integer, so a chain of successors stacks into a grid.
void successors(const Graph& g, const PathState& s, int max_len, long spike_lo, long spike_hi,
                std::vector<PathState>& out) {
    out.clear();
    const auto& seq = s.seq;
    long len = static_cast<long>(seq.size());

    if (len == 1) {
        // A constant only moves by growing a spike somewhere.
        int v = seq[0];
        for (int w : g.neighbors(v)) {
            if (max_len < 3) break;
            for (long a = spike_lo; a + 2 <= spike_hi; ++a)
                out.push_back(PathState{a, {v, w, v}});
        }
    } else {
        // Change one interior vertex to a neighbor compatible with the row.
        for (long j = 1; j + 1 < len; ++j) {
            int old = seq[static_cast<size_t>(j)];
            for (int v : g.neighbors(old)) {
                if (!g.adjacent_or_equal(v, seq[static_cast<size_t>(j - 1)])) continue;
                if (!g.adjacent_or_equal(v, seq[static_cast<size_t>(j + 1)])) continue;
                std::vector<int> next(seq);
                next[static_cast<size_t>(j)] = v;
                out.push_back(normalize_state(s.offset, std::move(next)));
            }
        }
        // Insert a repeat (shifts the tail one step along the row).
        if (len + 1 <= max_len) {
            for (long j = 0; j + 1 < len; ++j) {
                std::vector<int> next(seq);
                next.insert(next.begin() + j + 1, seq[static_cast<size_t>(j)]);
                out.push_back(normalize_state(s.offset, std::move(next)));
            }
        }
        // Delete one entry of a repeated run.
        for (long j = 0; j + 1 < len; ++j) {
            if (seq[static_cast<size_t>(j)] != seq[static_cast<size_t>(j + 1)]) continue;
            std::vector<int> next(seq);
            next.erase(next.begin() + j + 1);
            out.push_back(normalize_state(s.offset, std::move(next)));
        }
        // Unit shifts.
        out.push_back(PathState{s.offset + 1, seq});
        out.push_back(PathState{s.offset - 1, seq});
    }

    out.erase(std::remove_if(out.begin(), out.end(),
                             [&](const PathState& t) {
                                 return static_cast<int>(t.seq.size()) > max_len || t == s;
                             }),
              out.end());
    std::sort(out.begin(), out.end(), [](const PathState& a, const PathState& b) {
        if (a.seq.size() != b.seq.size()) return a.seq.size() < b.seq.size();
        if (a.seq != b.seq) return a.seq < b.seq;
        return a.offset < b.offset;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

}  // namespace

PathHomotopySearch find_path_homotopy(const StablePath& f, const StablePath& h, int max_len,
                                      int max_rows) {
    if (!(f.graph() == h.graph()))
        throw validation_error("find_path_homotopy requires paths over the same graph");
    if (max_rows < 1) throw validation_error("max_rows must be at least 1");
    if (max_len < f.length() || max_len < h.length())
        throw validation_error("max_len is smaller than an input path window");
    if (f.face(-1) != h.face(-1) || f.face(+1) != h.face(+1))
        return {SearchOutcome::faces_differ, std::nullopt, 0};

    const GraphPtr& gp = f.graph_ptr();
    const Graph& g = *gp;
    long spike_lo = std::min(f.offset(), h.offset()) - 2;
    long spike_hi = std::max(f.m_plus(), h.m_plus()) + 2;

    PathState start{f.offset(), f.seq()};
    PathState goal{h.offset(), h.seq()};

    std::vector<PathState> states{start};
    std::vector<int> parent{-1};
    std::vector<int> depth{0};
    std::unordered_map<PathState, int, PathStateHash> index;
    index.emplace(start, 0);

    auto finish = [&](int goal_id) {
        std::vector<StablePath> chain;
        for (int id = goal_id; id != -1; id = parent[static_cast<size_t>(id)])
            chain.push_back(StablePath::from_indices(gp, states[static_cast<size_t>(id)].offset,
                                                     states[static_cast<size_t>(id)].seq));
        std::reverse(chain.begin(), chain.end());
        StableSquare cert = stack_rows(chain);
        if (!is_homotopy(cert, f, h))
            throw internal_inconsistency("constructed certificate failed its own check");
        return cert;
    };

    if (start == goal)
        return {SearchOutcome::found, finish(0), 1};

    std::deque<int> queue{0};
    std::vector<PathState> next;
    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        if (depth[static_cast<size_t>(id)] + 1 >= max_rows) continue;
        successors(g, states[static_cast<size_t>(id)], max_len, spike_lo, spike_hi, next);
        for (const auto& t : next) {
            if (index.contains(t)) continue;
            int tid = static_cast<int>(states.size());
            states.push_back(t);
            parent.push_back(id);
            depth.push_back(depth[static_cast<size_t>(id)] + 1);
            index.emplace(t, tid);
            if (t == goal)
                return {SearchOutcome::found, finish(tid), states.size()};
            queue.push_back(tid);
        }
    }
    return {SearchOutcome::exhausted, std::nullopt, states.size()};
}

bool map_one_step(const GraphHom& f, const GraphHom& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
        throw validation_error("map_one_step requires homomorphisms with equal source and target");
    const Graph& t = f.target();
    for (int v = 0; v < f.source().vertex_count(); ++v)
        if (!t.adjacent_or_equal(f.apply(v), g.apply(v))) return false;
    return true;
}

namespace {

void enumerate_rec(const Graph& s, const Graph& t, std::vector<int>& map, int v,
                   const std::optional<std::pair<int, int>>& pin, std::vector<std::vector<int>>& out) {
    int n = s.vertex_count();
    if (v == n) {
        out.push_back(map);
        return;
    }
    if (pin && pin->first == v) {
        map[static_cast<size_t>(v)] = pin->second;
        bool ok = true;
        for (int u : s.neighbors(v))
            if (u < v && !t.adjacent_or_equal(map[static_cast<size_t>(u)], pin->second)) ok = false;
        if (ok) enumerate_rec(s, t, map, v + 1, pin, out);
        map[static_cast<size_t>(v)] = -1;
        return;
    }
    for (int c = 0; c < t.vertex_count(); ++c) {
        bool ok = true;
        for (int u : s.neighbors(v))
            if (u < v && !t.adjacent_or_equal(map[static_cast<size_t>(u)], c)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        map[static_cast<size_t>(v)] = c;
        enumerate_rec(s, t, map, v + 1, pin, out);
        map[static_cast<size_t>(v)] = -1;
    }
}

std::vector<std::vector<int>> enumerate_hom_maps(const Graph& s, const Graph& t,
                                                 std::optional<std::pair<int, int>> pin) {
    std::vector<std::vector<int>> out;
    std::vector<int> map(static_cast<size_t>(s.vertex_count()), -1);
    enumerate_rec(s, t, map, 0, pin, out);
    return out;
}

bool maps_one_step(const Graph& t, const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t v = 0; v < a.size(); ++v)
        if (!t.adjacent_or_equal(a[v], b[v])) return false;
    return true;
}

// BFS over the full homomorphism space; returns the frame chain from -> to,
// or nothing once from's component is exhausted.
std::optional<std::vector<std::vector<int>>> chain_between(
    const Graph& t, const std::vector<std::vector<int>>& homs, const std::vector<int>& from,
    const std::vector<int>& to) {
    auto find_index = [&](const std::vector<int>& m) {
        auto it = std::lower_bound(homs.begin(), homs.end(), m);
        if (it == homs.end() || *it != m) throw validation_error("map is not in the homomorphism space");
        return static_cast<int>(it - homs.begin());
    };
    int src = find_index(from), dst = find_index(to);
    std::vector<int> parent(homs.size(), -2);
    parent[static_cast<size_t>(src)] = -1;
    std::deque<int> queue{src};
    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        if (id == dst) break;
        for (size_t j = 0; j < homs.size(); ++j) {
            if (parent[j] != -2) continue;
            if (!maps_one_step(t, homs[static_cast<size_t>(id)], homs[j])) continue;
            parent[j] = id;
            queue.push_back(static_cast<int>(j));
        }
    }
    if (parent[static_cast<size_t>(dst)] == -2) return std::nullopt;
    std::vector<std::vector<int>> chain;
    for (int id = dst; id != -1; id = parent[static_cast<size_t>(id)])
        chain.push_back(homs[static_cast<size_t>(id)]);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

}  // namespace

std::vector<GraphHom> enumerate_homs(const GraphPtr& source, const GraphPtr& target, bool based) {
    std::optional<std::pair<int, int>> pin;
    if (based) {
        if (!source->base_vertex() || !target->base_vertex())
            throw validation_error("based enumeration requires base vertices on both graphs");
        pin = std::pair<int, int>{*source->base_vertex(), *target->base_vertex()};
    }
    std::vector<GraphHom> out;
    for (auto& m : enumerate_hom_maps(*source, *target, pin))
        out.push_back(GraphHom::from_indices(source, target, std::move(m), based));
    return out;
}

std::optional<MapHomotopyChain> search_map_homotopy(const GraphHom& f, const GraphHom& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
        throw validation_error("search_map_homotopy requires equal source and target");
    bool based = f.based() && g.based();
    std::optional<std::pair<int, int>> pin;
    if (based) pin = std::pair<int, int>{*f.source().base_vertex(), *f.target().base_vertex()};
    auto homs = enumerate_hom_maps(f.source(), f.target(), pin);
    auto chain = chain_between(f.target(), homs, f.map(), g.map());
    if (!chain) return std::nullopt;
    MapHomotopyChain out;
    out.based = based;
    for (auto& m : *chain)
        out.frames.push_back(GraphHom::from_indices(f.source_ptr(), f.target_ptr(), std::move(m), based));
    return out;
}

namespace {

ContractionReport contract_impl(const GraphPtr& g, std::optional<int> fixed) {
    if (!is_connected(*g))
        throw validation_error("contractibility is only decided for connected graphs");
    std::optional<std::pair<int, int>> pin;
    if (fixed) pin = std::pair<int, int>{*fixed, *fixed};
    auto homs = enumerate_hom_maps(*g, *g, pin);

    std::vector<int> id_map(static_cast<size_t>(g->vertex_count()));
    for (int i = 0; i < g->vertex_count(); ++i) id_map[static_cast<size_t>(i)] = i;
    auto it = std::lower_bound(homs.begin(), homs.end(), id_map);
    int src = static_cast<int>(it - homs.begin());

    std::vector<int> parent(homs.size(), -2);
    parent[static_cast<size_t>(src)] = -1;
    std::deque<int> queue{src};
    std::optional<int> hit;
    size_t reached = 1;
    auto is_const = [](const std::vector<int>& m) {
        return std::all_of(m.begin(), m.end(), [&](int x) { return x == m.front(); });
    };
    while (!queue.empty() && !hit) {
        int id = queue.front();
        queue.pop_front();
        for (size_t j = 0; j < homs.size(); ++j) {
            if (parent[j] != -2) continue;
            if (!maps_one_step(*g, homs[static_cast<size_t>(id)], homs[j])) continue;
            parent[j] = id;
            ++reached;
            if (g->vertex_count() > 1 && is_const(homs[j])) {
                hit = static_cast<int>(j);
                break;
            }
            queue.push_back(static_cast<int>(j));
        }
    }
    if (g->vertex_count() == 1) hit = src;  // the one-vertex graph is trivially contractible

    ContractionReport report;
    report.based_mode = fixed.has_value();
    report.hom_count = homs.size();
    report.reachable = reached;
    if (!hit) return report;

    bool frames_based = fixed.has_value() && g->base_vertex() == fixed;
    std::vector<GraphHom> frames;
    for (int id = *hit; id != -1; id = parent[static_cast<size_t>(id)])
        frames.push_back(GraphHom::from_indices(g, g, homs[static_cast<size_t>(id)], frames_based));
    std::reverse(frames.begin(), frames.end());
    report.contractible = true;
    report.target = g->label(homs[static_cast<size_t>(*hit)].front());
    report.chain = MapHomotopyChain{std::move(frames), frames_based};
    return report;
}

}  // namespace

ContractionReport is_contractible(const GraphPtr& g) { return contract_impl(g, std::nullopt); }

ContractionReport is_contractible_based(const GraphPtr& g, std::string_view base) {
    return contract_impl(g, g->index_of(base));
}

StableSquare chain_applied_to_loop(const MapHomotopyChain& chain, const StablePath& loop) {
    if (chain.frames.empty()) throw validation_error("empty map-homotopy chain");
    std::vector<StablePath> rows;
    for (const auto& frame : chain.frames) {
        if (!(frame.source() == loop.graph()))
            throw validation_error("chain frames must be defined on the loop's graph");
        std::vector<int> mapped;
        mapped.reserve(loop.seq().size());
        for (int v : loop.seq()) mapped.push_back(frame.apply(v));
        rows.push_back(StablePath::from_indices(frame.target_ptr(), loop.offset(), std::move(mapped)));
    }
    return stack_rows(rows);
}

}  // namespace ahtk
