#include "crystile/neighbors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace crystile {

std::optional<std::int32_t> NeighborGraph::state_index(const P2Element& s) const {
    auto it = std::lower_bound(states.begin(), states.end(), s);
    if (it == states.end() || !(*it == s)) return std::nullopt;
    return static_cast<std::int32_t>(it - states.begin());
}

std::size_t NeighborGraph::out_degree(std::int32_t state) const {
    std::size_t n = 0;
    for (const Edge& e : edges)
        if (e.src == state) ++n;
    return n;
}

std::vector<std::tuple<P2Element, P2Element, P2Element>> edge_targets(const P2Element& gamma,
                                                                      const TileParams& params) {
    validate(params);
    DigitSet digits = digit_set(params);
    P2Element h = conjugate_by_g(gamma, params);
    std::vector<std::tuple<P2Element, P2Element, P2Element>> out;
    out.reserve(digits.size() * digits.size());
    for (const P2Element& d : digits) {
        P2Element left = compose(inverse(d), h);
        for (const P2Element& dp : digits) out.emplace_back(d, dp, compose(left, dp));
    }
    return out;
}

NeighborGraph build_graph(std::vector<P2Element> states, const TileParams& params) {
    validate(params);
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    for (const P2Element& s : states)
        if (s.is_identity()) throw invalid_params_error("build_graph: identity is not a valid state");

    NeighborGraph g{params, digit_set(params), std::move(states), {}};
    for (std::int32_t si = 0; si < static_cast<std::int32_t>(g.states.size()); ++si) {
        P2Element h = conjugate_by_g(g.states[static_cast<std::size_t>(si)], params);
        for (std::int32_t di = 0; di < static_cast<std::int32_t>(g.digits.size()); ++di) {
            P2Element left = compose(inverse(g.digits[static_cast<std::size_t>(di)]), h);
            for (std::int32_t dj = 0; dj < static_cast<std::int32_t>(g.digits.size()); ++dj) {
                P2Element tgt = compose(left, g.digits[static_cast<std::size_t>(dj)]);
                if (auto ti = g.state_index(tgt)) g.edges.push_back({si, di, dj, *ti});
            }
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

NeighborGraph trim(const NeighborGraph& g) {
    const std::size_t n = g.states.size();
    std::vector<std::size_t> outdeg(n, 0);
    std::vector<std::vector<std::int32_t>> preds(n);
    for (const NeighborGraph::Edge& e : g.edges) {
        ++outdeg[static_cast<std::size_t>(e.src)];
        preds[static_cast<std::size_t>(e.dst)].push_back(e.src);
    }
    std::vector<char> removed(n, 0);
    std::vector<std::int32_t> queue;
    for (std::size_t v = 0; v < n; ++v)
        if (outdeg[v] == 0) queue.push_back(static_cast<std::int32_t>(v));
    while (!queue.empty()) {
        std::int32_t v = queue.back();
        queue.pop_back();
        if (removed[static_cast<std::size_t>(v)]) continue;
        removed[static_cast<std::size_t>(v)] = 1;
        for (std::int32_t u : preds[static_cast<std::size_t>(v)]) {
            if (!removed[static_cast<std::size_t>(u)] &&
                --outdeg[static_cast<std::size_t>(u)] == 0)
                queue.push_back(u);
        }
    }

    NeighborGraph out{g.params, g.digits, {}, {}};
    std::vector<std::int32_t> remap(n, -1);
    for (std::size_t v = 0; v < n; ++v) {
        if (!removed[v]) {
            remap[v] = static_cast<std::int32_t>(out.states.size());
            out.states.push_back(g.states[v]);
        }
    }
    for (const NeighborGraph::Edge& e : g.edges) {
        std::int32_t s = remap[static_cast<std::size_t>(e.src)];
        std::int32_t d = remap[static_cast<std::size_t>(e.dst)];
        if (s >= 0 && d >= 0) out.edges.push_back({s, e.delta, e.deltap, d});
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

namespace {

std::int64_t box_floor_int(const Rat& v) {
    BigInt f = v.floor();
    if (!f.fits_int64()) throw budget_exceeded_error("candidate range does not fit in int64");
    return f.to_int64();
}

struct CandidateRanges {
    std::int64_t pmax, qmax; // shared ranges for r = 0 and r = 1 (box is symmetric)
};

CandidateRanges candidate_ranges(const TileParams& params) {
    Box box = certified_enclosure(params);
    return {box_floor_int(box.xhi + box.xhi), box_floor_int(box.yhi + box.yhi)};
}

// ---------------------------------------------------------------------------
// Implicit-graph engine: states from which an infinite walk exists, computed
// with an iterative Tarjan pass (cyclic strongly connected components) and a
// propagation sweep in emission order. Equivalent to iterated removal of
// out-degree-0 states, without materializing edges.
// ---------------------------------------------------------------------------

template <class Model>
std::vector<char> infinite_walk_survivors(const Model& model) {
    const std::int32_t n = model.state_count();
    const std::int32_t bound = model.successor_bound();
    constexpr std::int32_t kUnset = -1;

    std::vector<std::int32_t> idx(static_cast<std::size_t>(n), kUnset);
    std::vector<std::int32_t> low(static_cast<std::size_t>(n), 0);
    std::vector<std::int32_t> scc(static_cast<std::size_t>(n), kUnset);
    std::vector<char> onstack(static_cast<std::size_t>(n), 0);
    std::vector<char> selfloop(static_cast<std::size_t>(n), 0);
    std::vector<std::int32_t> stack;
    struct Frame {
        std::int32_t v;
        std::int32_t slot;
    };
    std::vector<Frame> frames;
    std::vector<char> scc_cyclic;
    std::int32_t counter = 0;

    for (std::int32_t root = 0; root < n; ++root) {
        if (idx[static_cast<std::size_t>(root)] != kUnset || !model.is_state(root)) continue;
        idx[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
        onstack[static_cast<std::size_t>(root)] = 1;
        stack.push_back(root);
        frames.push_back({root, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            bool descended = false;
            while (f.slot < bound) {
                std::int32_t w = model.successor(f.v, f.slot++);
                if (w < 0) continue;
                if (w == f.v) {
                    selfloop[static_cast<std::size_t>(f.v)] = 1;
                    continue;
                }
                if (idx[static_cast<std::size_t>(w)] == kUnset) {
                    idx[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
                    onstack[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (onstack[static_cast<std::size_t>(w)] &&
                    idx[static_cast<std::size_t>(w)] < low[static_cast<std::size_t>(f.v)])
                    low[static_cast<std::size_t>(f.v)] = idx[static_cast<std::size_t>(w)];
            }
            if (descended) continue;
            std::int32_t v = frames.back().v;
            frames.pop_back();
            if (!frames.empty()) {
                std::int32_t parent = frames.back().v;
                if (low[static_cast<std::size_t>(v)] < low[static_cast<std::size_t>(parent)])
                    low[static_cast<std::size_t>(parent)] = low[static_cast<std::size_t>(v)];
            }
            if (low[static_cast<std::size_t>(v)] == idx[static_cast<std::size_t>(v)]) {
                std::int32_t comp = static_cast<std::int32_t>(scc_cyclic.size());
                std::int32_t size = 0;
                std::int32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    onstack[static_cast<std::size_t>(w)] = 0;
                    scc[static_cast<std::size_t>(w)] = comp;
                    ++size;
                } while (w != v);
                scc_cyclic.push_back(size > 1);
            }
        }
    }

    for (std::int32_t v = 0; v < n; ++v)
        if (model.is_state(v) && selfloop[static_cast<std::size_t>(v)])
            scc_cyclic[static_cast<std::size_t>(scc[static_cast<std::size_t>(v)])] = 1;

    // Components are emitted sinks-first, so every cross edge points to an
    // already-final component.
    std::vector<char> scc_surv = scc_cyclic;
    const std::int32_t nscc = static_cast<std::int32_t>(scc_cyclic.size());
    std::vector<std::int32_t> offsets(static_cast<std::size_t>(nscc) + 1, 0);
    for (std::int32_t v = 0; v < n; ++v)
        if (model.is_state(v)) ++offsets[static_cast<std::size_t>(scc[static_cast<std::size_t>(v)]) + 1];
    for (std::int32_t s = 0; s < nscc; ++s)
        offsets[static_cast<std::size_t>(s) + 1] += offsets[static_cast<std::size_t>(s)];
    std::vector<std::int32_t> order(static_cast<std::size_t>(offsets.back()));
    {
        std::vector<std::int32_t> cursor(offsets.begin(), offsets.end() - 1);
        for (std::int32_t v = 0; v < n; ++v)
            if (model.is_state(v))
                order[static_cast<std::size_t>(
                    cursor[static_cast<std::size_t>(scc[static_cast<std::size_t>(v)])]++)] = v;
    }
    for (std::int32_t v : order) {
        std::int32_t sv = scc[static_cast<std::size_t>(v)];
        if (scc_surv[static_cast<std::size_t>(sv)]) continue;
        for (std::int32_t slot = 0; slot < bound; ++slot) {
            std::int32_t w = model.successor(v, slot);
            if (w < 0 || w == v) continue;
            std::int32_t sw = scc[static_cast<std::size_t>(w)];
            if (sw != sv && scc_surv[static_cast<std::size_t>(sw)]) {
                scc_surv[static_cast<std::size_t>(sv)] = 1;
                break;
            }
        }
    }

    std::vector<char> surv(static_cast<std::size_t>(n), 0);
    for (std::int32_t v = 0; v < n; ++v)
        if (model.is_state(v)) surv[static_cast<std::size_t>(v)] = scc_surv[static_cast<std::size_t>(
            scc[static_cast<std::size_t>(v)])];
    return surv;
}

struct P2Model {
    std::int64_t A, B;
    std::int64_t pmax, qmax;
    std::int64_t pdim, qdim;

    P2Model(const TileParams& params, const CandidateRanges& r)
        : A(params.A), B(params.B), pmax(r.pmax), qmax(r.qmax), pdim(2 * r.pmax + 1),
          qdim(2 * r.qmax + 1) {}

    std::int32_t state_count() const { return static_cast<std::int32_t>(pdim * qdim * 2); }
    std::int32_t successor_bound() const { return static_cast<std::int32_t>(4 * B - 4); }

    std::int32_t encode(std::int64_t p, std::int64_t q, std::int64_t r) const {
        if (p < -pmax || p > pmax || q < -qmax || q > qmax) return -1;
        if (p == 0 && q == 0 && r == 0) return -1; // identity excluded
        return static_cast<std::int32_t>(((p + pmax) * qdim + (q + qmax)) * 2 + r);
    }
    void decode(std::int32_t v, std::int64_t& p, std::int64_t& q, std::int64_t& r) const {
        r = v & 1;
        std::int64_t cell = v >> 1;
        q = cell % qdim - qmax;
        p = cell / qdim - pmax;
    }
    bool is_state(std::int32_t v) const {
        std::int64_t p, q, r;
        decode(v, p, q, r);
        return !(p == 0 && q == 0 && r == 0);
    }

    std::int32_t successor(std::int32_t v, std::int32_t slot) const {
        std::int64_t p, q, r;
        decode(v, p, q, r);
        std::int64_t hp = r ? (1 - q) * B - 1 : -q * B;
        std::int64_t hq = p - q * A;
        if (slot < 2 * B - 3) {
            // both labels translation digits a^-j h a^k; the flip in h negates
            // delta' when r = 1, so targets range over k - j or -(j + k)
            if (r == 0) return encode(hp + slot - (B - 2), hq, 0);
            return encode(hp - slot, hq, 1);
        }
        slot -= static_cast<std::int32_t>(2 * B - 3);
        if (slot < B - 1) {
            // (a^j, c)
            return encode(hp - slot, hq, r ^ 1);
        }
        slot -= static_cast<std::int32_t>(B - 1);
        if (slot < B - 1) {
            // (c, a^k)
            std::int64_t tp = -hp + (r ? slot : -static_cast<std::int64_t>(slot));
            return encode(tp, -hq, r ^ 1);
        }
        // (c, c)
        return encode(-hp, -hq, r);
    }
};

struct LatticeModel {
    std::int64_t A, B;
    std::int64_t xmax, ymax;
    std::int64_t xdim, ydim;

    std::int32_t state_count() const { return static_cast<std::int32_t>(xdim * ydim); }
    std::int32_t successor_bound() const { return static_cast<std::int32_t>(2 * B - 1); }

    std::int32_t encode(std::int64_t x, std::int64_t y) const {
        if (x < -xmax || x > xmax || y < -ymax || y > ymax) return -1;
        if (x == 0 && y == 0) return -1;
        return static_cast<std::int32_t>((x + xmax) * ydim + (y + ymax));
    }
    void decode(std::int32_t v, std::int64_t& x, std::int64_t& y) const {
        y = v % ydim - ymax;
        x = v / ydim - xmax;
    }
    bool is_state(std::int32_t v) const {
        std::int64_t x, y;
        decode(v, x, y);
        return !(x == 0 && y == 0);
    }
    std::int32_t successor(std::int32_t v, std::int32_t slot) const {
        std::int64_t x, y;
        decode(v, x, y);
        // s' = M s + d' - d
        std::int64_t d = slot - (B - 1);
        return encode(-B * y + d, x - A * y);
    }
};

} // namespace

std::vector<P2Element> candidate_set(const TileParams& params) {
    validate(params);
    CandidateRanges r = candidate_ranges(params);
    std::vector<P2Element> out;
    out.reserve(static_cast<std::size_t>((2 * r.pmax + 1) * (2 * r.qmax + 1) * 2 - 1));
    for (int rot = 0; rot <= 1; ++rot)
        for (std::int64_t p = -r.pmax; p <= r.pmax; ++p)
            for (std::int64_t q = -r.qmax; q <= r.qmax; ++q) {
                P2Element g = p2(p, q, rot);
                if (!g.is_identity()) out.push_back(g);
            }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<P2Element> neighbor_set(const TileParams& params) {
    validate(params);
    CandidateRanges r = candidate_ranges(params);
    P2Model model(params, r);
    std::vector<char> surv = infinite_walk_survivors(model);
    std::vector<P2Element> out;
    for (std::int32_t v = 0; v < model.state_count(); ++v) {
        if (!surv[static_cast<std::size_t>(v)]) continue;
        std::int64_t p, q, rr;
        model.decode(v, p, q, rr);
        out.push_back(p2(p, q, static_cast<int>(rr)));
    }
    std::sort(out.begin(), out.end());

    // edge-closure check: every survivor keeps a successor among survivors
    for (const P2Element& s : out) {
        std::int32_t v = model.encode(s.p, s.q, s.r);
        bool ok = false;
        for (std::int32_t slot = 0; slot < model.successor_bound() && !ok; ++slot) {
            std::int32_t w = model.successor(v, slot);
            if (w >= 0 && surv[static_cast<std::size_t>(w)]) ok = true;
        }
        if (!ok) throw error("neighbor_set: edge closure violated (internal inconsistency)");
    }
    return out;
}

std::vector<IntV2> lattice_neighbor_set(const TileParams& params) {
    validate(params);
    Box box = lattice_certified_enclosure(params);
    LatticeModel model;
    model.A = params.A;
    model.B = params.B;
    model.xmax = box_floor_int(box.xhi + box.xhi);
    model.ymax = box_floor_int(box.yhi + box.yhi);
    model.xdim = 2 * model.xmax + 1;
    model.ydim = 2 * model.ymax + 1;
    std::vector<char> surv = infinite_walk_survivors(model);
    std::vector<IntV2> out;
    for (std::int32_t v = 0; v < model.state_count(); ++v) {
        if (!surv[static_cast<std::size_t>(v)]) continue;
        std::int64_t x, y;
        model.decode(v, x, y);
        out.push_back({x, y});
    }
    std::sort(out.begin(), out.end(), [](const IntV2& a, const IntV2& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    return out;
}

std::vector<P2Element> pseudo_neighbor_set(const TileParams& params) {
    validate(params);
    const std::int64_t A = params.A;
    if (A < -1 || 2 * A >= params.B + 3)
        throw out_of_range_error("pseudo_neighbor_set requires A >= -1 and 2A < B+3");
    std::vector<P2Element> s;
    if (A > 0) {
        s = {p2(A - 1, 1, 0), p2(1, 0, 0),     p2(-1, 0, 0),    p2(1 - A, -1, 0), p2(0, 0, 1),
             p2(A, 1, 1),     p2(A - 1, 1, 1), p2(1, 0, 1),     p2(-1, 0, 1),     p2(1 - A, -1, 1)};
    } else if (A == 0) {
        s = {p2(1, 0, 0), p2(-1, 0, 0), p2(0, 0, 1),  p2(1, 0, 1),
             p2(-1, 0, 1), p2(-1, 1, 1), p2(0, 1, 1), p2(1, 1, 1)};
    } else {
        s = {p2(1, 0, 0),  p2(-1, 0, 0), p2(0, 0, 1), p2(1, 0, 1),
             p2(-1, 0, 1), p2(-1, 1, 1), p2(0, 1, 1)};
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::vector<RatV2> boundary_points(const P2Element& gamma, const TileParams& params,
                                   std::int64_t depth) {
    validate(params);
    if (depth < 0) throw out_of_range_error("boundary_points: depth must be >= 0");
    NeighborGraph g = build_graph(neighbor_set(params), params);
    auto start = g.state_index(gamma);
    if (!start) throw not_a_neighbor_error("boundary_points: " + to_string(gamma) + " is not a neighbor");

    // adjacency ranges (edges are sorted by src)
    std::vector<std::size_t> lo(g.states.size() + 1, 0);
    for (const NeighborGraph::Edge& e : g.edges) ++lo[static_cast<std::size_t>(e.src) + 1];
    for (std::size_t i = 0; i < g.states.size(); ++i) lo[i + 1] += lo[i];

    RatV2 seed = ifs_fixed_point(params, 1);
    std::vector<RatV2> pts;
    std::vector<P2Element> address;
    constexpr std::size_t kWalkCap = 1u << 20;

    struct WalkFrame {
        std::int32_t state;
        std::size_t edge;
    };
    std::vector<WalkFrame> stack{{*start, 0}};
    while (!stack.empty()) {
        WalkFrame& f = stack.back();
        if (static_cast<std::int64_t>(stack.size()) - 1 == depth) {
            pts.push_back(apply_address(params, address, seed));
            if (pts.size() > kWalkCap) throw budget_exceeded_error("boundary_points: too many walks");
            stack.pop_back();
            if (!address.empty()) address.pop_back();
            continue;
        }
        std::size_t base = lo[static_cast<std::size_t>(f.state)];
        std::size_t end = lo[static_cast<std::size_t>(f.state) + 1];
        if (base + f.edge >= end) {
            stack.pop_back();
            if (!address.empty()) address.pop_back();
            continue;
        }
        const NeighborGraph::Edge& e = g.edges[base + f.edge];
        ++f.edge;
        address.push_back(g.digits[static_cast<std::size_t>(e.delta)]);
        stack.push_back({e.dst, 0});
    }

    std::sort(pts.begin(), pts.end(), [](const RatV2& a, const RatV2& b) {
        int c = a.x.compare(b.x);
        if (c != 0) return c < 0;
        return a.y.compare(b.y) < 0;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

} // namespace

std::string graph_to_dot(const NeighborGraph& g) {
    std::ostringstream os;
    os << "digraph neighbor_graph {\n";
    os << "  rankdir=LR;\n";
    for (const P2Element& s : g.states) os << "  \"" << to_string(s) << "\";\n";
    for (const NeighborGraph::Edge& e : g.edges) {
        os << "  \"" << to_string(g.states[static_cast<std::size_t>(e.src)]) << "\" -> \""
           << to_string(g.states[static_cast<std::size_t>(e.dst)]) << "\" [label=\""
           << to_string(g.digits[static_cast<std::size_t>(e.delta)]) << "|"
           << to_string(g.digits[static_cast<std::size_t>(e.deltap)]) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string graph_to_json(const NeighborGraph& g) {
    std::ostringstream os;
    os << "{\"params\":{\"A\":" << g.params.A << ",\"B\":" << g.params.B << "},\"states\":[";
    for (std::size_t i = 0; i < g.states.size(); ++i) {
        if (i) os << ",";
        os << "\"" << json_escape(to_string(g.states[i])) << "\"";
    }
    os << "],\"edges\":[";
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const NeighborGraph::Edge& e = g.edges[i];
        if (i) os << ",";
        os << "{\"src\":\"" << to_string(g.states[static_cast<std::size_t>(e.src)])
           << "\",\"delta\":\"" << to_string(g.digits[static_cast<std::size_t>(e.delta)])
           << "\",\"deltap\":\"" << to_string(g.digits[static_cast<std::size_t>(e.deltap)])
           << "\",\"dst\":\"" << to_string(g.states[static_cast<std::size_t>(e.dst)]) << "\"}";
    }
    os << "]}";
    return os.str();
}

} // namespace crystile
