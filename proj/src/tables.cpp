#include "crystile/neighbors.hpp"

#include <algorithm>

namespace crystile {

namespace {

using i64 = std::int64_t;
using LabelList = std::vector<std::pair<i64, i64>>;

LabelList single(i64 d, i64 dp) { return {{d, dp}}; }

// (a^j, a^(sum-j)) for j in [jlo, jhi]
LabelList antidiagonal(i64 sum, i64 jlo, i64 jhi) {
    LabelList out;
    for (i64 j = jhi; j >= jlo; --j) out.emplace_back(j, sum - j);
    return out;
}

// (a^(k+off), a^k) for k in [0, khi]
LabelList shifted(i64 off, i64 khi) {
    LabelList out;
    for (i64 k = 0; k <= khi; ++k) out.emplace_back(k + off, k);
    return out;
}

// (a^k, a^(k+off)) for k in [0, khi]
LabelList shifted_up(i64 off, i64 khi) {
    LabelList out;
    for (i64 k = 0; k <= khi; ++k) out.emplace_back(k, k + off);
    return out;
}

} // namespace

// Edge catalog of the pseudo-neighbor graph, one entry per row family.
// Ranges and conditions are normalized so that every emitted label is a
// valid digit; the encoding is validated against freshly generated graphs
// by the verification suite.
const std::vector<EdgeTableRow>& edge_table_rows() {
    static const std::vector<EdgeTableRow> rows = {
        {"(1) c->ac",
         [](i64 A, i64 B) { return B >= 2 && A >= -1; },
         [](i64, i64) { return p2(0, 0, 1); },
         [](i64, i64) { return p2(1, 0, 1); },
         [](i64, i64 B) { return antidiagonal(B - 2, 0, B - 2); }},
        {"(13) c->a^-1 c",
         [](i64 A, i64 B) { return B >= 4 && A >= -1; },
         [](i64, i64) { return p2(0, 0, 1); },
         [](i64, i64) { return p2(-1, 0, 1); },
         [](i64, i64 B) { return antidiagonal(B, 2, B - 2); }},
        {"(2) c->c",
         [](i64 A, i64 B) { return B >= 3 && A >= -1; },
         [](i64, i64) { return p2(0, 0, 1); },
         [](i64, i64) { return p2(0, 0, 1); },
         [](i64, i64 B) { return antidiagonal(B - 1, 1, B - 2); }},
        {"c->a^-1",
         [](i64 A, i64 B) { return B >= 2 && A >= -1; },
         [](i64, i64) { return p2(0, 0, 1); },
         [](i64, i64) { return p2(-1, 0, 0); },
         [](i64, i64 B) { return single(kC, B - 2); }},
        {"c->a",
         [](i64 A, i64 B) { return B >= 2 && A >= -1; },
         [](i64, i64) { return p2(0, 0, 1); },
         [](i64, i64) { return p2(1, 0, 0); },
         [](i64, i64 B) { return single(B - 2, kC); }},
        {"(3) a->a^(A-1) b",
         [](i64 A, i64 B) { return A >= 1 && B >= 2 && !(A == 2 && B == 2); },
         [](i64, i64) { return p2(1, 0, 0); },
         [](i64 A, i64) { return p2(A - 1, 1, 0); },
         [](i64 A, i64 B) { return shifted_up(A - 1, B - A - 1); }},
        {"a->a^(1-A) b^-1 c",
         [](i64 A, i64 B) { return A >= 1 && B >= 2 && !(A == 2 && B == 2); },
         [](i64, i64) { return p2(1, 0, 0); },
         [](i64 A, i64) { return p2(1 - A, -1, 1); },
         [](i64 A, i64) { return single(kC, A - 1); }},
        {"a->a^(1-A) b^-1",
         [](i64 A, i64 B) { return A == 1 && B >= 2; },
         [](i64, i64) { return p2(1, 0, 0); },
         [](i64 A, i64) { return p2(1 - A, -1, 0); },
         [](i64, i64) { return single(kC, kC); }},
        {"a->bc",
         [](i64 A, i64 B) { return B >= 2 && A >= -1 && A <= 1; },
         [](i64, i64) { return p2(1, 0, 0); },
         [](i64, i64) { return p2(0, 1, 1); },
         [](i64, i64) { return single(0, kC); }},
        {"a->a^-1 bc",
         [](i64 A, i64 B) { return B >= 3 && (A == 0 || A == -1); },
         [](i64, i64) { return p2(1, 0, 0); },
         [](i64, i64) { return p2(-1, 1, 1); },
         [](i64, i64) { return single(1, kC); }},
        {"a^-1->a^-1 bc",
         [](i64 A, i64 B) { return B >= 3 && (A == 0 || A == -1); },
         [](i64, i64) { return p2(-1, 0, 0); },
         [](i64, i64) { return p2(-1, 1, 1); },
         [](i64, i64) { return single(kC, 1); }},
        {"a^-1->bc",
         [](i64 A, i64 B) { return B >= 2 && A >= -1 && A <= 1; },
         [](i64, i64) { return p2(-1, 0, 0); },
         [](i64, i64) { return p2(0, 1, 1); },
         [](i64, i64) { return single(kC, 0); }},
        {"(4) a^-1->a^(1-A) b^-1",
         [](i64 A, i64 B) { return A >= 1 && B >= 2 && !(A == 2 && B == 2); },
         [](i64, i64) { return p2(-1, 0, 0); },
         [](i64 A, i64) { return p2(1 - A, -1, 0); },
         [](i64 A, i64 B) { return shifted(A - 1, B - A - 1); }},
        {"a^-1->a^(1-A) b^-1 c",
         [](i64 A, i64 B) { return A >= 1 && B >= 2 && !(A == 2 && B == 2); },
         [](i64, i64) { return p2(-1, 0, 0); },
         [](i64 A, i64) { return p2(1 - A, -1, 1); },
         [](i64 A, i64) { return single(A - 1, kC); }},
        {"a^-1->a^(A-1) b",
         [](i64 A, i64 B) { return A == 1 && B >= 2; },
         [](i64, i64) { return p2(-1, 0, 0); },
         [](i64 A, i64) { return p2(A - 1, 1, 0); },
         [](i64, i64) { return single(kC, kC); }},
        {"abc->a^-1 bc",
         [](i64 A, i64 B) { return A == 0 && B >= 2; },
         [](i64, i64) { return p2(1, 1, 1); },
         [](i64, i64) { return p2(-1, 1, 1); },
         [](i64, i64) { return single(0, 0); }},
        {"(5) a^(A-1) bc->a^(1-A) b^-1 c",
         [](i64 A, i64 B) { return A >= 2 && B >= 2; },
         [](i64 A, i64) { return p2(A - 1, 1, 1); },
         [](i64 A, i64) { return p2(1 - A, -1, 1); },
         [](i64 A, i64) { return antidiagonal(A - 2, 0, A - 2); }},
        {"a^(A-1) bc->abc",
         [](i64 A, i64 B) { return A >= 0 && A <= 2 && B >= 2; },
         [](i64 A, i64) { return p2(A - 1, 1, 1); },
         [](i64, i64) { return p2(1, 1, 1); },
         [](i64, i64) { return single(kC, kC); }},
        {"a^(A-1) bc->a^(A-1) b",
         [](i64 A, i64 B) { return A >= 2 && B >= 2; },
         [](i64 A, i64) { return p2(A - 1, 1, 1); },
         [](i64 A, i64) { return p2(A - 1, 1, 0); },
         [](i64 A, i64) { return single(kC, A - 2); }},
        {"a^(A-1) bc->a^(1-A) b^-1",
         [](i64 A, i64 B) { return A >= 2 && B >= 2; },
         [](i64 A, i64) { return p2(A - 1, 1, 1); },
         [](i64 A, i64) { return p2(1 - A, -1, 0); },
         [](i64 A, i64) { return single(A - 2, kC); }},
        {"(6) ac->a^A bc",
         [](i64 A, i64 B) { return A >= 1 && B >= 2 && !(A == 2 && B == 2); },
         [](i64, i64) { return p2(1, 0, 1); },
         [](i64 A, i64) { return p2(A, 1, 1); },
         [](i64 A, i64 B) { return antidiagonal(B - 1 - A, 0, B - A - 1); }},
        {"(6herm) ac->a^-1 bc",
         [](i64 A, i64 B) { return B >= 4 && (A == 0 || A == -1); },
         [](i64, i64) { return p2(1, 0, 1); },
         [](i64, i64) { return p2(-1, 1, 1); },
         [](i64, i64 B) { return antidiagonal(B, 2, B - 2); }},
        {"(14) ac->abc",
         [](i64 A, i64 B) { return A == 0 && B >= 2; },
         [](i64, i64) { return p2(1, 0, 1); },
         [](i64, i64) { return p2(1, 1, 1); },
         [](i64, i64 B) { return antidiagonal(B - 2, 0, B - 2); }},
        {"(7) ac->a^(A-1) bc",
         [](i64 A, i64 B) { return A >= 2 && B >= 2; },
         [](i64, i64) { return p2(1, 0, 1); },
         [](i64 A, i64) { return p2(A - 1, 1, 1); },
         [](i64 A, i64 B) { return antidiagonal(B - A, 0, B - A); }},
        {"(7prime) ac->bc",
         [](i64 A, i64 B) { return B >= 3 && A >= -1 && A <= 1; },
         [](i64, i64) { return p2(1, 0, 1); },
         [](i64, i64) { return p2(0, 1, 1); },
         [](i64, i64 B) { return antidiagonal(B - 1, 1, B - 2); }},
        {"ac->a^(A-1) b",
         [](i64 A, i64 B) { return A >= 2 && B >= 2; },
         [](i64, i64) { return p2(1, 0, 1); },
         [](i64 A, i64) { return p2(A - 1, 1, 0); },
         [](i64 A, i64 B) { return single(B - A, kC); }},
        {"ac->a^(1-A) b^-1",
         [](i64 A, i64 B) { return A >= 2 && B >= 2; },
         [](i64, i64) { return p2(1, 0, 1); },
         [](i64 A, i64) { return p2(1 - A, -1, 0); },
         [](i64 A, i64 B) { return single(kC, B - A); }},
        {"a^A bc->a^-1 c",
         [](i64 A, i64 B) { return B >= 2 && A >= -1; },
         [](i64 A, i64) { return p2(A, 1, 1); },
         [](i64, i64) { return p2(-1, 0, 1); },
         [](i64, i64) { return single(0, 0); }},
        {"a^A bc->a",
         [](i64 A, i64 B) { return B >= 2 && A >= -1; },
         [](i64 A, i64) { return p2(A, 1, 1); },
         [](i64, i64) { return p2(1, 0, 0); },
         [](i64, i64) { return single(kC, 0); }},
        {"a^A bc->a^-1",
         [](i64 A, i64 B) { return B >= 2 && A >= -1; },
         [](i64 A, i64) { return p2(A, 1, 1); },
         [](i64, i64) { return p2(-1, 0, 0); },
         [](i64, i64) { return single(0, kC); }},
        {"a^A bc->ac",
         [](i64 A, i64 B) { return B >= 2 && A >= -1; },
         [](i64 A, i64) { return p2(A, 1, 1); },
         [](i64, i64) { return p2(1, 0, 1); },
         [](i64, i64) { return single(kC, kC); }},
        {"bc->a^-1 bc",
         [](i64 A, i64 B) { return A == -1 && B >= 2; },
         [](i64, i64) { return p2(0, 1, 1); },
         [](i64, i64) { return p2(-1, 1, 1); },
         [](i64, i64) { return single(0, 0); }},
        {"c->a^-1 c (B=2)",
         [](i64 A, i64 B) { return B == 2 && A >= -1; },
         [](i64, i64) { return p2(0, 0, 1); },
         [](i64, i64) { return p2(-1, 0, 1); },
         [](i64, i64) { return single(kC, kC); }},
        {"ac->a^(1-A) b^-1 c (A=B=2)",
         [](i64 A, i64 B) { return A == 2 && B == 2; },
         [](i64, i64) { return p2(1, 0, 1); },
         [](i64 A, i64) { return p2(1 - A, -1, 1); },
         [](i64, i64) { return single(kC, kC); }},
        {"(8) a^-1 c->a^(1-A) b^-1 c",
         [](i64 A, i64 B) { return A > 0 && B >= A + 2; },
         [](i64, i64) { return p2(-1, 0, 1); },
         [](i64 A, i64) { return p2(1 - A, -1, 1); },
         [](i64 A, i64 B) { return antidiagonal(B + A - 2, A, B - 2); }},
        {"a^-1 c->a^-1 bc",
         [](i64 A, i64 B) { return B == 2 && (A == 0 || A == -1); },
         [](i64, i64) { return p2(-1, 0, 1); },
         [](i64, i64) { return p2(-1, 1, 1); },
         [](i64, i64) { return single(kC, kC); }},
        {"(9) a^(1-A) b^-1 c->a^A bc",
         [](i64 A, i64 B) { return A >= 3 && B >= 4; },
         [](i64 A, i64) { return p2(1 - A, -1, 1); },
         [](i64 A, i64) { return p2(A, 1, 1); },
         [](i64 A, i64 B) { return antidiagonal(2 * B - 1 - A, B - A + 1, B - 2); }},
        {"(10) a^(1-A) b^-1 c->a^(A-1) bc",
         [](i64 A, i64 B) { return A >= 4 && B >= 6; },
         [](i64 A, i64) { return p2(1 - A, -1, 1); },
         [](i64 A, i64) { return p2(A - 1, 1, 1); },
         [](i64 A, i64 B) { return antidiagonal(2 * B - A, B - A + 2, B - 2); }},
        {"(11) a^(A-1) b->a^(1-A) b^-1",
         [](i64 A, i64 B) { return A >= 3 && B >= 4; },
         [](i64 A, i64) { return p2(A - 1, 1, 0); },
         [](i64 A, i64) { return p2(1 - A, -1, 0); },
         [](i64 A, i64 B) {
             LabelList out;
             for (i64 j = 0; j <= A - 3; ++j) out.emplace_back(j, j + B + 1 - A);
             return out;
         }},
        {"a^(A-1) b->a^A bc",
         [](i64 A, i64 B) { return A >= 2 && B >= 2; },
         [](i64 A, i64) { return p2(A - 1, 1, 0); },
         [](i64 A, i64) { return p2(A, 1, 1); },
         [](i64 A, i64 B) { return single(kC, B - A); }},
        {"a^(A-1) b->a^(A-1) bc",
         [](i64 A, i64 B) { return A >= 3 && B >= 4; },
         [](i64 A, i64) { return p2(A - 1, 1, 0); },
         [](i64 A, i64) { return p2(A - 1, 1, 1); },
         [](i64 A, i64 B) { return single(kC, B - A + 1); }},
        {"(12) a^(1-A) b^-1->a^(A-1) b",
         [](i64 A, i64 B) { return A >= 3 && B >= 4; },
         [](i64 A, i64) { return p2(1 - A, -1, 0); },
         [](i64 A, i64) { return p2(A - 1, 1, 0); },
         [](i64 A, i64 B) {
             LabelList out;
             for (i64 k = 0; k <= A - 3; ++k) out.emplace_back(k + B + 1 - A, k);
             return out;
         }},
        {"a^(1-A) b^-1->a^A bc",
         [](i64 A, i64 B) { return A >= 2 && B >= 2; },
         [](i64 A, i64) { return p2(1 - A, -1, 0); },
         [](i64 A, i64) { return p2(A, 1, 1); },
         [](i64 A, i64 B) { return single(B - A, kC); }},
        {"a^(1-A) b^-1->a^(A-1) bc",
         [](i64 A, i64 B) { return A >= 3 && B >= 4; },
         [](i64 A, i64) { return p2(1 - A, -1, 0); },
         [](i64 A, i64) { return p2(A - 1, 1, 1); },
         [](i64 A, i64 B) { return single(B - A + 1, kC); }},
    };
    return rows;
}

std::vector<LabeledEdge> expand_edge_table(const TileParams& params,
                                           const std::vector<EdgeTableRow>& rows) {
    validate(params);
    const i64 A = params.A, B = params.B;
    std::vector<LabeledEdge> out;
    for (const EdgeTableRow& row : rows) {
        if (!row.applies(A, B)) continue;
        P2Element src = row.src(A, B);
        P2Element dst = row.dst(A, B);
        for (auto [d, dp] : row.labels(A, B)) {
            auto digit = [&](i64 code) {
                if (code == kC) return p2_c();
                if (code < 0 || code > B - 2)
                    throw error("edge table row '" + row.name + "' emits digit a^" +
                                std::to_string(code) + " outside the digit set");
                return p2_a(code);
            };
            out.push_back({src, digit(d), digit(dp), dst});
        }
    }
    std::sort(out.begin(), out.end());
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1]) throw error("edge table encoding emits a duplicate edge");
    return out;
}

TableDiff diff_edge_tables(const TileParams& params, const std::vector<EdgeTableRow>& rows) {
    validate(params);
    if (params.A < -1 || 2 * params.A >= params.B + 3)
        throw out_of_range_error("edge tables require A >= -1 and 2A < B+3");
    NeighborGraph g = build_graph(pseudo_neighbor_set(params), params);
    std::vector<LabeledEdge> generated;
    generated.reserve(g.edges.size());
    for (const NeighborGraph::Edge& e : g.edges)
        generated.push_back({g.states[static_cast<std::size_t>(e.src)],
                             g.digits[static_cast<std::size_t>(e.delta)],
                             g.digits[static_cast<std::size_t>(e.deltap)],
                             g.states[static_cast<std::size_t>(e.dst)]});
    std::sort(generated.begin(), generated.end());
    std::vector<LabeledEdge> encoded = expand_edge_table(params, rows);

    TableDiff diff;
    std::set_difference(generated.begin(), generated.end(), encoded.begin(), encoded.end(),
                        std::back_inserter(diff.missing));
    std::set_difference(encoded.begin(), encoded.end(), generated.begin(), generated.end(),
                        std::back_inserter(diff.extra));
    return diff;
}

TableDiff verify_edge_tables(const TileParams& params) {
    return diff_edge_tables(params, edge_table_rows());
}

} // namespace crystile
