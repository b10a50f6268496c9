#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crystile/neighbors.hpp"

#include <algorithm>

using namespace crystile;

namespace {

std::vector<P2Element> els(std::initializer_list<P2Element> v) {
    std::vector<P2Element> out(v);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("edge targets enumerate all digit pairs") {
    TileParams params = make_params(3, 5);
    auto targets = edge_targets(p2_c(), params);
    CHECK(targets.size() == 25); // B^2

    // c --a^(B-2)|id--> ac and c --a^(B-2)|c--> a
    bool saw_ac = false, saw_a = false;
    for (const auto& [d, dp, tgt] : targets) {
        if (d == p2_a(3) && dp == p2_identity()) {
            CHECK(tgt == p2(1, 0, 1));
            saw_ac = true;
        }
        if (d == p2_a(3) && dp == p2_c()) {
            CHECK(tgt == p2(1, 0, 0));
            saw_a = true;
        }
    }
    CHECK(saw_ac);
    CHECK(saw_a);
}

TEST_CASE("no edge leaves a^A b when A > 0") {
    for (auto [A, B] : {std::pair<std::int64_t, std::int64_t>{3, 5}, {4, 7}, {1, 4}}) {
        TileParams params = make_params(A, B);
        std::vector<P2Element> pseudo = pseudo_neighbor_set(params);
        for (const auto& [d, dp, tgt] : edge_targets(p2(A, 1, 0), params))
            CHECK_FALSE(std::binary_search(pseudo.begin(), pseudo.end(), tgt));
    }
}

TEST_CASE("build_graph basics") {
    TileParams params = make_params(1, 4);
    CHECK(build_graph({}, params).empty());
    CHECK_THROWS_AS(build_graph({p2_identity()}, params), invalid_params_error);

    // self-loops at c exist exactly when B >= 3
    for (std::int64_t B = 2; B <= 6; ++B) {
        NeighborGraph g = build_graph({p2_c()}, make_params(1, B));
        CHECK(!g.edges.empty() == (B >= 3));
    }
}

TEST_CASE("trim removes exactly the walk-free states") {
    TileParams params = make_params(1, 3);
    NeighborGraph loop = build_graph({p2_c()}, params);
    NeighborGraph trimmed = trim(loop);
    CHECK(trimmed.states == loop.states);
    CHECK(trimmed.edges == loop.edges);

    NeighborGraph isolated = build_graph({p2(7, 7, 0)}, params);
    CHECK(isolated.edges.empty());
    CHECK(trim(isolated).empty());

    // trimming the pseudo-neighbor graph of (3,4) deletes exactly a^-1 c
    TileParams p34 = make_params(3, 4);
    NeighborGraph g = build_graph(pseudo_neighbor_set(p34), p34);
    NeighborGraph t = trim(g);
    std::vector<P2Element> removed;
    std::set_difference(g.states.begin(), g.states.end(), t.states.begin(), t.states.end(),
                        std::back_inserter(removed));
    CHECK(removed == std::vector<P2Element>{p2(-1, 0, 1)});

    // idempotence
    NeighborGraph tt = trim(t);
    CHECK(tt.states == t.states);
    CHECK(tt.edges == t.edges);
}

TEST_CASE("candidate sets cover the neighbor set") {
    for (std::int64_t B = 2; B <= 8; ++B)
        for (std::int64_t A = -B; A <= B; ++A) {
            TileParams params = make_params(A, B);
            std::vector<P2Element> cand = candidate_set(params);
            for (const P2Element& s : neighbor_set(params))
                CHECK(std::binary_search(cand.begin(), cand.end(), s));
        }

    // all six neighbors of (1,2) are candidates
    std::vector<P2Element> cand = candidate_set(make_params(1, 2));
    for (const P2Element& s :
         els({p2(1, 0, 0), p2(-1, 0, 0), p2(0, 0, 1), p2(1, 0, 1), p2(1, 1, 1), p2(0, 1, 1)}))
        CHECK(std::binary_search(cand.begin(), cand.end(), s));

    CHECK(candidate_set(make_params(1, 3)).size() == 29); // frozen regression
}

TEST_CASE("neighbor sets match the published classification") {
    auto S = [](std::int64_t A, std::int64_t B) { return neighbor_set(make_params(A, B)); };
    for (std::int64_t B = 2; B <= 9; ++B)
        CHECK(S(1, B) ==
              els({p2(1, 0, 0), p2(-1, 0, 0), p2(0, 0, 1), p2(1, 0, 1), p2(1, 1, 1), p2(0, 1, 1)}));
    CHECK(S(2, 2) ==
          els({p2(1, 1, 0), p2(-1, -1, 0), p2(0, 0, 1), p2(1, 0, 1), p2(1, 1, 1), p2(2, 1, 1)}));
    CHECK(S(3, 4) == els({p2(1, 0, 0), p2(-1, 0, 0), p2(2, 1, 0), p2(-2, -1, 0), p2(0, 0, 1),
                          p2(1, 0, 1), p2(2, 1, 1), p2(-2, -1, 1), p2(3, 1, 1)}));
    for (std::int64_t B = 4; B <= 9; ++B)
        CHECK(S(-2, B) == els({p2(1, 0, 0), p2(-1, 0, 0), p2(0, 0, 1), p2(1, 0, 1), p2(-2, 1, 1),
                               p2(-1, 1, 1)}));
    CHECK(S(-1, 2) ==
          els({p2(1, 0, 0), p2(-1, 0, 0), p2(0, 0, 1), p2(-1, 0, 1), p2(-1, 1, 1), p2(0, 1, 1)}));
}

TEST_CASE("implicit engine equals explicit trim over candidates") {
    for (std::int64_t B = 2; B <= 7; ++B)
        for (std::int64_t A = -B; A <= B; ++A) {
            TileParams params = make_params(A, B);
            std::vector<P2Element> fast = neighbor_set(params);
            std::vector<P2Element> slow = trim(build_graph(candidate_set(params), params)).states;
            CHECK(fast == slow);
        }
}

namespace {

std::vector<IntV2> vecs(std::initializer_list<IntV2> v) {
    std::vector<IntV2> out(v);
    std::sort(out.begin(), out.end(),
              [](const IntV2& a, const IntV2& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
    return out;
}

bool veq(const std::vector<IntV2>& a, const std::vector<IntV2>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].x != b[i].x || a[i].y != b[i].y) return false;
    return true;
}

} // namespace

TEST_CASE("lattice neighbor sets") {
    auto L = [](std::int64_t A, std::int64_t B) { return lattice_neighbor_set(make_params(A, B)); };
    CHECK(veq(L(1, 3), vecs({{1, 1}, {0, 1}, {1, 0}, {-1, 0}, {-1, -1}, {0, -1}})));
    for (std::int64_t B = 2; B <= 6; ++B)
        CHECK(veq(L(0, B),
                  vecs({{0, 1}, {0, -1}, {1, 0}, {-1, 0}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}})));
    // the A < 0 sets are the mirror images of the A > 0 ones
    CHECK(veq(L(-2, 5), vecs({{-2, 1}, {-1, 1}, {1, 0}, {-1, 0}, {2, -1}, {1, -1}})));
    for (std::int64_t B = 4; B <= 8; ++B) {
        std::vector<IntV2> mirrored;
        for (const IntV2& v : L(2, B)) mirrored.push_back({-v.x, v.y});
        std::sort(mirrored.begin(), mirrored.end(),
                  [](const IntV2& a, const IntV2& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
        CHECK(veq(L(-2, B), mirrored));
    }
    // negation symmetry
    for (auto [A, B] : {std::pair<std::int64_t, std::int64_t>{1, 3}, {-3, 7}, {0, 4}, {2, 4}}) {
        std::vector<IntV2> l = L(A, B);
        for (const IntV2& v : l)
            CHECK(std::any_of(l.begin(), l.end(),
                              [&v](const IntV2& w) { return w.x == -v.x && w.y == -v.y; }));
    }
}

TEST_CASE("pseudo-neighbor sets") {
    CHECK(pseudo_neighbor_set(make_params(3, 5)) ==
          els({p2(2, 1, 0), p2(1, 0, 0), p2(-1, 0, 0), p2(-2, -1, 0), p2(0, 0, 1), p2(3, 1, 1),
               p2(2, 1, 1), p2(1, 0, 1), p2(-1, 0, 1), p2(-2, -1, 1)}));
    CHECK(pseudo_neighbor_set(make_params(0, 2)) ==
          els({p2(1, 0, 0), p2(-1, 0, 0), p2(0, 0, 1), p2(1, 0, 1), p2(-1, 0, 1), p2(-1, 1, 1),
               p2(0, 1, 1), p2(1, 1, 1)}));
    CHECK(pseudo_neighbor_set(make_params(-1, 3)) ==
          els({p2(1, 0, 0), p2(-1, 0, 0), p2(0, 0, 1), p2(1, 0, 1), p2(-1, 0, 1), p2(-1, 1, 1),
               p2(0, 1, 1)}));
    CHECK_THROWS_AS(pseudo_neighbor_set(make_params(-2, 4)), out_of_range_error);
    CHECK_THROWS_AS(pseudo_neighbor_set(make_params(4, 5)), out_of_range_error);

    // S sits inside S'', which sits inside S^l union {c} union S^l c
    for (std::int64_t B = 2; B <= 8; ++B)
        for (std::int64_t A = -1; A <= B && 2 * A < B + 3; ++A) {
            TileParams params = make_params(A, B);
            std::vector<P2Element> S = neighbor_set(params);
            std::vector<P2Element> SS = pseudo_neighbor_set(params);
            CHECK(S.size() >= 6);
            CHECK(S.size() <= 10);
            for (const P2Element& s : S) CHECK(std::binary_search(SS.begin(), SS.end(), s));
            std::vector<P2Element> envelope{p2_c()};
            for (const IntV2& v : lattice_neighbor_set(params)) {
                envelope.push_back(p2(v.x, v.y, 0));
                envelope.push_back(compose(p2(v.x, v.y, 0), p2_c()));
            }
            std::sort(envelope.begin(), envelope.end());
            for (const P2Element& s : SS)
                CHECK(std::binary_search(envelope.begin(), envelope.end(), s));
        }
}

TEST_CASE("edge tables regenerate exactly") {
    for (auto [A, B] : {std::pair<std::int64_t, std::int64_t>{1, 2}, {1, 3}, {0, 2}, {0, 4},
                        {-1, 2}, {-1, 4}, {2, 4}, {3, 5}, {4, 7}}) {
        TableDiff diff = verify_edge_tables(make_params(A, B));
        CHECK(diff.pass());
    }
    // full in-range grid
    for (std::int64_t B = 2; B <= 10; ++B)
        for (std::int64_t A = -1; A <= B && 2 * A < B + 3; ++A)
            CHECK(verify_edge_tables(make_params(A, B)).pass());
}

TEST_CASE("a corrupted table row produces exactly one diff") {
    TileParams params = make_params(3, 5);
    std::vector<EdgeTableRow> rows = edge_table_rows();
    for (EdgeTableRow& row : rows) {
        if (row.name == "c->a") {
            row.labels = [](std::int64_t, std::int64_t) {
                return std::vector<std::pair<std::int64_t, std::int64_t>>{{0, kC}};
            };
        }
    }
    TableDiff diff = diff_edge_tables(params, rows);
    CHECK(diff.missing.size() == 1); // the true edge is no longer encoded
    CHECK(diff.extra.size() == 1);   // the altered label is not generated
}

TEST_CASE("boundary points") {
    TileParams params = make_params(3, 3);
    RatV2 seed = ifs_fixed_point(params, 1);

    std::vector<RatV2> depth0 = boundary_points(p2_c(), params, 0);
    REQUIRE(depth0.size() == 1);
    CHECK(depth0[0] == seed);

    CHECK_THROWS_AS(boundary_points(p2(9, 9, 0), params, 2), not_a_neighbor_error);

    // walks from c converge toward the witness point (-13/73, 16/219)
    RatV2 target{Rat(-13, 73), Rat(16, 219)};
    auto min_dist2 = [&target](const std::vector<RatV2>& pts) {
        Rat best(-1);
        for (const RatV2& p : pts) {
            Rat n = RatV2{p.x - target.x, p.y - target.y}.norm2();
            if (best.sign() < 0 || n < best) best = n;
        }
        return best;
    };
    CHECK(min_dist2(boundary_points(p2_c(), params, 8)) <
          min_dist2(boundary_points(p2_c(), params, 4)));

    NeighborGraph g = build_graph(neighbor_set(params), params);
    std::size_t max_outdeg = 0;
    for (std::int32_t s = 0; s < static_cast<std::int32_t>(g.states.size()); ++s)
        max_outdeg = std::max(max_outdeg, g.out_degree(s));
    for (std::int64_t depth : {1, 2, 3}) {
        std::vector<RatV2> pts = boundary_points(p2_c(), params, depth);
        double cap = 1;
        for (std::int64_t i = 0; i < depth; ++i) cap *= static_cast<double>(max_outdeg);
        CHECK(static_cast<double>(pts.size()) <= cap);
    }
}

TEST_CASE("graph exports are deterministic and well-formed") {
    TileParams params = make_params(1, 2);
    NeighborGraph g = build_graph(neighbor_set(params), params);
    std::string dot = graph_to_dot(g);
    CHECK(dot == graph_to_dot(g));
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("\"c\" -> ") != std::string::npos);
    std::string json = graph_to_json(g);
    CHECK(json.rfind("{\"params\":{\"A\":1,\"B\":2},\"states\":[", 0) == 0);
    CHECK(json.find("\"delta\"") != std::string::npos);
}

TEST_CASE("every graph edge satisfies the defining relation") {
    for (auto [A, B] : {std::pair<std::int64_t, std::int64_t>{1, 2}, {0, 3}, {3, 5}, {-3, 4}}) {
        TileParams params = make_params(A, B);
        NeighborGraph g = build_graph(neighbor_set(params), params);
        for (const NeighborGraph::Edge& e : g.edges) {
            P2Element lhs = compose(
                compose(inverse(g.digits[static_cast<std::size_t>(e.delta)]),
                        conjugate_by_g(g.states[static_cast<std::size_t>(e.src)], params)),
                g.digits[static_cast<std::size_t>(e.deltap)]);
            CHECK(lhs == g.states[static_cast<std::size_t>(e.dst)]);
        }
    }
}
