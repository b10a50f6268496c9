#pragma once

#include "crystile/exact.hpp"
#include "crystile/group.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace crystile {

// Labeled directed multigraph on group elements: an edge
// src --delta|delta'--> dst means delta^-1 (g src g^-1) delta' == dst.
struct NeighborGraph {
    TileParams params;
    DigitSet digits;
    std::vector<P2Element> states; // sorted, unique
    struct Edge {
        std::int32_t src, delta, deltap, dst;
        friend bool operator==(const Edge&, const Edge&) = default;
        friend auto operator<=>(const Edge&, const Edge&) = default;
    };
    std::vector<Edge> edges; // sorted

    std::optional<std::int32_t> state_index(const P2Element& s) const;
    std::size_t out_degree(std::int32_t state) const;
    bool empty() const { return states.empty(); }
};

// All B^2 triples (delta, delta', delta^-1 (g gamma g^-1) delta'), unfiltered.
std::vector<std::tuple<P2Element, P2Element, P2Element>> edge_targets(const P2Element& gamma,
                                                                      const TileParams& params);

// Graph on the given states with exactly the edges whose target stays inside.
NeighborGraph build_graph(std::vector<P2Element> states, const TileParams& params);

// Remove states with no outgoing edge until none remain. Survivors are
// exactly the states that start an infinite walk.
NeighborGraph trim(const NeighborGraph& g);

// Finite certified superset of the neighbor set, from the bounding box:
// gamma != id whose action can bring the box to meet itself.
std::vector<P2Element> candidate_set(const TileParams& params);

// The neighbor set S = {gamma != id : T meets gamma(T)}: infinite-walk states
// of the graph over candidate_set. Computed with an implicit-graph engine
// equivalent to trim(build_graph(candidate_set)).
std::vector<P2Element> neighbor_set(const TileParams& params);

// Neighbor set of the lattice tile T^l for (M, {0,...,B-1} x {0}).
std::vector<IntV2> lattice_neighbor_set(const TileParams& params);

// The explicit pruning start set S'' for A >= -1, 2A < B+3.
// Throws out_of_range_error outside that range.
std::vector<P2Element> pseudo_neighbor_set(const TileParams& params);

// --- edge table encoding ---------------------------------------------------

struct LabeledEdge {
    P2Element src, delta, deltap, dst;
    friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
    friend auto operator<=>(const LabeledEdge&, const LabeledEdge&) = default;
};

// One row family of the pseudo-neighbor edge catalog: a source/target pair
// with a parameterized label family and a validity condition.
struct EdgeTableRow {
    std::string name;
    bool (*applies)(std::int64_t A, std::int64_t B);
    P2Element (*src)(std::int64_t A, std::int64_t B);
    P2Element (*dst)(std::int64_t A, std::int64_t B);
    // list of (delta exponent, delta' exponent); kC encodes the rotation digit
    std::vector<std::pair<std::int64_t, std::int64_t>> (*labels)(std::int64_t A, std::int64_t B);
};
inline constexpr std::int64_t kC = INT64_MIN; // rotation digit marker in label lists

const std::vector<EdgeTableRow>& edge_table_rows();

std::vector<LabeledEdge> expand_edge_table(const TileParams& params,
                                           const std::vector<EdgeTableRow>& rows);

struct TableDiff {
    std::vector<LabeledEdge> missing; // generated but absent from the table
    std::vector<LabeledEdge> extra;   // in the table but not generated
    bool pass() const { return missing.empty() && extra.empty(); }
};

TableDiff diff_edge_tables(const TileParams& params, const std::vector<EdgeTableRow>& rows);

// Regenerate G(S'') and compare with the encoded catalog; empty diff = pass.
TableDiff verify_edge_tables(const TileParams& params);

// --- boundary walks ----------------------------------------------------------

// Truncated limit points of length-`depth` walks from gamma in G(S); the
// returned points converge to T meet gamma(T). Throws not_a_neighbor_error.
std::vector<RatV2> boundary_points(const P2Element& gamma, const TileParams& params,
                                   std::int64_t depth);

// --- export ------------------------------------------------------------------

std::string graph_to_dot(const NeighborGraph& g);
std::string graph_to_json(const NeighborGraph& g);

} // namespace crystile
