#pragma once

#include "crystile/topology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crystile {

// Published neighbor set of T for parameters where the classification
// theorems state one explicitly; nullopt outside those cases.
std::optional<std::vector<P2Element>> golden_neighbor_set(const TileParams& params);

// Published lattice neighbor set (six elements for A != 0, eight for A = 0),
// defined for 2|A| < B+3.
std::optional<std::vector<IntV2>> golden_lattice_neighbor_set(const TileParams& params);

// Point-cloud neighbor oracle: gamma is declared a neighbor when the depth-k
// clouds of T and gamma(T) come within twice the depth-k cell diameter.
std::vector<P2Element> oracle_neighbor_set(const TileParams& params, std::int64_t depth,
                                           std::int64_t budget = kDefaultPointBudget);

// Structural invariants of a computed neighbor set; throws error with a
// description on the first violation.
void check_neighbor_invariants(const TileParams& params, const std::vector<P2Element>& S);

DiskVerdict independent_disklike_check_on(const TileParams& params,
                                          const std::vector<P2Element>& S);

struct SweepRow {
    std::int64_t A, B;
    std::int64_t neighbor_count;
    std::vector<std::string> neighbors;
    Verdict verdict;
    VerdictReason reason;
    bool agree;
};

// One classification cell: neighbor set, both verdict routes, agreement.
SweepRow sweep_cell(const TileParams& params);

std::string sweep_csv(const std::vector<SweepRow>& rows); // header A,B,count,verdict,reason,agree

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

// Full verification battery over a parameter rectangle: residue systems,
// golden neighbor sets, lattice goldens, edge tables, verdict agreement.
std::vector<CheckResult> verify_range(std::int64_t Amin, std::int64_t Amax, std::int64_t Bmin,
                                      std::int64_t Bmax);

} // namespace crystile
