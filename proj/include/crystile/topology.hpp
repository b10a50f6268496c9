#pragma once

#include "crystile/neighbors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crystile {

enum class Verdict { DiskLike, NotDiskLike };

enum class VerdictReason {
    RegimeLarge2A,           // 2|A| - B >= 3
    SixNeighborConnected,    // six neighbors and digit set connected
    SevenNeighborTemplate,   // template matched and test set connected
    EightNeighborTemplateFail, // template branch refuted (no match or disconnected)
    NineOrTenNeighbors,      // neighbor count admits no disk-like pattern
    TheoremLookup            // closed-form classification
};

std::string to_string(Verdict v);
std::string to_string(VerdictReason r);

struct DiskVerdict {
    Verdict verdict;
    VerdictReason reason;
    std::optional<std::int64_t> neighbor_count; // present when S was computed
};

// Closed-form classification of the tile family.
DiskVerdict classify(const TileParams& params);

// P is F-connected iff any two elements are linked by a chain in P whose
// consecutive quotients d_i^-1 d_{i+1} lie in F.
bool f_connected(const std::vector<P2Element>& P, const std::vector<P2Element>& F);

// Neighbor-set patterns of disk-like p2 tiles, up to a unimodular change of
// the translation generators.
struct TemplateMatch {
    int template_id;                 // 7, 8 (two variants), or 12 elements
    int variant;                     // 0 or 1 (only template 8 has two)
    std::int64_t i, j, k, l;         // a' = a^i b^j, b' = a^k b^l, il - jk = +-1
    std::vector<P2Element> test_set; // the connectedness test set, in concrete generators
};

std::optional<TemplateMatch> match_template(const std::vector<P2Element>& S);

// Criterion-based check, independent of classify(): six neighbors use digit
// connectedness, 7/8/12 use template matching, 9/10 are never disk-like.
// Throws undecided_error for neighbor counts outside the handled cases.
DiskVerdict independent_disklike_check(const TileParams& params);

// --- exact intersection witnesses for 2|A| >= B+3 ---------------------------

struct WitnessCertificate {
    enum class Kind { FixedPointPair, Walk } kind;
    // FixedPointPair: point = Fix(f_p) and -point = Fix(f_q)
    std::int64_t p = 0, q = 0;
    // Walk: point = limit of the eventually periodic address pre (period)^inf,
    // and -point of the companion address
    std::vector<P2Element> preperiod, period;
    std::vector<P2Element> companion_preperiod, companion_period;
};

struct Witness {
    RatV2 point;
    WitnessCertificate certificate;
};

struct WitnessPair {
    Witness first, second;
};

// Two distinct exact points of T meet c(T). Throws out_of_regime_error
// unless 2|A| >= B+3.
WitnessPair intersection_witnesses(const TileParams& params);

// Re-validate a witness exactly: the point and its negation both carry a
// valid digit address per the certificate.
bool replay_witness(const TileParams& params, const Witness& w);

} // namespace crystile
