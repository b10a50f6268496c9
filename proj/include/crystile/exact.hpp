#pragma once

#include "crystile/group.hpp"
#include "crystile/linalg.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace crystile {

inline constexpr std::int64_t kDefaultPointBudget = 8'000'000;
inline constexpr std::int64_t kDefaultAttractorDepthCap = 20;

// [f_1, ..., f_B] with f_i = g^-1 a^(i-1) for i < B and f_B = g^-1 c.
std::vector<AffineMap> ifs_maps(const TileParams& params);

// Closed forms for Fix(f_i): (M - I)^-1 (i-1-(B-1)/2, 0) for i < B and
// (M + I)^-1 ((B-1)/2, 0) for i = B. 1-based index.
RatV2 ifs_fixed_point(const TileParams& params, std::int64_t i);

// Certified enclosure of the tile T: a box X with T contained in X,
// obtained from the exact norm series of M^-k applied to the digit
// translations. Throws no_convergence_error if the series tail cannot be
// certified within 256 powers.
Box certified_enclosure(const TileParams& params);

// certified_enclosure inflated once by 5/4.
Box bounding_box(const TileParams& params);

// Same enclosures for the lattice tile T^l of (M, {0..B-1} x {0}).
Box lattice_certified_enclosure(const TileParams& params);
Box lattice_bounding_box(const TileParams& params);

// All B^depth truncated address points g^-1 d_1 ... g^-1 d_depth (x_seed),
// x_seed = Fix(f_1), exact and sorted by (x, y). Throws
// budget_exceeded_error when B^depth exceeds the budget.
std::vector<RatV2> attractor_points(const TileParams& params, std::int64_t depth,
                                    std::int64_t budget = kDefaultPointBudget);

// Streaming variant used by the rasterizer: emits every depth-address point
// exactly once, in address order, without materializing the list.
void for_each_attractor_point(const TileParams& params, std::int64_t depth,
                              const std::function<void(std::int64_t first_digit, const RatV2&)>& emit,
                              std::int64_t budget = kDefaultPointBudget);

// Evaluate the truncation g^-1 d_1 ... g^-1 d_n (x) exactly.
RatV2 apply_address(const TileParams& params, const std::vector<P2Element>& digits, const RatV2& x);

// Exact limit of the eventually periodic address pre (period)^infinity.
// Throws singular_map_error if the period map is degenerate (it never is for
// expanding parameters).
RatV2 eventually_periodic_point(const TileParams& params, const std::vector<P2Element>& preperiod,
                                const std::vector<P2Element>& period);

// Exact membership x in T, decided by exhausting the finite orbit of
// x under the inverse subdivision maps inside the certified box.
bool point_in_tile(const TileParams& params, const RatV2& x);

} // namespace crystile
