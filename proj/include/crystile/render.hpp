#pragma once

#include "crystile/exact.hpp"
#include "crystile/group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace crystile {

// Label raster: 0 = background, k > 0 = subtile or patch-tile index.
// World coordinates enter floating point only here.
struct Raster {
    int width = 0, height = 0;
    std::vector<std::uint16_t> labels; // row-major, height rows of width
    // world-to-pixel transform: px = (x - x0) * sx, py = (ytop - y) * sy;
    // the frame hugs the cloud box per axis, so pixels may be anisotropic
    double x0 = 0, ytop = 0, sx = 1, sy = 1;
    double frame_area = 0; // world area covered by the image

    std::uint16_t at(int x, int y) const {
        return labels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                      static_cast<std::size_t>(x)];
    }
    std::size_t covered() const;
};

// Smallest depth with B^depth >= 400000 points.
std::int64_t default_render_depth(std::int64_t B);

// Plot the depth-address point cloud of the tile, colored by first digit.
Raster render_tile(const TileParams& params, std::int64_t depth, int resolution,
                   std::int64_t budget = kDefaultPointBudget);

// Central tile plus gamma(T) for each gamma in S, one label per tile
// (label 1 = central tile, then in the order of S).
Raster render_patch(const TileParams& params, const std::vector<P2Element>& S,
                    std::int64_t depth, int resolution,
                    std::int64_t budget = kDefaultPointBudget);

// Covered fraction times the world area of the frame.
double estimate_area(const Raster& raster);

std::string raster_to_ppm(const Raster& raster);
void write_ppm(const Raster& raster, const std::string& path);

bool png_supported();
// Writes a PNG when built against libpng; otherwise throws error.
void write_png(const Raster& raster, const std::string& path);

} // namespace crystile
