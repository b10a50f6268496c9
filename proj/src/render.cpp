#include "crystile/render.hpp"

#include "crystile/exact.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#ifdef CRYSTILE_HAVE_PNG
#include <png.h>
#endif

namespace crystile {

std::size_t Raster::covered() const {
    std::size_t n = 0;
    for (std::uint16_t v : labels)
        if (v) ++n;
    return n;
}

std::int64_t default_render_depth(std::int64_t B) {
    std::int64_t depth = 1;
    double points = static_cast<double>(B);
    while (points < 400000.0) {
        points *= static_cast<double>(B);
        ++depth;
    }
    return depth;
}

namespace {

struct CloudPoint {
    float label;
    double x, y;
};

std::vector<CloudPoint> collect_cloud(const TileParams& params, std::int64_t depth,
                                      std::int64_t budget) {
    std::vector<CloudPoint> cloud;
    for_each_attractor_point(
        params, depth,
        [&cloud](std::int64_t first, const RatV2& pt) {
            cloud.push_back({static_cast<float>(first < 0 ? 0 : first), pt.x.to_double(),
                             pt.y.to_double()});
        },
        budget);
    return cloud;
}

struct Frame {
    double x0, ytop, sx, sy, area;
};

// The frame hugs the cloud box on each axis with a 2% margin per side, so
// thin tiles keep their full pixel resolution.
Frame fit_frame(double xmin, double xmax, double ymin, double ymax, int resolution) {
    double w = xmax - xmin, h = ymax - ymin;
    if (w <= 0) w = 1.0;
    if (h <= 0) h = 1.0;
    w *= 1.04;
    h *= 1.04;
    double cx = (xmin + xmax) / 2, cy = (ymin + ymax) / 2;
    return {cx - w / 2, cy + h / 2, resolution / w, resolution / h, w * h};
}

void plot(Raster& raster, const Frame& f, double x, double y, std::uint16_t label) {
    int ix = static_cast<int>(std::floor((x - f.x0) * f.sx));
    int iy = static_cast<int>(std::floor((f.ytop - y) * f.sy));
    if (ix < 0 || ix >= raster.width || iy < 0 || iy >= raster.height) return;
    raster.labels[static_cast<std::size_t>(iy) * static_cast<std::size_t>(raster.width) +
                  static_cast<std::size_t>(ix)] = label;
}

Raster make_raster(const Frame& f, int resolution) {
    Raster r;
    r.width = r.height = resolution;
    r.labels.assign(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution), 0);
    r.x0 = f.x0;
    r.ytop = f.ytop;
    r.sx = f.sx;
    r.sy = f.sy;
    r.frame_area = f.area;
    return r;
}

} // namespace

Raster render_tile(const TileParams& params, std::int64_t depth, int resolution,
                   std::int64_t budget) {
    if (resolution <= 0) throw invalid_params_error("render: resolution must be positive");
    std::vector<CloudPoint> cloud = collect_cloud(params, depth, budget);
    double xmin = cloud[0].x, xmax = cloud[0].x, ymin = cloud[0].y, ymax = cloud[0].y;
    for (const CloudPoint& p : cloud) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    Frame f = fit_frame(xmin, xmax, ymin, ymax, resolution);
    Raster raster = make_raster(f, resolution);
    for (const CloudPoint& p : cloud)
        plot(raster, f, p.x, p.y, static_cast<std::uint16_t>(p.label + 1));
    return raster;
}

Raster render_patch(const TileParams& params, const std::vector<P2Element>& S,
                    std::int64_t depth, int resolution, std::int64_t budget) {
    if (resolution <= 0) throw invalid_params_error("render: resolution must be positive");
    std::vector<CloudPoint> cloud = collect_cloud(params, depth, budget);
    double xmin = cloud[0].x, xmax = cloud[0].x, ymin = cloud[0].y, ymax = cloud[0].y;
    for (const CloudPoint& p : cloud) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    double gxmin = xmin, gxmax = xmax, gymin = ymin, gymax = ymax;
    for (const P2Element& g : S) {
        double axmin = g.r ? -xmax : xmin, axmax = g.r ? -xmin : xmax;
        double aymin = g.r ? -ymax : ymin, aymax = g.r ? -ymin : ymax;
        gxmin = std::min(gxmin, axmin + static_cast<double>(g.p));
        gxmax = std::max(gxmax, axmax + static_cast<double>(g.p));
        gymin = std::min(gymin, aymin + static_cast<double>(g.q));
        gymax = std::max(gymax, aymax + static_cast<double>(g.q));
    }
    Frame f = fit_frame(gxmin, gxmax, gymin, gymax, resolution);
    Raster raster = make_raster(f, resolution);
    for (const CloudPoint& p : cloud) plot(raster, f, p.x, p.y, 1);
    for (std::size_t i = 0; i < S.size(); ++i) {
        const P2Element& g = S[i];
        double sgn = g.r ? -1.0 : 1.0;
        std::uint16_t label = static_cast<std::uint16_t>(i + 2);
        for (const CloudPoint& p : cloud)
            plot(raster, f, sgn * p.x + static_cast<double>(g.p),
                 sgn * p.y + static_cast<double>(g.q), label);
    }
    return raster;
}

double estimate_area(const Raster& raster) {
    double frac = static_cast<double>(raster.covered()) /
                  (static_cast<double>(raster.width) * static_cast<double>(raster.height));
    return frac * raster.frame_area;
}

namespace {

struct Rgb {
    std::uint8_t r, g, b;
};

Rgb label_color(std::uint16_t label) {
    if (label == 0) return {255, 255, 255};
    static const Rgb palette[] = {
        {31, 119, 180}, {255, 127, 14},  {44, 160, 44},   {214, 39, 40},  {148, 103, 189},
        {140, 86, 75},  {227, 119, 194}, {127, 127, 127}, {188, 189, 34}, {23, 190, 207},
        {174, 199, 232}, {255, 187, 120}, {152, 223, 138}, {255, 152, 150}, {197, 176, 213},
        {196, 156, 148}, {247, 182, 210}, {199, 199, 199}, {219, 219, 141}, {158, 218, 229},
        {57, 59, 121},  {140, 162, 82},  {140, 109, 49},  {173, 73, 74}};
    return palette[(label - 1) % (sizeof(palette) / sizeof(palette[0]))];
}

} // namespace

std::string raster_to_ppm(const Raster& raster) {
    std::string out = "P6\n" + std::to_string(raster.width) + " " + std::to_string(raster.height) +
                      "\n255\n";
    out.reserve(out.size() +
                static_cast<std::size_t>(raster.width) * static_cast<std::size_t>(raster.height) * 3);
    for (std::uint16_t label : raster.labels) {
        Rgb c = label_color(label);
        out.push_back(static_cast<char>(c.r));
        out.push_back(static_cast<char>(c.g));
        out.push_back(static_cast<char>(c.b));
    }
    return out;
}

void write_ppm(const Raster& raster, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw error("cannot open " + path + " for writing");
    std::string data = raster_to_ppm(raster);
    os.write(data.data(), static_cast<std::streamsize>(data.size()));
}

bool png_supported() {
#ifdef CRYSTILE_HAVE_PNG
    return true;
#else
    return false;
#endif
}

#ifdef CRYSTILE_HAVE_PNG
void write_png(const Raster& raster, const std::string& path) {
    FILE* fp = std::fopen(path.c_str(), "wb");
    if (!fp) throw error("cannot open " + path + " for writing");
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info || setjmp(png_jmpbuf(png))) {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
        std::fclose(fp);
        throw error("libpng failure while writing " + path);
    }
    png_init_io(png, fp);
    png_set_IHDR(png, info, static_cast<png_uint_32>(raster.width),
                 static_cast<png_uint_32>(raster.height), 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<std::uint8_t> row(static_cast<std::size_t>(raster.width) * 3);
    for (int y = 0; y < raster.height; ++y) {
        for (int x = 0; x < raster.width; ++x) {
            Rgb c = label_color(raster.at(x, y));
            row[static_cast<std::size_t>(x) * 3] = c.r;
            row[static_cast<std::size_t>(x) * 3 + 1] = c.g;
            row[static_cast<std::size_t>(x) * 3 + 2] = c.b;
        }
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
}
#else
void write_png(const Raster&, const std::string&) {
    throw error("PNG output is not available in this build");
}
#endif

} // namespace crystile
