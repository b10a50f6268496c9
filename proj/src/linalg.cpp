#include "crystile/linalg.hpp"

namespace crystile {

RatV2 fixed_point(const AffineMap& f) {
    // (I - L) x = t
    RatM2 m = RatM2::identity() - f.L;
    Rat dt = m.det();
    if (dt.is_zero()) throw singular_map_error("fixed_point: I - L is singular");
    RatM2 inv = {m.d / dt, -m.b / dt, -m.c / dt, m.a / dt};
    return inv.apply(f.t);
}

namespace {
// exact range of e*lo..e*hi
void accumulate(const Rat& e, const Rat& lo, const Rat& hi, Rat& out_lo, Rat& out_hi) {
    Rat a = e * lo, b = e * hi;
    if (a <= b) {
        out_lo += a;
        out_hi += b;
    } else {
        out_lo += b;
        out_hi += a;
    }
}
} // namespace

Box apply_to_box(const AffineMap& f, const Box& box) {
    Rat xlo = f.t.x, xhi = f.t.x, ylo = f.t.y, yhi = f.t.y;
    accumulate(f.L.a, box.xlo, box.xhi, xlo, xhi);
    accumulate(f.L.b, box.ylo, box.yhi, xlo, xhi);
    accumulate(f.L.c, box.xlo, box.xhi, ylo, yhi);
    accumulate(f.L.d, box.ylo, box.yhi, ylo, yhi);
    return {xlo, xhi, ylo, yhi};
}

} // namespace crystile
