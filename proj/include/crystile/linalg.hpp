#pragma once

#include "crystile/error.hpp"
#include "crystile/rational.hpp"

namespace crystile {

struct RatV2 {
    Rat x, y;

    friend RatV2 operator+(const RatV2& a, const RatV2& b) { return {a.x + b.x, a.y + b.y}; }
    friend RatV2 operator-(const RatV2& a, const RatV2& b) { return {a.x - b.x, a.y - b.y}; }
    RatV2 operator-() const { return {-x, -y}; }
    friend bool operator==(const RatV2& a, const RatV2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const RatV2& a, const RatV2& b) { return !(a == b); }

    Rat norm2() const { return x * x + y * y; }
    std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

// Row-major 2x2 rational matrix [[a, b], [c, d]].
struct RatM2 {
    Rat a, b, c, d;

    static RatM2 identity() { return {Rat(1), Rat(0), Rat(0), Rat(1)}; }

    Rat det() const { return a * d - b * c; }

    RatV2 apply(const RatV2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

    friend RatM2 operator*(const RatM2& m, const RatM2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend RatM2 operator+(const RatM2& m, const RatM2& n) {
        return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d};
    }
    friend RatM2 operator-(const RatM2& m, const RatM2& n) {
        return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d};
    }
    RatM2 operator-() const { return {-a, -b, -c, -d}; }
    friend bool operator==(const RatM2& m, const RatM2& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }

    RatM2 inverse() const {
        Rat dt = det();
        if (dt.is_zero()) throw singular_map_error("RatM2: singular matrix");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    // Entrywise absolute value (used for certified norm bounds).
    RatM2 entrywise_abs() const { return {a.abs(), b.abs(), c.abs(), d.abs()}; }
};

// Exact affine map x -> L x + t.
struct AffineMap {
    RatM2 L;
    RatV2 t;

    static AffineMap identity() { return {RatM2::identity(), {Rat(0), Rat(0)}}; }

    RatV2 apply(const RatV2& v) const { return L.apply(v) + t; }

    // (f o g)(x) = f(g(x))
    friend AffineMap compose(const AffineMap& f, const AffineMap& g) {
        return {f.L * g.L, f.L.apply(g.t) + f.t};
    }

    AffineMap inverse() const {
        RatM2 Li = L.inverse();
        return {Li, -Li.apply(t)};
    }

    friend bool operator==(const AffineMap& f, const AffineMap& g) {
        return f.L == g.L && f.t == g.t;
    }
};

// Unique x with f(x) = x. Throws singular_map_error when I - L is singular.
RatV2 fixed_point(const AffineMap& f);

struct Box {
    Rat xlo, xhi, ylo, yhi;

    bool contains(const RatV2& v) const {
        return xlo <= v.x && v.x <= xhi && ylo <= v.y && v.y <= yhi;
    }
    bool contains(const Box& o) const {
        return xlo <= o.xlo && o.xhi <= xhi && ylo <= o.ylo && o.yhi <= yhi;
    }
    Rat width() const { return xhi - xlo; }
    Rat height() const { return yhi - ylo; }

    static Box hull(const Box& a, const Box& b) {
        return {a.xlo < b.xlo ? a.xlo : b.xlo, a.xhi > b.xhi ? a.xhi : b.xhi,
                a.ylo < b.ylo ? a.ylo : b.ylo, a.yhi > b.yhi ? a.yhi : b.yhi};
    }
};

// Exact interval image of a box under an affine map.
Box apply_to_box(const AffineMap& f, const Box& box);

} // namespace crystile
