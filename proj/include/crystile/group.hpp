#pragma once

#include "crystile/error.hpp"
#include "crystile/linalg.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace crystile {

// Element a^p b^q c^r of the standard planar p2 group. Its action on the
// plane is (x, y) -> ((-1)^r x + p, (-1)^r y + q).
struct P2Element {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::uint8_t r = 0;

    bool is_identity() const { return p == 0 && q == 0 && r == 0; }

    friend bool operator==(const P2Element& a, const P2Element& b) {
        return a.p == b.p && a.q == b.q && a.r == b.r;
    }
    friend bool operator!=(const P2Element& a, const P2Element& b) { return !(a == b); }
    // total order (r, p, q), used for deterministic serialization
    friend std::strong_ordering operator<=>(const P2Element& a, const P2Element& b) {
        if (auto c = a.r <=> b.r; c != 0) return c;
        if (auto c = a.p <=> b.p; c != 0) return c;
        return a.q <=> b.q;
    }

    AffineMap action() const {
        Rat s(r ? -1 : 1);
        return {{s, Rat(0), Rat(0), s}, {Rat(p), Rat(q)}};
    }
};

inline P2Element p2_identity() { return {0, 0, 0}; }
inline P2Element p2_a(std::int64_t k) { return {k, 0, 0}; }
inline P2Element p2_b(std::int64_t k) { return {0, k, 0}; }
inline P2Element p2_c() { return {0, 0, 1}; }
// a^p b^q c^r
inline P2Element p2(std::int64_t p, std::int64_t q, int r) {
    return {p, q, static_cast<std::uint8_t>(r)};
}

P2Element compose(const P2Element& g1, const P2Element& g2);
P2Element inverse(const P2Element& g);

// Canonical form "a^p b^q c" with unit exponents and zero factors elided;
// "id" for the identity.
std::string to_string(const P2Element& g);

// {"p":..,"q":..,"r":0|1}
std::string element_to_json(const P2Element& g);

struct P2Hash {
    std::size_t operator()(const P2Element& g) const {
        std::uint64_t h = static_cast<std::uint64_t>(g.p) * 0x9e3779b97f4a7c15ull;
        h ^= static_cast<std::uint64_t>(g.q) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h ^ (static_cast<std::uint64_t>(g.r) << 63));
    }
};

// Integer 2x2 matrix, row-major; input type for canonicalize().
struct IntM2 {
    std::int64_t a, b, c, d;
    std::int64_t det() const { return a * d - b * c; }
    std::int64_t trace() const { return a + d; }
};

struct IntV2 {
    std::int64_t x, y;
};

// Parameters (A, B) of the tile family: expanding matrix M = [[0,-B],[1,-A]]
// with characteristic polynomial x^2 + A x + B, translation ((B-1)/2, 0),
// and B digits. basis_change, when present, maps results back to the
// original (Mtilde, v) coordinates.
struct TileParams {
    std::int64_t A = 0;
    std::int64_t B = 2;
    std::optional<IntM2> basis_change;

    RatM2 M() const {
        return {Rat(0), Rat(-B), Rat(1), Rat(-A)};
    }
    RatV2 translation() const { return {Rat(B - 1, 2), Rat(0)}; }
    AffineMap expanding_map() const { return {M(), translation()}; }

    bool large_regime() const { return 2 * (A < 0 ? -A : A) - B >= 3; }
};

// Throws invalid_params_error unless B >= 2 and |A| <= B.
TileParams make_params(std::int64_t A, std::int64_t B);
void validate(const TileParams& params);

using DigitSet = std::vector<P2Element>;

// {id, a, ..., a^(B-2), c} for B >= 3; {id, c} for B = 2.
DigitSet digit_set(const TileParams& params);

// g gamma g^-1, closed form; always lands in the group.
P2Element conjugate_by_g(const P2Element& gamma, const TileParams& params);

// Inverse direction: the gamma with g gamma g^-1 == h, if it exists in the group.
std::optional<P2Element> conjugate_by_g_inverse(const P2Element& h, const TileParams& params);

// gamma in g Gamma g^-1, decided exactly in rationals.
bool is_in_conjugated_subgroup(const P2Element& gamma, const TileParams& params);

// True iff D has B elements lying in pairwise distinct right cosets of
// g Gamma g^-1.
bool verify_complete_residue_system(const DigitSet& digits, const TileParams& params);

// Reduce a general pair (Mtilde, v) to canonical parameters, recording the
// change of basis C = [v | Mtilde v]. Throws dependent_vectors_error or
// not_expanding_error.
TileParams canonicalize(const IntM2& Mtilde, const IntV2& v);

} // namespace crystile
