#include "crystile/group.hpp"

#include <algorithm>

namespace crystile {

P2Element compose(const P2Element& g1, const P2Element& g2) {
    std::int64_t s = g1.r ? -1 : 1;
    return {g1.p + s * g2.p, g1.q + s * g2.q, static_cast<std::uint8_t>(g1.r ^ g2.r)};
}

P2Element inverse(const P2Element& g) {
    if (g.r) return g; // pi-rotations are involutions
    return {-g.p, -g.q, 0};
}

std::string to_string(const P2Element& g) {
    if (g.is_identity()) return "id";
    std::string s;
    auto factor = [&s](char name, std::int64_t e) {
        if (e == 0) return;
        if (!s.empty()) s += ' ';
        s += name;
        if (e != 1) {
            s += '^';
            s += std::to_string(e);
        }
    };
    factor('a', g.p);
    factor('b', g.q);
    if (g.r) {
        if (!s.empty()) s += ' ';
        s += 'c';
    }
    return s;
}

std::string element_to_json(const P2Element& g) {
    return "{\"p\":" + std::to_string(g.p) + ",\"q\":" + std::to_string(g.q) +
           ",\"r\":" + std::to_string(g.r) + "}";
}

TileParams make_params(std::int64_t A, std::int64_t B) {
    TileParams params{A, B, std::nullopt};
    validate(params);
    return params;
}

void validate(const TileParams& params) {
    std::int64_t absA = params.A < 0 ? -params.A : params.A;
    if (params.B < 2 || absA > params.B)
        throw invalid_params_error("params (A=" + std::to_string(params.A) +
                                   ", B=" + std::to_string(params.B) +
                                   ") need B >= 2 and |A| <= B");
}

DigitSet digit_set(const TileParams& params) {
    DigitSet d;
    d.reserve(static_cast<std::size_t>(params.B));
    for (std::int64_t i = 0; i + 1 < params.B; ++i) d.push_back(p2_a(i));
    d.push_back(p2_c());
    return d;
}

P2Element conjugate_by_g(const P2Element& gamma, const TileParams& params) {
    if (gamma.r == 0) return {-gamma.q * params.B, gamma.p - gamma.q * params.A, 0};
    return {(1 - gamma.q) * params.B - 1, gamma.p - gamma.q * params.A, 1};
}

std::optional<P2Element> conjugate_by_g_inverse(const P2Element& h, const TileParams& params) {
    if (h.r == 0) {
        if (h.p % params.B != 0) return std::nullopt;
        std::int64_t q = -h.p / params.B;
        return P2Element{h.q + q * params.A, q, 0};
    }
    // h.p = (1 - q) B - 1
    std::int64_t n = h.p + 1;
    if (n % params.B != 0) return std::nullopt;
    std::int64_t q = 1 - n / params.B;
    return P2Element{h.q + q * params.A, q, 1};
}

bool is_in_conjugated_subgroup(const P2Element& gamma, const TileParams& params) {
    // gamma in g Gamma g^-1  iff  g^-1 gamma g has integer translation
    AffineMap g = params.expanding_map();
    AffineMap inner = compose(compose(g.inverse(), gamma.action()), g);
    return inner.t.x.is_integer() && inner.t.y.is_integer();
}

bool verify_complete_residue_system(const DigitSet& digits, const TileParams& params) {
    if (static_cast<std::int64_t>(digits.size()) != params.B) return false;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        for (std::size_t j = i + 1; j < digits.size(); ++j) {
            // same right coset iff d' d^-1 in the subgroup
            P2Element diff = compose(digits[j], inverse(digits[i]));
            if (is_in_conjugated_subgroup(diff, params)) return false;
        }
    }
    return true;
}

TileParams canonicalize(const IntM2& Mtilde, const IntV2& v) {
    IntV2 mv{Mtilde.a * v.x + Mtilde.b * v.y, Mtilde.c * v.x + Mtilde.d * v.y};
    IntM2 C{v.x, mv.x, v.y, mv.y};
    if (C.det() == 0)
        throw dependent_vectors_error("canonicalize: v and Mtilde*v are linearly dependent");
    std::int64_t A = -Mtilde.trace();
    std::int64_t B = Mtilde.det();
    std::int64_t absA = A < 0 ? -A : A;
    if (B < 2 || absA > B)
        throw not_expanding_error("canonicalize: characteristic polynomial x^2 + " +
                                  std::to_string(A) + " x + " + std::to_string(B) +
                                  " is not in the expanding range");
    TileParams params{A, B, C};
    return params;
}

} // namespace crystile
