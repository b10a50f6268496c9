#include "crystile/exact.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

namespace crystile {

std::vector<AffineMap> ifs_maps(const TileParams& params) {
    validate(params);
    AffineMap ginv = params.expanding_map().inverse();
    std::vector<AffineMap> maps;
    maps.reserve(static_cast<std::size_t>(params.B));
    for (const P2Element& d : digit_set(params)) maps.push_back(compose(ginv, d.action()));
    return maps;
}

RatV2 ifs_fixed_point(const TileParams& params, std::int64_t i) {
    validate(params);
    if (i < 1 || i > params.B) throw out_of_range_error("ifs_fixed_point: index out of range");
    RatM2 M = params.M();
    if (i < params.B) {
        RatM2 m = M - RatM2::identity();
        return m.inverse().apply({Rat(i - 1) - Rat(params.B - 1, 2), Rat(0)});
    }
    // (M + I) x = -t for the rotation branch
    RatM2 m = M + RatM2::identity();
    return m.inverse().apply({-Rat(params.B - 1, 2), Rat(0)});
}

namespace {

// Certified bound on sum_{k>=1} |M^-k| e1 via a partial sum plus a Neumann
// tail: once ||N_m||_inf <= 1/2 for N_m = |M^-m|, the column sum is bounded
// by (I - N_m)^-1 * s_m with s_m the partial column sum.
RatV2 abs_power_column_series(const RatM2& Minv) {
    const Rat half(1, 2);
    RatM2 power = Minv;
    Rat s0 = power.entrywise_abs().a, s1 = power.entrywise_abs().c;
    for (int m = 1; m <= 256; ++m) {
        RatM2 N = power.entrywise_abs();
        if (N.a + N.b <= half && N.c + N.d <= half) {
            RatM2 tail = RatM2{Rat(1) - N.a, -N.b, -N.c, Rat(1) - N.d}.inverse();
            return tail.apply({s0, s1});
        }
        power = power * Minv;
        RatM2 Nn = power.entrywise_abs();
        s0 += Nn.a;
        s1 += Nn.c;
    }
    throw no_convergence_error("bounding_box: norm series did not certify within 256 powers");
}

Box symmetric_box(const RatV2& halfwidths) {
    return {-halfwidths.x, halfwidths.x, -halfwidths.y, halfwidths.y};
}

} // namespace

Box certified_enclosure(const TileParams& params) {
    validate(params);
    RatM2 Minv = params.M().inverse();
    RatV2 series = abs_power_column_series(Minv);
    // every point of T is sum_k sigma_k M^-k u_k with |u_k| <= ((B-1)/2, 0)
    Rat w(params.B - 1, 2);
    return symmetric_box({series.x * w, series.y * w});
}

Box bounding_box(const TileParams& params) {
    Box tight = certified_enclosure(params);
    Rat inflate(5, 4);
    return {tight.xlo * inflate, tight.xhi * inflate, tight.ylo * inflate, tight.yhi * inflate};
}

Box lattice_certified_enclosure(const TileParams& params) {
    validate(params);
    RatM2 Minv = params.M().inverse();
    RatV2 series = abs_power_column_series(Minv);
    Rat w(params.B - 1);
    return symmetric_box({series.x * w, series.y * w});
}

Box lattice_bounding_box(const TileParams& params) {
    Box tight = lattice_certified_enclosure(params);
    Rat inflate(5, 4);
    return {tight.xlo * inflate, tight.xhi * inflate, tight.ylo * inflate, tight.yhi * inflate};
}

namespace {

// Integer form of f_i: x -> (C x + u) / (2B), entries exact.
struct IntMapForm {
    BigInt c00, c01, c10, c11;
    BigInt u0, u1;
};

std::vector<IntMapForm> integer_map_forms(const TileParams& params) {
    // adj(M) = [[-A, B], [-1, 0]]; f_i(x) = adj(M) (e_i x + w_i) / B with
    // e_i = +-1 and w_i = v_i - t of denominator 2.
    std::vector<IntMapForm> forms;
    const std::int64_t A = params.A, B = params.B;
    DigitSet digits = digit_set(params);
    for (const P2Element& d : digits) {
        std::int64_t eps = d.r ? -1 : 1;
        // 2 w = (2 d.p - (B-1), 2 d.q) ; digits have q = 0
        std::int64_t twx = 2 * d.p - (B - 1);
        std::int64_t twy = 2 * d.q;
        IntMapForm f;
        f.c00 = BigInt(2 * eps * -A);
        f.c01 = BigInt(2 * eps * B);
        f.c10 = BigInt(2 * eps * -1);
        f.c11 = BigInt(0);
        f.u0 = BigInt(-A * twx + B * twy);
        f.u1 = BigInt(-twx);
        forms.push_back(std::move(f));
    }
    return forms;
}

struct IntPoint {
    BigInt x, y;
};

} // namespace

namespace {

// Composed map (C x + u) / den over the integers.
struct IntComposed {
    BigInt c00, c01, c10, c11;
    BigInt u0, u1;
    BigInt den;
};

struct AttractorDfs {
    const std::vector<IntMapForm>& forms;
    BigInt twoB;
    IntPoint seed_num;
    BigInt seed_den;
    const std::function<void(std::int64_t, const RatV2&)>& emit;

    void run(const IntComposed& m, std::int64_t first, std::int64_t remaining) {
        if (remaining == 0) {
            BigInt den = m.den * seed_den;
            RatV2 pt{Rat(m.c00 * seed_num.x + m.c01 * seed_num.y + m.u0 * seed_den, den),
                     Rat(m.c10 * seed_num.x + m.c11 * seed_num.y + m.u1 * seed_den, den)};
            emit(first, pt);
            return;
        }
        for (std::size_t i = 0; i < forms.size(); ++i) {
            const IntMapForm& f = forms[i];
            IntComposed next;
            next.c00 = m.c00 * f.c00 + m.c01 * f.c10;
            next.c01 = m.c00 * f.c01 + m.c01 * f.c11;
            next.c10 = m.c10 * f.c00 + m.c11 * f.c10;
            next.c11 = m.c10 * f.c01 + m.c11 * f.c11;
            next.u0 = m.c00 * f.u0 + m.c01 * f.u1 + twoB * m.u0;
            next.u1 = m.c10 * f.u0 + m.c11 * f.u1 + twoB * m.u1;
            next.den = m.den * twoB;
            run(next, first < 0 ? static_cast<std::int64_t>(i) : first, remaining - 1);
        }
    }
};

} // namespace

void for_each_attractor_point(const TileParams& params, std::int64_t depth,
                              const std::function<void(std::int64_t, const RatV2&)>& emit,
                              std::int64_t budget) {
    validate(params);
    if (depth < 0) throw out_of_range_error("attractor depth must be >= 0");
    if (depth > kDefaultAttractorDepthCap)
        throw budget_exceeded_error("attractor depth exceeds the depth cap");
    double count = 1;
    for (std::int64_t k = 0; k < depth; ++k) {
        count *= static_cast<double>(params.B);
        if (count > static_cast<double>(budget))
            throw budget_exceeded_error("attractor enumeration exceeds the point budget");
    }

    RatV2 seed = ifs_fixed_point(params, 1);
    if (depth == 0) {
        emit(-1, seed);
        return;
    }

    std::vector<IntMapForm> forms = integer_map_forms(params);
    AttractorDfs dfs{forms, BigInt(2 * params.B), IntPoint{}, BigInt(1), emit};
    BigInt g = BigInt::gcd(seed.x.den(), seed.y.den());
    dfs.seed_den = seed.x.den() * (seed.y.den() / g);
    dfs.seed_num.x = seed.x.num() * (dfs.seed_den / seed.x.den());
    dfs.seed_num.y = seed.y.num() * (dfs.seed_den / seed.y.den());

    IntComposed identity{BigInt(1), BigInt(0), BigInt(0), BigInt(1), BigInt(0), BigInt(0), BigInt(1)};
    dfs.run(identity, -1, depth);
}

std::vector<RatV2> attractor_points(const TileParams& params, std::int64_t depth,
                                    std::int64_t budget) {
    std::vector<RatV2> points;
    for_each_attractor_point(
        params, depth, [&points](std::int64_t, const RatV2& pt) { points.push_back(pt); }, budget);
    std::sort(points.begin(), points.end(), [](const RatV2& a, const RatV2& b) {
        int c = a.x.compare(b.x);
        if (c != 0) return c < 0;
        return a.y.compare(b.y) < 0;
    });
    return points;
}

RatV2 apply_address(const TileParams& params, const std::vector<P2Element>& digits,
                    const RatV2& x) {
    AffineMap ginv = params.expanding_map().inverse();
    RatV2 y = x;
    for (std::size_t i = digits.size(); i-- > 0;) {
        y = ginv.apply(digits[i].action().apply(y));
    }
    return y;
}

RatV2 eventually_periodic_point(const TileParams& params, const std::vector<P2Element>& preperiod,
                                const std::vector<P2Element>& period) {
    if (period.empty()) throw out_of_range_error("eventually_periodic_point: empty period");
    AffineMap ginv = params.expanding_map().inverse();
    AffineMap cycle = AffineMap::identity();
    for (const P2Element& d : period) cycle = compose(cycle, compose(ginv, d.action()));
    RatV2 y = fixed_point(cycle);
    return apply_address(params, preperiod, y);
}

bool point_in_tile(const TileParams& params, const RatV2& x) {
    Box box = bounding_box(params);
    if (!box.contains(x)) return false;
    AffineMap g = params.expanding_map();
    DigitSet digits = digit_set(params);

    auto key = [](const RatV2& v) { return v.x.to_string() + "," + v.y.to_string(); };

    std::map<std::string, int> ids;
    std::vector<RatV2> pts;
    std::vector<std::vector<int>> succ;
    std::deque<int> work;

    auto intern = [&](const RatV2& v) {
        auto [it, fresh] = ids.emplace(key(v), static_cast<int>(pts.size()));
        if (fresh) {
            pts.push_back(v);
            succ.emplace_back();
            work.push_back(it->second);
            if (pts.size() > 200000)
                throw budget_exceeded_error("point_in_tile: orbit exploration too large");
        }
        return it->second;
    };

    intern(x);
    while (!work.empty()) {
        int id = work.front();
        work.pop_front();
        RatV2 z = g.apply(pts[static_cast<std::size_t>(id)]);
        for (const P2Element& d : digits) {
            RatV2 y = d.r ? RatV2{-z.x, -z.y} : RatV2{z.x - Rat(d.p), z.y - Rat(d.q)};
            if (!box.contains(y)) continue;
            int child = intern(y); // may grow succ
            succ[static_cast<std::size_t>(id)].push_back(child);
        }
    }

    // x is in T iff an infinite forward orbit exists: peel dead states
    std::vector<int> outdeg(pts.size());
    std::vector<std::vector<int>> preds(pts.size());
    for (std::size_t v = 0; v < pts.size(); ++v) {
        outdeg[v] = static_cast<int>(succ[v].size());
        for (int w : succ[v]) preds[static_cast<std::size_t>(w)].push_back(static_cast<int>(v));
    }
    std::deque<int> dead;
    for (std::size_t v = 0; v < pts.size(); ++v)
        if (outdeg[v] == 0) dead.push_back(static_cast<int>(v));
    std::vector<bool> removed(pts.size(), false);
    while (!dead.empty()) {
        int v = dead.front();
        dead.pop_front();
        if (removed[static_cast<std::size_t>(v)]) continue;
        removed[static_cast<std::size_t>(v)] = true;
        for (int u : preds[static_cast<std::size_t>(v)]) {
            if (!removed[static_cast<std::size_t>(u)] && --outdeg[static_cast<std::size_t>(u)] == 0)
                dead.push_back(u);
        }
    }
    return !removed[0];
}

} // namespace crystile
