// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are asserted exactly as stated; where the exact
// engine refutes a published value, the criterion stays red and the line
// carries the certified counter-evidence.
#include "crystile/render.hpp"
#include "crystile/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace crystile;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const std::string& id, bool pass, double secs, const std::string& detail = "") {
    std::printf("%-4s %s (%.1fs)%s%s\n", pass ? "PASS" : "FAIL", id.c_str(), secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

std::vector<P2Element> els(std::initializer_list<P2Element> v) {
    std::vector<P2Element> out(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::string set_str(const std::vector<P2Element>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + "}";
}

void criterion_1_and_9() {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail1, detail9;
    bool agree_ok = true, invariants_ok = true;
    for (std::int64_t B = 2; B <= 40; ++B) {
        for (std::int64_t A = -B; A <= B; ++A) {
            TileParams params = make_params(A, B);
            std::vector<P2Element> S = neighbor_set(params);
            DiskVerdict closed = classify(params);
            if (!params.large_regime()) {
                DiskVerdict ind = independent_disklike_check_on(params, S);
                if (ind.verdict != closed.verdict && agree_ok) {
                    agree_ok = false;
                    detail1 = "disagreement at A=" + std::to_string(A) + " B=" + std::to_string(B);
                }
            } else {
                bool ok = closed.verdict == Verdict::NotDiskLike;
                try {
                    WitnessPair w = intersection_witnesses(params);
                    ok = ok && replay_witness(params, w.first) && replay_witness(params, w.second) &&
                         !(w.first.point == w.second.point);
                } catch (const error&) {
                    ok = false;
                }
                if (!ok && agree_ok) {
                    agree_ok = false;
                    detail1 = "witness failure at A=" + std::to_string(A) +
                              " B=" + std::to_string(B);
                }
            }
            try {
                check_neighbor_invariants(params, S);
            } catch (const error& e) {
                if (invariants_ok) detail9 = e.what();
                invariants_ok = false;
            }
        }
    }
    double secs = seconds_since(t0);
    bool in_time = secs < 120.0;
    report("1", agree_ok && in_time, secs,
           !in_time ? "sweep exceeded the 120 s budget" : detail1);
    report("9", invariants_ok, secs, detail9);
}

void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    struct Golden {
        std::int64_t A, B;
        std::vector<P2Element> stated;
    };
    // the published sets, exactly as listed
    const std::vector<Golden> goldens = {
        {3, 5, els({p2(1, 0, 0), p2(-1, 0, 0), p2(2, 1, 0), p2(-2, -1, 0), p2(0, 0, 1),
                    p2(1, 0, 1), p2(-1, 0, 1), p2(2, 1, 1), p2(-2, -1, 1), p2(3, 1, 1)})},
        {4, 7, els({p2(1, 0, 0), p2(-1, 0, 0), p2(3, 1, 0), p2(-3, -1, 0), p2(0, 0, 1),
                    p2(1, 0, 1), p2(-1, 0, 1), p2(3, 1, 1), p2(-3, -1, 1), p2(4, 1, 1)})},
        {3, 4, els({p2(1, 0, 0), p2(-1, 0, 0), p2(2, 1, 0), p2(-2, -1, 0), p2(0, 0, 1),
                    p2(1, 0, 1), p2(2, 1, 1), p2(-2, -1, 1), p2(3, 1, 1)})},
        {2, 2, els({p2(1, 1, 0), p2(-1, -1, 0), p2(0, 0, 1), p2(1, 0, 1), p2(1, 1, 1),
                    p2(2, 1, 1)})},
        {2, 3, els({p2(1, 0, 0), p2(-1, 0, 0), p2(1, 1, 0), p2(-1, -1, 0), p2(0, 0, 1),
                    p2(1, 0, 1), p2(1, 1, 1), p2(2, 1, 1)})},
        {2, 4, els({p2(1, 0, 0), p2(-1, 0, 0), p2(1, 1, 0), p2(-1, -1, 0), p2(0, 0, 1),
                    p2(1, 0, 1), p2(1, 1, 1), p2(2, 1, 1)})},
        {1, 2, els({p2(1, 0, 0), p2(-1, 0, 0), p2(0, 0, 1), p2(1, 0, 1), p2(1, 1, 1),
                    p2(0, 1, 1)})},
        {1, 7, els({p2(1, 0, 0), p2(-1, 0, 0), p2(0, 0, 1), p2(1, 0, 1), p2(1, 1, 1),
                    p2(0, 1, 1)})},
        {0, 2, els({p2(1, 0, 0), p2(-1, 0, 0), p2(0, 0, 1), p2(1, 0, 1), p2(-1, 1, 1),
                    p2(0, 1, 1), p2(1, 1, 1)})},
        {0, 5, els({p2(1, 0, 0), p2(-1, 0, 0), p2(0, 0, 1), p2(1, 0, 1), p2(-1, 1, 1),
                    p2(0, 1, 1), p2(1, 1, 1)})},
        {-1, 2, els({p2(1, 0, 0), p2(-1, 0, 0), p2(0, 0, 1), p2(-1, 0, 1), p2(-1, 1, 1),
                     p2(0, 1, 1)})},
        {-1, 3, els({p2(1, 0, 0), p2(-1, 0, 0), p2(0, 0, 1), p2(1, 0, 1), p2(-1, 1, 1),
                     p2(0, 1, 1)})},
        {-2, 2, els({p2(1, 0, 0), p2(-1, 0, 0), p2(0, 0, 1), p2(-1, 0, 1), p2(-2, 1, 1),
                     p2(-1, 1, 1)})},
        {-2, 3, els({p2(1, 0, 0), p2(-1, 0, 0), p2(0, 0, 1), p2(-1, 0, 1), p2(-2, 1, 1),
                     p2(-1, 1, 1)})},
        {-2, 4, els({p2(1, 0, 0), p2(-1, 0, 0), p2(0, 0, 1), p2(1, 0, 1), p2(-2, 1, 1),
                     p2(-1, 1, 1)})},
        {-3, 4, els({p2(1, 0, 0), p2(-1, 0, 0), p2(-2, 1, 0), p2(2, -1, 0), p2(0, 0, 1),
                     p2(-1, 0, 1), p2(-2, 1, 1), p2(-3, 1, 1)})},
        {-3, 5, els({p2(1, 0, 0), p2(-1, 0, 0), p2(-2, 1, 0), p2(2, -1, 0), p2(0, 0, 1),
                     p2(1, 0, 1), p2(-2, 1, 1), p2(-3, 1, 1), p2(-1, 0, 1)})},
        {-4, 6, els({p2(1, 0, 0), p2(-1, 0, 0), p2(-3, 1, 0), p2(3, -1, 0), p2(0, 0, 1),
                     p2(-1, 0, 1), p2(1, 0, 1), p2(-3, 1, 1), p2(-4, 1, 1), p2(3, -1, 1)})},
    };
    bool all = true;
    std::string detail;
    for (const Golden& g : goldens) {
        std::vector<P2Element> S = neighbor_set(make_params(g.A, g.B));
        if (S == g.stated) continue;
        all = false;
        detail += "(" + std::to_string(g.A) + "," + std::to_string(g.B) + ") computed " +
                  set_str(S) + " vs stated " + set_str(g.stated) + "; ";
    }
    if (!all)
        detail += "each divergence is certified by the point-cloud oracle and by exact "
                  "rotation-center membership";
    double secs = seconds_since(t0);
    report("2", all && secs < 10.0, secs, detail);
}

void criterion_3() {
    auto t0 = std::chrono::steady_clock::now();
    bool all = true;
    std::string detail;
    auto expect = [&](std::int64_t A, std::int64_t B, std::vector<IntV2> want) {
        std::sort(want.begin(), want.end(),
                  [](const IntV2& a, const IntV2& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
        std::vector<IntV2> got = lattice_neighbor_set(make_params(A, B));
        bool ok = got.size() == want.size();
        for (std::size_t i = 0; ok && i < got.size(); ++i)
            ok = got[i].x == want[i].x && got[i].y == want[i].y;
        if (!ok) {
            all = false;
            detail += "(" + std::to_string(A) + "," + std::to_string(B) + ") ";
        }
    };
    expect(1, 3, {{1, 1}, {0, 1}, {1, 0}, {-1, 0}, {-1, -1}, {0, -1}});
    expect(2, 4, {{2, 1}, {1, 1}, {1, 0}, {-1, 0}, {-2, -1}, {-1, -1}});
    expect(0, 2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}});
    expect(0, 6, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}});
    expect(-1, 4, {{-1, 1}, {0, 1}, {1, 0}, {-1, 0}, {1, -1}, {0, -1}});
    // reflected images of the A = 1, 2, 3 sets
    expect(-1, 3, {{-1, 1}, {0, 1}, {-1, 0}, {1, 0}, {1, -1}, {0, -1}});
    expect(-2, 5, {{-2, 1}, {-1, 1}, {-1, 0}, {1, 0}, {2, -1}, {1, -1}});
    expect(-3, 7, {{-3, 1}, {-2, 1}, {-1, 0}, {1, 0}, {3, -1}, {2, -1}});
    report("3", all, seconds_since(t0), detail);
}

void criterion_4() {
    auto t0 = std::chrono::steady_clock::now();
    bool all = true;
    std::string detail;
    for (auto [A, B] : {std::pair<std::int64_t, std::int64_t>{1, 2}, {1, 3}, {0, 2}, {0, 4},
                        {-1, 2}, {-1, 4}, {2, 4}, {3, 5}, {4, 7}}) {
        TableDiff diff = verify_edge_tables(make_params(A, B));
        if (!diff.pass()) {
            all = false;
            detail += "(" + std::to_string(A) + "," + std::to_string(B) + ") " +
                      std::to_string(diff.missing.size()) + " missing/" +
                      std::to_string(diff.extra.size()) + " extra; ";
        }
    }
    report("4", all, seconds_since(t0), detail);
}

void criterion_5() {
    auto t0 = std::chrono::steady_clock::now();
    {
        WitnessPair w = intersection_witnesses(make_params(3, 3));
        bool ok = w.first.point == RatV2{Rat(0), Rat(0)} &&
                  w.second.point == RatV2{Rat(-13, 73), Rat(16, 219)};
        report("5a", ok, seconds_since(t0));
    }
    {
        auto t1 = std::chrono::steady_clock::now();
        WitnessPair w = intersection_witnesses(make_params(-3, 3));
        bool ok = w.first.point == RatV2{Rat(0), Rat(0)} &&
                  w.second.point == RatV2{Rat(0), Rat(1)};
        std::string detail;
        if (!ok) {
            bool stated_in_tile = point_in_tile(make_params(-3, 3), {Rat(0), Rat(1)});
            detail = "walk certificate evaluates to (" + w.second.point.x.to_string() + ", " +
                     w.second.point.y.to_string() + "); the stated point (0, 1) " +
                     (stated_in_tile ? "lies in the tile"
                                     : "admits no digit address (exhaustive orbit certificate)");
        }
        report("5b", ok, seconds_since(t1), detail);
    }
    {
        auto t1 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        for (std::int64_t B = 3; B <= 15 && ok; ++B)
            for (std::int64_t A = -B; A <= B && ok; ++A) {
                TileParams params = make_params(A, B);
                if (!params.large_regime()) continue;
                try {
                    WitnessPair w = intersection_witnesses(params);
                    ok = replay_witness(params, w.first) && replay_witness(params, w.second) &&
                         !(w.first.point == w.second.point);
                } catch (const error& e) {
                    ok = false;
                    detail = e.what();
                }
                if (!ok && detail.empty())
                    detail = "replay failed at A=" + std::to_string(A) + " B=" + std::to_string(B);
            }
        report("5c", ok, seconds_since(t1), detail);
    }
}

void criterion_6() {
    auto t0 = std::chrono::steady_clock::now();
    bool all = true;
    for (std::int64_t B = 2; B <= 40; ++B)
        for (std::int64_t A = -B; A <= B; ++A) {
            TileParams params = make_params(A, B);
            if (!verify_complete_residue_system(digit_set(params), params)) all = false;
        }
    report("6", all, seconds_since(t0));
}

void criterion_7() {
    auto t0 = std::chrono::steady_clock::now();
    bool all = true;
    std::string detail;
    for (auto [A, B] : {std::pair<std::int64_t, std::int64_t>{1, 2}, {0, 3}, {2, 3}}) {
        TileParams params = make_params(A, B);
        if (oracle_neighbor_set(params, 12) != neighbor_set(params)) {
            all = false;
            detail += "(" + std::to_string(A) + "," + std::to_string(B) + ") ";
        }
    }
    double secs = seconds_since(t0);
    report("7", all && secs < 60.0, secs, secs >= 60.0 ? "oracle exceeded 60 s" : detail);
}

void criterion_8() {
    auto t0 = std::chrono::steady_clock::now();
    bool all = true;
    std::string detail;
    for (auto [A, B] : {std::pair<std::int64_t, std::int64_t>{1, 4}, {2, 3}, {-2, 3}, {-3, 4},
                        {3, 3}}) {
        TileParams params = make_params(A, B);
        std::int64_t depth = default_render_depth(B);
        double area = estimate_area(render_tile(params, depth, 800));
        if (area >= 0.45 && area <= 0.55) continue;
        all = false;
        // pixel coverage is consistent but under-resolves the roughest
        // boundaries at the default resolution; show one refined estimate
        double fine = estimate_area(render_tile(params, depth + 1, 1600, 20'000'000));
        detail += "(" + std::to_string(A) + "," + std::to_string(B) + ") area=" +
                  std::to_string(area) + " at defaults, " + std::to_string(fine) +
                  " at depth+1/1600px, converging to 1/2; ";
    }
    report("8", all, seconds_since(t0), detail);
}

} // namespace

int main() {
    criterion_1_and_9();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    std::printf("%s: %d criterion line(s) failed\n", failures ? "RESULT FAIL" : "RESULT PASS",
                failures);
    return failures ? 1 : 0;
}
