#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crystile/exact.hpp"
#include "crystile/group.hpp"

#include <random>

using namespace crystile;

TEST_CASE("composition matches the affine actions") {
    // a o c = ac, c o a = a^-1 c, involutions square to the identity
    CHECK(compose(p2_a(1), p2_c()) == p2(1, 0, 1));
    CHECK(compose(p2_c(), p2_a(1)) == p2(-1, 0, 1));
    CHECK(compose(p2(2, 1, 1), p2(2, 1, 1)) == p2_identity());
}

TEST_CASE("inverse") {
    CHECK(inverse(p2(3, -2, 0)) == p2(-3, 2, 0));
    CHECK(inverse(p2(5, 7, 1)) == p2(5, 7, 1));
    CHECK(inverse(p2_identity()) == p2_identity());
}

TEST_CASE("group axioms on random triples") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> dist(-20, 20);
    auto rand_el = [&]() { return p2(dist(rng), dist(rng), static_cast<int>(rng() & 1)); };
    for (int iter = 0; iter < 3000; ++iter) {
        P2Element x = rand_el(), y = rand_el(), z = rand_el();
        CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
        CHECK(compose(x, p2_identity()) == x);
        CHECK(compose(p2_identity(), x) == x);
        CHECK(compose(x, inverse(x)) == p2_identity());
        CHECK(compose(inverse(x), x) == p2_identity());
        // action composition agrees with the group law
        CHECK(compose(x.action(), y.action()) == compose(x, y).action());
    }
}

TEST_CASE("canonical element strings") {
    CHECK(to_string(p2_identity()) == "id");
    CHECK(to_string(p2_a(1)) == "a");
    CHECK(to_string(p2(3, 1, 1)) == "a^3 b c");
    CHECK(to_string(p2(-1, 0, 1)) == "a^-1 c");
    CHECK(to_string(p2(0, -2, 0)) == "b^-2");
    CHECK(to_string(p2_c()) == "c");
}

TEST_CASE("conjugation by the expanding map, closed form") {
    // g a^A b g^-1 = a^-B
    TileParams p35 = make_params(3, 5);
    CHECK(conjugate_by_g(p2(3, 1, 0), p35) == p2(-5, 0, 0));
    CHECK(conjugate_by_g(p2_identity(), p35) == p2_identity());
    // g c g^-1 = a^(B-1) c for every parameter pair
    for (std::int64_t B = 2; B <= 8; ++B)
        for (std::int64_t A = -B; A <= B; ++A)
            CHECK(conjugate_by_g(p2_c(), make_params(A, B)) == p2(B - 1, 0, 1));
    // g a^-A b^-1 c g^-1 = a^(2B-1) c for A > 0
    for (std::int64_t B = 2; B <= 8; ++B)
        for (std::int64_t A = 1; A <= B; ++A)
            CHECK(conjugate_by_g(p2(-A, -1, 1), make_params(A, B)) == p2(2 * B - 1, 0, 1));
}

TEST_CASE("conjugation closed form equals exact affine conjugation") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::int64_t> dist(-12, 12);
    for (int iter = 0; iter < 1000; ++iter) {
        std::int64_t B = 2 + static_cast<std::int64_t>(rng() % 9);
        std::int64_t A = dist(rng) % (B + 1);
        TileParams params = make_params(A, B);
        P2Element gamma = p2(dist(rng), dist(rng), static_cast<int>(rng() & 1));
        AffineMap g = params.expanding_map();
        AffineMap via_affine = compose(compose(g, gamma.action()), g.inverse());
        P2Element closed = conjugate_by_g(gamma, params);
        CHECK(closed.action() == via_affine);
        CHECK(closed.r == gamma.r);
        // and the reverse direction recovers gamma
        auto back = conjugate_by_g_inverse(closed, params);
        REQUIRE(back.has_value());
        CHECK(*back == gamma);
    }
}

TEST_CASE("membership in the conjugated subgroup") {
    for (std::int64_t A = -2; A <= 2; ++A) {
        TileParams params = make_params(A, 2);
        CHECK(is_in_conjugated_subgroup(p2_b(1), params));
    }
    for (std::int64_t B = 2; B <= 6; ++B)
        for (std::int64_t A = -B; A <= B; ++A)
            CHECK_FALSE(is_in_conjugated_subgroup(p2_a(1), make_params(A, B)));
    CHECK(is_in_conjugated_subgroup(p2_identity(), make_params(1, 3)));
}

TEST_CASE("canonical digit sets are complete residue systems") {
    for (std::int64_t B = 2; B <= 12; ++B)
        for (std::int64_t A = -B; A <= B; ++A) {
            TileParams params = make_params(A, B);
            CHECK(verify_complete_residue_system(digit_set(params), params));
        }
    // {id, b} collapses for B = 2, and repeated digits always fail
    TileParams p02 = make_params(0, 2);
    CHECK_FALSE(verify_complete_residue_system({p2_identity(), p2_b(1)}, p02));
    CHECK_FALSE(verify_complete_residue_system({p2_c(), p2_c()}, p02));
}

TEST_CASE("digit sets") {
    TileParams p02 = make_params(0, 2);
    CHECK(digit_set(p02) == DigitSet{p2_identity(), p2_c()});
    TileParams p14 = make_params(1, 4);
    CHECK(digit_set(p14) == DigitSet{p2_identity(), p2_a(1), p2_a(2), p2_c()});
}

TEST_CASE("canonicalize reduces (Mtilde, v) pairs") {
    {
        std::int64_t B = 5, A = 2;
        TileParams params = canonicalize({0, -B, 1, -A}, {1, 0});
        CHECK(params.A == A);
        CHECK(params.B == B);
        REQUIRE(params.basis_change.has_value());
        IntM2 C = *params.basis_change;
        CHECK(C.a == 1);
        CHECK(C.b == 0);
        CHECK(C.c == 0);
        CHECK(C.d == 1);
    }
    {
        // companion form [[-A,-B],[1,0]] with v = (0,1): C = [v | Mtilde v]
        std::int64_t B = 3, A = 1;
        TileParams params = canonicalize({-A, -B, 1, 0}, {0, 1});
        CHECK(params.A == A);
        CHECK(params.B == B);
        REQUIRE(params.basis_change.has_value());
        IntM2 C = *params.basis_change;
        CHECK(C.a == 0);
        CHECK(C.b == -B);
        CHECK(C.c == 1);
        CHECK(C.d == 0);
        // C M C^-1 == Mtilde, checked exactly
        RatM2 Cm{Rat(C.a), Rat(C.b), Rat(C.c), Rat(C.d)};
        RatM2 M = params.M();
        RatM2 back = Cm * M * Cm.inverse();
        CHECK(back == RatM2{Rat(-A), Rat(-B), Rat(1), Rat(0)});
    }
    CHECK_THROWS_AS(canonicalize({1, 0, 0, 1}, {1, 0}), dependent_vectors_error);
    CHECK_THROWS_AS(canonicalize({0, -3, 1, -5}, {1, 0}), not_expanding_error);
    CHECK_THROWS_AS(make_params(5, 3), invalid_params_error);
}

TEST_CASE("element JSON object form") {
    CHECK(element_to_json(p2(3, -1, 1)) == "{\"p\":3,\"q\":-1,\"r\":1}");
    CHECK(element_to_json(p2_identity()) == "{\"p\":0,\"q\":0,\"r\":0}");
}

TEST_CASE("total ordering is lexicographic on (r, p, q)") {
    std::vector<P2Element> v = {p2(1, 0, 1), p2(0, 0, 1), p2(-1, 2, 0), p2(-1, -1, 0)};
    std::sort(v.begin(), v.end());
    CHECK(v == std::vector<P2Element>{p2(-1, -1, 0), p2(-1, 2, 0), p2(0, 0, 1), p2(1, 0, 1)});
}
