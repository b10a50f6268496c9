#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crystile/rational.hpp"

#include <random>

using namespace crystile;

TEST_CASE("bigint small arithmetic matches int64") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::int64_t> dist(-1000000000, 1000000000);
    for (int iter = 0; iter < 5000; ++iter) {
        std::int64_t a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
        }
        CHECK(BigInt(a).compare(BigInt(b)) == (a < b ? -1 : a > b ? 1 : 0));
    }
}

TEST_CASE("bigint string round trip") {
    const char* cases[] = {"0", "-1", "1", "4294967295", "4294967296", "-4294967296",
                           "18446744073709551616", "-340282366920938463463374607431768211456"};
    for (const char* s : cases) CHECK(BigInt::from_string(s).to_string() == s);
}

TEST_CASE("bigint wide values against independently computed products") {
    // frozen from an external bignum computation
    struct Row {
        const char *a, *b, *prod, *quot, *rem, *gcd;
    };
    const Row rows[] = {
        {"4085928517108185987576963212575368459320", "7073442644944893351268396",
         "28901581017109493015583607377460458150822439104068960574327650720",
         "577643549570340", "3604605912821635547484680", "4"},
        {"-5403657796486301199939236786441741559715", "8387920583203146153152729",
         "-45325452455733603206817866847871955441987214165477782773068712235",
         "-644218998366192", "-5340503304672980895421747", "1"},
        {"1940750881726727891506814932215711749275", "1196602429973668011395314",
         "2322307221047741360823668603663375028845000908954841816477897350",
         "1621884456451785", "225694670681848295813785", "1"},
        {"-6985619384882461814718395661897156734576", "2790299133828112266286487",
         "-19491967718890403608744176792304342193023977263024822650634474512",
         "-2503537810764625", "-239942066823714381612201", "1"},
    };
    for (const Row& r : rows) {
        BigInt a = BigInt::from_string(r.a), b = BigInt::from_string(r.b);
        CHECK((a * b).to_string() == r.prod);
        BigInt q, rem;
        BigInt::divrem(a, b, q, rem);
        CHECK(q.to_string() == r.quot);
        CHECK(rem.to_string() == r.rem);
        CHECK((q * b + rem) == a);
        CHECK(BigInt::gcd(a, b).to_string() == r.gcd);
    }
}

TEST_CASE("bigint divrem identity on random wide operands") {
    std::mt19937_64 rng(99);
    auto random_big = [&rng](int limbs) {
        BigInt v(0);
        for (int i = 0; i < limbs; ++i)
            v = v * BigInt(static_cast<std::int64_t>(1) << 32) +
                BigInt(static_cast<std::int64_t>(rng() & 0xffffffffu));
        return rng() & 1 ? -v : v;
    };
    for (int iter = 0; iter < 400; ++iter) {
        BigInt a = random_big(1 + static_cast<int>(rng() % 6));
        BigInt b = random_big(1 + static_cast<int>(rng() % 4));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divrem(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
        BigInt g = BigInt::gcd(a, b);
        if (!a.is_zero()) {
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());
        }
    }
}

TEST_CASE("rational reduction and ordering") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, 4) == Rat(1, -2));
    CHECK(Rat(-2, 4).den() == BigInt(2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 3) > Rat(-1, 2));
    CHECK(Rat(7, 3).floor() == BigInt(2));
    CHECK(Rat(-7, 3).floor() == BigInt(-3));
    CHECK(Rat(7, 3).ceil() == BigInt(3));
    CHECK(Rat(-7, 3).ceil() == BigInt(-2));
    CHECK(Rat(22, 7).to_string() == "22/7");
    CHECK(Rat::from_string("-13/73").num() == BigInt(-13));
}

TEST_CASE("rational field axioms on random samples") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::int64_t> dist(-50, 50);
    auto random_rat = [&]() {
        std::int64_t d = 0;
        while (d == 0) d = dist(rng);
        return Rat(dist(rng), d);
    };
    for (int iter = 0; iter < 2000; ++iter) {
        Rat a = random_rat(), b = random_rat(), c = random_rat();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rat(0));
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}
