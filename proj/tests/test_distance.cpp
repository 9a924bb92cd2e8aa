#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qcring/cyclic.hpp"
#include "qcring/distance.hpp"

using namespace qcring;

static RingPtr f2u2() { return Ring::make({Family::EisensteinU, 2, 1, 2, {}}); }
static RingPtr f5u2() { return Ring::make({Family::EisensteinU, 5, 1, 2, {}}); }

static Poly bpoly(const Ring& R, std::initializer_list<uint32_t> bits) {
    std::vector<RElem> c;
    for (uint32_t b : bits) c.push_back(R.from_residue(b));
    return poly::make(R, std::move(c));
}

static Echelon cyclic_rows(const CyclicCode& c) {
    const Ring& R = *c.ring;
    Poly xn1 = poly::xn_minus_one(R, c.n);
    std::vector<std::vector<RElem>> rows;
    for (const auto& g : c.generators) {
        Poly cur = g;
        for (uint32_t j = 0; j < c.n; ++j) {
            std::vector<RElem> row(c.n, R.zero());
            for (uint32_t i = 0; i < cur.c.size(); ++i) row[i] = cur.c[i];
            rows.push_back(std::move(row));
            cur = poly::mod(poly::mul(cur, poly::xpow(R, 1)), xn1);
        }
    }
    return echelon_form(c.ring, c.n, std::move(rows));
}

TEST_CASE("echelon form and enumeration: duplicates-free, exact cardinality") {
    auto R = f2u2();
    auto C = cyclic_free(R, 7, bpoly(*R, {1, 0, 1, 1, 1}));
    auto ech = cyclic_rows(C);
    CHECK(code_cardinality(ech).to_u64() == 64);
    std::set<std::vector<uint32_t>> seen;
    enumerate_codewords(ech, 1 << 10, [&](const std::vector<RElem>& w) {
        std::vector<uint32_t> key;
        for (const auto& e : w) key.insert(key.end(), e.d.begin(), e.d.end());
        seen.insert(key);
    });
    CHECK(seen.size() == 64);
    // membership agrees with enumeration
    enumerate_codewords(ech, 1 << 10, [&](const std::vector<RElem>& w) {
        CHECK(echelon_contains(ech, w));
    });
    std::vector<RElem> probe(7, R->zero());
    probe[0] = R->one();
    CHECK(!echelon_contains(ech, probe));  // weight-1 word not in a d=4 code
    CHECK_THROWS_AS(enumerate_codewords(ech, 63, [](const std::vector<RElem>&) {}), Error);
}

TEST_CASE("zero code enumeration") {
    auto R = f2u2();
    auto ech = echelon_form(R, 5, {});
    CHECK(code_cardinality(ech).to_u64() == 1);
    size_t count = 0;
    enumerate_codewords(ech, 10, [&](const std::vector<RElem>&) { ++count; });
    CHECK(count == 1);  // just the zero word
    auto wp = min_hamming_exact(ech, 10);
    CHECK(!wp.min_hamming.has_value());
    auto sp = sampled_upper_bound(ech, 100, 1);
    CHECK(!sp.min_hamming.has_value());
}

TEST_CASE("repetition-type code has distance 7") {
    auto R = f2u2();
    Poly g = poly::divmod(poly::xn_minus_one(*R, 7), bpoly(*R, {1, 1})).first;
    auto C = cyclic_free(R, 7, g);
    auto ech = cyclic_rows(C);
    auto wp = min_hamming_exact(ech, 1 << 10);
    CHECK(wp.min_hamming == 7);
    CHECK(socle_min_hamming(ech, 1 << 10).min_hamming == 7);
}

TEST_CASE("Lee weight and Gray map over F2+uF2") {
    auto R = f2u2();
    std::vector<RElem> w = {R->zero(), R->one(), R->gamma(), R->add(R->one(), R->gamma())};
    CHECK(lee_weight(*R, w) == 0 + 1 + 2 + 1);
    auto g = gray_map(*R, w);
    CHECK(g == std::vector<uint8_t>{0, 0, 0, 1, 1, 1, 1, 0});
    // isometry: wt_Lee(c) = wt_H(gray(c)), and gray is additive
    for (uint32_t a = 0; a < 4; ++a)
        for (uint32_t b = 0; b < 4; ++b) {
            RElem x = R->from_digits({a & 1, a >> 1});
            RElem y = R->from_digits({b & 1, b >> 1});
            std::vector<RElem> vx = {x}, vy = {y}, vs = {R->add(x, y)};
            auto gx = gray_map(*R, vx), gy = gray_map(*R, vy), gs = gray_map(*R, vs);
            CHECK(gs[0] == (gx[0] ^ gy[0]));
            CHECK(gs[1] == (gx[1] ^ gy[1]));
            uint32_t hw = (gx[0] ? 1 : 0) + (gx[1] ? 1 : 0);
            CHECK(lee_weight(*R, vx) == hw);
        }
    // gray of zero word doubles length
    std::vector<RElem> z(3, R->zero());
    CHECK(gray_map(*R, z) == std::vector<uint8_t>(6, 0));
    // unsupported ring
    auto R5 = f5u2();
    std::vector<RElem> w5 = {R5->one()};
    CHECK_THROWS_AS((void)lee_weight(*R5, w5), Error);
}

TEST_CASE("sampled upper bound never beats the exact distance") {
    auto R = f2u2();
    auto C = cyclic_free(R, 7, bpoly(*R, {1, 0, 1, 1, 1}));
    auto ech = cyclic_rows(C);
    auto exact = min_hamming_exact(ech, 1 << 10);
    for (uint64_t seed : {1ull, 42ull, 31415926ull}) {
        auto up = sampled_upper_bound(ech, 500, seed);
        REQUIRE(up.min_hamming.has_value());
        CHECK(*up.min_hamming >= *exact.min_hamming);
    }
    auto none = sampled_upper_bound(ech, 0, 1);
    CHECK(!none.min_hamming.has_value());
}

TEST_CASE("threaded scans agree with single-threaded") {
    auto R = f5u2();
    auto fac = factor_xn_minus_1(R, 24);
    // rank-4 free code: |C| = 25^4 fits the enumeration budget
    Poly g = poly::one(*R);
    for (size_t i = 0; i < fac.factors.size() && poly::degree(g) < 20; ++i)
        g = poly::mul(g, fac.factors[i].f);
    auto C = cyclic_free(R, 24, g);
    auto ech = cyclic_rows(C);
    auto w1 = min_hamming_exact(ech, 1 << 22, 1);
    auto w4 = min_hamming_exact(ech, 1 << 22, 4);
    CHECK(w1.min_hamming == w4.min_hamming);
    auto s1 = socle_min_hamming(ech, 1 << 22, 1);
    auto s4 = socle_min_hamming(ech, 1 << 22, 4);
    CHECK(s1.min_hamming == s4.min_hamming);
    CHECK(s1.min_hamming == w1.min_hamming);
}

TEST_CASE("min_lee on a tiny code") {
    auto R = f2u2();
    auto C = cyclic_free(R, 7, bpoly(*R, {1, 0, 1, 1, 1}));
    auto ech = cyclic_rows(C);
    auto lp = min_lee_f2u(ech, 1 << 10);
    REQUIRE(lp.min_lee.has_value());
    // Lee distance of the [7,3,4] code: at most 2*4 and at least 4; check
    // against brute force
    uint32_t brute = UINT32_MAX;
    enumerate_codewords(ech, 1 << 10, [&](const std::vector<RElem>& w) {
        if (hamming_weight(*R, w) == 0) return;
        brute = std::min(brute, lee_weight(*R, w));
    });
    CHECK(*lp.min_lee == brute);
}
