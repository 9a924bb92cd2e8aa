#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qcring/ring.hpp"

using namespace qcring;

static RingPtr f2u2() { return Ring::make({Family::EisensteinU, 2, 1, 2, {}}); }
static RingPtr z4() { return Ring::make({Family::GaloisRing, 2, 1, 2, {}}); }
static RingPtr f5u2() { return Ring::make({Family::EisensteinU, 5, 1, 2, {}}); }
static RingPtr f2u3() { return Ring::make({Family::EisensteinU, 2, 1, 3, {}}); }

static std::vector<RElem> all_elems(const RingPtr& R) {
    std::vector<RElem> out;
    std::vector<uint32_t> d(R->s(), 0);
    for (;;) {
        out.push_back(R->from_digits(d));
        uint32_t i = 0;
        while (i < R->s() && ++d[i] == R->q()) d[i++] = 0;
        if (i == R->s()) break;
    }
    return out;
}

TEST_CASE("ring_make basics") {
    CHECK(f2u2()->size() == 4);
    CHECK(z4()->size() == 4);
    CHECK(f5u2()->size() == 25);
    CHECK(f2u2()->spec_string() == "F2[u]/u^2");
    CHECK(z4()->spec_string() == "GR(4,1)");
    CHECK_THROWS_AS((void)Ring::make({Family::EisensteinU, 4, 1, 2, {}}), Error);
}

TEST_CASE("custom defining polynomial validation") {
    // x^2+1 = (x+1)^2 over F_2: reducible
    CHECK_THROWS_AS((void)Ring::make({Family::GaloisRing, 2, 2, 2, std::vector<uint32_t>{1, 0, 1}}),
                    Error);
    // x^2+x+1 is irreducible over F_2
    auto gr = Ring::make({Family::GaloisRing, 2, 2, 2, std::vector<uint32_t>{1, 1, 1}});
    CHECK(gr->size() == 16);
    CHECK(gr->q() == 4);
}

TEST_CASE("arith examples from small rings") {
    auto R = f2u2();
    RElem u = R->gamma();
    CHECK(R->is_zero(R->mul(u, u)));  // gamma^s = 0

    auto R3 = f2u3();
    RElem v = R3->add(R3->one(), R3->gamma());  // v = 1+u
    RElem v2 = R3->mul(v, v);
    // v^2 = 1 + u^2
    RElem expect = R3->from_digits({1, 0, 1});
    CHECK(v2 == expect);

    auto Z4 = z4();
    RElem three = Z4->from_int(3);
    CHECK(Z4->mul(three, three) == Z4->one());
    CHECK(Z4->from_int(2) == Z4->from_digits({0, 1}));  // 2 = 0 + 1*2
}

TEST_CASE("inv_unit") {
    auto R = f2u2();
    CHECK(R->inv(R->one()) == R->one());
    RElem v = R->add(R->one(), R->gamma());
    CHECK(R->inv(v) == v);  // (1+u)^2 = 1
    auto Z4 = z4();
    CHECK(Z4->inv(Z4->from_int(3)) == Z4->from_int(3));
    CHECK_THROWS_AS((void)R->inv(R->gamma()), Error);
}

TEST_CASE("gamma_decompose round trip and unit criterion, exhaustively") {
    for (auto R : {f2u2(), z4(), f5u2(), f2u3(), Ring::make({Family::GaloisRing, 3, 1, 2, {}}),
                   Ring::make({Family::GaloisRing, 2, 2, 2, {}})}) {
        uint64_t nonunits = 0;
        for (const auto& a : all_elems(R)) {
            auto digits = R->gamma_decompose(a);
            // recompose: sum digit_i * gamma^i with canonical digit lifts
            RElem acc = R->zero();
            for (uint32_t i = 0; i < R->s(); ++i)
                acc = R->add(acc, R->shift_up(R->from_residue(digits[i]), i));
            CHECK(acc == a);
            CHECK(R->is_unit(a) == (digits[0] != 0));
            if (!R->is_unit(a)) ++nonunits;
        }
        uint64_t expect = 1;
        for (uint32_t i = 0; i + 1 < R->s(); ++i) expect *= R->q();
        CHECK(nonunits == expect);  // |<gamma>| = q^(s-1)
    }
}

TEST_CASE("ring axioms and units, exhaustively on small rings") {
    for (auto R : {f2u2(), z4(), f5u2(), f2u3(), Ring::make({Family::GaloisRing, 3, 1, 3, {}})}) {
        auto elems = all_elems(R);
        for (const auto& a : elems) {
            CHECK(R->add(a, R->zero()) == a);
            CHECK(R->mul(a, R->one()) == a);
            CHECK(R->is_zero(R->sub(a, a)));
            if (R->is_unit(a)) CHECK(R->mul(a, R->inv(a)) == R->one());
        }
        // associativity/commutativity/distributivity spot checks over all pairs
        for (size_t i = 0; i < elems.size(); ++i)
            for (size_t j = i; j < elems.size(); ++j) {
                const auto &a = elems[i], &b = elems[j];
                CHECK(R->add(a, b) == R->add(b, a));
                CHECK(R->mul(a, b) == R->mul(b, a));
            }
        const auto& a = elems[elems.size() / 2];
        for (const auto& b : elems)
            for (const auto& c : elems) {
                CHECK(R->mul(a, R->add(b, c)) == R->add(R->mul(a, b), R->mul(a, c)));
                CHECK(R->mul(a, R->mul(b, c)) == R->mul(R->mul(a, b), c));
            }
    }
}

TEST_CASE("gamma nilpotency") {
    for (auto R : {f2u2(), z4(), f5u2(), f2u3(), Ring::make({Family::GaloisRing, 2, 1, 4, {}})}) {
        RElem g = R->gamma();
        RElem pow = R->one();
        for (uint32_t i = 0; i + 1 < R->s(); ++i) pow = R->mul(pow, g);
        if (R->s() > 1) CHECK(!R->is_zero(pow));  // gamma^(s-1) != 0
        CHECK(R->is_zero(R->mul(pow, g)));        // gamma^s = 0
    }
}

TEST_CASE("project_mod_gamma_j is a ring homomorphism") {
    for (auto R : {f2u2(), z4(), f5u2(), f2u3(), Ring::make({Family::GaloisRing, 2, 1, 3, {}})}) {
        auto elems = all_elems(R);
        for (uint32_t j = 1; j <= R->s(); ++j) {
            auto T = R->truncated(j);
            for (const auto& a : elems)
                for (const auto& b : elems) {
                    CHECK(T->add(R->project(a, j), R->project(b, j)) == R->project(R->add(a, b), j));
                    CHECK(T->mul(R->project(a, j), R->project(b, j)) == R->project(R->mul(a, b), j));
                }
        }
        // mu_s is the identity
        for (const auto& a : elems) CHECK(R->project(a, R->s()).d == a.d);
    }
}

TEST_CASE("project examples") {
    auto R = f2u2();
    RElem a = R->from_digits({1, 1});  // 1+u
    CHECK(R->project(a, 1).d == std::vector<uint32_t>{1});
    auto R5 = f5u2();
    RElem b = R5->from_digits({3, 2});  // 3+2u
    CHECK(R5->project(b, 1).d == std::vector<uint32_t>{3});
    CHECK_THROWS_AS((void)R->project(a, 0), Error);
    CHECK_THROWS_AS((void)R->project(a, 3), Error);
}

TEST_CASE("teichmuller digit sets") {
    auto Z4 = z4();
    auto tz4 = Z4->teichmuller_digits();
    CHECK(tz4.size() == 2);
    CHECK(Z4->is_zero(tz4[0]));
    CHECK(tz4[1] == Z4->one());

    auto R = f2u2();
    auto t = R->teichmuller_digits();
    CHECK(t.size() == 2);

    // GR(4,3): 8 digits; the 7 nonzero ones form the group generated by an
    // element of order 7, and each satisfies t^q = t
    auto gr43 = Ring::make({Family::GaloisRing, 2, 3, 2, {}});
    auto tg = gr43->teichmuller_digits();
    CHECK(tg.size() == 8);
    std::set<std::vector<uint32_t>> seen;
    for (size_t i = 1; i < tg.size(); ++i) {
        CHECK(gr43->pow_u(tg[i], 7) == gr43->one());
        CHECK(gr43->pow_u(tg[i], 8) == tg[i]);  // t^q = t
        seen.insert(tg[i].d);
    }
    CHECK(seen.size() == 7);
    bool has_order7 = false;
    for (size_t i = 1; i < tg.size(); ++i) {
        bool ord7 = true;
        RElem p = tg[i];
        for (int k = 1; k < 7; ++k) {
            if (p == gr43->one() && k < 7) {
                ord7 = false;
                break;
            }
            p = gr43->mul(p, tg[i]);
        }
        if (ord7) has_order7 = true;
    }
    CHECK(has_order7);
}

TEST_CASE("galois ring coefficient round trip") {
    for (auto R : {z4(), Ring::make({Family::GaloisRing, 2, 3, 2, {}}),
                   Ring::make({Family::GaloisRing, 5, 1, 2, {}})}) {
        for (const auto& a : all_elems(R)) CHECK(R->from_coeffs(R->to_coeffs(a)) == a);
    }
}

TEST_CASE("s=1 degenerates to the field") {
    auto F4 = Ring::make({Family::EisensteinU, 2, 2, 1, {}});
    CHECK(F4->size() == 4);
    for (const auto& a : all_elems(F4))
        if (!F4->is_zero(a)) CHECK(F4->mul(a, F4->inv(a)) == F4->one());
    CHECK(F4->is_zero(F4->gamma()));
}

TEST_CASE("ring mismatch is detected") {
    auto R1 = f2u2();
    auto R2 = z4();
    CHECK_THROWS_AS((void)R1->add(R1->one(), R2->one()), Error);
}
