#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "qcring/cyclic.hpp"
#include "qcring/distance.hpp"

using namespace qcring;

static RingPtr f2u2() { return Ring::make({Family::EisensteinU, 2, 1, 2, {}}); }
static RingPtr z4() { return Ring::make({Family::GaloisRing, 2, 1, 2, {}}); }
static RingPtr f5u2() { return Ring::make({Family::EisensteinU, 5, 1, 2, {}}); }

static Poly bpoly(const Ring& R, std::initializer_list<uint32_t> bits) {
    std::vector<RElem> c;
    for (uint32_t b : bits) c.push_back(R.from_residue(b));
    return poly::make(R, std::move(c));
}

static Echelon cyclic_echelon(const CyclicCode& c) {
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

TEST_CASE("Example 2.6: the [7,3,4] free cyclic code over F2+uF2") {
    auto R = f2u2();
    Poly g = bpoly(*R, {1, 0, 1, 1, 1});  // (x+1)(x^3+x+1) = x^4+x^3+x^2+1
    auto C = cyclic_free(R, 7, g);
    auto fr = is_free_rank(C);
    CHECK(fr.first);
    CHECK(fr.second == 3);

    auto [E, xi] = root_context(R, 7);
    CHECK(bch_bound(C, *E, xi) == 4);  // run {0,1,2} of roots
    CHECK(bch_bound_best(C) == 4);

    auto M = generator_matrix_free(C);
    REQUIRE(M.size() == 3);
    auto bits = [&](const std::vector<RElem>& row) {
        std::vector<uint32_t> v;
        for (const auto& e : row) v.push_back(e.d[0] + 2 * e.d[1]);
        return v;
    };
    CHECK(bits(M[0]) == std::vector<uint32_t>{1, 0, 1, 1, 1, 0, 0});
    CHECK(bits(M[1]) == std::vector<uint32_t>{0, 1, 0, 1, 1, 1, 0});
    CHECK(bits(M[2]) == std::vector<uint32_t>{0, 0, 1, 0, 1, 1, 1});

    auto ech = cyclic_echelon(C);
    CHECK(code_cardinality(ech).to_u64() == 64);  // 4^3
    auto wp = min_hamming_exact(ech, 1 << 20);
    CHECK(wp.min_hamming == 4);
    auto ws = socle_min_hamming(ech, 1 << 20);
    CHECK(ws.min_hamming == 4);
}

TEST_CASE("cyclic_from_family shapes and sizes") {
    auto R = f2u2();
    // F_0 = x^3+x+1, F_1 = (x+1)(x^3+x^2+1), F_2 = 1: free, Fhat_1 = x^3+x+1
    Poly F0 = bpoly(*R, {1, 1, 0, 1});
    Poly F1 = poly::mul(bpoly(*R, {1, 1}), bpoly(*R, {1, 0, 1, 1}));
    auto C = cyclic_from_family(R, 7, {F0, F1, poly::one(*R)});
    auto fr = is_free_rank(C);
    CHECK(fr.first);
    CHECK(fr.second == 4);
    CHECK(C.generators[0] == F0);  // Fhat_1 = F_0 here
    CHECK(poly::is_zero(C.generators[1]));

    // full space: F_1 = x^n-1
    auto Full = cyclic_from_family(
        R, 7, {poly::one(*R), poly::xn_minus_one(*R, 7), poly::one(*R)});
    CHECK(is_free_rank(Full) == std::make_pair(true, 7u));
    CHECK(poly::is_one(Full.generators[0]));

    // zero code: F_0 = x^n-1
    auto Zero = cyclic_from_family(
        R, 7, {poly::xn_minus_one(*R, 7), poly::one(*R), poly::one(*R)});
    CHECK(code_cardinality(cyclic_echelon(Zero)).to_u64() == 1);

    // non-free: F_2 = x+1 (gamma-level torsion)
    Poly F2 = bpoly(*R, {1, 1});
    Poly F1b = poly::mul(bpoly(*R, {1, 1, 0, 1}), bpoly(*R, {1, 0, 1, 1}));
    auto NF = cyclic_from_family(R, 7, {poly::one(*R), F1b, F2});
    CHECK(!is_free_rank(NF).first);
    // |C| = q^(sum (s-i+1) deg F_i) = 2^(2*6 + 1*1)
    CHECK(cyclic_logq_size(NF) == 13);
    CHECK(code_cardinality(cyclic_echelon(NF)).to_u64() == (1ull << 13));

    CHECK_THROWS_AS(
        (void)cyclic_from_family(R, 7, {F0, F0, poly::one(*R)}), Error);  // product mismatch
}

TEST_CASE("exhaustive |C| equals the family formula on small lengths") {
    for (auto R : {f2u2(), z4()}) {
        auto fac = factor_xn_minus_1(R, 3);
        // enumerate all families over the 2 factors (3 = (x-1)(x^2+x+1))
        size_t rfac = fac.factors.size();
        uint32_t s = R->s();
        std::vector<uint32_t> assign(rfac, 0);
        for (;;) {
            std::vector<Poly> family(s + 1, poly::one(*R));
            for (size_t i = 0; i < rfac; ++i)
                family[assign[i]] = poly::mul(family[assign[i]], fac.factors[i].f);
            auto C = cyclic_from_family(R, 3, family);
            auto ech = cyclic_echelon(C);
            uint64_t want = 1;
            for (uint64_t k = 0; k < cyclic_logq_size(C); ++k) want *= R->q();
            CHECK(code_cardinality(ech).to_u64() == want);
            size_t i = 0;
            while (i < rfac && ++assign[i] == s + 1) assign[i++] = 0;
            if (i == rfac) break;
        }
    }
}

TEST_CASE("dual of free cyclic codes") {
    auto R = f2u2();
    // dual(<x-1>) is the repetition-type code generated by the all-ones
    Poly g = bpoly(*R, {1, 1});
    auto C = cyclic_free(R, 7, g);
    auto D = dual_free_cyclic(C);
    auto fr = is_free_rank(D);
    CHECK(fr.first);
    CHECK(fr.second == 1);
    // orthogonality of generator matrices
    auto MC = generator_matrix_free(C);
    auto MD = generator_matrix_free(D);
    for (const auto& a : MC)
        for (const auto& b : MD) {
            RElem dot = R->zero();
            for (uint32_t i = 0; i < 7; ++i) dot = R->add(dot, R->mul(a[i], b[i]));
            CHECK(R->is_zero(dot));
        }
    // involution on Example 2.6's code
    auto C26 = cyclic_free(R, 7, bpoly(*R, {1, 0, 1, 1, 1}));
    auto DD = dual_free_cyclic(dual_free_cyclic(C26));
    CHECK(DD.family[0] == C26.family[0]);
    CHECK(DD.family[1] == C26.family[1]);
    // dual of full space is zero and vice versa
    auto Full = cyclic_free(R, 7, poly::one(*R));
    auto Z = dual_free_cyclic(Full);
    CHECK(is_free_rank(Z).second == 0);
    auto F2 = dual_free_cyclic(Z);
    CHECK(is_free_rank(F2).second == 7);
}

TEST_CASE("BCH bound: Example 5.3's F_0 with a 12-run of roots") {
    auto R = f5u2();
    auto mk = [&](std::initializer_list<int> cs) {
        std::vector<RElem> v;
        for (int c : cs) v.push_back(R->from_int(c));
        return poly::make(*R, std::move(v));
    };
    Poly F0 = mk({2, 2, 0, 0, 2, 1, 0, 3, 3, 3, 2, 3, 4, 4, 2, 0, 1});
    auto C = cyclic_free(R, 24, F0);
    CHECK(bch_bound_best(C) == 13);
    // g = 1: no roots, delta = 1
    auto Full = cyclic_free(R, 24, poly::one(*R));
    CHECK(bch_bound_best(Full) == 1);
}

TEST_CASE("DFT round trip") {
    std::mt19937_64 rng(777);
    for (auto R : {f2u2(), z4(), f5u2()}) {
        uint32_t n = R->p() == 5 ? 24 : 7;
        auto [E, xi] = root_context(R, n);
        // c = 1 -> A = all ones
        auto A1 = ms_transform(poly::one(*R), E, xi, n);
        for (const auto& v : A1.values) CHECK(v == E->one());
        // c = x -> A_i = xi^i
        auto Ax = ms_transform(poly::xpow(*R, 1), E, xi, n);
        for (uint32_t i = 0; i < n; ++i) CHECK(Ax.values[i] == E->pow_u(xi, i));
        for (int t = 0; t < 200; ++t) {
            std::vector<RElem> cs;
            for (uint32_t i = 0; i < n; ++i) {
                std::vector<uint32_t> d(R->s());
                for (auto& x : d) x = static_cast<uint32_t>(rng() % R->q());
                cs.push_back(R->from_digits(d));
            }
            Poly c = poly::make(*R, std::move(cs));
            auto A = ms_transform(c, E, xi, n);
            CHECK(ms_inverse(A) == c);
        }
    }
}

TEST_CASE("trace codewords lie in the Prop 2.7 code") {
    auto R = f2u2();
    uint32_t n = 7;
    auto [E, xi] = root_context(R, n);
    // exponents 0 and 1 (distinct cosets); m(x) = M_0 M_1
    Poly m = poly::mul(bpoly(*R, {1, 1}), bpoly(*R, {1, 1, 0, 1}));
    std::mt19937_64 rng(99);
    for (int t = 0; t < 50; ++t) {
        std::vector<ExtElem> as;
        for (int j = 0; j < 2; ++j) {
            std::vector<uint32_t> ds(R->s());
            for (auto& x : ds) x = static_cast<uint32_t>(rng() % E->rq());
            as.push_back(E->from_digits(ds));
        }
        auto cw = trace_codeword(*E, xi, n, as, {0, 1});
        // c(x) * m(x) = 0 in R_n <=> c lies in the code whose dual-ish check
        // polynomial is m: every codeword is annihilated by prod M_j's
        // complement structure; direct check: c(xi^e) = 0 for e in {0,1,2,4}
        Poly c = poly::make(*R, cw);
        for (uint32_t e : {0u, 1u, 2u, 4u}) {
            ExtElem val = E->eval_poly(c, E->pow_u(xi, n - e == 7 ? 0 : n - e));
            // roots of the dual description: c_v = sum Tr(a_j xi^(v i_j))
            // vanishes against exponents outside the defining set; the
            // membership oracle below is the reliable check
            (void)val;
        }
        // membership oracle: c * m reciprocal-orthogonality via parity rows
        auto Cm = cyclic_free(R, n, m);
        auto MD = generator_matrix_free(Cm);
        for (const auto& row : MD) {
            RElem dot = R->zero();
            for (uint32_t i = 0; i < n; ++i) dot = R->add(dot, R->mul(cw[i], row[i]));
            CHECK(R->is_zero(dot));
        }
    }
    // all zero coefficients -> zero word
    auto zw = trace_codeword(*E, xi, n, {E->zero(), E->zero()}, {0, 1});
    for (const auto& e : zw) CHECK(R->is_zero(e));
    // k=1, a=1, i=0 -> constant word (m * 1)
    auto ones = trace_codeword(*E, xi, n, {E->one()}, {0});
    RElem three = R->from_int(3);
    for (const auto& e : ones) CHECK(e == three);
    // coset collision detected
    CHECK_THROWS_AS((void)trace_codeword(*E, xi, n, {E->one(), E->one()}, {1, 2}), Error);
}

TEST_CASE("Thm 2.8 criterion: orbit version is exact, pointwise version sound") {
    auto R = f2u2();
    uint32_t n = 7;
    auto [E, xi] = root_context(R, n);  // degree-3 extension, |E| = 64
    // exhaustive: for every nonzero a and every exponent class i
    std::vector<uint32_t> idx(E->deg() * R->s(), 0);
    uint64_t total = E->size();
    uint64_t kernel_count = 0;
    for (uint64_t c = 0; c < total; ++c) {
        std::vector<RElem> coords;
        for (uint32_t i = 0; i < E->deg(); ++i) {
            std::vector<uint32_t> d(idx.begin() + i * R->s(), idx.begin() + (i + 1) * R->s());
            coords.push_back(R->from_digits(d));
        }
        ExtElem a = E->from_coords(std::move(coords));
        if (!E->is_zero(a)) {
            for (uint32_t ij : {0u, 1u, 3u}) {
                bool crit = zero_coord_criterion(*E, a, 1, ij, n);
                bool orbit = trace_orbit_vanishes(*E, xi, a, ij, n);
                CHECK(crit == orbit);  // identically-zero reading is exact
                if (crit) {
                    // soundness pointwise: every coordinate vanishes
                    for (uint32_t v = 0; v < n; ++v) {
                        ExtElem t = E->mul(a, E->pow_u(xi, static_cast<uint64_t>(v) * ij % n));
                        CHECK(R->is_zero(E->trace_to_base(t)));
                    }
                }
                if (ij == 0 && crit) ++kernel_count;
            }
        }
        size_t i = idx.size();
        while (i-- > 0) {
            if (++idx[i] < R->q()) break;
            idx[i] = 0;
        }
    }
    // kernel count for tau=1: q^((m-tau)s) = 2^4 = 16, minus... criterion
    // requires a != 0 and counts ker(Tr) \ {0}; the paper counts all of ker
    CHECK(kernel_count == 15);
}

TEST_CASE("socle equals exhaustive on assorted cyclic codes") {
    for (auto R : {f2u2(), z4()}) {
        auto fac = factor_xn_minus_1(R, 7);
        // several families
        std::vector<std::vector<uint32_t>> assigns = {
            {1, 1, 1}, {0, 1, 1}, {1, 2, 1}, {0, 1, 2}, {2, 2, 1}, {1, 0, 2}};
        for (const auto& as : assigns) {
            std::vector<Poly> family(R->s() + 1, poly::one(*R));
            for (size_t i = 0; i < as.size(); ++i)
                family[as[i]] = poly::mul(family[as[i]], fac.factors[i].f);
            auto C = cyclic_from_family(R, 7, family);
            auto ech = cyclic_echelon(C);
            if (ech.rows.empty()) continue;
            auto we = min_hamming_exact(ech, 1 << 22);
            auto ws = socle_min_hamming(ech, 1 << 22);
            CHECK(we.min_hamming == ws.min_hamming);
            // BCH bound sound for free codes
            auto fr = is_free_rank(C);
            if (fr.first && fr.second > 0) CHECK(*we.min_hamming >= bch_bound_best(C));
        }
    }
}
