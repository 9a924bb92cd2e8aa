/*
   Copyright 2026 the qcring authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qcring/distance.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace qcring {

static std::pair<uint64_t, uint64_t> normalize_qpow(uint64_t q, uint64_t e) {
    if (q <= 1) return {q, e};
    for (uint64_t b = 2; b * b <= q; ++b) {
        if (q % b) continue;
        uint64_t j = 0, t = q;
        while (t > 1 && t % b == 0) {
            t /= b;
            ++j;
        }
        if (t == 1) return {b, e * j};
        break;
    }
    return {q, e};
}

bool QPow::fits_u64() const {
    uint64_t acc = 1;
    for (uint64_t i = 0; i < e; ++i) {
        if (acc > UINT64_MAX / q) return false;
        acc *= q;
    }
    return true;
}

uint64_t QPow::to_u64() const {
    require(fits_u64(), Err::BudgetExceeded, "cardinality exceeds 64 bits");
    uint64_t acc = 1;
    for (uint64_t i = 0; i < e; ++i) acc *= q;
    return acc;
}

std::string QPow::str() const {
    if (fits_u64()) return std::to_string(to_u64());
    auto [b, je] = normalize_qpow(q, e);
    return std::to_string(b) + "^" + std::to_string(je);
}

Echelon echelon_form(const RingPtr& R, uint32_t ncols, std::vector<std::vector<RElem>> rows) {
    for (const auto& r : rows)
        require(r.size() == ncols, Err::DimensionMismatch, "row length mismatch");
    const Ring& Rg = *R;
    uint32_t s = Rg.s();
    auto content = [&](const std::vector<RElem>& r) {
        uint32_t v = s;
        for (const auto& e : r) v = std::min(v, Rg.val(e));
        return v;
    };
    Echelon out;
    out.ring = R;
    out.ncols = ncols;
    std::vector<std::vector<RElem>> work;
    for (auto& r : rows)
        if (content(r) < s) work.push_back(std::move(r));

    while (!work.empty()) {
        uint32_t tstar = s;
        for (const auto& r : work) tstar = std::min(tstar, content(r));
        if (tstar >= s) break;
        // first column (left to right) holding an entry of valuation tstar
        uint32_t pcol = ncols;
        size_t prow = work.size();
        for (uint32_t c = 0; c < ncols && pcol == ncols; ++c)
            for (size_t r = 0; r < work.size(); ++r)
                if (Rg.val(work[r][c]) == tstar) {
                    pcol = c;
                    prow = r;
                    break;
                }
        require(pcol < ncols, Err::Internal, "echelon pivot not found");
        std::vector<RElem> piv = std::move(work[prow]);
        work.erase(work.begin() + static_cast<long>(prow));
        RElem unit = Rg.shift_down(piv[pcol], tstar);
        RElem uinv = Rg.inv(unit);
        for (auto& e : piv) e = Rg.mul(e, uinv);  // pivot entry becomes gamma^tstar
        for (auto& r : work) {
            RElem b = Rg.shift_down(r[pcol], tstar);
            if (Rg.is_zero(b)) continue;
            for (uint32_t c = 0; c < ncols; ++c) r[c] = Rg.sub(r[c], Rg.mul(b, piv[c]));
        }
        // drop rows that became zero
        std::vector<std::vector<RElem>> keep;
        for (auto& r : work)
            if (content(r) < s) keep.push_back(std::move(r));
        work = std::move(keep);
        out.torsion.push_back(tstar);
        out.pivots.push_back(pcol);
        out.rows.push_back(std::move(piv));
    }
    return out;
}

QPow code_cardinality(const Echelon& e) {
    QPow out;
    out.q = e.ring->q();
    out.e = 0;
    for (uint32_t t : e.torsion) out.e += e.ring->s() - t;
    return out;
}

bool echelon_contains(const Echelon& e, std::vector<RElem> word) {
    const Ring& R = *e.ring;
    require(word.size() == e.ncols, Err::DimensionMismatch, "word length mismatch");
    for (size_t i = 0; i < e.rows.size(); ++i) {
        const RElem& w = word[e.pivots[i]];
        if (R.val(w) < e.torsion[i]) return false;
        RElem b = R.shift_down(w, e.torsion[i]);
        for (uint32_t c = 0; c < e.ncols; ++c) word[c] = R.sub(word[c], R.mul(b, e.rows[i][c]));
    }
    for (const auto& w : word)
        if (!R.is_zero(w)) return false;
    return true;
}

// transversal of R / gamma^(s-t): digit vectors supported on positions < s-t
static std::vector<RElem> transversal(const Ring& R, uint32_t t) {
    uint32_t free_digits = R.s() - t;
    uint64_t count = 1;
    for (uint32_t i = 0; i < free_digits; ++i) count *= R.q();
    std::vector<RElem> out;
    out.reserve(count);
    std::vector<uint32_t> d(R.s(), 0);
    for (uint64_t k = 0; k < count; ++k) {
        out.push_back(R.from_digits(d));
        for (uint32_t i = 0; i < free_digits; ++i) {
            if (++d[i] < R.q()) break;
            d[i] = 0;
        }
    }
    return out;
}

namespace {

struct DfsCtx {
    const Echelon* e;
    const Ring* R;
    std::vector<std::vector<RElem>> trans;                 // per row
    std::vector<std::vector<std::vector<RElem>>> scaled;   // scaled[i][v] = trans[i][v] * row_i
};

DfsCtx make_ctx(const Echelon& e) {
    DfsCtx ctx;
    ctx.e = &e;
    ctx.R = e.ring.get();
    for (size_t i = 0; i < e.rows.size(); ++i) {
        ctx.trans.push_back(transversal(*ctx.R, e.torsion[i]));
        std::vector<std::vector<RElem>> sc;
        sc.reserve(ctx.trans.back().size());
        for (const auto& c : ctx.trans.back()) {
            std::vector<RElem> row(e.ncols, ctx.R->zero());
            if (!ctx.R->is_zero(c))
                for (uint32_t j = 0; j < e.ncols; ++j) row[j] = ctx.R->mul(c, e.rows[i][j]);
            sc.push_back(std::move(row));
        }
        ctx.scaled.push_back(std::move(sc));
    }
    return ctx;
}

void dfs_words(const DfsCtx& ctx, size_t depth, std::vector<RElem>& word, bool skip_zero,
               bool& all_zero_so_far, const std::function<void(const std::vector<RElem>&)>& fn) {
    if (depth == ctx.scaled.size()) {
        if (!(skip_zero && all_zero_so_far)) fn(word);
        return;
    }
    const Ring& R = *ctx.R;
    for (size_t v = 0; v < ctx.scaled[depth].size(); ++v) {
        bool saved = all_zero_so_far;
        std::vector<RElem> next = word;
        if (v != 0) {
            for (uint32_t c = 0; c < ctx.e->ncols; ++c)
                next[c] = R.add(next[c], ctx.scaled[depth][v][c]);
            all_zero_so_far = false;
        }
        dfs_words(ctx, depth + 1, next, skip_zero, all_zero_so_far, fn);
        all_zero_so_far = saved;
    }
}

}  // namespace

void enumerate_codewords(const Echelon& e, uint64_t budget,
                         const std::function<void(const std::vector<RElem>&)>& fn) {
    QPow card = code_cardinality(e);
    require(card.fits_u64() && card.to_u64() <= budget, Err::BudgetExceeded,
            "enumeration budget exceeded");
    DfsCtx ctx = make_ctx(e);
    std::vector<RElem> word(e.ncols, e.ring->zero());
    bool all_zero = true;
    dfs_words(ctx, 0, word, false, all_zero, fn);
}

uint32_t hamming_weight(const Ring& R, const std::vector<RElem>& word) {
    uint32_t w = 0;
    for (const auto& e : word)
        if (!R.is_zero(e)) ++w;
    return w;
}

WeightProfile min_hamming_exact(const Echelon& e, uint64_t budget, uint32_t threads) {
    QPow card = code_cardinality(e);
    require(card.fits_u64() && card.to_u64() <= budget, Err::BudgetExceeded,
            "enumeration budget exceeded");
    WeightProfile out;
    out.method = "exhaustive";
    if (e.rows.empty()) return out;
    const Ring& R = *e.ring;
    DfsCtx ctx = make_ctx(e);
    size_t top = ctx.scaled[0].size();
    uint32_t nthreads = std::max<uint32_t>(1, std::min<uint32_t>(threads, static_cast<uint32_t>(top)));
    std::vector<uint32_t> mins(nthreads, UINT32_MAX);
    std::vector<uint64_t> counts(nthreads, 0);
    auto worker = [&](uint32_t tid) {
        for (size_t v = tid; v < top; v += nthreads) {
            std::vector<RElem> word = ctx.scaled[0][v];
            bool all_zero = (v == 0);
            dfs_words(ctx, 1, word, true, all_zero, [&](const std::vector<RElem>& w) {
                ++counts[tid];
                uint32_t wt = hamming_weight(R, w);
                if (wt < mins[tid]) mins[tid] = wt;
            });
        }
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (uint32_t t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    uint32_t best = UINT32_MAX;
    for (uint32_t m : mins) best = std::min(best, m);
    for (uint64_t c : counts) out.codewords_examined += c;
    if (best != UINT32_MAX) out.min_hamming = best;
    return out;
}

WeightProfile socle_min_hamming(const Echelon& e, uint64_t budget, uint32_t threads) {
    const Ring& R = *e.ring;
    WeightProfile out;
    out.method = "socle";
    if (e.rows.empty()) return out;
    uint32_t k = static_cast<uint32_t>(e.rows.size());
    uint32_t q = R.q();
    uint64_t total = 1;
    for (uint32_t i = 0; i < k; ++i) {
        require(total <= budget, Err::BudgetExceeded, "socle budget exceeded");
        total *= q;
    }
    require(total <= budget, Err::BudgetExceeded, "socle budget exceeded");
    // socle basis: digit-(t_i) slice of row i placed in F_q
    std::vector<std::vector<uint32_t>> basis(k, std::vector<uint32_t>(e.ncols, 0));
    for (uint32_t i = 0; i < k; ++i)
        for (uint32_t c = 0; c < e.ncols; ++c) basis[i][c] = e.rows[i][c].d[e.torsion[i]];
    const Gf& F = *R.fq();

    uint32_t nthreads = std::max<uint32_t>(1, std::min<uint32_t>(threads, q));
    std::vector<uint32_t> mins(nthreads, UINT32_MAX);
    std::vector<uint64_t> counts(nthreads, 0);
    auto worker = [&](uint32_t tid) {
        std::vector<std::vector<uint32_t>> partial(k + 1, std::vector<uint32_t>(e.ncols, 0));
        std::vector<uint32_t> lambda(k, 0);
        // DFS over lambda_0..lambda_{k-1} in F_q, partial sums per depth
        std::function<void(uint32_t, bool)> rec = [&](uint32_t depth, bool nonzero) {
            if (depth == k) {
                if (!nonzero) return;
                ++counts[tid];
                uint32_t wt = 0;
                for (uint32_t c = 0; c < e.ncols; ++c)
                    if (partial[k][c]) ++wt;
                if (wt < mins[tid]) mins[tid] = wt;
                return;
            }
            for (uint32_t lam = 0; lam < q; ++lam) {
                if (depth == 0 && lam % nthreads != tid) continue;
                if (lam == 0) {
                    partial[depth + 1] = partial[depth];
                } else {
                    for (uint32_t c = 0; c < e.ncols; ++c)
                        partial[depth + 1][c] = F.add(partial[depth][c], F.mul(lam, basis[depth][c]));
                }
                rec(depth + 1, nonzero || lam != 0);
            }
        };
        rec(0, false);
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (uint32_t t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    uint32_t best = UINT32_MAX;
    for (uint32_t m : mins) best = std::min(best, m);
    for (uint64_t c : counts) out.codewords_examined += c;
    if (best != UINT32_MAX) out.min_hamming = best;
    return out;
}

static void check_f2u(const Ring& R) {
    require(R.family() == Family::EisensteinU && R.p() == 2 && R.m() == 1 && R.s() == 2,
            Err::UnsupportedRing, "Lee weight and the Gray map are defined over F_2+uF_2 only");
}

uint32_t lee_weight(const Ring& R, const std::vector<RElem>& word) {
    check_f2u(R);
    uint32_t w = 0;
    for (const auto& e : word) {
        uint32_t a = e.d[0], b = e.d[1];
        w += a ? 1 : (b ? 2 : 0);  // wt(1) = wt(1+u) = 1, wt(u) = 2
    }
    return w;
}

std::vector<uint8_t> gray_map(const Ring& R, const std::vector<RElem>& word) {
    check_f2u(R);
    std::vector<uint8_t> out;
    out.reserve(2 * word.size());
    for (const auto& e : word) {
        uint32_t a = e.d[0], b = e.d[1];
        out.push_back(static_cast<uint8_t>(b));
        out.push_back(static_cast<uint8_t>(a ^ b));
    }
    return out;
}

WeightProfile min_lee_f2u(const Echelon& e, uint64_t budget) {
    check_f2u(*e.ring);
    WeightProfile out;
    out.method = "exhaustive";
    uint32_t best = UINT32_MAX;
    uint64_t count = 0;
    const Ring& R = *e.ring;
    enumerate_codewords(e, budget, [&](const std::vector<RElem>& w) {
        if (hamming_weight(R, w) == 0) return;
        ++count;
        best = std::min(best, lee_weight(R, w));
    });
    out.codewords_examined = count;
    if (best != UINT32_MAX) out.min_lee = best;
    return out;
}

WeightProfile sampled_upper_bound(const Echelon& e, uint64_t trials, uint64_t seed) {
    WeightProfile out;
    out.method = "sampled";
    if (trials == 0 || e.rows.empty()) return out;
    const Ring& R = *e.ring;
    std::mt19937_64 rng(seed);
    uint32_t best = UINT32_MAX;
    for (uint64_t t = 0; t < trials; ++t) {
        std::vector<RElem> word(e.ncols, R.zero());
        bool nonzero = false;
        for (size_t i = 0; i < e.rows.size(); ++i) {
            std::vector<uint32_t> d(R.s(), 0);
            for (uint32_t k = 0; k + e.torsion[i] < R.s(); ++k)
                d[k] = static_cast<uint32_t>(rng() % R.q());
            RElem c = R.from_digits(d);
            if (R.is_zero(c)) continue;
            nonzero = true;
            for (uint32_t j = 0; j < e.ncols; ++j)
                word[j] = R.add(word[j], R.mul(c, e.rows[i][j]));
        }
        if (!nonzero) continue;
        uint32_t wt = hamming_weight(R, word);
        if (wt != 0) best = std::min(best, wt);
        ++out.codewords_examined;
    }
    if (best != UINT32_MAX) out.min_hamming = best;
    return out;
}

}  // namespace qcring
