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

#include "qcring/extension.hpp"

#include <algorithm>

#include "qcring/gfpoly.hpp"
#include "qcring/polyring.hpp"

namespace qcring {

bool ExtElem::operator==(const ExtElem& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i].d != o.c[i].d) return false;
    return true;
}

bool ExtPoly::operator==(const ExtPoly& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
        if (!(c[i] == o.c[i])) return false;
    return true;
}

ExtensionPtr Extension::make(RingPtr base, Poly modulus) {
    require(base != nullptr && modulus.ring && modulus.ring->same_as(*base), Err::RingMismatch,
            "modulus must live over the base ring");
    require(poly::is_monic(modulus) && poly::degree(modulus) >= 1, Err::NotBasicIrreducible,
            "modulus must be monic of degree >= 1");
    GfVec fbar = poly::residue(modulus);
    require(static_cast<int>(fbar.size()) - 1 == poly::degree(modulus), Err::NotBasicIrreducible,
            "modulus residue degree drop");
    require(poly::degree(modulus) == 1 || gfp::irreducible(*base->fq(), fbar),
            Err::NotBasicIrreducible, "modulus residue is reducible over F_q");
    auto E = std::shared_ptr<Extension>(new Extension());
    E->base_ = base;
    E->d_ = static_cast<uint32_t>(poly::degree(modulus));
    E->mod_ = std::move(modulus);
    E->rf_ = E->d_ == 1 ? base->fq() : Gf::extension(base->fq(), fbar);
    E->build_teich();
    E->trunc_.resize(base->s() + 1);
    for (uint32_t j = 1; j < base->s(); ++j)
        E->trunc_[j] = Extension::make(base->truncated(j), poly::project(E->mod_, j));
    E->trunc_[base->s()] = E;
    return E;
}

ExtensionPtr Extension::canonical(RingPtr base, uint32_t d) {
    GfVec prim = gfp::smallest_primitive(*base->fq(), d);
    uint64_t order = 1;
    for (uint32_t i = 0; i < d; ++i) order *= base->q();
    Poly target = poly::xn_minus_one(*base, static_cast<uint32_t>(order - 1));
    return make(base, hensel_lift_factor(*base, prim, target));
}

void Extension::build_teich() {
    // zeta = (lift of the residue-field generator)^((q^d)^(s-1)); raising to
    // (q^d)^(s-1) kills the 1+<gamma> component and fixes the residue.
    uint64_t Q = rf_->q();
    std::vector<uint32_t> gcoords =
        d_ == 1 ? std::vector<uint32_t>{rf_->gen()} : rf_->unpack(rf_->gen());
    std::vector<RElem> coords;
    coords.reserve(d_);
    for (uint32_t i = 0; i < d_; ++i) coords.push_back(base_->from_residue(gcoords[i]));
    ExtElem z{this, std::move(coords)};
    uint64_t e = 1;
    for (uint32_t i = 0; i + 1 < base_->s(); ++i) e *= Q;
    z = pow_u(z, e);
    zeta_pows_.clear();
    zeta_pows_.reserve(Q - 1);
    ExtElem cur = one();
    for (uint64_t k = 0; k + 1 < Q; ++k) {
        zeta_pows_.push_back(cur);
        cur = mul(cur, z);
    }
    require(cur == one(), Err::Internal, "Teichmueller generator order mismatch");
}

uint64_t Extension::size() const {
    uint64_t out = 1;
    for (uint32_t i = 0; i < base_->s(); ++i) out *= rf_->q();
    return out;
}

ExtElem Extension::zero() const { return {this, std::vector<RElem>(d_, base_->zero())}; }

ExtElem Extension::one() const {
    ExtElem e = zero();
    e.c[0] = base_->one();
    return e;
}

ExtElem Extension::xi() const {
    if (d_ == 1) {
        ExtElem e = zero();
        e.c[0] = base_->neg(mod_.c[0]);  // class of x for a linear modulus
        return e;
    }
    ExtElem e = zero();
    e.c[1] = base_->one();
    return e;
}

ExtElem Extension::zeta() const { return rf_->q() == 2 ? one() : zeta_pows_[1]; }

ExtElem Extension::from_coords(std::vector<RElem> coords) const {
    require(coords.size() == d_, Err::DegreeMismatch, "coordinate vector length mismatch");
    for (auto& e : coords) base_->check_mine(e);
    return {this, std::move(coords)};
}

ExtElem Extension::embed(const RElem& r) const {
    base_->check_mine(r);
    ExtElem e = zero();
    e.c[0] = r;
    return e;
}

bool Extension::is_in_base(const ExtElem& a) const {
    for (uint32_t i = 1; i < d_; ++i)
        if (!base_->is_zero(a.c[i])) return false;
    return true;
}

RElem Extension::project_to_base(const ExtElem& a) const {
    require(is_in_base(a), Err::NotASubextension, "element does not lie in the base ring");
    return a.c[0];
}

ExtElem Extension::teich(uint32_t rf_code) const {
    if (rf_code == 0) return zero();
    return zeta_pows_[rf_->dlog(rf_code)];
}

ExtElem Extension::add(const ExtElem& a, const ExtElem& b) const {
    check_mine(a);
    check_mine(b);
    ExtElem out = zero();
    for (uint32_t i = 0; i < d_; ++i) out.c[i] = base_->add(a.c[i], b.c[i]);
    return out;
}

ExtElem Extension::sub(const ExtElem& a, const ExtElem& b) const { return add(a, neg(b)); }

ExtElem Extension::neg(const ExtElem& a) const {
    check_mine(a);
    ExtElem out = zero();
    for (uint32_t i = 0; i < d_; ++i) out.c[i] = base_->neg(a.c[i]);
    return out;
}

ExtElem Extension::mul(const ExtElem& a, const ExtElem& b) const {
    check_mine(a);
    check_mine(b);
    const Ring& R = *base_;
    std::vector<RElem> prod(2 * d_ - 1, R.zero());
    for (uint32_t i = 0; i < d_; ++i) {
        if (R.is_zero(a.c[i])) continue;
        for (uint32_t j = 0; j < d_; ++j) {
            if (R.is_zero(b.c[j])) continue;
            prod[i + j] = R.add(prod[i + j], R.mul(a.c[i], b.c[j]));
        }
    }
    for (int k = static_cast<int>(prod.size()) - 1; k >= static_cast<int>(d_); --k) {
        RElem c = prod[k];
        if (R.is_zero(c)) continue;
        prod[k] = R.zero();
        for (uint32_t j = 0; j < d_; ++j)
            prod[k - d_ + j] = R.sub(prod[k - d_ + j], R.mul(c, mod_.c[j]));
    }
    prod.resize(d_, R.zero());
    return {this, std::move(prod)};
}

ExtElem Extension::inv(const ExtElem& a) const {
    require(is_unit(a), Err::NotAUnit, "extension element is not a unit");
    uint32_t rc = rf_->inv(residue_code(a));
    std::vector<uint32_t> cc = d_ == 1 ? std::vector<uint32_t>{rc} : rf_->unpack(rc);
    std::vector<RElem> coords;
    coords.reserve(d_);
    for (uint32_t i = 0; i < d_; ++i) coords.push_back(base_->from_residue(cc[i]));
    ExtElem b{this, std::move(coords)};
    ExtElem two = add(one(), one());
    for (uint32_t k = 0; (1u << k) < base_->s(); ++k) b = mul(b, sub(two, mul(a, b)));
    require(mul(a, b) == one(), Err::Internal, "inverse iteration failed");
    return b;
}

ExtElem Extension::pow_u(const ExtElem& a, uint64_t e) const {
    ExtElem out = one(), base = a;
    while (e) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

ExtElem Extension::pow_i(const ExtElem& a, int64_t e) const {
    if (e >= 0) return pow_u(a, static_cast<uint64_t>(e));
    return pow_u(inv(a), static_cast<uint64_t>(-e));
}

bool Extension::is_zero(const ExtElem& a) const {
    for (const auto& c : a.c)
        if (!base_->is_zero(c)) return false;
    return true;
}

uint32_t Extension::val(const ExtElem& a) const {
    uint32_t v = base_->s();
    for (const auto& c : a.c) v = std::min(v, base_->val(c));
    return v;
}

ExtElem Extension::shift_up(const ExtElem& a, uint32_t k) const {
    ExtElem out = zero();
    for (uint32_t i = 0; i < d_; ++i) out.c[i] = base_->shift_up(a.c[i], k);
    return out;
}

ExtElem Extension::shift_down(const ExtElem& a, uint32_t k) const {
    ExtElem out = zero();
    for (uint32_t i = 0; i < d_; ++i) out.c[i] = base_->shift_down(a.c[i], k);
    return out;
}

uint64_t Extension::order_of(const ExtElem& a) const {
    require(is_unit(a), Err::NotAUnit, "order of a non-unit");
    uint64_t o1 = rf_->order(residue_code(a));
    ExtElem b = pow_u(a, o1);
    uint64_t o2 = 1;
    while (!(b == one())) {
        b = pow_u(b, base_->p());
        o2 *= base_->p();
        require(o2 <= size(), Err::Internal, "runaway order computation");
    }
    return o1 * o2;
}

uint32_t Extension::residue_code(const ExtElem& a) const {
    if (d_ == 1) return a.c[0].d[0];
    std::vector<uint32_t> digits(d_);
    for (uint32_t i = 0; i < d_; ++i) digits[i] = a.c[i].d[0];
    return rf_->pack(digits);
}

std::vector<uint32_t> Extension::digits(const ExtElem& a) const {
    check_mine(a);
    std::vector<uint32_t> out(base_->s());
    ExtElem cur = a;
    for (uint32_t i = 0; i < base_->s(); ++i) {
        uint32_t code = residue_code(cur);
        out[i] = code;
        cur = shift_down(sub(cur, teich(code)), 1);
    }
    return out;
}

ExtElem Extension::from_digits(const std::vector<uint32_t>& codes) const {
    require(codes.size() == base_->s(), Err::DegreeMismatch, "digit vector length mismatch");
    ExtElem acc = zero();
    for (uint32_t i = 0; i < base_->s(); ++i) acc = add(acc, shift_up(teich(codes[i]), i));
    return acc;
}

ExtElem Extension::frobenius(const ExtElem& a, uint32_t times) const {
    auto ds = digits(a);
    uint64_t Q1 = rf_->q() - 1;
    uint64_t qe = 1 % Q1;
    for (uint32_t t = 0; t < times % d_; ++t) qe = qe * (base_->q() % Q1) % Q1;
    for (auto& code : ds) {
        if (code == 0) continue;
        code = rf_->gen_pow(static_cast<uint64_t>(rf_->dlog(code)) * qe % Q1);
    }
    return from_digits(ds);
}

RElem Extension::trace_to_base(const ExtElem& a) const {
    ExtElem acc = zero(), cur = a;
    for (uint32_t k = 0; k < d_; ++k) {
        acc = add(acc, cur);
        if (k + 1 < d_) cur = frobenius(cur, 1);
    }
    return project_to_base(acc);
}

ExtElem Extension::trace_rel(const ExtElem& a, uint32_t tau) const {
    require(tau >= 1 && d_ % tau == 0, Err::NotASubextension,
            "tau must divide the extension degree");
    ExtElem acc = zero(), cur = a;
    for (uint32_t k = 0; k < d_ / tau; ++k) {
        acc = add(acc, cur);
        if (k + 1 < d_ / tau) cur = frobenius(cur, tau);
    }
    return acc;
}

ExtElem Extension::subring_image_of_xi(uint32_t tau) const {
    require(tau >= 1 && d_ % tau == 0, Err::NotASubextension,
            "tau must divide the extension degree");
    auto sub = Extension::canonical(base_, tau);
    uint64_t Q = rf_->q();
    uint64_t subq = sub->rq();
    uint64_t step = subq == 2 ? Q - 1 : (Q - 1) / (subq - 1);
    // the subring's xi is a Teichmueller generator of the subfield: match a
    // root of its modulus among the step-multiples
    for (uint64_t k = 0; k < subq - 1 || k == 0; ++k) {
        uint64_t e = k * step % (Q - 1);
        const ExtElem& cand = zeta_pows_[e];
        if (is_zero(eval_poly_raw(sub->modulus(), cand))) return cand;
    }
    fail(Err::NotASubextension, "no Teichmueller root of the subring modulus found");
}

ExtElem Extension::eval_poly_raw(const Poly& f, const ExtElem& x) const {
    // evaluation of a polynomial over the subring's base (which equals this
    // ring's base): identical to eval_poly but bypasses the ring check
    ExtElem acc = zero();
    for (size_t i = f.c.size(); i-- > 0;) {
        RElem ci = f.c[i];
        acc = add(mul(acc, x), embed(base_->from_digits(ci.d)));
    }
    return acc;
}

std::pair<ExtensionPtr, ExtElem> Extension::trace_to_subring(const ExtElem& a,
                                                             uint32_t tau) const {
    ExtElem t = trace_rel(a, tau);
    auto sub = Extension::canonical(base_, tau);
    if (tau == 1) return {sub, sub->embed(project_to_base(t))};
    ExtElem img = subring_image_of_xi(tau);
    uint64_t subq = sub->rq();
    auto ds = digits(t);
    std::vector<uint32_t> out;
    out.reserve(ds.size());
    for (uint32_t code : ds) {
        if (code == 0) {
            out.push_back(0);
            continue;
        }
        bool found = false;
        uint32_t probe = 1;  // residue code of img^k in this ring
        for (uint64_t k = 0; k + 1 < subq; ++k) {
            if (probe == code) {
                out.push_back(k == 0 ? 1u : sub->rf()->gen_pow(k));
                found = true;
                break;
            }
            probe = rf_->mul(probe, residue_code(img));
        }
        require(found, Err::Internal, "trace digit outside the subring");
    }
    return {sub, sub->from_digits(out)};
}

ExtElem Extension::find_unit_of_order(uint64_t order) const {
    require(order >= 1, Err::NoSuchOrder, "order must be positive");
    uint64_t Q = rf_->q();
    if ((Q - 1) % order == 0 || order == 1) {
        std::vector<const ExtElem*> teichs;
        teichs.reserve(zeta_pows_.size());
        for (const auto& t : zeta_pows_) teichs.push_back(&t);
        std::sort(teichs.begin(), teichs.end(),
                  [](const ExtElem* a, const ExtElem* b) { return coord_lex_less(*a, *b); });
        for (const ExtElem* t : teichs)
            if (rf_->order(residue_code(*t)) == order) return *t;
    }
    require(size() <= (1u << 22), Err::TooLargeToEnumerate,
            "extension too large for exhaustive order search");
    std::vector<uint32_t> idx(d_ * base_->s(), 0);
    uint64_t total = size();
    for (uint64_t count = 0; count < total; ++count) {
        std::vector<RElem> coords;
        coords.reserve(d_);
        for (uint32_t i = 0; i < d_; ++i) {
            std::vector<uint32_t> digs(idx.begin() + i * base_->s(),
                                       idx.begin() + (i + 1) * base_->s());
            coords.push_back(base_->from_digits(digs));
        }
        ExtElem cand{this, std::move(coords)};
        if (is_unit(cand) && order_of(cand) == order) return cand;
        size_t i = idx.size();
        while (i-- > 0) {
            if (++idx[i] < base_->q()) break;
            idx[i] = 0;
        }
    }
    fail(Err::NoSuchOrder, "no element of the requested order");
}

ExtElem Extension::nth_root_of_unity(uint32_t n) const {
    uint64_t Q = rf_->q();
    require(n >= 1 && (Q - 1) % n == 0, Err::NotARootOfUnity,
            "n must divide q^d - 1 for an n-th root of unity");
    if (n == 1) return one();
    return zeta_pows_[(Q - 1) / n];
}

ExtElem Extension::eval_poly(const Poly& f, const ExtElem& x) const {
    require(f.ring && f.ring->same_as(*base_), Err::RingMismatch,
            "polynomial over a different base ring");
    ExtElem acc = zero();
    for (size_t i = f.c.size(); i-- > 0;) acc = add(mul(acc, x), embed(f.c[i]));
    return acc;
}

ExtensionPtr Extension::trunc_ext(uint32_t j) const {
    require(j >= 1 && j <= base_->s(), Err::IndexOutOfRange, "truncation index out of range");
    return trunc_[j];
}

ExtElem Extension::mu(const ExtElem& a, uint32_t j) const {
    check_mine(a);
    const Extension* T = trunc_[j].get();
    std::vector<RElem> coords;
    coords.reserve(d_);
    for (const auto& c : a.c) coords.push_back(base_->project(c, j));
    return {T, std::move(coords)};
}

ExtElem Extension::lift_from(const ExtElem& a) const {
    require(a.ext != nullptr && a.ext->d_ == d_, Err::RingMismatch, "lift degree mismatch");
    std::vector<RElem> coords;
    coords.reserve(d_);
    for (const auto& c : a.c) coords.push_back(base_->lift_from(c));
    return {this, std::move(coords)};
}

bool Extension::same_as(const Extension& o) const {
    return d_ == o.d_ && base_->same_as(*o.base_) && mod_ == o.mod_;
}

bool Extension::coord_lex_less(const ExtElem& a, const ExtElem& b) {
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].d != b.c[i].d) return a.c[i].d < b.c[i].d;
    }
    return false;
}

void Extension::check_mine(const ExtElem& a) const {
    require(a.ext != nullptr && same_as(*a.ext), Err::RingMismatch,
            "element belongs to a different extension");
}

namespace extpoly {

static std::vector<ExtElem> trim(const Extension& E, std::vector<ExtElem> v) {
    while (!v.empty() && E.is_zero(v.back())) v.pop_back();
    return v;
}

ExtPoly make(const Extension& E, std::vector<ExtElem> coeffs) {
    for (auto& e : coeffs) E.check_mine(e);
    return {&E, trim(E, std::move(coeffs))};
}

ExtPoly zero(const Extension& E) { return {&E, {}}; }
ExtPoly one(const Extension& E) { return {&E, {E.one()}}; }

int degree(const ExtPoly& f) { return static_cast<int>(f.c.size()) - 1; }
bool is_zero(const ExtPoly& f) { return f.c.empty(); }

ExtElem coeff(const ExtPoly& f, uint32_t i) { return i < f.c.size() ? f.c[i] : f.ext->zero(); }

ExtPoly add(const ExtPoly& a, const ExtPoly& b) {
    const Extension& E = *a.ext;
    std::vector<ExtElem> out(std::max(a.c.size(), b.c.size()), E.zero());
    for (size_t i = 0; i < out.size(); ++i) {
        ExtElem x = i < a.c.size() ? a.c[i] : E.zero();
        ExtElem y = i < b.c.size() ? b.c[i] : E.zero();
        out[i] = E.add(x, y);
    }
    return {&E, trim(E, std::move(out))};
}

ExtPoly sub(const ExtPoly& a, const ExtPoly& b) {
    const Extension& E = *a.ext;
    std::vector<ExtElem> nb(b.c);
    for (auto& e : nb) e = E.neg(e);
    return add(a, ExtPoly{&E, std::move(nb)});
}

ExtPoly mul(const ExtPoly& a, const ExtPoly& b) {
    const Extension& E = *a.ext;
    if (a.c.empty() || b.c.empty()) return zero(E);
    std::vector<ExtElem> out(a.c.size() + b.c.size() - 1, E.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (E.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (E.is_zero(b.c[j])) continue;
            out[i + j] = E.add(out[i + j], E.mul(a.c[i], b.c[j]));
        }
    }
    return {&E, trim(E, std::move(out))};
}

ExtPoly mul_mod_xn(const ExtPoly& a, const ExtPoly& b, uint32_t n) {
    const Extension& E = *a.ext;
    ExtPoly prod = mul(a, b);
    std::vector<ExtElem> out(std::min<size_t>(prod.c.size(), n), E.zero());
    for (size_t i = 0; i < prod.c.size(); ++i) {
        size_t k = i % n;
        out[k] = E.add(out[k], prod.c[i]);
    }
    return {&E, trim(E, std::move(out))};
}

ExtPoly scale(const ExtPoly& a, const ExtElem& c) {
    const Extension& E = *a.ext;
    std::vector<ExtElem> out(a.c);
    for (auto& e : out) e = E.mul(e, c);
    return {&E, trim(E, std::move(out))};
}

ExtPoly shift_gamma(const ExtPoly& a, uint32_t k) {
    const Extension& E = *a.ext;
    std::vector<ExtElem> out(a.c);
    for (auto& e : out) e = E.shift_up(e, k);
    return {&E, trim(E, std::move(out))};
}

ExtPoly embed(const Extension& E, const Poly& f) {
    std::vector<ExtElem> out;
    out.reserve(f.c.size());
    for (const auto& e : f.c) out.push_back(E.embed(e));
    return {&E, trim(E, std::move(out))};
}

GfVec residue(const ExtPoly& f) {
    GfVec out(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) out[i] = f.ext->residue_code(f.c[i]);
    return gfp::trim(std::move(out));
}

ExtPoly project(const ExtPoly& f, uint32_t j) {
    const Extension& E = *f.ext;
    const Extension& T = *E.trunc_ext(j);
    std::vector<ExtElem> out;
    out.reserve(f.c.size());
    for (const auto& e : f.c) out.push_back(E.mu(e, j));
    return {&T, trim(T, std::move(out))};
}

ExtPoly lift_from(const Extension& E, const ExtPoly& f) {
    std::vector<ExtElem> out;
    out.reserve(f.c.size());
    for (const auto& e : f.c) out.push_back(E.lift_from(e));
    return {&E, trim(E, std::move(out))};
}

ExtElem eval(const ExtPoly& f, const ExtElem& x) {
    const Extension& E = *f.ext;
    ExtElem acc = E.zero();
    for (size_t i = f.c.size(); i-- > 0;) acc = E.add(E.mul(acc, x), f.c[i]);
    return acc;
}

ExtPoly pack(const Extension& E, const std::vector<Poly>& tuple) {
    require(tuple.size() == E.deg(), Err::DegreeMismatch,
            "tuple length must equal the extension degree");
    size_t n = 0;
    for (const auto& p : tuple) n = std::max(n, p.c.size());
    std::vector<ExtElem> out(n, E.zero());
    for (size_t j = 0; j < n; ++j) {
        std::vector<RElem> coords;
        coords.reserve(E.deg());
        for (uint32_t i = 0; i < E.deg(); ++i) coords.push_back(poly::coeff(tuple[i], j));
        out[j] = E.from_coords(std::move(coords));
    }
    return {&E, trim(E, std::move(out))};
}

std::vector<Poly> unpack(const ExtPoly& A, uint32_t ell) {
    const Extension& E = *A.ext;
    require(ell == E.deg(), Err::DegreeMismatch, "unpack arity must equal the extension degree");
    const Ring& R = *E.base();
    std::vector<std::vector<RElem>> comps(ell);
    for (uint32_t i = 0; i < ell; ++i) comps[i].assign(A.c.size(), R.zero());
    for (size_t j = 0; j < A.c.size(); ++j)
        for (uint32_t i = 0; i < ell; ++i) comps[i][j] = A.c[j].c[i];
    std::vector<Poly> out;
    out.reserve(ell);
    for (uint32_t i = 0; i < ell; ++i) out.push_back(poly::make(R, std::move(comps[i])));
    return out;
}

}  // namespace extpoly
}  // namespace qcring
