#include <mpfr.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <vector>

#include "g2end/moduli.hpp"

namespace g2end::satake {

namespace {

constexpr mpfr_prec_t kPrec = 256;

struct Real {
    mpfr_t v;
    Real() { mpfr_init2(v, kPrec); mpfr_set_zero(v, 1); }
    Real(const Real& o) { mpfr_init2(v, kPrec); mpfr_set(v, o.v, MPFR_RNDN); }
    explicit Real(double d) { mpfr_init2(v, kPrec); mpfr_set_d(v, d, MPFR_RNDN); }
    explicit Real(const Rat& q) {
        mpfr_init2(v, kPrec);
        mpfr_set_q(v, q.get_mpq_t(), MPFR_RNDN);
    }
    Real& operator=(const Real& o) {
        if (this != &o) mpfr_set(v, o.v, MPFR_RNDN);
        return *this;
    }
    ~Real() { mpfr_clear(v); }
    double d() const { return mpfr_get_d(v, MPFR_RNDN); }
};

struct Cplx {
    Real re, im;
    Cplx() = default;
    Cplx(double r, double i) : re(r), im(i) {}
};

Cplx add(const Cplx& a, const Cplx& b) {
    Cplx r;
    mpfr_add(r.re.v, a.re.v, b.re.v, MPFR_RNDN);
    mpfr_add(r.im.v, a.im.v, b.im.v, MPFR_RNDN);
    return r;
}

Cplx sub(const Cplx& a, const Cplx& b) {
    Cplx r;
    mpfr_sub(r.re.v, a.re.v, b.re.v, MPFR_RNDN);
    mpfr_sub(r.im.v, a.im.v, b.im.v, MPFR_RNDN);
    return r;
}

Cplx mul(const Cplx& a, const Cplx& b) {
    Cplx r;
    Real t1, t2;
    mpfr_mul(t1.v, a.re.v, b.re.v, MPFR_RNDN);
    mpfr_mul(t2.v, a.im.v, b.im.v, MPFR_RNDN);
    mpfr_sub(r.re.v, t1.v, t2.v, MPFR_RNDN);
    mpfr_mul(t1.v, a.re.v, b.im.v, MPFR_RNDN);
    mpfr_mul(t2.v, a.im.v, b.re.v, MPFR_RNDN);
    mpfr_add(r.im.v, t1.v, t2.v, MPFR_RNDN);
    return r;
}

Real norm2(const Cplx& a) {
    Real r, t;
    mpfr_mul(r.v, a.re.v, a.re.v, MPFR_RNDN);
    mpfr_mul(t.v, a.im.v, a.im.v, MPFR_RNDN);
    mpfr_add(r.v, r.v, t.v, MPFR_RNDN);
    return r;
}

Real cabs(const Cplx& a) {
    Real r = norm2(a);
    mpfr_sqrt(r.v, r.v, MPFR_RNDN);
    return r;
}

Cplx div(const Cplx& a, const Cplx& b) {
    Real n2 = norm2(b);
    if (mpfr_zero_p(n2.v)) throw Error("satake: division by zero");
    Cplx conj;
    mpfr_set(conj.re.v, b.re.v, MPFR_RNDN);
    mpfr_neg(conj.im.v, b.im.v, MPFR_RNDN);
    Cplx num = mul(a, conj);
    Cplx r;
    mpfr_div(r.re.v, num.re.v, n2.v, MPFR_RNDN);
    mpfr_div(r.im.v, num.im.v, n2.v, MPFR_RNDN);
    return r;
}

// coeffs ascending: poly[0] + poly[1] x + ... ; monic degree 6 here
Cplx horner(const std::vector<Cplx>& poly, const Cplx& z) {
    Cplx acc;
    for (size_t i = poly.size(); i-- > 0;) acc = add(mul(acc, z), poly[i]);
    return acc;
}

std::vector<Cplx> aberth_roots(const std::vector<Cplx>& poly) {
    size_t n = poly.size() - 1;
    std::vector<Cplx> deriv(n);
    for (size_t i = 1; i <= n; ++i) {
        deriv[i - 1] = poly[i];
        mpfr_mul_ui(deriv[i - 1].re.v, deriv[i - 1].re.v, static_cast<unsigned long>(i), MPFR_RNDN);
        mpfr_mul_ui(deriv[i - 1].im.v, deriv[i - 1].im.v, static_cast<unsigned long>(i), MPFR_RNDN);
    }
    // initial guesses on a ring of radius 1 + max|c_i|
    double radius = 1.0;
    for (size_t i = 0; i < n; ++i) {
        double m = std::abs(poly[i].re.d()) + std::abs(poly[i].im.d());
        radius = std::max(radius, m);
    }
    radius = 1.0 + std::min(radius, 1e18);
    std::vector<Cplx> z(n);
    for (size_t i = 0; i < n; ++i) {
        double ang = 2.0 * M_PI * (static_cast<double>(i) + 0.3) / static_cast<double>(n) + 0.42;
        z[i] = Cplx(radius * std::cos(ang), radius * std::sin(ang));
    }
    Real eps(std::ldexp(1.0, -200));
    for (int iter = 0; iter < 800; ++iter) {
        bool moved = false;
        for (size_t i = 0; i < n; ++i) {
            Cplx pv = horner(poly, z[i]);
            if (mpfr_zero_p(norm2(pv).v)) continue;
            Cplx pd = horner(deriv, z[i]);
            if (mpfr_zero_p(norm2(pd).v)) {
                // nudge off a critical point
                Cplx nudge(1e-20, 1e-20);
                z[i] = add(z[i], nudge);
                moved = true;
                continue;
            }
            Cplx w = div(pv, pd);
            Cplx s;
            for (size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                Cplx diff = sub(z[i], z[j]);
                if (mpfr_zero_p(norm2(diff).v)) {
                    mpfr_set_d(diff.re.v, 1e-30, MPFR_RNDN);
                }
                s = add(s, div(Cplx(1.0, 0.0), diff));
            }
            Cplx denom = sub(Cplx(1.0, 0.0), mul(w, s));
            if (mpfr_zero_p(norm2(denom).v)) continue;
            Cplx delta = div(w, denom);
            z[i] = sub(z[i], delta);
            // relative step size
            Real step = cabs(delta);
            Real base = cabs(z[i]);
            mpfr_add_d(base.v, base.v, 1.0, MPFR_RNDN);
            mpfr_div(step.v, step.v, base.v, MPFR_RNDN);
            if (mpfr_cmp(step.v, eps.v) > 0) moved = true;
        }
        if (!moved) break;
    }
    // residual contract: |P(z)| <= 1e-30 * scale
    Real scale(1.0);
    for (size_t i = 0; i <= n; ++i) {
        Real m = cabs(poly[i]);
        if (mpfr_cmp(m.v, scale.v) > 0) scale = m;
    }
    for (size_t i = 0; i < n; ++i) {
        Real zb = cabs(z[i]);
        mpfr_add_d(zb.v, zb.v, 1.0, MPFR_RNDN);
        Real zbn(1.0);
        for (size_t k = 0; k < n; ++k) mpfr_mul(zbn.v, zbn.v, zb.v, MPFR_RNDN);
        Real bound;
        mpfr_mul(bound.v, scale.v, zbn.v, MPFR_RNDN);
        mpfr_mul_d(bound.v, bound.v, 1e-30, MPFR_RNDN);
        Real resid = cabs(horner(poly, z[i]));
        if (mpfr_cmp(resid.v, bound.v) > 0) throw Error("satake: root finding did not converge");
    }
    return z;
}

std::vector<Cplx> solve_from_elementary(const std::array<Rat, 6>& e) {
    std::vector<Cplx> poly(7);
    poly[6] = Cplx(1.0, 0.0);
    for (int k = 1; k <= 6; ++k) {
        Rat c = (k % 2 == 1) ? Rat(-e[static_cast<size_t>(k - 1)]) : e[static_cast<size_t>(k - 1)];
        Cplx cc;
        cc.re = Real(c);
        poly[static_cast<size_t>(6 - k)] = cc;
    }
    return aberth_roots(poly);
}

}  // namespace

std::array<Rat, 6> elementary_from_power_sums(const std::array<Rat, 6>& s) {
    std::array<Rat, 6> e;
    for (int k = 1; k <= 6; ++k) {
        Rat acc(0);
        for (int i = 1; i <= k; ++i) {
            Rat prev = (k - i == 0) ? Rat(1) : e[static_cast<size_t>(k - i - 1)];
            Rat term = prev * s[static_cast<size_t>(i - 1)];
            acc += (i % 2 == 1) ? term : Rat(-term);
        }
        e[static_cast<size_t>(k - 1)] = acc / Rat(k);
        e[static_cast<size_t>(k - 1)].canonicalize();
    }
    return e;
}

std::vector<std::pair<double, double>> roots_check_only(const std::array<Rat, 6>& elem) {
    auto roots = solve_from_elementary(elem);
    std::vector<std::pair<double, double>> out;
    for (const auto& z : roots) out.emplace_back(z.re.d(), z.im.d());
    return out;
}

SatakeEvaluation evaluate_all_permutations(const HumbertEquation& eq, const std::array<Rat, 6>& s,
                                           double tol, unsigned root_shuffle) {
    auto e = elementary_from_power_sums(s);
    auto roots = solve_from_elementary(e);
    std::rotate(roots.begin(), roots.begin() + (root_shuffle % roots.size()), roots.end());
    if (root_shuffle >= 6) std::swap(roots[0], roots[1 + root_shuffle % 5]);

    SatakeEvaluation ev;
    ev.min_match = 0.0;
    ev.min_nonmatch = -1.0;
    std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
    bool have_match = false;
    double best_match = -1.0;
    do {
        // value and l1 normalizer of the equation at the permuted roots
        Cplx value;
        Real normalizer(1.0);
        for (const auto& [exps, coeff] : eq.monomials) {
            Cplx term;
            term.re = Real(coeff);
            Real tabs;
            Rat ca = abs(coeff);
            tabs = Real(ca);
            for (int vi = 0; vi < 6; ++vi) {
                for (int k = 0; k < exps[static_cast<size_t>(vi)]; ++k) {
                    term = mul(term, roots[static_cast<size_t>(perm[static_cast<size_t>(vi)])]);
                    Real rb = cabs(roots[static_cast<size_t>(perm[static_cast<size_t>(vi)])]);
                    if (mpfr_cmp_d(rb.v, 1.0) < 0) mpfr_set_d(rb.v, 1.0, MPFR_RNDN);
                    mpfr_mul(tabs.v, tabs.v, rb.v, MPFR_RNDN);
                }
            }
            value = add(value, term);
            mpfr_add(normalizer.v, normalizer.v, tabs.v, MPFR_RNDN);
        }
        Real va = cabs(value);
        mpfr_div(va.v, va.v, normalizer.v, MPFR_RNDN);
        double nv = va.d();
        ev.values_sorted.push_back(nv);
        if (nv < tol) {
            have_match = true;
            if (best_match < 0 || nv < best_match) best_match = nv;
        } else {
            if (ev.min_nonmatch < 0 || nv < ev.min_nonmatch) ev.min_nonmatch = nv;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    ev.any_match = have_match;
    ev.min_match = best_match < 0 ? 0.0 : best_match;
    if (ev.min_nonmatch < 0) ev.min_nonmatch = 0.0;
    ev.reliable = (ev.min_nonmatch == 0.0) || (ev.min_nonmatch > 10.0 * tol);
    std::sort(ev.values_sorted.begin(), ev.values_sorted.end());
    return ev;
}

}  // namespace g2end::satake
