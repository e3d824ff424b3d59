#include <algorithm>
#include <cstdint>
#include <vector>

#include "g2end/intpoly.hpp"

// small F_p[x] toolkit backing the mod-p degree-pattern pre-filter and the
// Dedekind cycle-type scan; p fits in 31 bits

namespace g2end::detail {

namespace {

using Vec = std::vector<uint64_t>;  // ascending coefficients, normalized

void norm(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec mul(const Vec& a, const Vec& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    norm(r);
    return r;
}

// a mod b, b monic
Vec rem(Vec a, const Vec& b, uint64_t p) {
    norm(a);
    while (a.size() >= b.size()) {
        uint64_t c = a.back();
        size_t shift = a.size() - b.size();
        if (c != 0)
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
        a.pop_back();
        norm(a);
        if (b.size() == 1) return {};
    }
    return a;
}

Vec make_monic(Vec a, uint64_t p) {
    norm(a);
    if (a.empty()) return a;
    uint64_t inv = powmod_u64(a.back(), p - 2, p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

Vec gcd_poly(Vec a, Vec b, uint64_t p) {
    norm(a);
    norm(b);
    while (!b.empty()) {
        Vec bm = make_monic(std::move(b), p);
        Vec r = rem(std::move(a), bm, p);
        a = std::move(bm);
        b = std::move(r);
    }
    return make_monic(std::move(a), p);
}

Vec deriv(const Vec& a, uint64_t p) {
    if (a.size() < 2) return {};
    Vec r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
    norm(r);
    return r;
}

// q, r with a = q b + r not needed; only exact division by a monic factor
Vec div_exact(const Vec& a, const Vec& b, uint64_t p) {
    Vec r = a, q(a.size() - b.size() + 1, 0);
    while (r.size() >= b.size()) {
        uint64_t c = r.back();
        size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] = (r[shift + i] + (p - c) * b[i]) % p;
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (b.size() == 1) break;
    }
    norm(q);
    return q;
}

Vec pow_poly_mod(Vec b, uint64_t e, const Vec& f, uint64_t p) {
    Vec result{1};
    b = rem(std::move(b), f, p);
    while (e) {
        if (e & 1) result = rem(mul(result, b, p), f, p);
        b = rem(mul(b, b, p), f, p);
        e >>= 1;
    }
    return result;
}

}  // namespace

std::vector<int> degree_pattern_mod_p(const IntPoly& f, long p) {
    uint64_t up = static_cast<uint64_t>(p);
    if (f.lc() % p == 0) return {};
    Vec fp(static_cast<size_t>(f.degree()) + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        Int c = f[i] % p;
        if (c < 0) c += p;
        fp[static_cast<size_t>(i)] = c.get_ui();
    }
    fp = make_monic(std::move(fp), up);
    Vec fpd = deriv(fp, up);
    if (fpd.empty()) return {};  // p | all exponents: not squarefree
    Vec g = gcd_poly(fp, fpd, up);
    if (g.size() != 1) return {};  // not squarefree mod p

    // distinct-degree factorization
    std::vector<int> pattern;
    Vec cur = fp;
    Vec h{0, 1};  // x
    int d = 0;
    while (cur.size() > 1) {
        ++d;
        if (2 * d > static_cast<int>(cur.size()) - 1) {
            pattern.push_back(static_cast<int>(cur.size()) - 1);
            break;
        }
        h = pow_poly_mod(std::move(h), up, cur, up);
        Vec hx = h;
        // h - x
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] + up - 1) % up;
        norm(hx);
        if (hx.empty()) {  // all remaining factors have degree dividing d... means cur | x^(p^d)-x
            int deg = static_cast<int>(cur.size()) - 1;
            for (int i = 0; i < deg / d; ++i) pattern.push_back(d);
            break;
        }
        Vec gg = gcd_poly(cur, hx, up);
        if (gg.size() > 1) {
            int deg = static_cast<int>(gg.size()) - 1;
            for (int i = 0; i < deg / d; ++i) pattern.push_back(d);
            cur = div_exact(cur, gg, up);
            h = rem(std::move(h), cur, up);
        }
    }
    std::sort(pattern.begin(), pattern.end());
    return pattern;
}

}  // namespace g2end::detail
