#include "g2end/qforms.hpp"

#include <algorithm>

namespace g2end {

bool is_discriminant(const Int& D) {
    if (D <= 0) return false;
    Int r = D % 4;
    return r == 0 || r == 1;
}

BinaryQuadraticForm reduce_gl2z(const BinaryQuadraticForm& form) {
    if (!form.positive_definite()) throw Error("reduce_gl2z: form must be positive definite");
    Int a = form.a, x = form.x, c = form.c;
    while (true) {
        if (a > c) {
            std::swap(a, c);  // (m,n) -> (n,m)
            continue;
        }
        if (2 * abs(x) > a) {
            // x -> x - k a with |x'| <= a/2; c -> c - 2kx + k^2 a
            Int k;
            Int twice = 2 * x + a;
            mpz_fdiv_q(k.get_mpz_t(), twice.get_mpz_t(), Int(2 * a).get_mpz_t());
            c = c - 2 * k * x + k * k * a;
            x = x - k * a;
            continue;
        }
        break;
    }
    if (x < 0) x = -x;  // improper transform (m,n) -> (m,-n)
    if (a > c || 2 * x > a) {
        // boundary shifts can disturb the order; run once more
        return reduce_gl2z(BinaryQuadraticForm{a, x, c});
    }
    return BinaryQuadraticForm{a, x, c};
}

std::optional<std::pair<Int, Int>> primitively_represents(const BinaryQuadraticForm& form, const Int& D) {
    if (!form.positive_definite()) throw Error("primitively_represents: positive definite required");
    if (D <= 0) throw Error("primitively_represents: D must be positive");
    Int det = form.det();
    Int mmax = isqrt(D * form.c / det) + 1;
    Int nmax = isqrt(D * form.a / det) + 1;
    for (Int m = 0; m <= mmax; ++m) {
        // n = 0, 1, -1, 2, -2, ... so paper-style witnesses come out first
        for (Int k = 0; k <= 2 * nmax; ++k) {
            Int n = (k % 2 == 1) ? Int((k + 1) / 2) : Int(-k / 2);
            if (m == 0 && n <= 0) continue;
            if (n > nmax || -n > nmax) continue;
            if (gcd(m, abs(n)) != 1) continue;
            if (form.value(m, n) == D) return std::make_pair(m, n);
        }
    }
    return std::nullopt;
}

std::vector<BinaryQuadraticForm> enumerate_candidates(const Int& a, const Int& c) {
    if (!is_discriminant(a) || !is_discriminant(c))
        throw Error("enumerate_candidates: diagonal entries must be positive discriminants");
    std::vector<BinaryQuadraticForm> out;
    std::vector<BinaryQuadraticForm> reduced_seen;
    Int xmax = isqrt(a * c);
    for (Int x = 0; x <= xmax; ++x) {
        BinaryQuadraticForm f{a, x, c};
        if (f.det() <= 0) continue;
        Int q11 = a + 2 * x + c;
        Int r = q11 % 4;
        if (r != 0 && r != 1) continue;
        BinaryQuadraticForm red = reduce_gl2z(f);
        bool dup = std::any_of(reduced_seen.begin(), reduced_seen.end(),
                               [&](const BinaryQuadraticForm& g) { return g == red; });
        if (dup) continue;
        reduced_seen.push_back(red);
        out.push_back(f);
    }
    return out;
}

QmCertificationSets certify_qm_sets(const BinaryQuadraticForm& target, const Int& search_cap) {
    if (!target.positive_definite()) throw Error("certify_qm_sets: positive definite required");
    QmCertificationSets sets;
    sets.P = {target.a, target.c};
    BinaryQuadraticForm tred = reduce_gl2z(target);
    for (const auto& cand : enumerate_candidates(target.a, target.c)) {
        if (reduce_gl2z(cand) == tred) continue;
        bool found = false;
        for (Int D = 1; D <= search_cap; ++D) {
            if (!is_discriminant(D)) continue;
            if (!primitively_represents(cand, D)) continue;
            if (primitively_represents(target, D)) continue;
            sets.N.push_back(D);
            found = true;
            break;
        }
        if (!found)
            throw Error("certify_qm_sets: search cap exhausted for candidate x = " + cand.x.get_str());
    }
    for (const Int& D : sets.N)
        if (primitively_represents(target, D))
            throw Error("certify_qm_sets: postcondition violated (internal)");
    return sets;
}

Int quaternion_algebra_disc(const BinaryQuadraticForm& form) {
    // the order spans 1, alpha, beta, alpha*beta with Delta(alpha) = a,
    // Delta(beta) = c, Delta(alpha,beta) = 2x; its algebra is the Hilbert
    // symbol algebra (a, a*det) up to squares
    Int a = form.a, d = form.det();
    if (a == 0 || d == 0) throw Error("quaternion_algebra_disc: degenerate form");
    Int prod = 1;
    for (const Int& q : quaternion_ramified_primes(a, a * d)) prod *= q;
    return prod;
}

QmDeductionResult deduce_qm_ring(const Int& D1, const Int& D2, const MembershipOracle& membership,
                                 const Int& query_cap) {
    QmDeductionResult res;
    auto ask = [&](const Int& D) {
        if (std::find(res.queried.begin(), res.queried.end(), D) == res.queried.end())
            res.queried.push_back(D);
        return membership(D);
    };
    for (const auto& cand : enumerate_candidates(D1, D2)) {
        bool eliminated = false;
        for (Int D = 1; D <= query_cap && !eliminated; ++D) {
            if (!is_discriminant(D)) continue;
            if (!primitively_represents(cand, D)) continue;
            auto ans = ask(D);
            if (ans && !*ans) eliminated = true;
        }
        if (!eliminated) res.survivors.push_back(cand);
    }
    if (res.survivors.size() == 1) {
        const auto& f = res.survivors.front();
        QuaternionOrderDescriptor d;
        d.reduced_form = reduce_gl2z(f);
        Int det = f.det();
        if (det % 4 != 0) throw Error("deduce_qm_ring: det not divisible by 4 (internal)");
        d.disc = det / 4;
        d.algebra_disc = quaternion_algebra_disc(f);
        if (d.disc % d.algebra_disc != 0)
            throw Error("deduce_qm_ring: index not integral (internal)");
        d.index_in_maximal = d.disc / d.algebra_disc;
        res.order = d;
    }
    return res;
}

}  // namespace g2end
