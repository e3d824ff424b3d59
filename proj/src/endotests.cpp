#include "g2end/endotests.hpp"

#include <algorithm>

namespace g2end {

std::vector<FrobeniusData> frobenius_stream(const CurveModel& curve, long B) {
    std::vector<FrobeniusData> out;
    for (long p : primes_up_to(B)) {
        if (!curve.has_good_reduction(p)) continue;
        out.push_back(frobenius_data(curve, p));
    }
    return out;
}

std::optional<Int> hall_trivial_witness(const CurveModel& curve, const Int& disc_factor_cap) {
    if (curve.f().degree() != 5) return std::nullopt;
    if (abs(curve.disc()) > disc_factor_cap) return std::nullopt;
    Factorization fac = factor(curve.disc());
    for (const auto& [q, e] : fac.primes)
        if (q != 2 && e == 1) return q;
    return std::nullopt;
}

namespace {

IrreducibilityVerdict twist_scan(const CurveModel& curve, long B, unsigned exponent) {
    IrreducibilityVerdict v;
    v.bound_used = B;
    bool found_irreducible = false, found_nonsquare = false;
    std::string irr_witness, nsq_witness;
    for (long p : primes_up_to(B)) {
        if (!curve.has_good_reduction(p)) continue;
        FrobeniusData fd = frobenius_data(curve, p);
        IntPoly t = exponent == 1 ? fd.weil_poly : twist(fd.weil_poly, exponent);
        if (!found_irreducible && is_irreducible(t)) {
            found_irreducible = true;
            irr_witness = std::to_string(p);
            v.witness_prime = std::max(v.witness_prime, p);
        }
        if (!found_nonsquare && !perfect_square_root(t)) {
            found_nonsquare = true;
            nsq_witness = std::to_string(p);
            v.witness_prime = std::max(v.witness_prime, p);
        }
        if (found_irreducible && found_nonsquare) break;
    }
    if (found_irreducible && found_nonsquare) {
        v.status = IrreducibilityVerdict::Status::AbsIrreducibleNoQM;
        v.witness = irr_witness == nsq_witness ? irr_witness : irr_witness + "," + nsq_witness;
    } else if (found_irreducible) {
        v.status = IrreducibilityVerdict::Status::AbsIrreducible;
        v.witness = irr_witness;
    } else if (found_nonsquare) {
        v.status = IrreducibilityVerdict::Status::NoQM;
        v.witness = nsq_witness;
    }
    return v;
}

}  // namespace

IrreducibilityVerdict geometric_irreducibility(const CurveModel& curve, long B,
                                               const IrreducibilityOptions& opts) {
    IrreducibilityVerdict v;
    v.bound_used = B;
    // step 1: irreducible quintic model
    if (curve.f().degree() == 5 && is_irreducible(curve.f())) {
        v.status = IrreducibilityVerdict::Status::AbsIrreducible;
        v.witness = "irreducible-quintic";
        return v;
    }
    // step 2: odd prime of valuation 1 in disc(f) (quintic models only)
    if (auto w = hall_trivial_witness(curve, opts.disc_factor_cap)) {
        v.status = IrreducibilityVerdict::Status::EndIsZ;
        v.witness = "disc-valuation-1:" + w->get_str();
        return v;
    }
    // step 3: S_n / A_n certificate
    if (discriminant(curve.f()) != 0) {
        auto cert = galois_sn_certificate(curve.f(), opts.galois_prime_budget);
        if (cert.verdict != GaloisCertificate::Verdict::Unknown) {
            v.status = IrreducibilityVerdict::Status::EndIsZ;
            v.witness = cert.verdict == GaloisCertificate::Verdict::ProvenSn ? "galois-Sn" : "galois-An";
            return v;
        }
    }
    // step 4: f_v{12} scan
    IrreducibilityVerdict scan = twist_scan(curve, B, GroupTheoryConstants::exponent_bound);
    if (scan.status != IrreducibilityVerdict::Status::Inconclusive) return scan;
    // step 5
    return v;
}

IrreducibilityVerdict k_irreducibility(const CurveModel& curve, long B) {
    return twist_scan(curve, B, 1);
}

DiscBoundResult disc_bound(const std::vector<FrobeniusData>& frob_stream, DiscBoundMode mode,
                           const DiscBoundOptions& opts) {
    DiscBoundResult res;
    std::vector<Int> deltas_seen;
    long last_p = 0;
    for (const auto& fd : frob_stream) {
        if (fd.p <= last_p) throw Error("disc_bound: stream must be ascending in p");
        last_p = fd.p;
        bool admissible = (mode == DiscBoundMode::Geometric) ? fd.in_omega_prime
                                                             : is_irreducible(fd.weil_poly);
        if (!admissible) continue;
        if (opts.place_filter && !opts.place_filter(fd.p)) continue;
        if (mode == DiscBoundMode::Geometric && (!fd.ordinary || !fd.in_omega_prime))
            throw Error("disc_bound: inadmissible place slipped through (internal)");
        Int delta;
        try {
            delta = field_discriminant(fd.weil_poly);
        } catch (const Error&) {
            continue;  // factorization timeout: skipping keeps the gcd an upper bound
        }
        res.places_used.push_back(fd.p);
        if (std::find(deltas_seen.begin(), deltas_seen.end(), delta) == deltas_seen.end())
            deltas_seen.push_back(delta);
        res.d_of_B = gcd(res.d_of_B, delta);
        if (opts.early_exit && res.d_of_B >= 1 && res.d_of_B <= 24) {
            res.early_exit_taken = true;
            break;
        }
    }
    res.cm_excluded = deltas_seen.size() >= 2;
    if (res.d_of_B >= 1 && res.d_of_B <= 24) res.verdict = DiscBoundResult::Verdict::EndIsZ;
    if (res.cm_excluded && res.verdict == DiscBoundResult::Verdict::BoundOnly && res.d_of_B > 0) {
        // fundamental discriminants D > 0 with D^2 | d(B)
        auto pf = try_factor(res.d_of_B);
        if (pf) {
            std::vector<std::pair<Int, int>> half;
            for (const auto& [p, e] : *pf)
                if (e >= 2) half.emplace_back(p, e / 2);
            for (const Int& D : divisors_from_factorization(half)) {
                if (D < 5) continue;
                if (res.d_of_B % (D * D) == 0 && is_fundamental_discriminant(D))
                    res.rm_candidates.emplace_back(D);
            }
        }
    }
    return res;
}

bool rm_split_test(const FrobeniusData& fd, const Int& m) {
    if (m <= 1) throw Error("rm_split_test: m must be a radicand > 1");
    IntPoly g = twist(fd.weil_poly, 2);
    // g should be (x^2 - a x + q)(x^2 - conj(a) x + q) with a = w + z sqrt(m)
    // and q the norm at the squared-Frobenius level, i.e. q = p^2
    if (g[3] % 2 != 0) return false;
    Int w = -g[3] / 2;
    Int q = Int(fd.p) * fd.p;
    // coefficient of x^2 is 2q + w^2 - m z^2
    Int rhs = 2 * q + w * w - g[2];
    if (rhs < 0 || rhs % m != 0) return false;
    auto z = sqrt_exact(rhs / m);
    if (!z) return false;
    // multiply the two quadratics out in Z[sqrt m]
    struct QI {
        Int a, b;  // a + b sqrt(m)
    };
    auto mul = [&m](const QI& x, const QI& y) {
        return QI{x.a * y.a + m * x.b * y.b, x.a * y.b + x.b * y.a};
    };
    QI alpha{w, *z}, beta{w, -*z};
    QI c3 = {-(alpha.a + beta.a), -(alpha.b + beta.b)};
    QI prod = mul(alpha, beta);
    QI c2 = {prod.a + 2 * q, prod.b};
    QI c1 = {-q * (alpha.a + beta.a), -q * (alpha.b + beta.b)};
    if (c3.b != 0 || c2.b != 0 || c1.b != 0) return false;
    IntPoly rebuilt(std::vector<Int>{q * q, c1.a, c2.a, c3.a, 1});
    return rebuilt == g;
}

FieldOfDefinitionResult rm_field_of_definition(const CurveModel& curve, const Int& rm_disc, long B) {
    if (rm_disc <= 1 || !is_fundamental_discriminant(rm_disc))
        throw Error("rm_field_of_definition: rm_disc must be a real fundamental discriminant");
    FieldOfDefinitionResult out;
    // candidate fields: quadratic extensions unramified outside
    // {2} u {odd p : v_p(disc f) >= 2}
    Factorization fac = factor(curve.disc());
    if (!fac.complete()) throw Error("rm_field_of_definition: disc factorization timed out");
    std::vector<long> S{2};
    for (const auto& [q, e] : fac.primes) {
        if (q == 2 || e < 2) continue;
        if (!q.fits_slong_p()) throw Error("rm_field_of_definition: bad prime too large");
        S.push_back(q.get_si());
    }
    auto candidates = quadratic_fields_unramified_outside(S);

    auto stream = frobenius_stream(curve, B);
    for (const auto& cand : candidates) {
        DiscBoundOptions opts;
        opts.early_exit = true;
        Int D = cand.discriminant;
        opts.place_filter = [D](long p) { return D % p != 0 && splits_in(D, p); };
        DiscBoundResult r = disc_bound(stream, DiscBoundMode::OverK, opts);
        if (r.verdict == DiscBoundResult::Verdict::EndIsZ)
            out.eliminated.push_back(cand);
        else
            out.survivors.push_back(cand);
    }
    if (out.survivors.size() == 1) {
        // the minimal field K' is unique, so a unique surviving candidate is
        // proven to be it (the RM is defined over *some* quadratic field in
        // the list by the ramification constraint)
        out.field = out.survivors.front();
    }
    return out;
}

}  // namespace g2end
