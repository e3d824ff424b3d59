#include "g2end/finitefield.hpp"

#include <cmath>
#include <complex>

namespace g2end {

CurveModel::CurveModel(IntPoly f) : f_(std::move(f)) {
    int d = f_.degree();
    if (d != 5 && d != 6) throw Error("CurveModel: degree must be 5 or 6");
    disc_ = discriminant(f_);
    if (disc_ == 0) throw Error("CurveModel: singular model (disc = 0)");
}

CurveModel CurveModel::from_long_model(const IntPoly& g, const IntPoly& h) {
    return CurveModel(g * Int(4) + h * h);
}

bool CurveModel::has_good_reduction(long p) const {
    if (p == 2) return false;
    return f_.lc() % p != 0 && disc_ % p != 0;
}

std::vector<Int> CurveModel::bad_primes() const {
    Int n = 2 * f_.lc() * disc_;
    auto pf = try_factor(n);
    if (!pf) throw Error("bad_primes: discriminant factorization timed out");
    std::vector<Int> out;
    for (const auto& [p, e] : *pf) out.push_back(p);
    return out;
}

namespace fp2 {

long nonresidue(long p) {
    for (long n = 2; n < p; ++n) {
        if (powmod_u64(static_cast<uint64_t>(n), static_cast<uint64_t>((p - 1) / 2),
                       static_cast<uint64_t>(p)) == static_cast<uint64_t>(p - 1))
            return n;
    }
    throw Error("nonresidue: none found (p = 2?)");
}

std::pair<long, long> frobenius(long u, long v, long n, long p) {
    // (u + v t)^p; square-and-multiply in F_p[t]/(t^2-n)
    auto mul = [&](std::pair<long, long> x, std::pair<long, long> y) {
        uint64_t up = static_cast<uint64_t>(p);
        uint64_t a = static_cast<uint64_t>(x.first), b = static_cast<uint64_t>(x.second);
        uint64_t c = static_cast<uint64_t>(y.first), d = static_cast<uint64_t>(y.second);
        uint64_t re = (a * c % up + b * d % up * static_cast<uint64_t>(n)) % up;
        uint64_t im = (a * d + b * c) % up;
        return std::pair<long, long>{static_cast<long>(re), static_cast<long>(im)};
    };
    std::pair<long, long> result{1, 0}, base{u % p, v % p};
    long e = p;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

}  // namespace fp2

namespace {

// chi table over F_p: -1, 0, +1
std::vector<int8_t> legendre_table(long p) {
    std::vector<int8_t> t(static_cast<size_t>(p), -1);
    t[0] = 0;
    for (long i = 1; i < p; ++i) {
        uint64_t sq = mulmod_u64(static_cast<uint64_t>(i), static_cast<uint64_t>(i), static_cast<uint64_t>(p));
        t[static_cast<size_t>(sq)] = 1;
    }
    return t;
}

Int count_fp(const CurveModel& curve, long p, const std::vector<int8_t>& leg) {
    const IntPoly& f = curve.f();
    int d = f.degree();
    std::vector<uint64_t> fc(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        Int c = f[i] % p;
        if (c < 0) c += p;
        fc[static_cast<size_t>(i)] = c.get_ui();
    }
    uint64_t up = static_cast<uint64_t>(p);
    long count = 0;
    for (long x = 0; x < p; ++x) {
        uint64_t v = 0, ux = static_cast<uint64_t>(x);
        for (size_t i = fc.size(); i-- > 0;) v = (v * ux + fc[i]) % up;
        count += 1 + leg[static_cast<size_t>(v)];
    }
    if (d == 5)
        count += 1;
    else if (leg[static_cast<size_t>(fc.back())] == 1)
        count += 2;
    return count;
}

Int count_fp2(const CurveModel& curve, long p, const std::vector<int8_t>& leg) {
    const IntPoly& f = curve.f();
    int d = f.degree();
    std::vector<uint64_t> fc(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        Int c = f[i] % p;
        if (c < 0) c += p;
        fc[static_cast<size_t>(i)] = c.get_ui();
    }
    uint64_t up = static_cast<uint64_t>(p);
    uint64_t nr = static_cast<uint64_t>(fp2::nonresidue(p));
    long count = 0;
    // x = u + v t, t^2 = nr; chi_{p^2}(w) = chi_p(Norm w), Norm(A+Bt) = A^2 - nr B^2
    for (long v = 0; v < p; ++v) {
        uint64_t uv = static_cast<uint64_t>(v);
        for (long u = 0; u < p; ++u) {
            uint64_t A = 0, B = 0, uu = static_cast<uint64_t>(u);
            for (size_t i = fc.size(); i-- > 0;) {
                // (A + B t)(u + v t) + c_i
                uint64_t A2 = (A * uu + B * uv % up * nr + fc[i]) % up;
                uint64_t B2 = (A * uv + B * uu) % up;
                A = A2;
                B = B2;
            }
            uint64_t nrm = (A * A + (up - 1) * (nr * (B * B % up) % up)) % up;
            count += 1 + leg[static_cast<size_t>(nrm)];
        }
    }
    if (d == 5)
        count += 1;
    else if (fc.back() % up != 0)
        count += 2;  // every nonzero F_p element is a square in F_{p^2}
    return count;
}

}  // namespace

Int count_points(const CurveModel& curve, long p, int r) {
    if (p == 2 || p % 2 == 0) throw Error("count_points: p must be odd");
    if (!curve.has_good_reduction(p)) throw Error("count_points: bad-reduction prime");
    if (r != 1 && r != 2) throw Error("count_points: q must be p or p^2");
    auto leg = legendre_table(p);
    return r == 1 ? count_fp(curve, p, leg) : count_fp2(curve, p, leg);
}

FrobeniusData frobenius_data(const CurveModel& curve, long p) {
    if (p == 2 || p % 2 == 0) throw Error("frobenius_data: p must be odd");
    if (!curve.has_good_reduction(p)) throw Error("frobenius_data: bad-reduction prime");
    auto leg = legendre_table(p);
    FrobeniusData fd;
    fd.p = p;
    fd.n1 = count_fp(curve, p, leg);
    fd.n2 = count_fp2(curve, p, leg);
    Int P{p};
    fd.a = fd.n1 - P - 1;
    Int num = fd.a * fd.a - P * P - 1 + fd.n2;
    if (num % 2 != 0) throw Error("frobenius_data: parity failure in b (counting bug)");
    fd.b = num / 2;
    fd.weil_poly = IntPoly(std::vector<Int>{P * P, fd.a * P, fd.b, fd.a, 1});

    // Newton identities, exact: s1 = -a, s2 = a^2 - 2b
    Int s1 = -fd.a, s2 = fd.a * fd.a - 2 * fd.b;
    if (fd.n1 != P + 1 - s1 || fd.n2 != P * P + 1 - s2)
        throw Error("frobenius_data: power-sum identity violated (counting bug)");

    // Weil bounds: |a| <= 4 sqrt(p), all roots on |z| = sqrt(p)
    if (fd.a * fd.a > 16 * P) throw Error("frobenius_data: |a| exceeds Weil bound");
    {
        double da = fd.a.get_d(), db = fd.b.get_d(), dp = static_cast<double>(p);
        // x^4+ax^3+bx^2+apx+p^2 = (x^2+ux+p)(x^2+vx+p), u+v=a, uv=b-2p
        std::complex<double> disc = da * da - 4.0 * (db - 2.0 * dp);
        std::complex<double> sq = std::sqrt(disc);
        for (std::complex<double> u : {(da + sq) / 2.0, (da - sq) / 2.0}) {
            std::complex<double> d2 = u * u - 4.0 * dp;
            std::complex<double> s2c = std::sqrt(d2);
            for (std::complex<double> root : {(-u + s2c) / 2.0, (-u - s2c) / 2.0}) {
                if (std::abs(std::abs(root) - std::sqrt(dp)) > 1e-6 * std::sqrt(dp))
                    throw Error("frobenius_data: Weil bound violated (counting bug)");
            }
        }
    }

    fd.ordinary = (fd.b % p != 0);
    fd.in_omega_prime = fd.ordinary && is_irreducible(twist(fd.weil_poly, 4));
    return fd;
}

}  // namespace g2end
