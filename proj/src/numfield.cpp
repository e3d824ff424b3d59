#include "g2end/numfield.hpp"

#include <algorithm>
#include <cassert>
#include <climits>

namespace g2end {

Int Factorization::reassemble() const {
    Int r = cofactor;
    for (const auto& [p, e] : primes) r *= pow_int(p, static_cast<unsigned long>(e));
    return r;
}

Factorization factor(const Int& n) {
    if (n == 0) throw Error("factor: zero input");
    Factorization f;
    auto pf = try_factor(n);
    if (pf) {
        f.primes = std::move(*pf);
        return f;
    }
    // budget exhausted: peel what trial division found and flag the rest
    Int m = abs(n);
    for (long q = 2; q <= 1'000'000; q = (q == 2) ? 3 : q + 2) {
        int e = 0;
        while (m % q == 0) {
            m /= q;
            ++e;
        }
        if (e) f.primes.emplace_back(q, e);
        if (Int(q) * q > m) break;
    }
    if (m > 1 && is_prime(m)) {
        f.primes.emplace_back(m, 1);
        m = 1;
    }
    f.cofactor = m;
    return f;
}

bool is_fundamental_discriminant(const Int& d) {
    if (d == 1 || d == 0) return false;
    auto squarefree = [](const Int& v) {
        auto pf = try_factor(v);
        if (!pf) throw Error("is_fundamental_discriminant: factor timeout");
        for (const auto& [p, e] : *pf)
            if (e > 1) return false;
        return true;
    };
    Int m4 = d % 4;
    if (m4 < 0) m4 += 4;
    if (m4 == 1) return squarefree(d);
    if (m4 != 0) return false;
    Int m = d / 4;
    Int mm = m % 4;
    if (mm < 0) mm += 4;
    if (mm != 2 && mm != 3) return false;
    return squarefree(m);
}

QuadraticField::QuadraticField(Int d) : discriminant(std::move(d)) {
    if (!is_fundamental_discriminant(discriminant))
        throw Error("QuadraticField: not a fundamental discriminant");
}

bool splits_in(const Int& D, long p) {
    if (p == 2 || p % 2 == 0) throw Error("splits_in: p must be odd");
    if (D % p == 0) throw Error("splits_in: ramified prime");
    return kronecker(D, Int(p)) == 1;
}

std::vector<QuadraticField> quadratic_fields_unramified_outside(const std::vector<long>& S) {
    bool has2 = std::find(S.begin(), S.end(), 2L) != S.end();
    std::vector<long> odd;
    for (long p : S)
        if (p != 2) odd.push_back(p);
    std::sort(odd.begin(), odd.end());
    std::vector<QuadraticField> out;
    size_t n = odd.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        Int m = 1;
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t{1} << i)) m *= odd[i];
        for (int sign : {1, -1}) {
            Int v = sign * m;
            if (v == 1) continue;
            Int r = v % 4;
            if (r < 0) r += 4;
            if (r == 1)
                out.emplace_back(v);
            else if (has2)
                out.emplace_back(4 * v);
            // also the even-core discriminants 8m and -8m
        }
        if (has2) {
            for (int sign : {1, -1}) {
                Int v = sign * 2 * m;
                out.emplace_back(4 * v);  // disc 8m', m' = +-2m
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const QuadraticField& a, const QuadraticField& b) { return a.discriminant < b.discriminant; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// field discriminant via Dedekind + Round-2

namespace {

using RVec = std::vector<Rat>;
using RMat = std::vector<RVec>;

RVec polmulmod(const RVec& a, const RVec& b, const IntPoly& f) {
    int n = f.degree();
    RVec prod(static_cast<size_t>(2 * n), Rat(0));
    for (int i = 0; i < n; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < n; ++j)
            prod[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    }
    for (int d = 2 * n - 1; d >= n; --d) {
        Rat c = prod[static_cast<size_t>(d)];
        if (c == 0) continue;
        prod[static_cast<size_t>(d)] = 0;
        for (int k = 0; k < n; ++k) prod[static_cast<size_t>(d - n + k)] -= c * Rat(f[k]);
    }
    prod.resize(static_cast<size_t>(n));
    return prod;
}

RMat mat_inverse(const RMat& m) {
    size_t n = m.size();
    RMat a(n, RVec(2 * n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw Error("mat_inverse: singular");
        std::swap(a[col], a[piv]);
        Rat pv = a[col][col];
        for (auto& v : a[col]) v /= pv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat fct = a[r][col];
            for (size_t j = 0; j < 2 * n; ++j) a[r][j] -= fct * a[col][j];
        }
    }
    RMat inv(n, RVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

RVec vec_mat(const RVec& v, const RMat& m) {
    size_t n = m.size();
    RVec r(n, Rat(0));
    for (size_t k = 0; k < n; ++k) {
        if (v[k] == 0) continue;
        for (size_t j = 0; j < n; ++j) r[j] += v[k] * m[k][j];
    }
    return r;
}

Rat det(RMat a) {
    size_t n = a.size();
    Rat d(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(a[col], a[piv]);
            d = -d;
        }
        d *= a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat fct = a[r][col] / a[col][col];
            for (size_t j = col; j < n; ++j) a[r][j] -= fct * a[col][j];
        }
    }
    return d;
}

// integer row HNF (upper triangular, positive pivots); rows >= n, full rank n
std::vector<std::vector<Int>> hnf(std::vector<std::vector<Int>> a, size_t n) {
    size_t r = 0;
    for (size_t c = 0; c < n && r < a.size(); ++c) {
        while (true) {
            size_t best = SIZE_MAX;
            for (size_t i = r; i < a.size(); ++i)
                if (a[i][c] != 0 && (best == SIZE_MAX || abs(a[i][c]) < abs(a[best][c]))) best = i;
            if (best == SIZE_MAX) break;
            std::swap(a[r], a[best]);
            bool reduced = true;
            for (size_t i = r + 1; i < a.size(); ++i) {
                if (a[i][c] == 0) continue;
                Int q = a[i][c] / a[r][c];
                for (size_t j = 0; j < n; ++j) a[i][j] -= q * a[r][j];
                if (a[i][c] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (r < a.size() && a[r][c] != 0) {
            if (a[r][c] < 0)
                for (size_t j = 0; j < n; ++j) a[r][j] = -a[r][j];
            for (size_t i = 0; i < r; ++i) {
                Int q = a[i][c];
                mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), a[r][c].get_mpz_t());
                if (q != 0)
                    for (size_t j = 0; j < n; ++j) a[i][j] -= q * a[r][j];
            }
            ++r;
        }
    }
    a.resize(r);
    return a;
}

// kernel of v -> v * M over F_q, M given as n x m integer matrix (mod q)
std::vector<std::vector<Int>> kernel_mod_q(const std::vector<std::vector<Int>>& M, const Int& q) {
    size_t n = M.size(), m = M[0].size();
    // transpose, eliminate
    std::vector<std::vector<Int>> a(m, std::vector<Int>(n));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) {
            Int v = M[j][i] % q;
            if (v < 0) v += q;
            a[i][j] = v;
        }
    std::vector<size_t> piv_cols;
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
        size_t piv = SIZE_MAX;
        for (size_t i = r; i < m; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == SIZE_MAX) continue;
        std::swap(a[r], a[piv]);
        Int inv;
        mpz_invert(inv.get_mpz_t(), a[r][c].get_mpz_t(), q.get_mpz_t());
        for (auto& v : a[r]) v = v * inv % q;
        for (size_t i = 0; i < m; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Int fct = a[i][c];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] = (a[i][j] - fct * a[r][j]) % q;
                if (a[i][j] < 0) a[i][j] += q;
            }
        }
        piv_cols.push_back(c);
        ++r;
    }
    std::vector<std::vector<Int>> basis;
    for (size_t c = 0; c < n; ++c) {
        if (std::find(piv_cols.begin(), piv_cols.end(), c) != piv_cols.end()) continue;
        std::vector<Int> v(n, 0);
        v[c] = 1;
        for (size_t ri = 0; ri < piv_cols.size(); ++ri) {
            Int val = (q - a[ri][c] % q) % q;
            v[piv_cols[ri]] = val;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

struct Order {
    IntPoly f;   // defining monic polynomial, degree n
    RMat basis;  // rows = basis elements in power-basis coordinates

    size_t dim() const { return basis.size(); }

    // enlarge to a q-maximal order; returns true if changed
    bool q_maximalize(const Int& q);
};

RVec pow_element(RVec el, Int e, const IntPoly& f) {
    size_t n = static_cast<size_t>(f.degree());
    RVec result(n, Rat(0));
    result[0] = 1;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = polmulmod(result, el, f);
        el = polmulmod(el, el, f);
        e >>= 1;
    }
    return result;
}

bool Order::q_maximalize(const Int& q) {
    size_t n = dim();
    bool changed = false;
    for (int round = 0; round < 64; ++round) {
        RMat winv = mat_inverse(basis);
        // radical of qO via the Frobenius power map
        Int qe = q;
        while (qe < Int(static_cast<long>(n))) qe *= q;
        std::vector<std::vector<Int>> frob(n, std::vector<Int>(n));
        for (size_t i = 0; i < n; ++i) {
            RVec po = pow_element(basis[i], qe, f);
            RVec coords = vec_mat(po, winv);
            for (size_t j = 0; j < n; ++j) {
                if (coords[j].get_den() != 1) throw Error("field_discriminant: non-integral structure constants");
                frob[i][j] = coords[j].get_num();
            }
        }
        auto ker = kernel_mod_q(frob, q);
        // radical lattice R (in O-coordinates): kernel lifts + q*I
        std::vector<std::vector<Int>> rows = ker;
        for (size_t i = 0; i < n; ++i) {
            std::vector<Int> e(n, 0);
            e[i] = q;
            rows.push_back(std::move(e));
        }
        auto R = hnf(std::move(rows), n);
        assert(R.size() == n);
        // R basis in power coordinates, and its inverse for coordinate tests
        RMat rpow(n, RVec(n, Rat(0))), rmat(n, RVec(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                rmat[i][j] = Rat(R[i][j]);
                for (size_t k = 0; k < n; ++k) rpow[i][j] += Rat(R[i][k]) * basis[k][j];
            }
        RMat rinv = mat_inverse(rmat);
        // idealizer: y in O/qO with y * R  in q R
        std::vector<std::vector<Int>> cond(n, std::vector<Int>(n * n));
        for (size_t k = 0; k < n; ++k)
            for (size_t i = 0; i < n; ++i) {
                RVec prod = polmulmod(basis[k], rpow[i], f);
                RVec oc = vec_mat(prod, winv);   // O-coordinates
                RVec rc = vec_mat(oc, rinv);     // R-coordinates
                for (size_t j = 0; j < n; ++j) {
                    if (rc[j].get_den() != 1) throw Error("field_discriminant: radical not an ideal");
                    cond[k][i * n + j] = rc[j].get_num();
                }
            }
        auto enlarge = kernel_mod_q(cond, q);
        if (enlarge.empty()) break;
        // O' = O + (1/q) * span(enlarge)
        std::vector<RVec> allrows = basis;
        for (const auto& y : enlarge) {
            RVec pw(n, Rat(0));
            for (size_t k = 0; k < n; ++k)
                for (size_t j = 0; j < n; ++j) pw[j] += make_rat(y[k], q) * basis[k][j];
            allrows.push_back(std::move(pw));
        }
        // HNF over Q via common denominator
        Int den = 1;
        for (const auto& row : allrows)
            for (const auto& v : row) den = lcm(den, Int(v.get_den()));
        std::vector<std::vector<Int>> irows;
        for (const auto& row : allrows) {
            std::vector<Int> ir(n);
            for (size_t j = 0; j < n; ++j) {
                Rat scaled = row[j] * Rat(den);
                assert(scaled.get_den() == 1);
                ir[j] = scaled.get_num();
            }
            irows.push_back(std::move(ir));
        }
        auto H = hnf(std::move(irows), n);
        assert(H.size() == n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) basis[i][j] = make_rat(H[i][j], den);
        changed = true;
    }
    return changed;
}

// Dedekind q-maximality test for the equation order Z[x]/(f)
bool dedekind_is_q_maximal(const IntPoly& f, const Int& q) {
    if (q > LONG_MAX / 4) return false;  // fall through to Round-2
    long p = static_cast<long>(q.get_si());
    // work in F_p[x] with IntPoly coefficients reduced
    auto modp = [&](const IntPoly& g) {
        std::vector<Int> c(static_cast<size_t>(g.degree()) + 1);
        for (int i = 0; i <= g.degree(); ++i) {
            Int v = g[i] % p;
            if (v < 0) v += p;
            c[static_cast<size_t>(i)] = v;
        }
        return IntPoly(std::move(c));
    };
    // gcd over F_p with IntPoly coefficients reduced mod p (degrees <= 4)
    auto gcdp = [&](IntPoly a, IntPoly b) -> IntPoly {
        a = modp(a);
        b = modp(b);
        while (!b.is_zero()) {
            // make b monic mod p
            Int inv;
            Int blc = b.lc() % p;
            mpz_invert(inv.get_mpz_t(), blc.get_mpz_t(), Int(p).get_mpz_t());
            std::vector<Int> bc(b.coeffs());
            for (auto& v : bc) v = v * inv % p;
            IntPoly bm{std::move(bc)};
            // a mod bm
            std::vector<Int> rc(a.coeffs());
            IntPoly r{std::move(rc)};
            while (r.degree() >= bm.degree() && !r.is_zero()) {
                Int c = r.lc() % p;
                int shift = r.degree() - bm.degree();
                std::vector<Int> t(r.coeffs());
                for (int j = 0; j <= bm.degree(); ++j) {
                    t[static_cast<size_t>(shift + j)] = (t[static_cast<size_t>(shift + j)] - c * bm[j]) % p;
                    if (t[static_cast<size_t>(shift + j)] < 0) t[static_cast<size_t>(shift + j)] += p;
                }
                r = IntPoly(std::move(t));
            }
            a = std::move(bm);
            b = modp(r);
        }
        return a;
    };
    // remainder of a by monic b, mod p
    auto remp = [&](const IntPoly& a, const IntPoly& b) {
        IntPoly r = modp(a);
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Int c = r.lc() % p;
            int shift = r.degree() - b.degree();
            std::vector<Int> t(r.coeffs());
            for (int j = 0; j <= b.degree(); ++j) {
                size_t idx = static_cast<size_t>(shift + j);
                t[idx] = (t[idx] - c * b[j]) % p;
                if (t[idx] < 0) t[idx] += p;
            }
            t[static_cast<size_t>(r.degree())] = 0;
            r = IntPoly(std::move(t));
        }
        return r;
    };
    IntPoly fp = modp(f);
    IntPoly g_star = gcdp(fp, fp.derivative());  // gcd(f, f') mod p
    if (g_star.degree() == 0) return true;       // f squarefree mod p
    // squarefree part and cofactor
    auto div = [&](const IntPoly& a, const IntPoly& b) {
        // exact division mod p (b monic mod p)
        IntPoly r = modp(a);
        std::vector<Int> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, 0);
        while (r.degree() >= b.degree() && !r.is_zero()) {
            Int c = r.lc() % p;
            int shift = r.degree() - b.degree();
            quot[static_cast<size_t>(shift)] = c;
            std::vector<Int> t(r.coeffs());
            for (int j = 0; j <= b.degree(); ++j) {
                t[static_cast<size_t>(shift + j)] = (t[static_cast<size_t>(shift + j)] - c * b[j]) % p;
                if (t[static_cast<size_t>(shift + j)] < 0) t[static_cast<size_t>(shift + j)] += p;
            }
            r = IntPoly(std::move(t));
        }
        return IntPoly(std::move(quot));
    };
    // normalize g_star monic
    {
        Int inv;
        mpz_invert(inv.get_mpz_t(), Int(g_star.lc() % p).get_mpz_t(), Int(p).get_mpz_t());
        std::vector<Int> c(g_star.coeffs());
        for (auto& v : c) v = v * inv % p;
        g_star = IntPoly(std::move(c));
    }
    IntPoly gbar = div(fp, g_star);
    // gbar is the radical of f mod p only when p divides no factor
    // multiplicity; verify (squarefree and f | gbar^n), else let Round-2
    // decide
    if (gbar.degree() == 0) return false;
    if (gcdp(gbar, gbar.derivative()).degree() != 0) return false;
    IntPoly pw{std::vector<Int>{1}};
    for (int i = 0; i < f.degree(); ++i) pw = modp(pw * gbar);
    if (!remp(pw, fp).is_zero()) return false;
    IntPoly hbar = div(fp, gbar);  // f / gbar
    // T = (gbar*hbar - f)/p over Z, using the canonical lifts
    IntPoly T = gbar * hbar - f;
    std::vector<Int> tc(T.coeffs());
    for (auto& v : tc) {
        assert(v % p == 0);
        v /= p;
    }
    IntPoly Tp{std::move(tc)};
    IntPoly d = gcdp(gcdp(Tp, gbar), hbar);
    return d.degree() == 0;
}

}  // namespace

Int field_discriminant(const IntPoly& f, std::vector<std::vector<Rat>>* basis_out) {
    int n = f.degree();
    if (!f.is_monic() || (n != 2 && n != 4)) throw Error("field_discriminant: monic of degree 2 or 4 required");
    if (!is_irreducible(f)) throw Error("field_discriminant: reducible input");
    Int D = discriminant(f);
    Factorization fac = factor(D);
    if (!fac.complete()) throw Error("field_discriminant: discriminant factorization timed out");
    Order O{f, {}};
    size_t un = static_cast<size_t>(n);
    O.basis.assign(un, RVec(un, Rat(0)));
    for (size_t i = 0; i < un; ++i) O.basis[i][i] = 1;
    for (const auto& [q, e] : fac.primes) {
        if (e < 2) continue;
        if (dedekind_is_q_maximal(f, q)) continue;
        O.q_maximalize(q);
    }
    if (basis_out) *basis_out = O.basis;
    Rat dd = Rat(D) * det(O.basis) * det(O.basis);
    dd.canonicalize();
    if (dd.get_den() != 1) throw Error("field_discriminant: non-integral result (internal)");
    Int result = dd.get_num();
    // index^2 identity
    Int quo = D / result;
    if (D % result != 0 || !is_perfect_square(quo))
        throw Error("field_discriminant: index-square identity violated (internal)");
    return result;
}

}  // namespace g2end
