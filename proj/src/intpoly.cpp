#include "g2end/intpoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace g2end {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

IntPoly IntPoly::x_power(int k) {
    std::vector<Int> c(static_cast<size_t>(k) + 1, 0);
    c.back() = 1;
    return IntPoly(std::move(c));
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::operator[](int i) const {
    static const Int zero = 0;
    if (i < 0 || i > degree()) return zero;
    return c_[static_cast<size_t>(i)];
}

const Int& IntPoly::lc() const {
    if (c_.empty()) throw Error("lc of zero polynomial");
    return c_.back();
}

const Int& IntPoly::constant() const {
    static const Int zero = 0;
    return c_.empty() ? zero : c_.front();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> r(c_);
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& k) const {
    std::vector<Int> r(c_);
    for (auto& v : r) v *= k;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return IntPoly();
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(r));
}

Int IntPoly::eval(const Int& v) const {
    Int r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
    return r;
}

Rat IntPoly::eval(const Rat& v) const {
    Rat r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * v + Rat(c_[i]);
    return r;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& v : c_) g = gcd(g, v);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    Int g = content();
    if (g == 0) return IntPoly();
    if (lc() < 0) g = -g;
    std::vector<Int> r(c_);
    for (auto& v : r) v /= g;
    return IntPoly(std::move(r));
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& o) const {
    if (o.is_zero()) throw Error("division by zero polynomial");
    if (is_zero()) return IntPoly();
    if (degree() < o.degree()) return std::nullopt;
    std::vector<Rat> rem(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) rem[i] = Rat(c_[i]);
    int dq = degree() - o.degree();
    std::vector<Rat> q(static_cast<size_t>(dq) + 1);
    Rat olc{o.lc()};
    for (int k = dq; k >= 0; --k) {
        Rat coeff = rem[static_cast<size_t>(k + o.degree())] / olc;
        q[static_cast<size_t>(k)] = coeff;
        for (int j = 0; j <= o.degree(); ++j)
            rem[static_cast<size_t>(k + j)] -= coeff * Rat(o[j]);
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    std::vector<Int> qi(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        if (q[i].get_den() != 1) return std::nullopt;
        qi[i] = q[i].get_num();
    }
    return IntPoly(std::move(qi));
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = (*this)[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Bareiss fraction-free determinant, destroys m.
Int bareiss_det(std::vector<std::vector<Int>>& m) {
    size_t n = m.size();
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw Error("resultant: zero polynomial input");
    int m = f.degree(), n = g.degree();
    if (m == 0) return pow_int(f.lc(), static_cast<unsigned long>(n));
    if (n == 0) return pow_int(g.lc(), static_cast<unsigned long>(m));
    size_t dim = static_cast<size_t>(m + n);
    std::vector<std::vector<Int>> s(dim, std::vector<Int>(dim, 0));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) s[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = f[m - j];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) s[static_cast<size_t>(n + r)][static_cast<size_t>(r + j)] = g[n - j];
    return bareiss_det(s);
}

Int discriminant(const IntPoly& f) {
    int n = f.degree();
    if (n < 1) throw Error("discriminant: constant polynomial");
    if (n == 1) return 1;
    Int r = resultant(f, f.derivative());
    Int d;
    mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), f.lc().get_mpz_t());
    long s = static_cast<long>(n) * (n - 1) / 2;
    return (s % 2 == 0) ? d : Int(-d);
}

IntPoly twist(const IntPoly& f, unsigned m) {
    if (!f.is_monic()) throw Error("twist: input must be monic");
    if (m == 0) throw Error("twist: m must be >= 1");
    if (m == 1) return f;
    int n = f.degree();
    if (n == 0) return f;
    // evaluate Res_y(f(y), c - y^m) at c = 0..n, then interpolate
    std::vector<Rat> vals(static_cast<size_t>(n) + 1);
    for (int c = 0; c <= n; ++c) {
        std::vector<Int> gc(m + 1, 0);
        gc[0] = c;
        gc[m] = -1;
        vals[static_cast<size_t>(c)] = Rat(resultant(f, IntPoly(gc)));
    }
    // Lagrange interpolation at nodes 0..n
    std::vector<Rat> acc(static_cast<size_t>(n) + 2, Rat(0));
    for (int i = 0; i <= n; ++i) {
        // basis polynomial prod_{j != i} (x - j)/(i - j)
        std::vector<Rat> basis{Rat(1)};
        Rat denom(1);
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            std::vector<Rat> nb(basis.size() + 1, Rat(0));
            for (size_t k = 0; k < basis.size(); ++k) {
                nb[k + 1] += basis[k];
                nb[k] -= Rat(j) * basis[k];
            }
            basis = std::move(nb);
            denom *= Rat(i - j);
        }
        Rat w = vals[static_cast<size_t>(i)] / denom;
        for (size_t k = 0; k < basis.size(); ++k) acc[k] += w * basis[k];
    }
    std::vector<Int> out;
    out.reserve(acc.size());
    for (auto& q : acc) {
        q.canonicalize();
        if (q.get_den() != 1) throw Error("twist: non-integral coefficient (internal)");
        out.push_back(q.get_num());
    }
    IntPoly result{std::move(out)};
    if (result.lc() < 0) result = -result;
    if (!result.is_monic() || result.degree() != n) throw Error("twist: normalization failed (internal)");
    // constant term is (-1)^n ((-1)^n a0)^m: the product of the m-th powers
    // of the roots, re-signed
    Int expect = pow_int((n % 2 == 0) ? f.constant() : Int(-f.constant()), m);
    if (n % 2 == 1) expect = -expect;
    if (result.constant() != expect) throw Error("twist: constant-term check failed (internal)");
    return result;
}

namespace {

// factor-degree reachability: which factor degrees are consistent with a
// mod-p degree pattern (subset sums)
std::vector<bool> subset_sums(const std::vector<int>& pattern, int n) {
    std::vector<bool> can(static_cast<size_t>(n) + 1, false);
    can[0] = true;
    for (int part : pattern)
        for (int s = n; s >= part; --s)
            if (can[static_cast<size_t>(s - part)]) can[static_cast<size_t>(s)] = true;
    return can;
}

// all positive and negative divisors of |v|
std::vector<Int> signed_divisors(const Int& v) {
    auto pf = try_factor(v);
    if (!pf) throw Error("is_irreducible: cannot factor coefficient for divisor enumeration");
    auto divs = divisors_from_factorization(*pf);
    std::vector<Int> out;
    out.reserve(divs.size() * 2);
    for (const auto& d : divs) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

bool has_rational_root(const IntPoly& f) {
    // f primitive; roots p/q with p | f[0], q | lc
    if (f.constant() == 0) return true;
    auto ps = signed_divisors(f.constant());
    auto qs = signed_divisors(f.lc());
    int n = f.degree();
    for (const Int& q : qs) {
        if (q <= 0) continue;  // sign carried by p
        for (const Int& p : ps) {
            if (gcd(abs(p), q) != 1) continue;
            // sum a_i p^i q^(n-i)
            Int acc = 0, pk = 1;
            std::vector<Int> qpow(static_cast<size_t>(n) + 1);
            qpow[0] = 1;
            for (int i = 1; i <= n; ++i) qpow[static_cast<size_t>(i)] = qpow[static_cast<size_t>(i - 1)] * q;
            for (int i = 0; i <= n; ++i) {
                acc += f[i] * pk * qpow[static_cast<size_t>(n - i)];
                pk *= p;
            }
            if (acc == 0) return true;
        }
    }
    return false;
}

// quartic (2,2) splitting via divisor pairs and an integer quadratic solve
bool quartic_has_quadratic_factor(const IntPoly& f) {
    const Int &a4 = f[4], &a3 = f[3], &a2 = f[2], &a1 = f[1], &a0 = f[0];
    if (a0 == 0) return true;  // x divides
    auto lead_divs = signed_divisors(a4);
    auto const_divs = signed_divisors(a0);
    for (const Int& b2 : lead_divs) {
        if (b2 <= 0) continue;  // normalize sign of first factor's lc
        Int c2 = a4 / b2;
        if (b2 * c2 != a4) continue;
        for (const Int& b0 : const_divs) {
            Int c0 = a0 / b0;
            if (b0 * c0 != a0) continue;
            // (b2 x^2 + b1 x + b0)(c2 x^2 + c1 x + c0)
            // b1 c1 = a2 - b2 c0 - b0 c2 =: K;  b2 c1 + c2 b1 = a3
            Int K = a2 - b2 * c0 - b0 * c2;
            // c2 b1^2 - a3 b1 + b2 K = 0
            Int A = c2, Bq = -a3, C = b2 * K;
            Int disc = Bq * Bq - 4 * A * C;
            auto sq = sqrt_exact(disc);
            if (!sq) continue;
            for (int sgn : {1, -1}) {
                Int num = -Bq + sgn * (*sq);
                if (num % (2 * A) != 0) continue;
                Int b1 = num / (2 * A);
                Int rem = a3 - c2 * b1;
                if (rem % b2 != 0) continue;
                Int c1 = rem / b2;
                if (b1 * c0 + b0 * c1 == a1 && b1 * c1 == K) return true;
            }
        }
    }
    return false;
}

// search for a factor of given degree d (2 or 3) by divisor enumeration of
// lc and constant plus Mignotte-bounded middle coefficients
bool has_degree_d_factor(const IntPoly& f, int d) {
    if (f.constant() == 0) return true;
    Int norm2 = 0;
    for (int i = 0; i <= f.degree(); ++i) norm2 += f[i] * f[i];
    Int bound = (isqrt(norm2) + 1 + abs(f.lc())) * (1 << d);
    auto lead_divs = signed_divisors(f.lc());
    auto const_divs = signed_divisors(f.constant());
    for (const Int& bd : lead_divs) {
        if (bd <= 0) continue;
        for (const Int& b0 : const_divs) {
            if (d == 2) {
                for (Int b1 = -bound; b1 <= bound; ++b1) {
                    IntPoly g{std::vector<Int>{b0, b1, bd}};
                    if (g.degree() == 2 && f.divide_exact(g)) return true;
                }
            } else {
                for (Int b1 = -bound; b1 <= bound; ++b1)
                    for (Int b2 = -bound; b2 <= bound; ++b2) {
                        IntPoly g{std::vector<Int>{b0, b1, b2, bd}};
                        if (g.degree() == 3 && f.divide_exact(g)) return true;
                    }
            }
        }
    }
    return false;
}

}  // namespace

bool is_irreducible(const IntPoly& fin) {
    int n = fin.degree();
    if (n < 2 || n > 6) throw Error("is_irreducible: degree outside 2..6");
    IntPoly f = fin.primitive_part();

    // mod-p degree-pattern pre-filter; can prove irreducibility, never
    // reducibility
    std::vector<bool> possible(static_cast<size_t>(n) + 1, true);
    int tried = 0;
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
        if (tried >= 5) break;
        if (f.lc() % p == 0) continue;
        auto pattern = detail::degree_pattern_mod_p(f, p);
        if (pattern.empty()) continue;  // not squarefree mod p
        ++tried;
        auto can = subset_sums(pattern, n);
        for (int d = 1; d <= n; ++d)
            if (!can[static_cast<size_t>(d)]) possible[static_cast<size_t>(d)] = false;
    }
    bool any_split_possible = false;
    for (int d = 1; d <= n / 2; ++d)
        if (possible[static_cast<size_t>(d)]) any_split_possible = true;
    if (tried > 0 && !any_split_possible) return true;

    if (possible[1] && has_rational_root(f)) return false;
    if (n == 2 || n == 3) return true;  // no root and degree <= 3
    if (n == 4) {
        if (possible[2] && quartic_has_quadratic_factor(f)) return false;
        return true;
    }
    if (n == 5) {
        if (possible[2] && has_degree_d_factor(f, 2)) return false;
        return true;
    }
    // n == 6: (2,4) then (3,3)
    if (possible[2] && has_degree_d_factor(f, 2)) return false;
    if (possible[3] && has_degree_d_factor(f, 3)) return false;
    return true;
}

std::optional<IntPoly> perfect_square_root(const IntPoly& f) {
    if (f.degree() != 4 || !f.is_monic()) throw Error("perfect_square_root: monic quartic required");
    // h = x^2 + c1 x + c0 by coefficient matching
    if (f[3] % 2 != 0) return std::nullopt;
    Int c1 = f[3] / 2;
    Int t = f[2] - c1 * c1;
    if (t % 2 != 0) return std::nullopt;
    Int c0 = t / 2;
    IntPoly h{std::vector<Int>{c0, c1, 1}};
    if (h * h == f) return h;
    return std::nullopt;
}

GaloisCertificate galois_sn_certificate(const IntPoly& fin, long prime_budget) {
    IntPoly f = fin.primitive_part();
    int n = f.degree();
    if (n < 2 || n > 6) throw Error("galois_sn_certificate: degree outside 2..6");
    Int disc = discriminant(f);
    if (disc == 0) throw Error("galois_sn_certificate: non-squarefree input");

    GaloisCertificate cert;
    cert.discriminant_is_square = is_perfect_square(disc);

    if (!is_irreducible(f)) return cert;  // not transitive: Unknown

    if (n == 2) {
        if (!cert.discriminant_is_square) cert.verdict = GaloisCertificate::Verdict::ProvenSn;
        return cert;
    }
    if (n == 3) {
        cert.verdict = cert.discriminant_is_square ? GaloisCertificate::Verdict::ProvenAn
                                                   : GaloisCertificate::Verdict::ProvenSn;
        return cert;
    }

    bool has_primitive_cycle = false;  // prime q-cycle with q > n/2
    bool has_transposition = false;
    bool has_three_cycle = false;
    for (long p : primes_up_to(prime_budget)) {
        if (f.lc() % p == 0 || disc % p == 0) continue;
        auto pattern = detail::degree_pattern_mod_p(f, p);
        if (pattern.empty()) continue;
        // q-cycle: a unique prime part q > n/2 exceeding all other parts
        int mx = *std::max_element(pattern.begin(), pattern.end());
        long cnt_mx = std::count(pattern.begin(), pattern.end(), mx);
        bool interesting = false;
        if (2 * mx > n && cnt_mx == 1 && is_prime(Int(mx)) && !has_primitive_cycle) {
            has_primitive_cycle = true;
            interesting = true;
        }
        // transposition: exactly one even part, equal to 2
        long evens = std::count_if(pattern.begin(), pattern.end(), [](int v) { return v % 2 == 0; });
        if (evens == 1 && std::count(pattern.begin(), pattern.end(), 2) == 1 && !has_transposition) {
            has_transposition = true;
            interesting = true;
        }
        // 3-cycle: exactly one part divisible by 3, equal to 3
        long by3 = std::count_if(pattern.begin(), pattern.end(), [](int v) { return v % 3 == 0; });
        if (by3 == 1 && std::count(pattern.begin(), pattern.end(), 3) == 1 && !has_three_cycle) {
            has_three_cycle = true;
            interesting = true;
        }
        if (interesting) cert.witnesses.emplace_back(p, pattern);
        if (has_primitive_cycle &&
            ((has_transposition && !cert.discriminant_is_square) ||
             (has_three_cycle && cert.discriminant_is_square)))
            break;
    }
    if (has_primitive_cycle && has_transposition && !cert.discriminant_is_square)
        cert.verdict = GaloisCertificate::Verdict::ProvenSn;
    else if (has_primitive_cycle && has_three_cycle && cert.discriminant_is_square)
        cert.verdict = GaloisCertificate::Verdict::ProvenAn;
    return cert;
}

}  // namespace g2end
