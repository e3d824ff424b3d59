#include "g2end/zarith.hpp"

#include <algorithm>

namespace g2end {

std::optional<Int> sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

long invmod_long(long a, long m) {
    long t = 0, nt = 1, r = m, nr = a % m;
    if (nr < 0) nr += m;
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw Error("invmod: not invertible");
    return t < 0 ? t + m : t;
}

namespace {

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, int s) {
    if (a % n == 0) return false;
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witnessed
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (long p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    // the 12 bases below are a deterministic test for n < 3.317e24
    for (long p : small)
        if (miller_rabin_witness(n, Int(p), d, s)) return false;
    static const Int det_bound("3317044064679887385961981");
    if (n < det_bound) return true;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<long> primes_up_to(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> s(static_cast<size_t>(n) + 1, true);
    s[0] = s[1] = false;
    for (long i = 2; i * i <= n; ++i)
        if (s[static_cast<size_t>(i)])
            for (long j = i * i; j <= n; j += i) s[static_cast<size_t>(j)] = false;
    for (long i = 2; i <= n; ++i)
        if (s[static_cast<size_t>(i)]) out.push_back(i);
    return out;
}

std::vector<Int> divisors_from_factorization(const std::vector<std::pair<Int, int>>& pf) {
    std::vector<Int> divs{1};
    for (const auto& [p, e] : pf) {
        size_t base = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

namespace {

// Pollard rho (Brent variant); returns a nontrivial factor of odd
// composite n, or 0 when the iteration budget runs out.
Int pollard_rho(const Int& n, uint64_t budget) {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xc0ffee);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Int c = rng.get_z_range(n - 3) + 1;
        Int x = rng.get_z_range(n - 2) + 1, y = x, d = 1;
        Int saved_x = x, saved_y = y;
        uint64_t steps = 0;
        Int prod = 1;
        while (d == 1) {
            if (++steps > budget / 64) break;
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x - y;
            if (diff == 0) break;
            prod = prod * diff % n;
            if (steps % 64 == 0) {
                d = gcd(prod, n);
                if (d == n) {  // backtrack one block
                    d = 1;
                    x = saved_x;
                    y = saved_y;
                    for (int i = 0; i < 64 && d == 1; ++i) {
                        x = (x * x + c) % n;
                        y = (y * y + c) % n;
                        y = (y * y + c) % n;
                        d = gcd(Int(abs(x - y)), n);
                    }
                    break;
                }
                saved_x = x;
                saved_y = y;
            }
        }
        if (d > 1 && d < n) return d;
    }
    return 0;
}

bool factor_rec(const Int& n, std::vector<Int>& primes, uint64_t budget) {
    if (n == 1) return true;
    if (is_prime(n)) {
        primes.push_back(n);
        return true;
    }
    Int d = pollard_rho(n, budget);
    if (d == 0) return false;
    return factor_rec(d, primes, budget) && factor_rec(Int(n / d), primes, budget);
}

}  // namespace

std::optional<std::vector<std::pair<Int, int>>> try_factor(const Int& n, uint64_t rho_budget) {
    if (n == 0) throw Error("try_factor: zero");
    static const std::vector<long> small_primes = primes_up_to(10'000);
    Int m = abs(n);
    std::vector<std::pair<Int, int>> pf;
    for (long q : small_primes) {
        if (Int(q) * q > m) break;
        if (!mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(q))) continue;
        int e = 0;
        while (m % q == 0) {
            m /= q;
            ++e;
        }
        pf.emplace_back(q, e);
    }
    if (m > 1) {
        if (m < Int(10'000) * 10'000 || is_prime(m)) {
            pf.emplace_back(m, 1);
        } else {
            std::vector<Int> primes;
            if (!factor_rec(m, primes, rho_budget)) return std::nullopt;
            std::sort(primes.begin(), primes.end());
            for (size_t i = 0; i < primes.size();) {
                size_t j = i;
                while (j < primes.size() && primes[j] == primes[i]) ++j;
                pf.emplace_back(primes[i], static_cast<int>(j - i));
                i = j;
            }
        }
    }
    std::sort(pf.begin(), pf.end());
    return pf;
}

namespace {

// strips powers of p, returns exponent
int strip(Int& u, const Int& p) {
    int e = 0;
    while (u % p == 0) {
        u /= p;
        ++e;
    }
    return e;
}

}  // namespace

int hilbert_symbol(Int a, Int b, const Int& p) {
    if (a == 0 || b == 0) throw Error("hilbert_symbol: zero argument");
    if (p == 0)  // real place
        return (a < 0 && b < 0) ? -1 : 1;
    if (p == 2) {
        int alpha = strip(a, 2), beta = strip(b, 2);
        // a, b now odd units
        auto eps = [](const Int& u) { return ((u - 1) / 2) % 2 != 0; };
        auto omega = [](const Int& u) { return ((u * u - 1) / 8) % 2 != 0; };
        bool e = (eps(a) && eps(b)) ^ (alpha % 2 != 0 && omega(b)) ^ (beta % 2 != 0 && omega(a));
        return e ? -1 : 1;
    }
    int alpha = strip(a, p), beta = strip(b, p);
    bool e = false;
    if (alpha % 2 != 0 && beta % 2 != 0 && ((p - 1) / 2) % 2 != 0) e = !e;
    if (beta % 2 != 0 && kronecker(a, p) == -1) e = !e;
    if (alpha % 2 != 0 && kronecker(b, p) == -1) e = !e;
    return e ? -1 : 1;
}

std::vector<Int> quaternion_ramified_primes(const Int& a, const Int& b) {
    std::vector<Int> ram;
    Int n = 2 * a * b;
    n = abs(n);
    std::vector<Int> cand{2};
    // odd primes dividing a*b
    Int m = abs(a * b);
    for (Int q = 3; q * q <= m; q += 2) {
        if (m % q == 0) {
            cand.push_back(q);
            while (m % q == 0) m /= q;
        }
    }
    if (m > 2) cand.push_back(m);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (const Int& q : cand)
        if (hilbert_symbol(a, b, q) == -1) ram.push_back(q);
    return ram;
}

std::optional<Rat> nth_root_exact(const Rat& q, unsigned n) {
    if (n == 0) throw Error("nth_root_exact: n = 0");
    if (q == 0) return Rat(0);
    bool neg = q < 0;
    if (neg && n % 2 == 0) return std::nullopt;
    Int num = abs(q.get_num()), den = q.get_den();
    Int rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) == 0) return std::nullopt;
    Rat r(neg ? Int(-rn) : rn, rd);
    r.canonicalize();
    return r;
}

}  // namespace g2end
