#ifndef G2END_ZARITH_HPP
#define G2END_ZARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace g2end {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// num/den in canonical form (mpq_class's two-argument constructor does
/// not canonicalize, which breaks later mpq arithmetic).
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// Exact square root if n is a perfect square.
std::optional<Int> sqrt_exact(const Int& n);

/// Kronecker symbol (a|n).
inline int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

/// Deterministic Miller-Rabin, valid for n < 3.3e24; falls back to
/// extra random bases above that.
bool is_prime(const Int& n);

/// Ascending primes <= n.
std::vector<long> primes_up_to(long n);

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m);
long invmod_long(long a, long m);

/// All divisors (positive) from a prime-power list; caller adds signs.
std::vector<Int> divisors_from_factorization(const std::vector<std::pair<Int, int>>& pf);

/// Complete prime factorization of |n| (trial division then Pollard rho),
/// or nullopt if the rho budget is exhausted. n != 0.
std::optional<std::vector<std::pair<Int, int>>> try_factor(const Int& n,
                                                           uint64_t rho_budget = 20'000'000);

/// Hilbert symbol (a,b)_p in {+1,-1}; p = 0 means the real place.
int hilbert_symbol(Int a, Int b, const Int& p);

/// Finite ramified primes of the quaternion algebra (a,b / Q).
std::vector<Int> quaternion_ramified_primes(const Int& a, const Int& b);

/// Largest n-th root r with r^n = q, if q is an exact n-th power (n odd
/// allows negative q).
std::optional<Rat> nth_root_exact(const Rat& q, unsigned n);

}  // namespace g2end

#endif
