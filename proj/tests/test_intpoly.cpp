#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "g2end/intpoly.hpp"

using namespace g2end;

namespace {

// independent oracle: full factor enumeration with no pre-filter
// (linear factors by rational roots over divisor pairs, quadratic factors
// by direct trial division over a divisor/coefficient box)
bool oracle_irreducible_quartic(const IntPoly& fin) {
    IntPoly f = fin.primitive_part();
    REQUIRE(f.degree() == 4);
    auto divs = [](Int v) {
        std::vector<Int> d;
        v = abs(v);
        for (Int i = 1; i <= v; ++i)
            if (v % i == 0) d.push_back(i);
        return d;
    };
    if (f.constant() == 0) return false;
    // linear: every rational p/q with p | a0, q | a4
    for (const Int& q : divs(f.lc()))
        for (const Int& p : divs(f.constant()))
            for (int s : {1, -1})
                if (f.eval(make_rat(s * p, q)) == 0) return false;
    // quadratic: b2 x^2 + b1 x + b0 with b2 | lc, b0 | a0, |b1| bounded
    Int bound = 0;
    for (int i = 0; i <= 4; ++i) bound += abs(f[i]);
    bound *= 4;
    for (const Int& b2 : divs(f.lc()))
        for (const Int& b0a : divs(f.constant()))
            for (int s0 : {1, -1})
                for (Int b1 = -bound; b1 <= bound; ++b1) {
                    IntPoly g{std::vector<Int>{s0 * b0a, b1, b2}};
                    if (g.degree() == 2 && f.divide_exact(g)) return false;
                }
    return true;
}

IntPoly random_monic(int deg, int coeff_bound, std::mt19937_64& rng) {
    std::vector<Int> c(static_cast<size_t>(deg) + 1);
    for (int i = 0; i < deg; ++i)
        c[static_cast<size_t>(i)] = static_cast<long>(rng() % (2 * coeff_bound + 1)) - coeff_bound;
    c[static_cast<size_t>(deg)] = 1;
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("resultant fixtures") {
    CHECK(resultant(IntPoly{-2, 1}, IntPoly{-3, 1}) == -1);
    CHECK(resultant(IntPoly{1, 0, 1}, IntPoly{1, 0, 1}) == 0);
    CHECK(resultant(IntPoly{-2, 0, 1}, IntPoly{-3, 0, 1}) == 1);
    CHECK_THROWS_AS(resultant(IntPoly{}, IntPoly{1, 1}), Error);
}

TEST_CASE("resultant swap symmetry on random inputs") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        int dm = 1 + static_cast<int>(rng() % 4), dn = 1 + static_cast<int>(rng() % 4);
        IntPoly f = random_monic(dm, 8, rng), g = random_monic(dn, 8, rng);
        Int lhs = resultant(f, g);
        Int rhs = resultant(g, f);
        if ((dm * dn) % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("discriminant fixtures") {
    // quadratic: b^2 - 4c
    for (long b = -4; b <= 4; ++b)
        for (long c = -4; c <= 4; ++c)
            CHECK(discriminant(IntPoly{c, b, 1}) == b * b - 4 * c);
    // depressed cubic: -4p^3 - 27q^2
    for (long p = -3; p <= 3; ++p)
        for (long q = -3; q <= 3; ++q)
            CHECK(discriminant(IntPoly{q, p, 0, 1}) == -4 * p * p * p - 27 * q * q);
    // quartic cyclotomic via the resultant definition
    CHECK(discriminant(IntPoly{1, 1, 1, 1, 1}) == 125);
    CHECK_THROWS_AS(discriminant(IntPoly{42}), Error);
}

TEST_CASE("twist fixtures") {
    CHECK(twist(IntPoly{2, -3, 1}, 2) == IntPoly{4, -5, 1});
    IntPoly f{3, -1, 4, 1, -5, 1};
    CHECK(twist(f, 1) == f);
    // roots of x^4+x^3+x^2+x+1 are primitive 5th roots of unity
    IntPoly c5{1, 1, 1, 1, 1};
    IntPoly xm1{-1, 1};
    CHECK(twist(c5, 5) == xm1 * xm1 * xm1 * xm1);
    CHECK_THROWS_AS(twist(IntPoly{1, 2}, 2), Error);  // non-monic
}

TEST_CASE("twist(f,2) equals the Graeffe product for 1000 random quartics") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 1000; ++it) {
        IntPoly f = random_monic(4, 50, rng);
        IntPoly t = twist(f, 2);
        // (-1)^4 g(x^2) = f(x) f(-x)
        std::vector<Int> fm(f.coeffs());
        for (size_t i = 1; i < fm.size(); i += 2) fm[i] = -fm[i];
        IntPoly prod = f * IntPoly(std::move(fm));
        std::vector<Int> expanded(9, 0);
        for (int i = 0; i <= t.degree(); ++i) expanded[static_cast<size_t>(2 * i)] = t[i];
        CHECK(prod == IntPoly(std::move(expanded)));
    }
}

TEST_CASE("twist composition f{ab} = (f{a}){b} and reducibility monotonicity") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 150; ++it) {
        int deg = 2 + static_cast<int>(rng() % 5);
        IntPoly f = random_monic(deg, 9, rng);
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b) {
                CHECK(twist(f, static_cast<unsigned>(a * b)) ==
                      twist(twist(f, static_cast<unsigned>(a)), static_cast<unsigned>(b)));
            }
    }
    // reducibility monotonicity on quartics: f{a} reducible => f{ab} reducible
    std::mt19937_64 rng2(17);
    int checked = 0;
    for (int it = 0; it < 400 && checked < 60; ++it) {
        IntPoly f = random_monic(4, 6, rng2);
        if (discriminant(f) == 0) continue;
        IntPoly t2 = twist(f, 2);
        if (discriminant(t2) == 0) continue;
        if (!is_irreducible(t2)) {
            IntPoly t4 = twist(f, 4);
            if (discriminant(t4) != 0) {
                CHECK(!is_irreducible(t4));
                ++checked;
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("twist f{12} = ((f{2}){2}){3} on 1000 quartics") {
    std::mt19937_64 rng(19);
    for (int it = 0; it < 1000; ++it) {
        IntPoly f = random_monic(4, 20, rng);
        CHECK(twist(f, 12) == twist(twist(twist(f, 2), 2), 3));
    }
}

TEST_CASE("is_irreducible fixtures") {
    CHECK(is_irreducible(IntPoly{1, 0, 1}));
    CHECK(!is_irreducible(IntPoly{-1, 0, 0, 0, 1}));
    CHECK(is_irreducible(IntPoly{-2, 0, 1}));
    CHECK(is_irreducible(IntPoly{1, 1, 1, 1, 1}));
    CHECK(!is_irreducible(IntPoly{1, 2, 3, 2, 1}));  // (x^2+x+1)^2
    CHECK(is_irreducible(IntPoly{-1, -1, 0, 0, 0, 1}));       // x^5-x-1
    CHECK(!is_irreducible(IntPoly{-1, 1, 1, -1, -1, 1}));     // (x-1)(x^4-x^2+1)
    CHECK(is_irreducible(IntPoly{1, 0, -1, 0, 1}));           // Phi_12
    CHECK(!is_irreducible(IntPoly{1, 1, 0, 0, 0, 1}));        // (x^2+x+1)(x^3-x^2+1)
    CHECK(is_irreducible(IntPoly{1, 1, 1, 1, 1, 1, 1}));  // Phi_7
    // product of two cubics
    IntPoly c1{1, 2, 0, 1}, c2{-3, 1, 1, 1};
    CHECK(!is_irreducible(c1 * c2));
    CHECK_THROWS_AS(is_irreducible(IntPoly{1, 1}), Error);
}

TEST_CASE("is_irreducible agrees with the brute-force oracle on 10^4 quartics") {
    std::mt19937_64 rng(23);
    int n = 0;
    while (n < 10000) {
        IntPoly f = random_monic(4, 10, rng);
        CHECK(is_irreducible(f) == oracle_irreducible_quartic(f));
        ++n;
    }
}

TEST_CASE("perfect_square_root") {
    IntPoly h{1, 1, 1};
    CHECK(perfect_square_root(h * h) == h);
    CHECK(!perfect_square_root(IntPoly{1, 0, 0, 0, 1}));
    std::mt19937_64 rng(29);
    for (int it = 0; it < 300; ++it) {
        IntPoly g = random_monic(2, 40, rng);
        auto r = perfect_square_root(g * g);
        REQUIRE(r.has_value());
        CHECK(*r == g);
        // a non-square with nonzero disc stays non-square after bumping a0
        IntPoly sq = g * g;
        std::vector<Int> c(sq.coeffs());
        c[0] += 1;
        IntPoly bumped{std::move(c)};
        if (discriminant(bumped) != 0) CHECK(!perfect_square_root(bumped));
    }
    CHECK_THROWS_AS(perfect_square_root(IntPoly{1, 1, 1}), Error);
}

TEST_CASE("galois certificates") {
    auto sn = galois_sn_certificate(IntPoly{-2, 0, 1});
    CHECK(sn.verdict == GaloisCertificate::Verdict::ProvenSn);

    auto s5 = galois_sn_certificate(IntPoly{-1, -1, 0, 0, 0, 1});
    CHECK(s5.verdict == GaloisCertificate::Verdict::ProvenSn);
    CHECK(!s5.discriminant_is_square);
    CHECK(!s5.witnesses.empty());

    // cyclic quartic: no S_n certificate can exist; no transposition pattern
    // appears for any prime below 1000
    auto c4 = galois_sn_certificate(IntPoly{1, 1, 1, 1, 1}, 1000);
    CHECK(c4.verdict == GaloisCertificate::Verdict::Unknown);
    for (const auto& [p, pattern] : c4.witnesses) {
        int evens = 0, twos = 0;
        for (int v : pattern) {
            if (v % 2 == 0) ++evens;
            if (v == 2) ++twos;
        }
        CHECK(!(evens == 1 && twos == 1));
    }
    CHECK_THROWS_AS(galois_sn_certificate(IntPoly{1, 2, 1}), Error);  // (x+1)^2
}

TEST_CASE("degree patterns via Dedekind reduction") {
    // x^5 - x - 1: (2,3) mod 2, (5) mod 3
    IntPoly f{-1, -1, 0, 0, 0, 1};
    CHECK(detail::degree_pattern_mod_p(f, 2) == std::vector<int>{2, 3});
    CHECK(detail::degree_pattern_mod_p(f, 3) == std::vector<int>{5});
}
