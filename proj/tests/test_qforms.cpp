#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "g2end/qforms.hpp"

using namespace g2end;

namespace {

// random GL2(Z) change of basis applied to a form
BinaryQuadraticForm random_transform(const BinaryQuadraticForm& f, std::mt19937_64& rng) {
    // start from the identity and multiply a few elementary matrices
    Int m11 = 1, m12 = 0, m21 = 0, m22 = 1;
    for (int step = 0; step < 6; ++step) {
        long k = static_cast<long>(rng() % 5) - 2;
        if (rng() % 2) {
            // column op (m,n) -> (m + k n, n)
            m12 += k * m11;
            m22 += k * m21;
        } else {
            m11 += k * m12;
            m21 += k * m22;
        }
        if (rng() % 4 == 0) {
            std::swap(m11, m12);
            std::swap(m21, m22);
        }
    }
    // Q'(u,v) = Q(m11 u + m12 v, m21 u + m22 v)
    Int det = m11 * m22 - m12 * m21;
    REQUIRE(abs(det) == 1);
    BinaryQuadraticForm g;
    g.a = f.value(m11, m21);
    g.c = f.value(m12, m22);
    // cross term: Q(u+v basis sum) expansion
    g.x = f.a * m11 * m12 + f.x * (m11 * m22 + m12 * m21) + f.c * m21 * m22;
    return g;
}

}  // namespace

TEST_CASE("reduce_gl2z fixtures") {
    BinaryQuadraticForm d12{12, 0, 12};
    CHECK(reduce_gl2z(d12) == d12);
    CHECK(reduce_gl2z(BinaryQuadraticForm{12, 12, 24}) == BinaryQuadraticForm{12, 0, 12});
    CHECK(reduce_gl2z(BinaryQuadraticForm{24, 0, 12}) == BinaryQuadraticForm{12, 0, 24});
    CHECK_THROWS_AS(reduce_gl2z(BinaryQuadraticForm{1, 5, 1}), Error);
}

TEST_CASE("reduction is idempotent and invariant under 50 random basis changes") {
    std::mt19937_64 rng(59);
    for (int it = 0; it < 50; ++it) {
        BinaryQuadraticForm f;
        f.a = 1 + static_cast<long>(rng() % 30);
        f.x = static_cast<long>(rng() % 20) - 10;
        f.c = 1 + static_cast<long>(rng() % 30);
        if (!f.positive_definite()) continue;
        BinaryQuadraticForm canon = reduce_gl2z(f);
        CHECK(reduce_gl2z(canon) == canon);
        CHECK(canon.det() == f.det());
        for (int t = 0; t < 50; ++t) {
            BinaryQuadraticForm g = random_transform(f, rng);
            REQUIRE(g.det() == f.det());
            CHECK(reduce_gl2z(g) == canon);
        }
    }
}

TEST_CASE("primitive representation fixtures from the deduction procedure") {
    auto r1 = primitively_represents(BinaryQuadraticForm{12, 0, 24}, Int(36));
    REQUIRE(r1.has_value());
    CHECK(*r1 == std::make_pair(Int(1), Int(1)));
    auto r2 = primitively_represents(BinaryQuadraticForm{12, 2, 24}, Int(40));
    REQUIRE(r2.has_value());
    CHECK(*r2 == std::make_pair(Int(1), Int(1)));
    auto r3 = primitively_represents(BinaryQuadraticForm{12, 4, 24}, Int(28));
    REQUIRE(r3.has_value());
    CHECK(*r3 == std::make_pair(Int(1), Int(-1)));
    auto r4 = primitively_represents(BinaryQuadraticForm{12, 6, 24}, Int(48));
    REQUIRE(r4.has_value());
    CHECK(*r4 == std::make_pair(Int(1), Int(1)));
    CHECK(!primitively_represents(BinaryQuadraticForm{12, 12, 24}, Int(28)));
    CHECK(!primitively_represents(BinaryQuadraticForm{12, 12, 24}, Int(48)));
}

TEST_CASE("primitive representation is a class invariant up to 200") {
    std::mt19937_64 rng(61);
    int tested = 0;
    while (tested < 12) {
        BinaryQuadraticForm f;
        f.a = 1 + static_cast<long>(rng() % 20);
        f.x = static_cast<long>(rng() % 9) - 4;
        f.c = 1 + static_cast<long>(rng() % 20);
        if (!f.positive_definite() || f.det() > 600) continue;
        BinaryQuadraticForm g = random_transform(f, rng);
        for (Int D = 1; D <= 200; ++D)
            CHECK(primitively_represents(f, D).has_value() == primitively_represents(g, D).has_value());
        ++tested;
    }
}

TEST_CASE("enumerate_candidates") {
    auto cands = enumerate_candidates(Int(12), Int(24));
    // x even by the congruence filter, one representative per class
    std::set<Int> xs;
    for (const auto& f : cands) {
        CHECK(f.x % 2 == 0);
        CHECK(f.positive_definite());
        Int q11 = f.a + 2 * f.x + f.c;
        CHECK(is_discriminant(q11));
        xs.insert(f.x);
    }
    for (Int x : {0, 2, 4, 6, 12}) CHECK(xs.count(x));

    // brute-force cross-check for (5,5): candidates must match a direct scan
    auto c55 = enumerate_candidates(Int(5), Int(5));
    std::vector<BinaryQuadraticForm> reduced;
    std::set<std::string> seen;
    for (Int x = 0; x * x < 25; ++x) {
        BinaryQuadraticForm f{5, x, 5};
        Int q11 = 10 + 2 * x;
        Int r = q11 % 4;
        if (r != 0 && r != 1) continue;
        if (f.det() <= 0) continue;
        auto red = reduce_gl2z(f);
        std::string key = red.a.get_str() + "," + red.x.get_str() + "," + red.c.get_str();
        if (!seen.insert(key).second) continue;
        reduced.push_back(f);
    }
    CHECK(c55.size() == reduced.size());

    CHECK_THROWS_AS(enumerate_candidates(Int(2), Int(5)), Error);
    CHECK_THROWS_AS(enumerate_candidates(Int(-4), Int(5)), Error);
}

TEST_CASE("certify_qm_sets") {
    BinaryQuadraticForm target{12, 12, 24};
    auto sets = certify_qm_sets(target);
    CHECK(sets.P == std::make_pair(Int(12), Int(24)));
    // the inequivalent x=6 candidate is separated by 48
    bool has48 = false;
    for (const Int& d : sets.N) {
        CHECK(!primitively_represents(target, d));
        if (d == 48) has48 = true;
    }
    CHECK(has48);
    CHECK(sets.N.size() == enumerate_candidates(Int(12), Int(24)).size() - 1);

    // diagonal target with a single class: empty N
    auto one = certify_qm_sets(reduce_gl2z(BinaryQuadraticForm{5, 2, 5}));
    // (may or may not have inequivalent companions; just check the assert
    // holds and P echoes the diagonal)
    CHECK(one.P.first == 5);
}

TEST_CASE("quaternion algebra ramification via Hilbert symbols") {
    // the paper's order: disc 36 sits in the algebra ramified at {2,3}
    CHECK(quaternion_algebra_disc(BinaryQuadraticForm{12, 12, 24}) == 6);
    CHECK(hilbert_symbol(Int(-1), Int(-1), Int(2)) == -1);
    CHECK(hilbert_symbol(Int(-1), Int(-1), Int(0)) == -1);
    CHECK(hilbert_symbol(Int(-1), Int(-1), Int(5)) == 1);
    // (-1,-1): Hamilton quaternions ramify at 2 and infinity
    auto ram = quaternion_ramified_primes(Int(-1), Int(-1));
    CHECK(ram == std::vector<Int>{2});
}

TEST_CASE("deduce_qm_ring reproduces the worked example") {
    std::map<Int, bool> paper{{4, false},  {8, false},  {12, true},  {16, false}, {20, false},
                              {24, true},  {28, false}, {36, false}, {40, false}, {48, false}};
    MembershipOracle oracle = [&paper](const Int& D) -> std::optional<bool> {
        auto it = paper.find(D);
        if (it == paper.end()) return std::nullopt;
        return it->second;
    };
    auto res = deduce_qm_ring(Int(12), Int(24), oracle);
    REQUIRE(res.order.has_value());
    CHECK(res.order->disc == 36);
    CHECK(res.order->algebra_disc == 6);
    CHECK(res.order->index_in_maximal == 6);
    CHECK(res.survivors.size() == 1);
    CHECK(res.survivors[0].x == 12);

    // all-false oracle: everything eliminated
    auto none = deduce_qm_ring(Int(12), Int(24), [](const Int&) { return std::optional<bool>(false); });
    CHECK(!none.order.has_value());
    CHECK(none.survivors.empty());

    // all-true oracle: multiple survivors, inconclusive
    auto all = deduce_qm_ring(Int(12), Int(24), [](const Int&) { return std::optional<bool>(true); });
    CHECK(!all.order.has_value());
    CHECK(all.survivors.size() > 1);
}

TEST_CASE("discriminant congruence of exposed values") {
    std::mt19937_64 rng(67);
    for (const auto& f : enumerate_candidates(Int(12), Int(24)))
        for (int it = 0; it < 40; ++it) {
            Int m = static_cast<long>(rng() % 9) - 4;
            Int n = static_cast<long>(rng() % 9) - 4;
            if (gcd(m, n) != 1) continue;
            Int v = f.value(m, n);
            Int r = v % 4;
            if (r < 0) r += 4;
            CHECK((r == 0 || r == 1));
        }
}
