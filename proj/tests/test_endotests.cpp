#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2end/endotests.hpp"

using namespace g2end;

namespace {

const CurveModel& example_curve() {
    static CurveModel c{IntPoly{-1, 1, 1, -1, -1, 1}};  // x^5-x^4-x^3+x^2+x-1
    return c;
}

const CurveModel& split_curve() {
    // completed square of y^2+(x^2+x)y = x^6+3x^5+2x^4+7x^3+11x^2+14,
    // whose Jacobian is (7,7)-isogenous to a product of elliptic curves
    static CurveModel c{IntPoly{56, 0, 45, 30, 9, 12, 4}};
    return c;
}

}  // namespace

TEST_CASE("group theory constants") {
    CHECK(GroupTheoryConstants::exponent_bound == 12);
    CHECK(GroupTheoryConstants::field_case_degree_bound == 4);
    CHECK(GroupTheoryConstants::extension_degree_set[5] == 12);
}

TEST_CASE("geometric_irreducibility on the example curve: B=7 gives no-QM") {
    auto v = geometric_irreducibility(example_curve(), 7);
    CHECK(v.status == IrreducibilityVerdict::Status::AbsIrreducibleNoQM);
    CHECK(v.witness_prime == 7);
}

TEST_CASE("geometric_irreducibility step 1: irreducible quintic") {
    CurveModel c{IntPoly{-1, -1, 0, 0, 0, 1}};  // x^5 - x - 1, S_5
    // disc = 19 * 151: step 2 would also fire; check step order: step 1 wins
    auto v = geometric_irreducibility(c, 59);
    CHECK(v.status == IrreducibilityVerdict::Status::AbsIrreducible);
    CHECK(v.witness == "irreducible-quintic");
}

TEST_CASE("hall step and galois step") {
    CHECK(hall_trivial_witness(CurveModel{IntPoly{-1, -1, 0, 0, 0, 1}}) == Int(19));
    // even-degree models are excluded from the valuation-1 shortcut
    CHECK(!hall_trivial_witness(split_curve()));
    // 2^4 3^2: no odd valuation-1 prime
    CHECK(!hall_trivial_witness(example_curve()));

    // reducible quintic with square-free odd disc part: steps 1 fails,
    // step 2 fires inside the pipeline
    CurveModel c{IntPoly{0, 1, 0, 0, 0, 1}};  // y^2 = x^5+x, disc = -64? check below
    auto w = hall_trivial_witness(c);
    // disc(x^5+x) = 256, no odd prime: nothing found
    CHECK(!w);
}

TEST_CASE("split Jacobian: twist-12 scan never proves irreducibility") {
    // the two elliptic factors are non-isogenous, so some twisted
    // polynomial fails the square test (no QM, correctly), but none is
    // ever irreducible
    auto v = geometric_irreducibility(split_curve(), 59);
    CHECK(v.status == IrreducibilityVerdict::Status::NoQM);
    CHECK(v.status != IrreducibilityVerdict::Status::AbsIrreducible);
    CHECK(v.status != IrreducibilityVerdict::Status::AbsIrreducibleNoQM);
}

TEST_CASE("k_irreducibility") {
    // split Jacobian: f_v reducible for every good v, so simplicity is
    // never proved
    auto v = k_irreducibility(split_curve(), 30);
    CHECK(v.status == IrreducibilityVerdict::Status::NoQM);

    // y^2 = x^5+x+1 has reducible f but an irreducible f_11
    CurveModel gen{IntPoly{1, 1, 0, 0, 0, 1}};
    auto v2 = k_irreducibility(gen, 13);
    CHECK((v2.status == IrreducibilityVerdict::Status::AbsIrreducible ||
           v2.status == IrreducibilityVerdict::Status::AbsIrreducibleNoQM));
}

TEST_CASE("y^2 = x^5 - x: every twisted polynomial is a perfect square at p = 1 mod 4") {
    CurveModel c{IntPoly{0, -1, 0, 0, 0, 1}};
    for (long p : {5L, 13L, 17L, 29L}) {
        if (!c.has_good_reduction(p)) continue;
        FrobeniusData fd = frobenius_data(c, p);
        auto root = perfect_square_root(fd.weil_poly);
        CHECK(root.has_value());
        if (root) CHECK((*root) * (*root) == fd.weil_poly);
        CHECK(perfect_square_root(twist(fd.weil_poly, 12)).has_value());
    }
}

TEST_CASE("disc_bound OverK: EndIsZ at B=67 and at B=23 with early exit") {
    auto stream67 = frobenius_stream(example_curve(), 67);
    DiscBoundOptions no_exit;
    no_exit.early_exit = false;
    auto r67 = disc_bound(stream67, DiscBoundMode::OverK, no_exit);
    CHECK(r67.verdict == DiscBoundResult::Verdict::EndIsZ);
    CHECK(r67.d_of_B == 1);

    auto stream23 = frobenius_stream(example_curve(), 23);
    auto r23 = disc_bound(stream23, DiscBoundMode::OverK);  // early exit on
    CHECK(r23.verdict == DiscBoundResult::Verdict::EndIsZ);
    CHECK(r23.early_exit_taken);
    CHECK(r23.d_of_B == 16);
    CHECK(r23.places_used.back() == 19);
}

TEST_CASE("disc_bound Geometric: d(B) stabilizes to 64 with rm candidate 8") {
    auto stream = frobenius_stream(example_curve(), 200);
    DiscBoundOptions no_exit;
    no_exit.early_exit = false;
    auto r = disc_bound(stream, DiscBoundMode::Geometric, no_exit);
    CHECK(r.verdict == DiscBoundResult::Verdict::BoundOnly);
    CHECK(r.d_of_B == 64);
    CHECK(Int(64) % r.d_of_B == 0);
    CHECK(r.cm_excluded);
    REQUIRE(r.rm_candidates.size() == 1);
    CHECK(r.rm_candidates[0].discriminant == 8);
    // first Omega' places
    REQUIRE(r.places_used.size() >= 3);
    CHECK(r.places_used[0] == 7);
    CHECK(r.places_used[1] == 17);
}

TEST_CASE("disc_bound gcd monotonicity: d(B') divides d(B) for B' >= B") {
    auto stream = frobenius_stream(example_curve(), 150);
    DiscBoundOptions no_exit;
    no_exit.early_exit = false;
    Int prev = 0;
    for (size_t cut = 1; cut <= stream.size(); ++cut) {
        std::vector<FrobeniusData> prefix(stream.begin(), stream.begin() + static_cast<long>(cut));
        auto r = disc_bound(prefix, DiscBoundMode::Geometric, no_exit);
        if (prev != 0 && r.d_of_B != 0) CHECK(prev % r.d_of_B == 0);
        if (r.d_of_B != 0) prev = r.d_of_B;
    }
}

TEST_CASE("disc_bound with no admissible places reports honestly") {
    // for the split Jacobian every f_v factors over Z, so the base-field
    // variant admits nothing
    auto r = disc_bound(frobenius_stream(split_curve(), 40), DiscBoundMode::OverK);
    CHECK(r.d_of_B == 0);
    CHECK(r.verdict == DiscBoundResult::Verdict::BoundOnly);
    CHECK(r.places_used.empty());
}

TEST_CASE("rm_split_test") {
    // degenerate: f_p of the form (x^2-ax+p)^2
    // y^2 = x^5 - x at p = 13: f_13 = (x^2-13)^2... check via the curve
    CurveModel sq{IntPoly{0, -1, 0, 0, 0, 1}};
    FrobeniusData f13 = frobenius_data(sq, 13);
    CHECK(perfect_square_root(f13.weil_poly).has_value());
    CHECK(rm_split_test(f13, Int(13)));

    // the example curve has RM by sqrt(2): split test passes with m = 2 at
    // primes split in Q(sqrt 2) (p = 1,7 mod 8)
    for (long p : {7L, 17L, 23L, 31L, 41L}) {
        FrobeniusData fd = frobenius_data(example_curve(), p);
        CHECK(rm_split_test(fd, Int(2)));
    }
    // a generic curve with End = Z fails the m=2 split test at some prime
    CurveModel gen{IntPoly{1, 1, 0, 0, 0, 1}};
    bool all_pass = true;
    for (long p : {7L, 11L, 13L, 17L, 19L, 23L}) {
        if (!gen.has_good_reduction(p)) continue;
        if (!rm_split_test(frobenius_data(gen, p), Int(2))) all_pass = false;
    }
    CHECK(!all_pass);
}

TEST_CASE("example curve: f_p has shape x^4 + 2a x^2 + p^2 for p = 3 mod 8") {
    for (long p : primes_up_to(200)) {
        if (p % 8 != 3 || !example_curve().has_good_reduction(p)) continue;
        FrobeniusData fd = frobenius_data(example_curve(), p);
        CHECK(fd.a == 0);
        CHECK(fd.b % 2 == 0);
    }
}

TEST_CASE("restricted gcd over p = 1,3 mod 8 equals 16") {
    auto stream = frobenius_stream(example_curve(), 500);
    DiscBoundOptions opts;
    opts.early_exit = false;
    opts.place_filter = [](long p) { return p % 8 == 1 || p % 8 == 3; };
    auto r = disc_bound(stream, DiscBoundMode::OverK, opts);
    CHECK(r.d_of_B == 16);
}

TEST_CASE("rm_field_of_definition: survivor Q(sqrt 2) at B=61") {
    auto res = rm_field_of_definition(example_curve(), Int(8), 61);
    REQUIRE(res.field.has_value());
    CHECK(res.field->discriminant == 8);
    CHECK(res.eliminated.size() == 6);
    std::vector<Int> elim;
    for (const auto& f : res.eliminated) elim.push_back(f.discriminant);
    CHECK(elim == std::vector<Int>{-24, -8, -4, -3, 12, 24});
    CHECK_THROWS_AS(rm_field_of_definition(example_curve(), Int(7), 61), Error);
}

TEST_CASE("verdict witnesses re-verify standalone") {
    // EndIsZ witness via Hall: re-check the valuation directly
    CurveModel c{IntPoly{-1, -1, 0, 0, 0, 1}};
    auto w = hall_trivial_witness(c);
    REQUIRE(w.has_value());
    Int d = c.disc();
    int val = 0;
    while (d % *w == 0) {
        d /= *w;
        ++val;
    }
    CHECK(val == 1);
    CHECK(*w % 2 == 1);

    // AbsIrreducibleNoQM witness prime for the example curve re-verifies
    auto v = geometric_irreducibility(example_curve(), 7);
    REQUIRE(v.witness_prime == 7);
    FrobeniusData fd = frobenius_data(example_curve(), 7);
    CHECK(is_irreducible(twist(fd.weil_poly, 12)));
    CHECK(!perfect_square_root(twist(fd.weil_poly, 12)));
}

TEST_CASE("geometric-mode admissible places satisfy both predicates") {
    auto stream = frobenius_stream(example_curve(), 100);
    DiscBoundOptions no_exit;
    no_exit.early_exit = false;
    auto r = disc_bound(stream, DiscBoundMode::Geometric, no_exit);
    for (long p : r.places_used) {
        FrobeniusData fd = frobenius_data(example_curve(), p);
        CHECK(fd.ordinary);
        CHECK(is_irreducible(twist(fd.weil_poly, 4)));
    }
}
