#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2end/analysis.hpp"
#include "g2end/survey.hpp"

using namespace g2end;

namespace {

const std::string kTestData = G2END_TEST_DATA_DIR;

const CurveModel& example_curve() {
    static CurveModel c{IntPoly{-1, 1, 1, -1, -1, 1}};
    return c;
}

}  // namespace

TEST_CASE("analyze: trivial endomorphism ring, proven fast") {
    // irreducible quintic with an odd valuation-1 disc prime
    CurveModel c{IntPoly{-1, -1, 0, 0, 0, 1}};  // x^5-x-1, disc 19*151
    AnalysisConfig cfg;
    AnalysisReport rep = analyze(c, cfg);
    CHECK(rep.classification.kind == Classification::Kind::Trivial);
    CHECK(rep.overall == ProofStatus::ProvenBoth);
    CHECK(rep.exit_code == 0);
    CHECK(!rep.evidence.empty());
}

TEST_CASE("analyze: RM curve without data gives a proven upper bound") {
    AnalysisConfig cfg;
    cfg.B_irred = 7;
    AnalysisReport rep = analyze(example_curve(), cfg);
    CHECK(rep.classification.kind == Classification::Kind::RM);
    CHECK(rep.classification.rm_disc == 8);
    CHECK(rep.classification.order_index == 0);  // not certified without data
    CHECK(rep.overall == ProofStatus::ProvenUpper);
    CHECK(rep.exit_code == 2);
    REQUIRE(rep.field_of_definition.has_value());
    CHECK(*rep.field_of_definition == 8);
}

TEST_CASE("analyze: RM curve with membership data is proven both ways") {
    AnalysisConfig cfg;
    cfg.B_irred = 7;
    cfg.data_dir = kTestData + "/rm2412";
    AnalysisReport rep = analyze(example_curve(), cfg);
    CHECK(rep.classification.kind == Classification::Kind::RM);
    CHECK(rep.classification.rm_disc == 8);
    CHECK(rep.classification.order_index == 1);
    CHECK(rep.overall == ProofStatus::ProvenBoth);
    CHECK(rep.exit_code == 0);
    REQUIRE(rep.field_of_definition.has_value());
    CHECK(*rep.field_of_definition == 8);

    // removing the data dir demotes the proof but keeps the classification
    AnalysisConfig bare = cfg;
    bare.data_dir.clear();
    AnalysisReport rep2 = analyze(example_curve(), bare);
    CHECK(rep2.classification.kind == rep.classification.kind);
    CHECK(rep2.classification.rm_disc == rep.classification.rm_disc);
    CHECK(rep2.overall == ProofStatus::ProvenUpper);
}

TEST_CASE("analyze: split Jacobian with square-surface data") {
    CurveModel c{IntPoly{56, 0, 45, 30, 9, 12, 4}};
    AnalysisConfig cfg;
    cfg.data_dir = kTestData + "/split20412";
    AnalysisReport rep = analyze(c, cfg);
    CHECK(rep.classification.kind == Classification::Kind::Decomposable);
    CHECK(rep.classification.decomposable_n == 7);
    CHECK(rep.overall == ProofStatus::ProvenLower);
}

TEST_CASE("analyze: QM curve against the membership fixtures") {
    // y^2 + y = 6x^5+9x^4-x^3-3x^2, completed square 24x^5+36x^4-4x^3-12x^2+1
    CurveModel c = CurveModel::from_long_model(IntPoly{0, 0, -3, -1, 9, 6}, IntPoly{1});
    AnalysisConfig cfg;
    cfg.data_dir = kTestData + "/qm20736";
    AnalysisReport rep = analyze(c, cfg);
    REQUIRE(rep.classification.kind == Classification::Kind::QM);
    REQUIRE(rep.classification.qm.has_value());
    CHECK(rep.classification.qm->disc == 36);
    CHECK(rep.classification.qm->algebra_disc == 6);
    CHECK(rep.classification.qm->index_in_maximal == 6);
    CHECK(rep.exit_code == 0);
}

TEST_CASE("analyze: undetermined without data stays honest") {
    CurveModel c = CurveModel::from_long_model(IntPoly{0, 0, -3, -1, 9, 6}, IntPoly{1});
    AnalysisConfig cfg;
    AnalysisReport rep = analyze(c, cfg);
    CHECK(rep.classification.kind == Classification::Kind::Undetermined);
    CHECK(rep.overall == ProofStatus::Heuristic);
    CHECK(rep.exit_code == 3);
}

TEST_CASE("reports are deterministic byte-for-byte") {
    AnalysisConfig cfg;
    cfg.B_irred = 7;
    cfg.data_dir = kTestData + "/rm2412";
    std::string a = analyze(example_curve(), cfg).to_json();
    std::string b = analyze(example_curve(), cfg).to_json();
    CHECK(a == b);
    CHECK(a.find("\"timings_ms\"") == std::string::npos);
    CHECK(a.find("icd-v1") != std::string::npos);
}

TEST_CASE("cm matching path") {
    CurveModel c{IntPoly{1, 0, 0, 0, 0, 1}};  // y^2 = x^5+1
    AnalysisConfig cfg;
    cfg.data_dir = G2END_DATA_DIR;  // ships cm/list.txt
    AnalysisReport rep = analyze(c, cfg);
    CHECK(rep.classification.kind == Classification::Kind::CM);
    CHECK(rep.classification.cm_label == "Z[zeta5]");
    CHECK(rep.overall == ProofStatus::ProvenBoth);
}

TEST_CASE("survey model space") {
    CHECK(survey_model_count(10) == 2139291);
    auto c0 = survey_model_coeffs(10, 0);
    CHECK(c0 == std::vector<long>{-10, -10, -10, -10, 0});
    auto clast = survey_model_coeffs(10, 2139290);
    CHECK(clast == std::vector<long>{10, 10, 10, 10, 10});
}

TEST_CASE("survey: sampled run is deterministic and classifies sanely") {
    SurveyConfig cfg;
    cfg.sample = 120;
    cfg.seed = 42;
    cfg.threads = 4;
    SurveyResult r1 = survey(cfg);
    SurveyResult r2 = survey(cfg);
    CHECK(r1.models_tested == 120);
    CHECK(r1.singular == r2.singular);
    CHECK(r1.counts == r2.counts);
    CHECK(r1.log == r2.log);
    CHECK(r1.max_irreducibility_prime <= 59);
    // the overwhelming majority of random quintics have trivial ring
    uint64_t trivial = 0;
    for (const auto& [k, v] : r1.counts)
        if (k == "Trivial") trivial += v;
    CHECK(trivial * 100 >= (r1.models_tested - r1.singular) * 95);
}
