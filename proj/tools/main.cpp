#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "g2end/analysis.hpp"
#include "g2end/covers.hpp"
#include "g2end/survey.hpp"

namespace {

using namespace g2end;

std::vector<Int> parse_coeff_list(const std::string& s) {
    std::vector<Int> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw Error("empty coefficient in list");
        out.emplace_back(Int(tok.substr(b, e - b + 1)));
    }
    return out;
}

CurveModel curve_from_options(const std::string& coeffs, const std::string& hcoeffs) {
    IntPoly f{parse_coeff_list(coeffs)};
    if (!hcoeffs.empty()) {
        IntPoly h{parse_coeff_list(hcoeffs)};
        return CurveModel::from_long_model(f, h);
    }
    return CurveModel(f);
}

int cmd_analyze(const std::string& coeffs, const std::string& hcoeffs, const AnalysisConfig& cfg,
                const std::string& json_out) {
    CurveModel curve = curve_from_options(coeffs, hcoeffs);
    AnalysisReport rep = analyze(curve, cfg);
    std::string doc = rep.to_json(cfg.with_timings);
    if (json_out.empty() || json_out == "-") {
        std::cout << doc;
    } else {
        std::ofstream out(json_out);
        if (!out) throw Error("cannot write " + json_out);
        out << doc;
    }
    return rep.exit_code;
}

int cmd_frobenius_dump(const std::string& coeffs, const std::string& hcoeffs, long B) {
    CurveModel curve = curve_from_options(coeffs, hcoeffs);
    std::cout << "p\ta\tb\tordinary\tomega'\n";
    for (const auto& fd : frobenius_stream(curve, B)) {
        std::cout << fd.p << "\t" << fd.a.get_str() << "\t" << fd.b.get_str() << "\t"
                  << (fd.ordinary ? 1 : 0) << "\t" << (fd.in_omega_prime ? 1 : 0) << "\n";
    }
    return 0;
}

int cmd_humbert_test(const std::string& coeffs, const std::string& hcoeffs, const std::string& eqfile,
                     double tol) {
    CurveModel curve = curve_from_options(coeffs, hcoeffs);
    HumbertEquation eq = load_humbert_equation_file(eqfile);
    IgusaInvariants point = igusa_clebsch(curve);
    MembershipResult r = humbert_membership(point, eq, tol);
    const char* names[] = {"On", "Off", "NumericOn", "NumericOff"};
    std::cout << "H_" << eq.discriminant.get_str() << ": " << names[static_cast<int>(r.verdict)];
    if (!r.reliable) std::cout << " (unreliable: separation audit failed)";
    std::cout << "\n";
    if (r.verdict == Membership::Off || r.verdict == Membership::NumericOff) return 3;
    return r.reliable ? 0 : 2;
}

int cmd_qm_certify(long D1, long D2, const std::string& answers, bool queries_only) {
    std::map<Int, bool> given;
    if (!answers.empty()) {
        std::istringstream in(answers);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            size_t c = tok.find(':');
            if (c == std::string::npos) throw Error("membership answers must be D:0 or D:1");
            given[Int(tok.substr(0, c))] = tok.substr(c + 1) == "1";
        }
    }
    MembershipOracle oracle = [&given](const Int& D) -> std::optional<bool> {
        auto it = given.find(D);
        if (it == given.end()) return std::nullopt;
        return it->second;
    };
    auto res = deduce_qm_ring(Int(D1), Int(D2), oracle);
    std::cout << "membership queries:";
    for (const auto& q : res.queried) std::cout << " " << q.get_str();
    std::cout << "\n";
    if (queries_only) return 0;
    if (res.order) {
        std::cout << "order: disc " << res.order->disc.get_str() << ", algebra disc "
                  << res.order->algebra_disc.get_str() << ", index " << res.order->index_in_maximal.get_str()
                  << "\n";
        return 0;
    }
    std::cout << "inconclusive: " << res.survivors.size() << " surviving candidates";
    for (const auto& s : res.survivors) std::cout << " x=" << s.x.get_str();
    std::cout << "\n";
    return 3;
}

int cmd_cover_verify(const std::string& path) {
    covers::CoverInput ci = covers::load_cover_file(path);
    if (!covers::verify_cover(ci.f, ci.map)) {
        std::cout << "cover: FAILED\n";
        return 3;
    }
    int deg = covers::map_degree(ci.f, ci.map);
    auto pb = covers::pullback_differential(ci.f, ci.map);
    std::cout << "cover: verified, degree " << deg << "\n";
    std::cout << "pullback: (" << pb.alpha.str() << ") + (" << pb.beta.str() << ")*x\n";
    return 0;
}

int cmd_survey(const SurveyConfig& cfg, const std::string& log_out) {
    SurveyResult res = survey(cfg);
    std::cout << res.to_json();
    if (!log_out.empty()) {
        std::ofstream out(log_out);
        if (!out) throw Error("cannot write " + log_out);
        for (const auto& line : res.log) out << line << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"endomorphism-ring analysis for genus-2 Jacobians over Q"};
    app.require_subcommand(1);

    std::string coeffs, hcoeffs, data_dir, json_out, eqfile, answers, cover_path, log_out;
    AnalysisConfig acfg;
    SurveyConfig scfg;
    long B = 67, D1 = 0, D2 = 0;
    double tol = 1e-20;
    bool queries_only = false;

    auto* an = app.add_subcommand("analyze", "classify the geometric endomorphism ring");
    an->add_option("--curve", coeffs, "coefficients a0,a1,... of f (ascending)")->required();
    an->add_option("--h", hcoeffs, "h(x) for models y^2 + h y = g (curve passes g)");
    an->add_option("--B-irred", acfg.B_irred, "prime bound for the irreducibility scan");
    an->add_option("--B-disc", acfg.B_disc, "prime bound for the discriminant gcd");
    an->add_option("--data", acfg.data_dir, "data directory (humbert/D.eq, cm/list.txt)");
    an->add_option("--json", json_out, "write the JSON report here ('-' = stdout)");
    an->add_flag("--timings", acfg.with_timings, "include timings in the report");

    auto* su = app.add_subcommand("survey", "run the quintic-model survey");
    su->add_option("--box", scfg.box, "coefficient box bound");
    su->add_option("--sample", scfg.sample, "sample this many models (0 = all)");
    su->add_option("--seed", scfg.seed, "sampling seed");
    su->add_option("--B-irred", scfg.B_irred, "prime bound for irreducibility");
    su->add_option("--B-disc", scfg.B_disc, "prime bound for the discriminant gcd");
    su->add_option("--threads", scfg.threads, "worker threads (0 = auto)");
    su->add_option("--data", scfg.data_dir, "data directory");
    su->add_option("--log", log_out, "write per-curve log lines here");

    auto* fd = app.add_subcommand("frobenius-dump", "table of (p, a, b, ordinary, omega')");
    fd->add_option("--curve", coeffs)->required();
    fd->add_option("--h", hcoeffs);
    fd->add_option("--B", B, "prime bound");

    auto* hu = app.add_subcommand("humbert-test", "evaluate a Humbert equation on a curve");
    hu->add_option("--curve", coeffs)->required();
    hu->add_option("--h", hcoeffs);
    hu->add_option("--eq", eqfile, "equation file")->required();
    hu->add_option("--tol", tol, "numeric tolerance (satake pathway)");

    auto* qm = app.add_subcommand("qm-certify", "deduce the quaternionic order from memberships");
    qm->add_option("--D1", D1)->required();
    qm->add_option("--D2", D2)->required();
    qm->add_option("--membership", answers, "comma list D:0/1");
    qm->add_flag("--queries-only", queries_only, "print the query list and stop");

    auto* cv = app.add_subcommand("cover-verify", "verify an explicit map to an elliptic curve");
    cv->add_option("file", cover_path, "cover description file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (an->parsed()) return cmd_analyze(coeffs, hcoeffs, acfg, json_out);
        if (su->parsed()) return cmd_survey(scfg, log_out);
        if (fd->parsed()) return cmd_frobenius_dump(coeffs, hcoeffs, B);
        if (hu->parsed()) return cmd_humbert_test(coeffs, hcoeffs, eqfile, tol);
        if (qm->parsed()) return cmd_qm_certify(D1, D2, answers, queries_only);
        if (cv->parsed()) return cmd_cover_verify(cover_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
