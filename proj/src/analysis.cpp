#include "g2end/analysis.hpp"

#include <json.hpp>

#include <chrono>
#include <filesystem>

namespace g2end {

namespace fs = std::filesystem;
using nlohmann::json;

std::string to_string(ProofStatus s) {
    switch (s) {
        case ProofStatus::ProvenUpper: return "ProvenUpper";
        case ProofStatus::ProvenLower: return "ProvenLower";
        case ProofStatus::ProvenBoth: return "ProvenBoth";
        case ProofStatus::Heuristic: return "Heuristic";
    }
    return "?";
}

std::string to_string(Classification::Kind k) {
    switch (k) {
        case Classification::Kind::Trivial: return "Trivial";
        case Classification::Kind::RM: return "RM";
        case Classification::Kind::CM: return "CM";
        case Classification::Kind::Decomposable: return "Decomposable";
        case Classification::Kind::QM: return "QM";
        case Classification::Kind::Undetermined: return "Undetermined";
    }
    return "?";
}

DataRegistry DataRegistry::load(const std::string& data_dir) {
    DataRegistry reg;
    if (data_dir.empty()) return reg;
    fs::path root(data_dir);
    fs::path hdir = root / "humbert";
    if (fs::is_directory(hdir)) {
        for (const auto& entry : fs::directory_iterator(hdir)) {
            if (entry.path().extension() != ".eq") continue;
            HumbertEquation eq = load_humbert_equation_file(entry.path().string());
            reg.humbert.emplace(eq.discriminant, std::move(eq));
        }
    }
    fs::path cm = root / "cm" / "list.txt";
    if (fs::is_regular_file(cm)) reg.cm_list = load_cm_list_file(cm.string());
    return reg;
}

std::string AnalysisReport::to_json(bool with_timings) const {
    json j;
    j["schema"] = "g2end-report-v1";
    j["convention"] = kInvariantConvention;
    json coeffs = json::array();
    for (const auto& c : curve_coeffs) coeffs.push_back(c.get_str());
    j["curve"] = {{"f", coeffs}};
    json cls;
    cls["kind"] = to_string(classification.kind);
    if (classification.kind == Classification::Kind::RM) {
        cls["rm_disc"] = classification.rm_disc.get_str();
        if (classification.order_index > 0) cls["order_index"] = classification.order_index;
    }
    if (classification.kind == Classification::Kind::CM) {
        if (classification.cm_field_disc != 0) cls["cm_field_disc"] = classification.cm_field_disc.get_str();
        if (!classification.cm_label.empty()) cls["cm_label"] = classification.cm_label;
    }
    if (classification.kind == Classification::Kind::Decomposable)
        cls["n"] = classification.decomposable_n;
    if (classification.kind == Classification::Kind::QM && classification.qm) {
        cls["qm_disc"] = classification.qm->disc.get_str();
        cls["qm_algebra_disc"] = classification.qm->algebra_disc.get_str();
        cls["qm_index"] = classification.qm->index_in_maximal.get_str();
    }
    j["classification"] = cls;
    j["proof_status"] = to_string(overall);
    json jc;
    for (const auto& [k, v] : claims) jc[k] = to_string(v);
    j["claims"] = jc;
    j["evidence"] = evidence;
    json jb;
    for (const auto& [k, v] : bounds_used) jb[k] = v;
    j["bounds_used"] = jb;
    if (field_of_definition) j["field_of_definition"] = field_of_definition->get_str();
    j["exit_code"] = exit_code;
    if (with_timings) {
        json jt;
        for (const auto& [k, v] : timings_ms) jt[k] = v;
        j["timings_ms"] = jt;
    }
    return j.dump(2) + "\n";
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
};

void finish(AnalysisReport& rep) {
    switch (rep.overall) {
        case ProofStatus::ProvenBoth: rep.exit_code = 0; break;
        case ProofStatus::ProvenUpper:
        case ProofStatus::ProvenLower:
        case ProofStatus::Heuristic:
            rep.exit_code = rep.classification.kind == Classification::Kind::Undetermined ? 3 : 2;
            break;
    }
}

// membership map over the loaded equations, exact pathway preferred
std::map<Int, bool> membership_map(const DataRegistry& reg, const IgusaInvariants& point) {
    std::map<Int, bool> out;
    for (const auto& [D, eq] : reg.humbert) {
        MembershipResult r = humbert_membership(point, eq);
        if ((r.verdict == Membership::NumericOn || r.verdict == Membership::NumericOff) && !r.reliable)
            continue;  // unreliable numeric answers are no answers
        out[D] = (r.verdict == Membership::On || r.verdict == Membership::NumericOn);
    }
    return out;
}

}  // namespace

AnalysisReport analyze(const CurveModel& curve, const AnalysisConfig& config) {
    AnalysisReport rep;
    rep.curve_coeffs = curve.f().coeffs();
    rep.bounds_used["B_irred"] = config.B_irred;
    rep.bounds_used["B_disc"] = config.B_disc;
    DataRegistry reg = DataRegistry::load(config.data_dir);

    Timer t_all;
    IrreducibilityVerdict irr = geometric_irreducibility(curve, config.B_irred);
    rep.timings_ms["irreducibility"] = t_all.ms();
    rep.irreducibility = irr;
    using S = IrreducibilityVerdict::Status;
    if (irr.witness) rep.evidence.push_back("irreducibility:" + *irr.witness);

    if (irr.status == S::EndIsZ) {
        rep.classification.kind = Classification::Kind::Trivial;
        rep.claims["endomorphism_ring"] = ProofStatus::ProvenBoth;
        rep.overall = ProofStatus::ProvenBoth;
        finish(rep);
        return rep;
    }

    bool proven_abs_irr = irr.status == S::AbsIrreducible || irr.status == S::AbsIrreducibleNoQM;
    bool proven_noqm = irr.status == S::AbsIrreducibleNoQM || irr.status == S::NoQM;

    if (proven_abs_irr) {
        Timer t_disc;
        // grow the Frobenius stream in stages so the early exit saves the
        // point counting at larger primes
        std::vector<FrobeniusData> stream;
        long done = 0;
        auto extend = [&](long upto) {
            for (long p : primes_up_to(upto)) {
                if (p <= done || !curve.has_good_reduction(p)) continue;
                stream.push_back(frobenius_data(curve, p));
            }
            done = upto;
        };
        DiscBoundResult geom;
        for (long stage : {20L, 50L, 100L, config.B_disc}) {
            stage = std::min(stage, config.B_disc);
            if (stage <= done) continue;
            extend(stage);
            geom = disc_bound(stream, DiscBoundMode::Geometric);
            if (geom.verdict == DiscBoundResult::Verdict::EndIsZ) break;
            if (done >= config.B_disc) break;
        }
        rep.timings_ms["disc_bound"] = t_disc.ms();
        for (long p : geom.places_used) rep.evidence.push_back("omega-prime:" + std::to_string(p));
        if (geom.verdict == DiscBoundResult::Verdict::EndIsZ) {
            rep.classification.kind = Classification::Kind::Trivial;
            rep.claims["endomorphism_ring"] = ProofStatus::ProvenBoth;
            rep.overall = ProofStatus::ProvenBoth;
            finish(rep);
            return rep;
        }
        if (geom.d_of_B == 0) {
            // no admissible place at all: no information beyond irreducibility
            rep.classification.kind = Classification::Kind::Undetermined;
            rep.evidence.push_back("disc-bound:no-admissible-place");
            rep.overall = ProofStatus::Heuristic;
            finish(rep);
            return rep;
        }
        rep.evidence.push_back("disc-bound:d=" + geom.d_of_B.get_str());
        if (geom.cm_excluded && !geom.rm_candidates.empty()) {
            // real-multiplication candidates
            rep.classification.kind = Classification::Kind::RM;
            rep.classification.rm_disc = geom.rm_candidates.front().discriminant;
            rep.claims["endomorphism_upper_bound"] = ProofStatus::ProvenUpper;
            rep.overall = ProofStatus::ProvenUpper;
            if (geom.rm_candidates.size() > 1)
                for (const auto& c : geom.rm_candidates)
                    rep.evidence.push_back("rm-candidate:" + c.discriminant.get_str());
            if (!reg.humbert.empty()) {
                IgusaInvariants point = igusa_clebsch(curve);
                auto members = membership_map(reg, point);
                for (const auto& cand : geom.rm_candidates) {
                    auto order = rm_order_from_membership(members, cand.discriminant);
                    if (!order) continue;
                    rep.classification.rm_disc = cand.discriminant;
                    rep.classification.order_index = order->index;
                    rep.claims["rm_lower_bound"] = ProofStatus::ProvenLower;
                    rep.evidence.push_back("humbert-on:" + order->surface.get_str());
                    rep.overall = ProofStatus::ProvenBoth;
                    break;
                }
            }
            // field of definition needs End over Q trivial
            DiscBoundResult overQ = disc_bound(stream, DiscBoundMode::OverK);
            if (overQ.verdict == DiscBoundResult::Verdict::EndIsZ) {
                rep.evidence.push_back("end-over-Q:Z");
                auto fod = rm_field_of_definition(curve, rep.classification.rm_disc, config.B_disc);
                if (fod.field) {
                    rep.field_of_definition = fod.field->discriminant;
                    rep.evidence.push_back("field-of-definition:" + fod.field->discriminant.get_str());
                }
            }
            finish(rep);
            return rep;
        }
        // single Delta value so far: possible CM
        rep.classification.kind = Classification::Kind::CM;
        rep.claims["endomorphism_upper_bound"] = ProofStatus::ProvenUpper;
        rep.overall = ProofStatus::ProvenUpper;
        if (!reg.cm_list.empty()) {
            IgusaInvariants point = igusa_clebsch(curve);
            if (auto match = cm_list_match(point, reg.cm_list)) {
                rep.classification.cm_label = match->label;
                rep.claims["cm_match"] = ProofStatus::ProvenLower;
                rep.evidence.push_back("cm-list:" + match->label);
                rep.overall = ProofStatus::ProvenBoth;
            }
        }
        rep.classification.cm_field_disc = geom.d_of_B;
        finish(rep);
        return rep;
    }

    // not proven absolutely irreducible: suspected reducible or QM
    if (proven_noqm) rep.evidence.push_back("no-potential-qm");
    if (!reg.humbert.empty()) {
        IgusaInvariants point = igusa_clebsch(curve);
        auto members = membership_map(reg, point);
        // square-discriminant memberships prove (n,n)-decomposability
        for (const auto& [D, on] : members) {
            if (!on) continue;
            auto n = sqrt_exact(D);
            if (!n) continue;
            rep.classification.kind = Classification::Kind::Decomposable;
            rep.classification.decomposable_n = static_cast<int>(n->get_si());
            rep.claims["decomposable"] = ProofStatus::ProvenLower;
            rep.evidence.push_back("humbert-on:" + D.get_str());
            rep.overall = ProofStatus::ProvenLower;
            finish(rep);
            return rep;
        }
        // two non-square memberships: quaternionic candidate
        std::vector<Int> on_discs;
        for (const auto& [D, on] : members)
            if (on && !is_perfect_square(D)) on_discs.push_back(D);
        if (on_discs.size() == 2 && !proven_noqm) {
            MembershipOracle oracle = [&members](const Int& D) -> std::optional<bool> {
                auto it = members.find(D);
                if (it == members.end()) return std::nullopt;
                return it->second;
            };
            auto ded = deduce_qm_ring(on_discs[0], on_discs[1], oracle);
            for (const Int& q : ded.queried) rep.evidence.push_back("qm-query:" + q.get_str());
            if (ded.order) {
                rep.classification.kind = Classification::Kind::QM;
                rep.classification.qm = ded.order;
                rep.claims["qm_order"] = ProofStatus::ProvenLower;
                rep.evidence.push_back("humbert-on:" + on_discs[0].get_str() + "," + on_discs[1].get_str());
                rep.overall = ProofStatus::ProvenBoth;  // QM admits no larger ring
                finish(rep);
                return rep;
            }
        }
    }
    rep.classification.kind = Classification::Kind::Undetermined;
    if (!proven_noqm)
        rep.evidence.push_back("suspected:qm-or-decomposable (all twisted Frobenius polynomials square)");
    else
        rep.evidence.push_back("suspected:decomposable");
    rep.overall = ProofStatus::Heuristic;
    finish(rep);
    return rep;
}

}  // namespace g2end
