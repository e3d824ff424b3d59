#ifndef G2END_ANALYSIS_HPP
#define G2END_ANALYSIS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2end/endotests.hpp"
#include "g2end/moduli.hpp"
#include "g2end/qforms.hpp"

namespace g2end {

enum class ProofStatus { ProvenUpper, ProvenLower, ProvenBoth, Heuristic };

std::string to_string(ProofStatus s);

struct Classification {
    enum class Kind { Trivial, RM, CM, Decomposable, QM, Undetermined };
    Kind kind = Kind::Undetermined;
    Int rm_disc = 0;     // RM
    int order_index = 0; // RM: index of the order in the maximal order (0 = unknown)
    Int cm_field_disc = 0;
    std::string cm_label;
    int decomposable_n = 0;
    std::optional<QuaternionOrderDescriptor> qm;
};

std::string to_string(Classification::Kind k);

struct AnalysisConfig {
    long B_irred = 59;
    long B_disc = 200;
    std::string data_dir;  // expects humbert/D.eq and cm/list.txt below it
    bool with_timings = false;
};

struct AnalysisReport {
    std::vector<Int> curve_coeffs;  // ascending, the y^2 = f(x) model analyzed
    Classification classification;
    IrreducibilityVerdict irreducibility;
    ProofStatus overall = ProofStatus::Heuristic;
    std::map<std::string, ProofStatus> claims;
    std::vector<std::string> evidence;
    std::map<std::string, long> bounds_used;
    std::optional<Int> field_of_definition;  // fundamental discriminant
    std::map<std::string, double> timings_ms;
    int exit_code = 3;

    std::string to_json(bool with_timings = false) const;
};

/// Humbert-equation registry loaded from a data directory (read-only after
/// load; concurrent queries are safe).
struct DataRegistry {
    std::map<Int, HumbertEquation> humbert;  // by discriminant
    std::vector<CmRecord> cm_list;
    static DataRegistry load(const std::string& data_dir);  // empty dir name: empty registry
};

/// Full pipeline: irreducibility tests, discriminant bound, and (with data)
/// Humbert certification, CM matching, QM deduction, field of definition.
AnalysisReport analyze(const CurveModel& curve, const AnalysisConfig& config);

}  // namespace g2end

#endif
