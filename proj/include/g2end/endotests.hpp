#ifndef G2END_ENDOTESTS_HPP
#define G2END_ENDOTESTS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "g2end/finitefield.hpp"
#include "g2end/numfield.hpp"

namespace g2end {

/// Fixed group-theory constants consumed by the algorithms; the twist
/// exponents must be read from here.
struct GroupTheoryConstants {
    static constexpr int exponent_bound = 12;
    static constexpr int extension_degree_set[6] = {1, 2, 3, 4, 6, 12};
    static constexpr int field_case_degree_bound = 4;
};

struct IrreducibilityVerdict {
    enum class Status { AbsIrreducible, AbsIrreducibleNoQM, EndIsZ, NoQM, Inconclusive };
    Status status = Status::Inconclusive;
    std::optional<std::string> witness;  // prime or criterion name
    long bound_used = 0;
    long witness_prime = 0;  // largest prime the twist scan needed (0 if none)
};

struct IrreducibilityOptions {
    Int disc_factor_cap = pow_int(Int(10), 30);  // skip the Hall step above this
    long galois_prime_budget = 200;
};

/// Five-step geometric-irreducibility test (quintic shortcut, odd
/// valuation-1 disc prime, S_n/A_n certificate, twist-12 scan, inconclusive).
IrreducibilityVerdict geometric_irreducibility(const CurveModel& curve, long B,
                                               const IrreducibilityOptions& opts = {});

/// Base-field variant: scans f_v itself instead of f_v{12}.
IrreducibilityVerdict k_irreducibility(const CurveModel& curve, long B);

/// Step-2 helper: an odd prime with exact valuation 1 in disc(f), for
/// quintic models (even-degree models are excluded; see README on model
/// shape). Returns the witnessing prime.
std::optional<Int> hall_trivial_witness(const CurveModel& curve,
                                        const Int& disc_factor_cap = pow_int(Int(10), 30));

enum class DiscBoundMode { Geometric, OverK };

struct DiscBoundResult {
    Int d_of_B = 0;  // 0 = no qualifying place found
    bool cm_excluded = false;
    enum class Verdict { EndIsZ, BoundOnly } verdict = Verdict::BoundOnly;
    std::vector<QuadraticField> rm_candidates;
    std::vector<long> places_used;
    bool early_exit_taken = false;
};

struct DiscBoundOptions {
    bool early_exit = true;  // quit once d(B) <= 24
    std::function<bool(long)> place_filter;  // extra restriction on p
};

/// Running gcd of field discriminants over admissible places.
/// Geometric mode admits v in Omega'; OverK mode admits v with f_v
/// irreducible. d <= 24 proves End = Z (no quartic CM field has |disc| < 125
/// and no real quadratic field has disc^2 < 25).
DiscBoundResult disc_bound(const std::vector<FrobeniusData>& frob_stream, DiscBoundMode mode,
                           const DiscBoundOptions& opts = {});

/// Recognizes whether f_p{2} splits as conjugate quadratics over Z[sqrt(m)].
bool rm_split_test(const FrobeniusData& fd, const Int& m);

struct FieldOfDefinitionResult {
    std::optional<QuadraticField> field;  // proven unique survivor
    std::vector<QuadraticField> eliminated;
    std::vector<QuadraticField> survivors;  // when not unique
};

/// Field-of-definition search for proven geometric RM with End over the
/// base = Z: eliminates candidate quadratic fields by the restricted
/// disc-gcd run; a unique survivor is the minimal field of definition.
FieldOfDefinitionResult rm_field_of_definition(const CurveModel& curve, const Int& rm_disc, long B);

/// Frobenius data for all good odd p <= B, ascending (helper shared by the
/// tests above and the CLI).
std::vector<FrobeniusData> frobenius_stream(const CurveModel& curve, long B);

}  // namespace g2end

#endif
