#ifndef G2END_MODULI_HPP
#define G2END_MODULI_HPP

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2end/finitefield.hpp"
#include "g2end/zarith.hpp"

namespace g2end {

/// Convention identifier stamped into reports and required of data files.
/// Under this convention I10 equals disc(f) exactly (weights 2,4,6,10).
inline constexpr const char* kInvariantConvention = "icd-v1";

struct IgusaInvariants {
    Rat I2, I4, I6, I10;
};

/// Igusa-Clebsch invariants of the binary sextic attached to y^2 = f(x)
/// (deg 5 models are sextics with a root at infinity).
IgusaInvariants igusa_clebsch(const CurveModel& curve);

/// Equality in the weighted projective space P(2,4,6,10) over the
/// algebraic closure: some nonzero rational u with Q = (u, u^2, u^3, u^5)*P
/// componentwise. Decided exactly.
bool weighted_equal(const IgusaInvariants& P, const IgusaInvariants& Q);

enum class HumbertCoords { Igusa, Satake };

struct HumbertEquation {
    Int discriminant;
    HumbertCoords coordinate_system = HumbertCoords::Igusa;
    std::string convention_id;
    // Igusa: exponent vectors (e2,e4,e6,e10); Satake: (e1..e6)
    std::vector<std::pair<std::vector<int>, Rat>> monomials;
    // Satake transform: s_1..s_6 as polynomials in I2,I4,I6,I10
    std::optional<std::array<std::vector<std::pair<std::array<int, 4>, Rat>>, 6>> satake_transform;
};

/// Parses the .eq format; weighted-inhomogeneous Igusa equations are
/// rejected at load.
HumbertEquation load_humbert_equation(std::istream& in, const std::string& name = "<stream>");
HumbertEquation load_humbert_equation_file(const std::string& path);

enum class Membership { On, Off, NumericOn, NumericOff };

struct MembershipResult {
    Membership verdict = Membership::Off;
    bool reliable = true;       // separation audit for the numeric pathway
    double min_match = 0.0;     // smallest normalized |value| over permutations
    double min_nonmatch = 0.0;  // smallest non-vanishing normalized |value|
};

/// Membership of the moduli point on the Humbert surface: exact rational
/// evaluation for Igusa-coordinate equations; 720-permutation numeric
/// evaluation in the level-2 Satake cover otherwise.
MembershipResult humbert_membership(const IgusaInvariants& point, const HumbertEquation& eq,
                                    double tol = 1e-20);

/// Least n such that the point lies on H_{n^2 d}: the endomorphism ring is
/// then the unique order of index n.
struct RmOrderResult {
    int index = 0;
    Int surface;  // n^2 d
};
std::optional<RmOrderResult> rm_order_from_membership(const std::map<Int, bool>& memberships,
                                                      const Int& d);

/// {D/n^2 : n > 1, n^2 | D, D/n^2 a discriminant}; empty means any action
/// of O_D is automatically optimal.
std::vector<Int> optimality_obstruction_set(const Int& D);

struct CmRecord {
    IgusaInvariants point;
    std::string label;
};

/// The record whose invariants match under weighted_equal, if any.
std::optional<CmRecord> cm_list_match(const IgusaInvariants& point, const std::vector<CmRecord>& list);

std::vector<CmRecord> load_cm_list(std::istream& in);
std::vector<CmRecord> load_cm_list_file(const std::string& path);

namespace satake {
/// Elementary symmetric values from power sums s_1..s_6 (Newton).
std::array<Rat, 6> elementary_from_power_sums(const std::array<Rat, 6>& s);

/// Roots of x^6 - e1 x^5 + ... + e6 as high-precision complex pairs
/// (re, im) with certified residual below 1e-30 * scale.
std::vector<std::pair<double, double>> roots_check_only(const std::array<Rat, 6>& elem);

struct SatakeEvaluation {
    double min_match = 0.0;
    double min_nonmatch = 0.0;
    bool any_match = false;
    bool reliable = true;
    std::vector<double> values_sorted;  // all 720 normalized magnitudes
};
/// root_shuffle rotates the recovered roots before the permutation loop;
/// the value multiset must not depend on it (self-check hook).
SatakeEvaluation evaluate_all_permutations(const HumbertEquation& eq, const std::array<Rat, 6>& s,
                                           double tol, unsigned root_shuffle = 0);
}  // namespace satake

}  // namespace g2end

#endif
