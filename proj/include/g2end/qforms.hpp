#ifndef G2END_QFORMS_HPP
#define G2END_QFORMS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "g2end/zarith.hpp"

namespace g2end {

/// Integral binary quadratic form [[a,x],[x,c]] with the value rule
/// Q(m,n) = a m^2 + 2 x m n + c n^2 (a quaternionic-order discriminant
/// matrix: diagonal entries and values at coprime vectors are
/// discriminants).
struct BinaryQuadraticForm {
    Int a, x, c;
    Int det() const { return a * c - x * x; }
    Int value(const Int& m, const Int& n) const { return a * m * m + 2 * x * m * n + c * n * n; }
    bool positive_definite() const { return a > 0 && det() > 0; }
    bool operator==(const BinaryQuadraticForm& o) const { return a == o.a && x == o.x && c == o.c; }
};

struct QuaternionOrderDescriptor {
    BinaryQuadraticForm reduced_form;
    Int disc;              // det/4
    Int algebra_disc;      // discriminant of the ambient quaternion algebra
    Int index_in_maximal;  // disc / algebra_disc
};

/// Canonical GL2(Z) representative: 0 <= 2x <= a <= c.
BinaryQuadraticForm reduce_gl2z(const BinaryQuadraticForm& form);

/// A coprime (m,n) with Q(m,n) = D, if one exists.
std::optional<std::pair<Int, Int>> primitively_represents(const BinaryQuadraticForm& form, const Int& D);

/// All candidate discriminant matrices [[a,x],[x,c]], 0 <= x <= sqrt(ac),
/// positive definite, a+2x+c a discriminant mod 4, one per GL2(Z) class.
std::vector<BinaryQuadraticForm> enumerate_candidates(const Int& a, const Int& c);

struct QmCertificationSets {
    std::pair<Int, Int> P;  // the diagonal discriminants {a, c}
    std::vector<Int> N;     // distinguishing non-membership discriminants
};

/// Certification sets for the target order: P = diagonal of the target,
/// N = least discriminant separating each inequivalent candidate.
QmCertificationSets certify_qm_sets(const BinaryQuadraticForm& target, const Int& search_cap = 10'000);

/// Membership oracle: true/false for H_D, nullopt when unknown.
using MembershipOracle = std::function<std::optional<bool>(const Int& D)>;

struct QmDeductionResult {
    std::optional<QuaternionOrderDescriptor> order;
    std::vector<BinaryQuadraticForm> survivors;
    std::vector<Int> queried;  // discriminants the procedure asked about
};

/// The exclusion procedure: eliminates candidates [[D1,x],[x,D2]] whose
/// primitively represented discriminants are answered "off" by the oracle;
/// a unique survivor yields the order descriptor.
QmDeductionResult deduce_qm_ring(const Int& D1, const Int& D2, const MembershipOracle& membership,
                                 const Int& query_cap = 10'000);

/// Finite ramification of the quaternion algebra containing the order with
/// discriminant matrix [[a,x],[x,c]] (Hilbert symbols of (a, a*det)).
Int quaternion_algebra_disc(const BinaryQuadraticForm& form);

bool is_discriminant(const Int& D);

}  // namespace g2end

#endif
