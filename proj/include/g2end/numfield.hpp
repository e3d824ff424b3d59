#ifndef G2END_NUMFIELD_HPP
#define G2END_NUMFIELD_HPP

#include <vector>

#include "g2end/intpoly.hpp"
#include "g2end/zarith.hpp"

namespace g2end {

struct Factorization {
    std::vector<std::pair<Int, int>> primes;  // (prime, exponent)
    Int cofactor = 1;                         // 1 when complete
    bool complete() const { return cofactor == 1; }
    Int reassemble() const;
};

/// Factor n != 0 (sign dropped); a rho-budget timeout leaves the
/// unfactored part in cofactor rather than failing.
Factorization factor(const Int& n);

/// Fundamental discriminant of a quadratic field (D != 1, D = 1 mod 4
/// squarefree, or D = 4m with m = 2,3 mod 4 squarefree).
struct QuadraticField {
    Int discriminant;
    explicit QuadraticField(Int d);
    bool operator==(const QuadraticField& o) const { return discriminant == o.discriminant; }
};

bool is_fundamental_discriminant(const Int& d);

/// Discriminant of the number field Q[x]/(f) for monic irreducible f of
/// degree 2 or 4 (Dedekind test + Round-2 enlargement at each q^2 | disc f).
/// basis_out, when given, receives the maximal-order basis in power-basis
/// coordinates.
Int field_discriminant(const IntPoly& f, std::vector<std::vector<Rat>>* basis_out = nullptr);

/// True iff the odd prime p (not dividing D) splits in the quadratic field
/// of fundamental discriminant D.
bool splits_in(const Int& D, long p);

/// All fundamental discriminants supported on the prime set S, both signs.
std::vector<QuadraticField> quadratic_fields_unramified_outside(const std::vector<long>& S);

}  // namespace g2end

#endif
