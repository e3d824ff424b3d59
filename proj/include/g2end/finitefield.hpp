#ifndef G2END_FINITEFIELD_HPP
#define G2END_FINITEFIELD_HPP

#include <vector>

#include "g2end/intpoly.hpp"
#include "g2end/zarith.hpp"

namespace g2end {

/// Genus-2 hyperelliptic model y^2 = f(x), deg f in {5,6}, disc(f) != 0.
class CurveModel {
  public:
    explicit CurveModel(IntPoly f);

    /// Completed-square preprocessing for y^2 + h(x) y = g(x): builds the
    /// model y^2 = 4g + h^2 (h may be zero).
    static CurveModel from_long_model(const IntPoly& g, const IntPoly& h);

    const IntPoly& f() const { return f_; }
    const Int& disc() const { return disc_; }
    int genus_degree() const { return f_.degree(); }

    /// p is odd and divides neither lc(f) nor disc(f).
    bool has_good_reduction(long p) const;

    /// Primes dividing 2*lc(f)*disc(f); requires the discriminant to
    /// factor within the budget.
    std::vector<Int> bad_primes() const;

  private:
    IntPoly f_;
    Int disc_;
};

struct FrobeniusData {
    long p = 0;
    Int n1, n2;      // point counts over F_p, F_{p^2}
    Int a, b;        // weil_poly = x^4 + a x^3 + b x^2 + a p x + p^2
    IntPoly weil_poly;
    bool ordinary = false;
    bool in_omega_prime = false;
};

/// Number of projective points of the curve over F_q, q = p or p^2.
Int count_points(const CurveModel& curve, long p, int r);

/// Point counts, Weil polynomial and the ordinarity / Omega' flags at a
/// good odd prime. Verifies the Newton power-sum identities and the Weil
/// bounds; a parity failure in b aborts.
FrobeniusData frobenius_data(const CurveModel& curve, long p);

namespace fp2 {
/// Least positive quadratic non-residue mod p.
long nonresidue(long p);
/// (u + v t)^p in F_p[t]/(t^2 - n): Frobenius as conjugation.
std::pair<long, long> frobenius(long u, long v, long n, long p);
}  // namespace fp2

}  // namespace g2end

#endif
