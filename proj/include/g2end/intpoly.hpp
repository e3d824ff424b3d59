#ifndef G2END_INTPOLY_HPP
#define G2END_INTPOLY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "g2end/zarith.hpp"

namespace g2end {

/// Univariate polynomial over Z, coefficients stored in ascending degree
/// order with no trailing zeros. All arithmetic is exact.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly x_power(int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    const Int& operator[](int i) const;  // 0 outside [0, degree]
    const Int& lc() const;
    const Int& constant() const;
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const Int& k) const;

    IntPoly derivative() const;
    Int eval(const Int& v) const;
    Rat eval(const Rat& v) const;

    Int content() const;
    IntPoly primitive_part() const;

    /// Quotient if o divides *this exactly over Q and the quotient has
    /// integer coefficients; nullopt otherwise.
    std::optional<IntPoly> divide_exact(const IntPoly& o) const;

    std::string str(const std::string& var = "x") const;

  private:
    std::vector<Int> c_;
    void normalize();
};

/// Res(f,g) with the convention Res(f,g) = lc(f)^deg(g) * prod g(alpha_i)
/// over the roots of f (Sylvester determinant).
Int resultant(const IntPoly& f, const IntPoly& g);

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
Int discriminant(const IntPoly& f);

/// f{m}: the monic polynomial whose roots are the m-th powers of the
/// roots of f. Computed as Res_y(f(y), x - y^m), sign-normalized monic.
IntPoly twist(const IntPoly& f, unsigned m);

/// Exact irreducibility over Q for degrees 2..6.
bool is_irreducible(const IntPoly& f);

/// For monic quartic f: the monic h with h*h = f, if it exists.
std::optional<IntPoly> perfect_square_root(const IntPoly& f);

struct GaloisCertificate {
    enum class Verdict { ProvenSn, ProvenAn, Unknown };
    Verdict verdict = Verdict::Unknown;
    std::vector<std::pair<long, std::vector<int>>> witnesses;  // (prime, cycle type)
    bool discriminant_is_square = false;
};

/// Dedekind cycle-type search proving Gal(f) is S_n or A_n, or Unknown.
/// Unknown is always a sound answer. f must be squarefree, deg 2..6.
GaloisCertificate galois_sn_certificate(const IntPoly& f, long prime_budget = 200);

namespace detail {
/// Degree pattern (cycle type) of f mod p via distinct-degree
/// factorization. Requires p odd or 2, p not dividing lc(f), f squarefree
/// mod p; returns empty vector when f mod p is not squarefree.
std::vector<int> degree_pattern_mod_p(const IntPoly& f, long p);
}  // namespace detail

}  // namespace g2end

#endif
