#ifndef G2END_COVERS_HPP
#define G2END_COVERS_HPP

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "g2end/intpoly.hpp"
#include "g2end/zarith.hpp"

namespace g2end::covers {

/// Q[t]/(g), g monic irreducible of degree <= 4 (deg 1 means Q itself).
class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    static std::shared_ptr<const NumberField> rationals();
    static std::shared_ptr<const NumberField> create(const IntPoly& minpoly);
    const IntPoly& minpoly() const { return g_; }
    int degree() const { return g_.degree(); }

  private:
    explicit NumberField(IntPoly g) : g_(std::move(g)) {}
    IntPoly g_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field, coordinates in the power basis 1, t, ...
struct NFElem {
    FieldPtr field;
    std::vector<Rat> coords;

    static NFElem zero(const FieldPtr& f);
    static NFElem from_rat(const FieldPtr& f, const Rat& q);
    static NFElem gen(const FieldPtr& f);  // the class of t

    bool is_zero() const;
    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator-() const;
    NFElem inverse() const;
    bool operator==(const NFElem& o) const;

    /// Galois conjugate t -> -t - a1 for quadratic fields.
    NFElem conjugate() const;

    std::string str() const;
};

/// Dense polynomial over a number field, ascending coefficients.
struct FieldPoly {
    FieldPtr field;
    std::vector<NFElem> c;

    static FieldPoly from_intpoly(const FieldPtr& f, const IntPoly& p);
    int degree() const;
    bool is_zero() const { return degree() < 0; }
    void normalize();

    FieldPoly operator+(const FieldPoly& o) const;
    FieldPoly operator-(const FieldPoly& o) const;
    FieldPoly operator*(const FieldPoly& o) const;
    FieldPoly operator*(const NFElem& k) const;
    FieldPoly derivative() const;
    bool operator==(const FieldPoly& o) const;

    /// Euclidean division; the divisor's leading coefficient is inverted in
    /// the field.
    std::pair<FieldPoly, FieldPoly> divrem(const FieldPoly& d) const;

    FieldPoly conjugate() const;
};

/// Map (x,y) -> (w(x), y r(x)) onto the curve z^2 = w^3 + A w + B.
struct CoverMap {
    FieldPtr field;
    FieldPoly w_num, w_den, r_num, r_den;
    NFElem A, B;
};

/// Exact check of r(x)^2 f(x) = w(x)^3 + A w(x) + B as rational functions.
bool verify_cover(const FieldPoly& f, const CoverMap& map);

/// max(deg w_num, deg w_den); requires a verified cover.
int map_degree(const FieldPoly& f, const CoverMap& map);

struct Pullback {
    NFElem alpha, beta;  // pullback of dw/z is (alpha + beta x) dx/y
};

/// Pullback of the target's canonical differential; throws if w'/r does
/// not reduce to a polynomial of degree <= 1.
Pullback pullback_differential(const FieldPoly& f, const CoverMap& map);

bool independence(const Pullback& p1, const Pullback& p2);

/// Conjugated map (coefficients and target data) for quadratic fields.
CoverMap conjugate(const CoverMap& map);

/// Text format: lines `minpoly:`, `f:`, `A:`, `B:`, `w_num:`, `w_den:`,
/// `r_num:`, `r_den:`; coefficients comma-separated, each a sum of p/q and
/// p/q*t^k terms.
struct CoverInput {
    FieldPtr field;
    FieldPoly f;
    CoverMap map;
};
CoverInput load_cover(std::istream& in);
CoverInput load_cover_file(const std::string& path);

}  // namespace g2end::covers

#endif
