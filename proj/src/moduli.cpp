#include "g2end/moduli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "g2end/qforms.hpp"

namespace g2end {

namespace {

// dense homogeneous binary form of degree d: coefficient of x^i y^(d-i)
struct BForm {
    int deg = 0;
    std::vector<Rat> c;  // size deg+1
    explicit BForm(int d) : deg(d), c(static_cast<size_t>(d) + 1, Rat(0)) {}
};

BForm dx(const BForm& f) {
    if (f.deg == 0) return BForm(0);
    BForm r(f.deg - 1);
    for (int i = 1; i <= f.deg; ++i) r.c[static_cast<size_t>(i - 1)] = Rat(i) * f.c[static_cast<size_t>(i)];
    return r;
}

BForm dy(const BForm& f) {
    if (f.deg == 0) return BForm(0);
    BForm r(f.deg - 1);
    for (int i = 0; i < f.deg; ++i) r.c[static_cast<size_t>(i)] = Rat(f.deg - i) * f.c[static_cast<size_t>(i)];
    return r;
}

BForm mul(const BForm& f, const BForm& g) {
    BForm r(f.deg + g.deg);
    for (int i = 0; i <= f.deg; ++i) {
        if (f.c[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j <= g.deg; ++j)
            r.c[static_cast<size_t>(i + j)] += f.c[static_cast<size_t>(i)] * g.c[static_cast<size_t>(j)];
    }
    return r;
}

void add_scaled(BForm& acc, const BForm& f, const Rat& k) {
    for (int i = 0; i <= f.deg; ++i) acc.c[static_cast<size_t>(i)] += k * f.c[static_cast<size_t>(i)];
}

Rat factorial(int n) {
    Rat r(1);
    for (int i = 2; i <= n; ++i) r *= Rat(i);
    return r;
}

Rat binom(int n, int k) {
    Rat r(1);
    for (int i = 0; i < k; ++i) r *= make_rat(n - i, i + 1);
    return r;
}

// k-th transvectant of forms of degree m, n
BForm transvectant(const BForm& f, const BForm& g, int k) {
    int m = f.deg, n = g.deg;
    BForm acc(m + n - 2 * k);
    for (int j = 0; j <= k; ++j) {
        BForm a = f, b = g;
        for (int t = 0; t < k - j; ++t) a = dx(a);
        for (int t = 0; t < j; ++t) a = dy(a);
        for (int t = 0; t < j; ++t) b = dx(b);
        for (int t = 0; t < k - j; ++t) b = dy(b);
        Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
        add_scaled(acc, mul(a, b), sign * binom(k, j));
    }
    Rat scale = factorial(m - k) * factorial(n - k) / (factorial(m) * factorial(n));
    for (auto& v : acc.c) v *= scale;
    return acc;
}

}  // namespace

IgusaInvariants igusa_clebsch(const CurveModel& curve) {
    const IntPoly& f = curve.f();
    BForm F(6);
    for (int i = 0; i <= f.degree(); ++i) F.c[static_cast<size_t>(i)] = Rat(f[i]);
    BForm i4 = transvectant(F, F, 4);
    BForm delta = transvectant(i4, i4, 2);
    BForm y1 = transvectant(F, i4, 4);
    BForm y2 = transvectant(i4, y1, 2);
    BForm y3 = transvectant(i4, y2, 2);
    Rat A = transvectant(F, F, 6).c[0];
    Rat B = transvectant(i4, i4, 4).c[0];
    Rat C = transvectant(i4, delta, 4).c[0];
    Rat D = transvectant(y3, y1, 2).c[0];
    IgusaInvariants I;
    I.I2 = Rat(-120) * A;
    I.I4 = Rat(-720) * A * A + Rat(6750) * B;
    I.I6 = Rat(8640) * A * A * A - Rat(108000) * A * B + Rat(202500) * C;
    I.I10 = Rat(-62208) * A * A * A * A * A + Rat(972000) * A * A * A * B + Rat(1620000) * A * A * C -
            Rat(3037500) * A * B * B - Rat(6075000) * B * C - Rat(4556250) * D;
    for (Rat* v : {&I.I2, &I.I4, &I.I6, &I.I10}) v->canonicalize();
    if (I.I10 == 0) throw Error("igusa_clebsch: I10 vanished on a smooth model (internal)");
    return I;
}

bool weighted_equal(const IgusaInvariants& P, const IgusaInvariants& Q) {
    if (P.I10 == 0 || Q.I10 == 0) throw Error("weighted_equal: invalid invariants (I10 = 0)");
    // u^5 = Q10/P10 determines u uniquely if rational
    auto u = nth_root_exact(Q.I10 / P.I10, 5);
    if (!u) return false;
    return Q.I2 == *u * P.I2 && Q.I4 == (*u) * (*u) * P.I4 && Q.I6 == (*u) * (*u) * (*u) * P.I6;
}

// ---------------------------------------------------------------------------
// equation file format

namespace {

Rat parse_rat(const std::string& tok) {
    size_t slash = tok.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(tok));
        Rat r(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1)));
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error("equation file: bad rational '" + tok + "'");
    }
}

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::pair<std::vector<int>, Rat> parse_monomial_line(const std::string& line, size_t nexp,
                                                     const std::string& ctx) {
    size_t colon = line.find(':');
    if (colon == std::string::npos) throw Error(ctx + ": monomial line missing ':'");
    std::istringstream es(line.substr(0, colon));
    std::vector<int> exps;
    int e;
    while (es >> e) exps.push_back(e);
    if (exps.size() != nexp) throw Error(ctx + ": expected " + std::to_string(nexp) + " exponents");
    for (int v : exps)
        if (v < 0) throw Error(ctx + ": negative exponent");
    return {exps, parse_rat(strip(line.substr(colon + 1)))};
}

}  // namespace

HumbertEquation load_humbert_equation(std::istream& in, const std::string& name) {
    HumbertEquation eq;
    std::string line;
    bool in_transform = false;
    int transform_index = -1;
    bool have_disc = false, have_coords = false;
    std::array<std::vector<std::pair<std::array<int, 4>, Rat>>, 6> transform;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        if (line == "[satake_transform]") {
            in_transform = true;
            continue;
        }
        if (in_transform) {
            if (line.size() == 3 && line[0] == 's' && line[2] == ':') {
                transform_index = line[1] - '1';
                if (transform_index < 0 || transform_index > 5)
                    throw Error(name + ": bad transform header " + line);
                continue;
            }
            if (transform_index < 0) throw Error(name + ": transform monomial before s<i>: header");
            auto [exps, coeff] = parse_monomial_line(line, 4, name);
            transform[static_cast<size_t>(transform_index)].push_back(
                {{exps[0], exps[1], exps[2], exps[3]}, coeff});
            continue;
        }
        if (line.rfind("discriminant=", 0) == 0) {
            eq.discriminant = Int(strip(line.substr(13)));
            have_disc = true;
            continue;
        }
        if (line.rfind("coords=", 0) == 0) {
            std::string v = strip(line.substr(7));
            if (v == "igusa")
                eq.coordinate_system = HumbertCoords::Igusa;
            else if (v == "satake")
                eq.coordinate_system = HumbertCoords::Satake;
            else
                throw Error(name + ": coords must be igusa or satake");
            have_coords = true;
            continue;
        }
        if (line.rfind("convention=", 0) == 0) {
            eq.convention_id = strip(line.substr(11));
            continue;
        }
        size_t nexp = (eq.coordinate_system == HumbertCoords::Igusa) ? 4 : 6;
        if (!have_coords) throw Error(name + ": monomial before coords= header");
        eq.monomials.push_back(parse_monomial_line(line, nexp, name));
    }
    if (!have_disc) throw Error(name + ": missing discriminant=");
    if (eq.monomials.empty()) throw Error(name + ": no monomials");
    if (eq.convention_id.empty()) throw Error(name + ": missing convention=");
    if (eq.convention_id != kInvariantConvention)
        throw Error(name + ": convention '" + eq.convention_id + "' does not match " + kInvariantConvention);
    if (in_transform) {
        for (const auto& t : transform)
            if (t.empty()) throw Error(name + ": transform must define all of s1..s6");
        eq.satake_transform = transform;
    }
    if (eq.coordinate_system == HumbertCoords::Igusa) {
        // weighted homogeneity: 2 e2 + 4 e4 + 6 e6 + 10 e10 constant
        long w0 = -1;
        for (const auto& [e, c] : eq.monomials) {
            long w = 2L * e[0] + 4L * e[1] + 6L * e[2] + 10L * e[3];
            if (w0 < 0) w0 = w;
            if (w != w0) throw Error(name + ": weighted-inhomogeneous Igusa equation");
        }
    } else if (!eq.satake_transform) {
        throw Error(name + ": satake equation requires a [satake_transform] block");
    }
    return eq;
}

HumbertEquation load_humbert_equation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open equation file " + path);
    return load_humbert_equation(in, path);
}

namespace {

Rat eval_igusa_poly(const std::vector<std::pair<std::array<int, 4>, Rat>>& mono,
                    const IgusaInvariants& P) {
    Rat acc(0);
    for (const auto& [e, c] : mono) {
        Rat term = c;
        for (int i = 0; i < e[0]; ++i) term *= P.I2;
        for (int i = 0; i < e[1]; ++i) term *= P.I4;
        for (int i = 0; i < e[2]; ++i) term *= P.I6;
        for (int i = 0; i < e[3]; ++i) term *= P.I10;
        acc += term;
    }
    acc.canonicalize();
    return acc;
}

}  // namespace

MembershipResult humbert_membership(const IgusaInvariants& point, const HumbertEquation& eq, double tol) {
    MembershipResult res;
    if (eq.coordinate_system == HumbertCoords::Igusa) {
        Rat acc(0);
        for (const auto& [e, c] : eq.monomials) {
            Rat term = c;
            for (int i = 0; i < e[0]; ++i) term *= point.I2;
            for (int i = 0; i < e[1]; ++i) term *= point.I4;
            for (int i = 0; i < e[2]; ++i) term *= point.I6;
            for (int i = 0; i < e[3]; ++i) term *= point.I10;
            acc += term;
        }
        res.verdict = (acc == 0) ? Membership::On : Membership::Off;
        return res;
    }
    if (!eq.satake_transform) throw Error("humbert_membership: missing satake transform");
    if (tol <= 0) throw Error("humbert_membership: tol must be positive");
    std::array<Rat, 6> s;
    for (size_t i = 0; i < 6; ++i) s[i] = eval_igusa_poly((*eq.satake_transform)[i], point);
    auto ev = satake::evaluate_all_permutations(eq, s, tol);
    res.reliable = ev.reliable;
    res.min_match = ev.min_match;
    res.min_nonmatch = ev.min_nonmatch;
    res.verdict = ev.any_match ? Membership::NumericOn : Membership::NumericOff;
    return res;
}

std::optional<RmOrderResult> rm_order_from_membership(const std::map<Int, bool>& memberships,
                                                      const Int& d) {
    if (d <= 0) throw Error("rm_order_from_membership: d must be positive");
    for (int n = 1;; ++n) {
        Int surface = Int(n) * n * d;
        if (surface == 1) continue;  // H_1 is the product locus; a Jacobian point is never on it
        auto it = memberships.find(surface);
        if (it == memberships.end()) {
            // coverage gap: the certification range ends here
            return std::nullopt;
        }
        if (it->second) return RmOrderResult{n, surface};
        bool any_left = false;
        for (const auto& [D, v] : memberships)
            if (D > surface) any_left = true;
        if (!any_left) return std::nullopt;
    }
}

std::vector<Int> optimality_obstruction_set(const Int& D) {
    std::vector<Int> out;
    for (Int n = 2; n * n <= D; ++n) {
        if (D % (n * n) != 0) continue;
        Int q = D / (n * n);
        if (is_discriminant(q)) out.push_back(q);
    }
    std::sort(out.begin(), out.end(), [](const Int& a, const Int& b) { return a > b; });
    return out;
}

std::optional<CmRecord> cm_list_match(const IgusaInvariants& point, const std::vector<CmRecord>& list) {
    for (const auto& rec : list)
        if (weighted_equal(rec.point, point)) return rec;
    return std::nullopt;
}

std::vector<CmRecord> load_cm_list(std::istream& in) {
    std::vector<CmRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos) throw Error("cm list: line missing ':'");
        std::istringstream vs(line.substr(0, colon));
        std::string t2, t4, t6, t10;
        if (!(vs >> t2 >> t4 >> t6 >> t10)) throw Error("cm list: need four invariants");
        CmRecord rec;
        rec.point = IgusaInvariants{parse_rat(t2), parse_rat(t4), parse_rat(t6), parse_rat(t10)};
        rec.label = strip(line.substr(colon + 1));
        if (rec.point.I10 == 0) throw Error("cm list: I10 = 0 entry");
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<CmRecord> load_cm_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open cm list " + path);
    return load_cm_list(in);
}

}  // namespace g2end
