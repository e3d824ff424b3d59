#include "g2end/covers.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace g2end::covers {

std::shared_ptr<const NumberField> NumberField::rationals() {
    static std::shared_ptr<const NumberField> q(new NumberField(IntPoly{0, 1}));
    return q;
}

std::shared_ptr<const NumberField> NumberField::create(const IntPoly& minpoly) {
    if (!minpoly.is_monic()) throw Error("NumberField: minpoly must be monic");
    int d = minpoly.degree();
    if (d < 1 || d > 4) throw Error("NumberField: degree must be 1..4");
    if (d >= 2 && !is_irreducible(minpoly)) throw Error("NumberField: minpoly reducible");
    return std::shared_ptr<const NumberField>(new NumberField(minpoly));
}

namespace {

void check_same(const FieldPtr& a, const FieldPtr& b) {
    if (a.get() != b.get()) throw Error("number field mismatch");
}

std::vector<Rat> reduce_mod_minpoly(std::vector<Rat> v, const IntPoly& g) {
    size_t n = static_cast<size_t>(g.degree());
    for (size_t d = v.size(); d-- > n;) {
        Rat c = v[d];
        if (c == 0) continue;
        v[d] = 0;
        for (size_t k = 0; k < n; ++k) v[d - n + k] -= c * Rat(g[static_cast<int>(k)]);
    }
    v.resize(n);
    return v;
}

}  // namespace

NFElem NFElem::zero(const FieldPtr& f) {
    return NFElem{f, std::vector<Rat>(static_cast<size_t>(f->degree()), Rat(0))};
}

NFElem NFElem::from_rat(const FieldPtr& f, const Rat& q) {
    NFElem e = zero(f);
    e.coords[0] = q;
    return e;
}

NFElem NFElem::gen(const FieldPtr& f) {
    if (f->degree() < 2) throw Error("NFElem::gen: field is Q");
    NFElem e = zero(f);
    e.coords[1] = 1;
    return e;
}

bool NFElem::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rat& q) { return q == 0; });
}

NFElem NFElem::operator+(const NFElem& o) const {
    check_same(field, o.field);
    NFElem r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

NFElem NFElem::operator-(const NFElem& o) const {
    check_same(field, o.field);
    NFElem r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

NFElem NFElem::operator-() const {
    NFElem r = *this;
    for (auto& v : r.coords) v = -v;
    return r;
}

NFElem NFElem::operator*(const NFElem& o) const {
    check_same(field, o.field);
    size_t n = coords.size();
    std::vector<Rat> prod(2 * n - 1, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        if (coords[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) prod[i + j] += coords[i] * o.coords[j];
    }
    return NFElem{field, reduce_mod_minpoly(std::move(prod), field->minpoly())};
}

bool NFElem::operator==(const NFElem& o) const {
    return field.get() == o.field.get() && coords == o.coords;
}

NFElem NFElem::inverse() const {
    if (is_zero()) throw Error("NFElem: inverse of zero");
    // extended Euclid of the coordinate polynomial with the minimal
    // polynomial over Q
    size_t n = coords.size();
    std::vector<Rat> a(coords);
    std::vector<Rat> b(static_cast<size_t>(field->degree()) + 1);
    for (int i = 0; i <= field->degree(); ++i) b[static_cast<size_t>(i)] = Rat(field->minpoly()[i]);
    auto deg = [](const std::vector<Rat>& v) {
        for (size_t i = v.size(); i-- > 0;)
            if (v[i] != 0) return static_cast<int>(i);
        return -1;
    };
    // invariant: u_i * this = r_i  (mod g)
    std::vector<Rat> r0 = b, r1 = a;
    std::vector<Rat> u0(1, Rat(0)), u1(1, Rat(1));
    while (deg(r1) > 0) {
        int dr0 = deg(r0), dr1 = deg(r1);
        if (dr0 < dr1) {
            std::swap(r0, r1);
            std::swap(u0, u1);
            continue;
        }
        // r0 -= (lead r0 / lead r1) x^(dr0-dr1) * r1, same for u
        Rat fct = r0[static_cast<size_t>(dr0)] / r1[static_cast<size_t>(dr1)];
        int shift = dr0 - dr1;
        for (int i = 0; i <= dr1; ++i)
            r0[static_cast<size_t>(i + shift)] -= fct * r1[static_cast<size_t>(i)];
        if (u0.size() < u1.size() + static_cast<size_t>(shift)) u0.resize(u1.size() + static_cast<size_t>(shift), Rat(0));
        for (size_t i = 0; i < u1.size(); ++i) u0[i + static_cast<size_t>(shift)] -= fct * u1[i];
        if (deg(r0) < 0) {
            std::swap(r0, r1);  // remainder chain ended on the other side
            std::swap(u0, u1);
            break;
        }
    }
    if (deg(r1) != 0) throw Error("NFElem: inverse does not exist (minpoly not irreducible?)");
    Rat lead = r1[0];
    std::vector<Rat> inv(u1);
    for (auto& v : inv) v /= lead;
    inv.resize(2 * n - 1, Rat(0));
    return NFElem{field, reduce_mod_minpoly(std::move(inv), field->minpoly())};
}

NFElem NFElem::conjugate() const {
    if (field->degree() == 1) return *this;
    if (field->degree() != 2) throw Error("NFElem: conjugate only for quadratic fields");
    // other root of t^2 + a1 t + a0 is -a1 - t
    const IntPoly& g = field->minpoly();
    NFElem r = zero(field);
    r.coords[0] = coords[0] - coords[1] * Rat(g[1]);
    r.coords[1] = -coords[1];
    return r;
}

std::string NFElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        if (!first) os << " + ";
        os << coords[i].get_str();
        if (i >= 1) os << "*t" << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------

FieldPoly FieldPoly::from_intpoly(const FieldPtr& f, const IntPoly& p) {
    FieldPoly r{f, {}};
    for (int i = 0; i <= p.degree(); ++i) r.c.push_back(NFElem::from_rat(f, Rat(p[i])));
    r.normalize();
    return r;
}

int FieldPoly::degree() const {
    for (size_t i = c.size(); i-- > 0;)
        if (!c[i].is_zero()) return static_cast<int>(i);
    return -1;
}

void FieldPoly::normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

FieldPoly FieldPoly::operator+(const FieldPoly& o) const {
    check_same(field, o.field);
    FieldPoly r{field, {}};
    size_t n = std::max(c.size(), o.c.size());
    for (size_t i = 0; i < n; ++i) {
        NFElem v = NFElem::zero(field);
        if (i < c.size()) v = v + c[i];
        if (i < o.c.size()) v = v + o.c[i];
        r.c.push_back(v);
    }
    r.normalize();
    return r;
}

FieldPoly FieldPoly::operator-(const FieldPoly& o) const {
    check_same(field, o.field);
    FieldPoly r{field, {}};
    size_t n = std::max(c.size(), o.c.size());
    for (size_t i = 0; i < n; ++i) {
        NFElem v = NFElem::zero(field);
        if (i < c.size()) v = v + c[i];
        if (i < o.c.size()) v = v - o.c[i];
        r.c.push_back(v);
    }
    r.normalize();
    return r;
}

FieldPoly FieldPoly::operator*(const FieldPoly& o) const {
    check_same(field, o.field);
    FieldPoly r{field, {}};
    if (is_zero() || o.is_zero()) return r;
    r.c.assign(c.size() + o.c.size() - 1, NFElem::zero(field));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
    }
    r.normalize();
    return r;
}

FieldPoly FieldPoly::operator*(const NFElem& k) const {
    FieldPoly r = *this;
    for (auto& v : r.c) v = v * k;
    r.normalize();
    return r;
}

FieldPoly FieldPoly::derivative() const {
    FieldPoly r{field, {}};
    for (size_t i = 1; i < c.size(); ++i)
        r.c.push_back(c[i] * NFElem::from_rat(field, Rat(static_cast<long>(i))));
    r.normalize();
    return r;
}

bool FieldPoly::operator==(const FieldPoly& o) const {
    FieldPoly d = *this - o;
    return d.is_zero();
}

std::pair<FieldPoly, FieldPoly> FieldPoly::divrem(const FieldPoly& d) const {
    check_same(field, d.field);
    if (d.is_zero()) throw Error("FieldPoly: division by zero polynomial");
    FieldPoly q{field, {}}, r = *this;
    r.normalize();
    int dd = d.degree();
    NFElem dlead_inv = d.c[static_cast<size_t>(dd)].inverse();
    if (r.degree() >= dd) q.c.assign(static_cast<size_t>(r.degree() - dd) + 1, NFElem::zero(field));
    while (r.degree() >= dd) {
        int shift = r.degree() - dd;
        NFElem coeff = r.c[static_cast<size_t>(r.degree())] * dlead_inv;
        q.c[static_cast<size_t>(shift)] = coeff;
        for (int i = 0; i <= dd; ++i)
            r.c[static_cast<size_t>(shift + i)] = r.c[static_cast<size_t>(shift + i)] - coeff * d.c[static_cast<size_t>(i)];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

FieldPoly FieldPoly::conjugate() const {
    FieldPoly r = *this;
    for (auto& v : r.c) v = v.conjugate();
    return r;
}

// ---------------------------------------------------------------------------

bool verify_cover(const FieldPoly& f, const CoverMap& map) {
    check_same(f.field, map.field);
    if (map.w_den.is_zero() || map.r_den.is_zero()) throw Error("verify_cover: zero denominator");
    // f r_num^2 w_den^3 = (w_num^3 + A w_num w_den^2 + B w_den^3) r_den^2
    FieldPoly wd2 = map.w_den * map.w_den;
    FieldPoly wd3 = wd2 * map.w_den;
    FieldPoly lhs = f * map.r_num * map.r_num * wd3;
    FieldPoly rhs = (map.w_num * map.w_num * map.w_num + (map.w_num * wd2) * map.A + wd3 * map.B) *
                    (map.r_den * map.r_den);
    return lhs == rhs;
}

int map_degree(const FieldPoly& f, const CoverMap& map) {
    if (!verify_cover(f, map)) throw Error("map_degree: unverified map");
    return std::max(map.w_num.degree(), map.w_den.degree());
}

Pullback pullback_differential(const FieldPoly& f, const CoverMap& map) {
    if (!verify_cover(f, map)) throw Error("pullback_differential: unverified map");
    // phi*(dw/z) = (w'/r) dx/y; w'/r = (w_num' w_den - w_num w_den') r_den
    //              / (w_den^2 r_num)
    FieldPoly num = (map.w_num.derivative() * map.w_den - map.w_num * map.w_den.derivative()) * map.r_den;
    FieldPoly den = map.w_den * map.w_den * map.r_num;
    auto [q, r] = num.divrem(den);
    if (!r.is_zero() || q.degree() > 1)
        throw Error("pullback_differential: w'/r is not a polynomial of degree <= 1");
    Pullback pb{NFElem::zero(map.field), NFElem::zero(map.field)};
    if (q.degree() >= 0) pb.alpha = q.c[0];
    if (q.degree() >= 1) pb.beta = q.c[1];
    return pb;
}

bool independence(const Pullback& p1, const Pullback& p2) {
    NFElem det = p1.alpha * p2.beta - p2.alpha * p1.beta;
    return !det.is_zero();
}

CoverMap conjugate(const CoverMap& map) {
    CoverMap r = map;
    r.w_num = map.w_num.conjugate();
    r.w_den = map.w_den.conjugate();
    r.r_num = map.r_num.conjugate();
    r.r_den = map.r_den.conjugate();
    r.A = map.A.conjugate();
    r.B = map.B.conjugate();
    return r;
}

// ---------------------------------------------------------------------------
// text input

namespace {

Rat parse_rat_token(std::string tok) {
    if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
    size_t slash = tok.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(tok));
        Rat r(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1)));
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error("cover file: bad rational '" + tok + "'");
    }
}

// one coefficient: sum of terms `p/q` or `p/q*t^k` (also `t`, `-t^2`, ...)
NFElem parse_coefficient(const FieldPtr& field, const std::string& text) {
    NFElem acc = NFElem::zero(field);
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw Error("cover file: empty coefficient");
    size_t pos = 0;
    while (pos < s.size()) {
        size_t start = pos;
        ++pos;  // sign or first char of the term
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
        std::string term = s.substr(start, pos - start);
        if (term == "+" || term == "-") throw Error("cover file: dangling sign in '" + text + "'");
        // split off *t^k
        Rat coeff(1);
        int power = 0;
        size_t tpos = term.find('t');
        if (tpos == std::string::npos) {
            coeff = parse_rat_token(term);
        } else {
            std::string head = term.substr(0, tpos);
            if (!head.empty() && head.back() == '*') head.pop_back();
            if (head.empty() || head == "+")
                coeff = 1;
            else if (head == "-")
                coeff = -1;
            else
                coeff = parse_rat_token(head);
            power = 1;
            if (tpos + 1 < term.size()) {
                if (term[tpos + 1] != '^') throw Error("cover file: bad term '" + term + "'");
                power = std::stoi(term.substr(tpos + 2));
            }
            if (power >= field->degree())
                throw Error("cover file: t-power exceeds field degree in '" + term + "'");
        }
        NFElem t = NFElem::from_rat(field, coeff);
        for (int i = 0; i < power; ++i) t = t * NFElem::gen(field);
        acc = acc + t;
    }
    return acc;
}

FieldPoly parse_poly(const FieldPtr& field, const std::string& text) {
    FieldPoly p{field, {}};
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) p.c.push_back(parse_coefficient(field, cur));
    p.normalize();
    return p;
}

}  // namespace

CoverInput load_cover(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        size_t colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::string key = line.substr(0, colon);
        key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
        if (key.empty()) continue;
        kv[key] = line.substr(colon + 1);
    }
    for (const char* req : {"f", "A", "B", "w_num", "w_den", "r_num", "r_den"})
        if (!kv.count(req)) throw Error(std::string("cover file: missing ") + req + ":");

    FieldPtr field;
    if (kv.count("minpoly")) {
        std::vector<Int> gc;
        std::istringstream gs(kv["minpoly"]);
        std::string tok;
        while (std::getline(gs, tok, ',')) {
            size_t b = tok.find_first_not_of(" \t\r");
            size_t e = tok.find_last_not_of(" \t\r");
            if (b == std::string::npos) throw Error("cover file: empty minpoly coefficient");
            gc.emplace_back(Int(tok.substr(b, e - b + 1)));
        }
        field = NumberField::create(IntPoly(std::move(gc)));
    } else {
        field = NumberField::rationals();
    }
    CoverInput ci{field, parse_poly(field, kv["f"]), {}};
    ci.map.field = field;
    ci.map.w_num = parse_poly(field, kv["w_num"]);
    ci.map.w_den = parse_poly(field, kv["w_den"]);
    ci.map.r_num = parse_poly(field, kv["r_num"]);
    ci.map.r_den = parse_poly(field, kv["r_den"]);
    auto scalar = [&](const std::string& key) {
        FieldPoly p = parse_poly(field, kv[key]);
        if (p.degree() > 0) throw Error("cover file: " + key + " must be a field element");
        return p.degree() < 0 ? NFElem::zero(field) : p.c[0];
    };
    ci.map.A = scalar("A");
    ci.map.B = scalar("B");
    if (ci.f.degree() != 5 && ci.f.degree() != 6) throw Error("cover file: f must have degree 5 or 6");
    return ci;
}

CoverInput load_cover_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open cover file " + path);
    return load_cover(in);
}

}  // namespace g2end::covers
