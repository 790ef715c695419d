#include "planept/poly.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace planept {

std::array<unsigned, 3> mono_exps(unsigned d, size_t idx) {
    // invert mono_index: find r with r(r+1)/2 <= idx < (r+1)(r+2)/2
    unsigned r = 0;
    while (size_t(r + 1) * (r + 2) / 2 <= idx) ++r;
    const size_t base = size_t(r) * (r + 1) / 2;
    const unsigned i = d - r;
    const unsigned j = r - unsigned(idx - base);
    return {i, j, d - i - j};
}

// ---------------------------------------------------------------------------
// ProjPoint

ProjPoint::ProjPoint(FieldPtr f, FieldElem x, FieldElem y, FieldElem z)
    : f_(std::move(f)), c_{std::move(x), std::move(y), std::move(z)} {
    int last = -1;
    for (int i = 2; i >= 0; --i)
        if (!c_[size_t(i)].is_zero()) {
            last = i;
            break;
        }
    require(last >= 0, "ZeroPoint", "(0,0,0) is not a projective point");
    if (!c_[size_t(last)].is_one()) {
        FieldElem s = c_[size_t(last)].inv();
        for (auto& e : c_) e = e * s;
    }
}

std::string ProjPoint::str() const {
    return "(" + c_[0].str() + " : " + c_[1].str() + " : " + c_[2].str() + ")";
}

// ---------------------------------------------------------------------------
// Poly3

Poly3::Poly3(FieldPtr f, unsigned degree)
    : f_(std::move(f)), deg_(degree), c_(mono_count(degree), f_->zero()) {}

Poly3::Poly3(FieldPtr f, unsigned degree, std::vector<FieldElem> coeffs)
    : f_(std::move(f)), deg_(degree), c_(std::move(coeffs)) {
    require(c_.size() == mono_count(deg_), "BadFixture", "coefficient vector has wrong length");
}

bool Poly3::is_zero() const {
    for (const auto& e : c_)
        if (!e.is_zero()) return false;
    return true;
}

Poly3 Poly3::operator+(const Poly3& o) const {
    require(deg_ == o.deg_, "DimensionMismatch", "adding forms of different degrees");
    Poly3 r(f_, deg_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

Poly3 Poly3::operator-(const Poly3& o) const {
    require(deg_ == o.deg_, "DimensionMismatch", "subtracting forms of different degrees");
    Poly3 r(f_, deg_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

Poly3 Poly3::scaled(const FieldElem& s) const {
    Poly3 r(f_, deg_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
    return r;
}

Poly3 Poly3::operator*(const Poly3& o) const {
    const unsigned d = deg_ + o.deg_;
    Poly3 r(f_, d);
    for (size_t ia = 0; ia < c_.size(); ++ia) {
        if (c_[ia].is_zero()) continue;
        auto ea = mono_exps(deg_, ia);
        for (size_t ib = 0; ib < o.c_.size(); ++ib) {
            if (o.c_[ib].is_zero()) continue;
            auto eb = mono_exps(o.deg_, ib);
            size_t idx = mono_index(d, ea[0] + eb[0], ea[1] + eb[1]);
            r.c_[idx] += c_[ia] * o.c_[ib];
        }
    }
    return r;
}

Poly3 Poly3::pow(unsigned e) const {
    Poly3 r(f_, 0, {f_->one()});
    for (unsigned k = 0; k < e; ++k) r = r * (*this);
    return r;
}

FieldElem Poly3::eval(const FieldElem& x, const FieldElem& y, const FieldElem& z) const {
    std::vector<FieldElem> px{f_->one()}, py{f_->one()}, pz{f_->one()};
    for (unsigned k = 1; k <= deg_; ++k) {
        px.push_back(px.back() * x);
        py.push_back(py.back() * y);
        pz.push_back(pz.back() * z);
    }
    FieldElem acc = f_->zero();
    for (size_t idx = 0; idx < c_.size(); ++idx) {
        if (c_[idx].is_zero()) continue;
        auto e = mono_exps(deg_, idx);
        acc += c_[idx] * px[e[0]] * py[e[1]] * pz[e[2]];
    }
    return acc;
}

FieldElem Poly3::eval(const ProjPoint& p) const {
    require(f_->same(p.field()), "FieldMismatch", "form and point over different fields");
    return eval(p[0], p[1], p[2]);
}

namespace {
Poly3 derivative(const Poly3& F, unsigned which) {
    const Field& f = F.field();
    require(F.degree() >= 1, "ZeroForm", "derivative of a constant form");
    Poly3 r(F.field_ptr(), F.degree() - 1);
    for (size_t idx = 0; idx < F.terms(); ++idx) {
        if (F[idx].is_zero()) continue;
        auto e = mono_exps(F.degree(), idx);
        if (e[which] == 0) continue;
        auto en = e;
        --en[which];
        r[mono_index(F.degree() - 1, en[0], en[1])] += F[idx] * f.from_int(long(e[which]));
    }
    return r;
}
} // namespace

Poly3 Poly3::dx() const { return derivative(*this, 0); }
Poly3 Poly3::dy() const { return derivative(*this, 1); }
Poly3 Poly3::dz() const { return derivative(*this, 2); }

Poly3 Poly3::variable(FieldPtr f, unsigned which) {
    Poly3 r(f, 1);
    r[which] = f->one();
    return r;
}

Poly3 Poly3::linear(FieldPtr f, const FieldElem& a, const FieldElem& b, const FieldElem& c) {
    Poly3 r(f, 1);
    r[0] = a;
    r[1] = b;
    r[2] = c;
    return r;
}

std::string Poly3::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t idx = 0; idx < c_.size(); ++idx) {
        if (c_[idx].is_zero()) continue;
        auto e = mono_exps(deg_, idx);
        std::string cs = c_[idx].str();
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos;
        bool composite = cs.find(' ') != std::string::npos;
        if (!first)
            os << (neg && !composite ? " - " : " + ");
        else if (neg && !composite) {
            os << "-";
        }
        if (neg && !composite) cs = cs.substr(1);
        first = false;

        const bool is_const = (e[0] + e[1] + e[2] == 0);
        std::string vars;
        const char* names[3] = {"x", "y", "z"};
        for (unsigned v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[v];
            if (e[v] > 1) vars += "^" + std::to_string(e[v]);
        }
        if (is_const) {
            os << (composite ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            os << vars;
        } else {
            os << (composite ? "(" + cs + ")" : cs) << "*" << vars;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// parsing

namespace {

// sparse trivariate polynomial over the field, for the expression parser
using SparsePoly = std::map<std::array<unsigned, 3>, FieldElem>;

void sp_addto(SparsePoly& a, const std::array<unsigned, 3>& e, const FieldElem& c) {
    auto it = a.find(e);
    if (it == a.end()) {
        if (!c.is_zero()) a.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
}

struct SparseOps {
    const Field* f;
    SparsePoly add(SparsePoly a, const SparsePoly& b) const {
        for (const auto& [e, c] : b) sp_addto(a, e, c);
        return a;
    }
    SparsePoly sub(SparsePoly a, const SparsePoly& b) const {
        for (const auto& [e, c] : b) sp_addto(a, e, -c);
        return a;
    }
    SparsePoly mul(const SparsePoly& a, const SparsePoly& b) const {
        SparsePoly r;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b)
                sp_addto(r, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return r;
    }
    SparsePoly div(SparsePoly a, const SparsePoly& b) const {
        require(b.size() == 1 && b.begin()->first == std::array<unsigned, 3>{0, 0, 0},
                "BadFixture", "polynomial division is only allowed by constants");
        FieldElem inv = b.begin()->second.inv();
        for (auto& [e, c] : a) c = c * inv;
        return a;
    }
    SparsePoly neg(SparsePoly a) const {
        for (auto& [e, c] : a) c = -c;
        return a;
    }
    SparsePoly pow(const SparsePoly& a, unsigned long e) const {
        SparsePoly r{{{0, 0, 0}, f->one()}};
        for (unsigned long k = 0; k < e; ++k) r = mul(r, a);
        return r;
    }
    SparsePoly literal(const std::string& digits) const {
        SparsePoly r;
        FieldElem c = f->from_rational(Rational(digits));
        if (!c.is_zero()) r.emplace(std::array<unsigned, 3>{0, 0, 0}, c);
        return r;
    }
    SparsePoly variable(const std::string& name) const {
        SparsePoly r;
        if (name == "x")
            r.emplace(std::array<unsigned, 3>{1, 0, 0}, f->one());
        else if (name == "y")
            r.emplace(std::array<unsigned, 3>{0, 1, 0}, f->one());
        else if (name == "z")
            r.emplace(std::array<unsigned, 3>{0, 0, 1}, f->one());
        else
            r.emplace(std::array<unsigned, 3>{0, 0, 0}, f->parse(name));
        return r;
    }
};

// the scalar expression machinery lives in field.cpp; a small local copy of
// the grammar driver keeps the two parsers independent
template <class Value, class Ops>
class TriParser {
public:
    TriParser(const std::string& s, Ops ops) : s_(s), ops_(ops) {}
    Value parse() {
        Value v = expr();
        skip_ws();
        require(pos_ == s_.size(), "BadFixture", "trailing junk in '" + s_ + "'");
        return v;
    }

private:
    Value expr() {
        Value v = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                v = ops_.add(v, term());
            } else if (peek() == '-') {
                ++pos_;
                v = ops_.sub(v, term());
            } else
                return v;
        }
    }
    Value term() {
        Value v = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                v = ops_.mul(v, factor());
            } else if (peek() == '/') {
                ++pos_;
                v = ops_.div(v, factor());
            } else
                return v;
        }
    }
    Value factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return ops_.neg(factor());
        }
        if (peek() == '+') {
            ++pos_;
            return factor();
        }
        Value v = primary();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
            require(!digits.empty(), "BadFixture", "missing exponent in '" + s_ + "'");
            v = ops_.pow(v, std::stoul(digits));
        }
        return v;
    }
    Value primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Value v = expr();
            skip_ws();
            require(peek() == ')', "BadFixture", "missing ')' in '" + s_ + "'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
            return ops_.literal(digits);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += s_[pos_++];
            return ops_.variable(name);
        }
        fail("BadFixture", "unexpected character in '" + s_ + "'");
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    const std::string& s_;
    Ops ops_;
    size_t pos_ = 0;
};

} // namespace

Poly3 Poly3::parse(FieldPtr f, const std::string& text) {
    TriParser<SparsePoly, SparseOps> parser(text, SparseOps{f.get()});
    SparsePoly sp = parser.parse();
    if (sp.empty()) return Poly3(f, 0);
    unsigned d = sp.begin()->first[0] + sp.begin()->first[1] + sp.begin()->first[2];
    for (const auto& [e, c] : sp)
        require(e[0] + e[1] + e[2] == d, "NotHomogeneous",
                "expression '" + text + "' is not homogeneous");
    Poly3 r(f, d);
    for (const auto& [e, c] : sp) r[mono_index(d, e[0], e[1])] = c;
    return r;
}

// ---------------------------------------------------------------------------
// geometry operations

namespace {
FieldElem mul_int(const Field& f, const FieldElem& e, const mpz_class& n) {
    return e * f.from_rational(Rational(n));
}
} // namespace

unsigned mult_at(const Poly3& F, const ProjPoint& p) {
    require(!F.is_zero(), "ZeroForm", "multiplicity of the zero form");
    require(F.field().same(p.field()), "FieldMismatch", "form and point over different fields");
    const Field& f = F.field();
    const unsigned d = F.degree();

    // position of the normalized coordinate and the two affine directions
    unsigned ell = 2;
    while (p[ell].is_zero()) --ell;
    unsigned u = (ell == 0) ? 1 : 0;
    unsigned v = (ell == 2) ? 1 : 2;

    // powers of the two affine coordinates of p
    std::vector<FieldElem> pu{f.one()}, pv{f.one()};
    for (unsigned k = 1; k <= d; ++k) {
        pu.push_back(pu.back() * p[u]);
        pv.push_back(pv.back() * p[v]);
    }

    // coefficient of x^al y^be in F translated so p sits at the origin of the
    // (u,v) chart: sum over monomials of binomial shifts
    for (unsigned delta = 0; delta <= d; ++delta) {
        for (unsigned al = 0; al <= delta; ++al) {
            const unsigned be = delta - al;
            FieldElem acc = f.zero();
            for (size_t idx = 0; idx < F.terms(); ++idx) {
                if (F[idx].is_zero()) continue;
                auto e = mono_exps(d, idx);
                const unsigned eu = e[u], ev = e[v];
                if (eu < al || ev < be) continue;
                mpz_class b1, b2;
                mpz_bin_uiui(b1.get_mpz_t(), eu, al);
                mpz_bin_uiui(b2.get_mpz_t(), ev, be);
                acc += mul_int(f, F[idx] * pu[eu - al] * pv[ev - be], b1 * b2);
            }
            if (!acc.is_zero()) return delta;
        }
    }
    // unreachable for nonzero F: the translated dehomogenization of a nonzero
    // form is nonzero
    fail("ZeroForm", "no surviving term");
}

FieldElem det3(const std::array<std::array<FieldElem, 3>, 3>& M) {
    return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
           M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
           M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
}

std::array<std::array<FieldElem, 3>, 3> inverse3(const std::array<std::array<FieldElem, 3>, 3>& M) {
    FieldElem d = det3(M);
    require(!d.is_zero(), "SingularMatrix", "3x3 matrix is singular");
    FieldElem di = d.inv();
    std::array<std::array<FieldElem, 3>, 3> R;
    auto cof = [&](unsigned r, unsigned c) {
        unsigned r1 = (r + 1) % 3, r2 = (r + 2) % 3, c1 = (c + 1) % 3, c2 = (c + 2) % 3;
        return M[r1][c1] * M[r2][c2] - M[r1][c2] * M[r2][c1];
    };
    for (unsigned r = 0; r < 3; ++r)
        for (unsigned c = 0; c < 3; ++c) R[c][r] = cof(r, c) * di;
    return R;
}

ProjPoint apply3(const std::array<std::array<FieldElem, 3>, 3>& M, const ProjPoint& p) {
    std::array<FieldElem, 3> r;
    for (unsigned i = 0; i < 3; ++i) r[i] = M[i][0] * p[0] + M[i][1] * p[1] + M[i][2] * p[2];
    return ProjPoint(p.field_ptr(), r[0], r[1], r[2]);
}

Poly3 coordinate_change(const Poly3& F, const std::array<std::array<FieldElem, 3>, 3>& M) {
    require(!det3(M).is_zero(), "SingularMatrix", "coordinate change by a singular matrix");
    const FieldPtr& f = F.field_ptr();
    const unsigned d = F.degree();
    // images of the variables, then power tables
    std::array<Poly3, 3> lin;
    for (unsigned r = 0; r < 3; ++r) lin[r] = Poly3::linear(f, M[r][0], M[r][1], M[r][2]);
    std::array<std::vector<Poly3>, 3> pw;
    for (unsigned r = 0; r < 3; ++r) {
        pw[r].push_back(Poly3(f, 0, {f->one()}));
        for (unsigned k = 1; k <= d; ++k) pw[r].push_back(pw[r].back() * lin[r]);
    }
    Poly3 acc(f, d);
    for (size_t idx = 0; idx < F.terms(); ++idx) {
        if (F[idx].is_zero()) continue;
        auto e = mono_exps(d, idx);
        acc = acc + (pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]).scaled(F[idx]);
    }
    return acc;
}

std::array<Poly3, 3> jacobian(const Poly3& F) {
    require(!F.is_zero(), "ZeroForm", "jacobian of the zero form");
    const unsigned long ch = F.field().characteristic();
    require(ch == 0 || F.degree() % ch != 0, "CharDividesDegree",
            "characteristic divides the degree of the form");
    return {F.dx(), F.dy(), F.dz()};
}

BinForm restrict_to_line(const Poly3& F, const ProjPoint& p0, const ProjPoint& p1) {
    require(p0 != p1, "CoincidentPoints", "two distinct points are needed to span a line");
    const FieldPtr& f = F.field_ptr();
    const unsigned d = F.degree();
    // binary linear images s*p0[c] + t*p1[c] and their power tables
    std::array<std::vector<BinForm>, 3> pw;
    for (unsigned c = 0; c < 3; ++c) {
        pw[c].push_back(BinForm(f, 0, {f->one()}));
        BinForm lin(f, 1, {p0[c], p1[c]});
        for (unsigned k = 1; k <= d; ++k) pw[c].push_back(pw[c].back() * lin);
    }
    BinForm acc(f, d);
    for (size_t idx = 0; idx < F.terms(); ++idx) {
        if (F[idx].is_zero()) continue;
        auto e = mono_exps(d, idx);
        acc = acc + (pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]).scaled(F[idx]);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// BinForm

BinForm::BinForm(FieldPtr f, unsigned degree)
    : f_(std::move(f)), deg_(degree), c_(degree + 1, f_->zero()) {}

BinForm::BinForm(FieldPtr f, unsigned degree, std::vector<FieldElem> coeffs)
    : f_(std::move(f)), deg_(degree), c_(std::move(coeffs)) {
    require(c_.size() == deg_ + 1, "BadFixture", "binary form coefficient count");
}

bool BinForm::is_zero() const {
    for (const auto& e : c_)
        if (!e.is_zero()) return false;
    return true;
}

BinForm BinForm::operator+(const BinForm& o) const {
    require(deg_ == o.deg_, "DimensionMismatch", "adding binary forms of different degrees");
    BinForm r(f_, deg_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

BinForm BinForm::operator*(const BinForm& o) const {
    BinForm r(f_, deg_ + o.deg_);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

BinForm BinForm::scaled(const FieldElem& s) const {
    BinForm r(f_, deg_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
    return r;
}

FieldElem BinForm::eval(const FieldElem& s, const FieldElem& t) const {
    std::vector<FieldElem> ps{f_->one()}, pt{f_->one()};
    for (unsigned k = 1; k <= deg_; ++k) {
        ps.push_back(ps.back() * s);
        pt.push_back(pt.back() * t);
    }
    FieldElem acc = f_->zero();
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) acc += c_[i] * ps[deg_ - i] * pt[i];
    return acc;
}

std::string BinForm::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[i].str() << ")";
        unsigned es = deg_ - unsigned(i), et = unsigned(i);
        if (es) os << "*s" << (es > 1 ? "^" + std::to_string(es) : "");
        if (et) os << "*t" << (et > 1 ? "^" + std::to_string(et) : "");
    }
    return os.str();
}

} // namespace planept
