#include "planept/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace planept {

std::string rat_str(const Rational& q) {
    return q.get_str();
}

Rational parse_rational(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    require(!t.empty(), "BadFixture", "empty rational literal");
    mpq_class q;
    if (q.set_str(t, 10) != 0) fail("BadFixture", "bad rational literal '" + text + "'");
    require(q.get_den() != 0, "DivisionByZero", "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// FieldSpec

bool FieldSpec::operator==(const FieldSpec& o) const {
    return base == o.base && p == o.p && gen == o.gen && min_poly == o.min_poly;
}

std::string FieldSpec::str() const {
    std::ostringstream os;
    if (base == BaseKind::Rationals)
        os << "Q";
    else
        os << "F" << p;
    if (has_extension()) {
        os << "[" << gen << "]/(";
        bool first = true;
        for (int k = int(min_poly.size()) - 1; k >= 0; --k) {
            const Rational& c = min_poly[size_t(k)];
            if (c == 0) continue;
            Rational a = c;
            if (!first) {
                os << (a < 0 ? "-" : "+");
                if (a < 0) a = -a;
            } else if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
            if (k == 0 || a != 1) os << rat_str(a);
            if (k > 0) {
                if (a != 1) os << "*";
                os << gen;
                if (k > 1) os << "^" << k;
            }
        }
        os << ")";
    }
    return os.str();
}

namespace {

// minimal scalar expression parser shared by FieldSpec::parse (univariate
// polynomials over the base) and Field::parse (field elements)
template <class Value, class Ops>
class ExprParser {
public:
    ExprParser(const std::string& s, Ops ops) : s_(s), ops_(ops) {}

    Value parse() {
        Value v = expr();
        skip_ws();
        require(pos_ == s_.size(), "BadFixture", "trailing junk in expression '" + s_ + "'");
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
            } else {
                return v;
            }
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
            } else {
                return v;
            }
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
        fail("BadFixture", "unexpected character in expression '" + s_ + "'");
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    const std::string& s_;
    Ops ops_;
    size_t pos_ = 0;
};

// dense univariate polynomial over QQ (pre-reduction), used for minimal polynomials
using UniPoly = std::vector<Rational>;

UniPoly uni_trim(UniPoly v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

struct UniOps {
    std::string var;
    UniPoly add(UniPoly a, const UniPoly& b) const {
        if (a.size() < b.size()) a.resize(b.size(), Rational(0));
        for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
        return uni_trim(std::move(a));
    }
    UniPoly sub(UniPoly a, const UniPoly& b) const {
        if (a.size() < b.size()) a.resize(b.size(), Rational(0));
        for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
        return uni_trim(std::move(a));
    }
    UniPoly mul(const UniPoly& a, const UniPoly& b) const {
        if (a.empty() || b.empty()) return {};
        UniPoly r(a.size() + b.size() - 1, Rational(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return uni_trim(std::move(r));
    }
    UniPoly div(UniPoly a, const UniPoly& b) const {
        require(b.size() == 1, "BadFixture", "polynomial division not allowed in a minimal polynomial");
        require(b[0] != 0, "DivisionByZero", "division by zero");
        for (auto& c : a) c /= b[0];
        return a;
    }
    UniPoly neg(UniPoly a) const {
        for (auto& c : a) c = -c;
        return a;
    }
    UniPoly pow(UniPoly a, unsigned long e) const {
        UniPoly r{Rational(1)};
        for (unsigned long i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }
    UniPoly literal(const std::string& digits) const { return uni_trim({Rational(digits)}); }
    UniPoly variable(const std::string& name) const {
        require(name == var, "BadFixture", "unknown symbol '" + name + "' in minimal polynomial");
        return {Rational(0), Rational(1)};
    }
};

} // namespace

FieldSpec FieldSpec::parse(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    require(!t.empty(), "BadFixture", "empty field spec");

    FieldSpec spec;
    size_t pos = 0;
    if (t[0] == 'Q') {
        spec.base = BaseKind::Rationals;
        pos = 1;
    } else if (t[0] == 'F') {
        spec.base = BaseKind::PrimeField;
        pos = 1;
        std::string digits;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) digits += t[pos++];
        require(!digits.empty(), "BadFixture", "missing modulus in field spec '" + text + "'");
        spec.p = std::stoul(digits);
    } else {
        fail("BadFixture", "bad field spec '" + text + "'");
    }
    if (pos == t.size()) return spec;

    require(t[pos] == '[', "BadFixture", "bad field spec '" + text + "'");
    ++pos;
    while (pos < t.size() && t[pos] != ']') spec.gen += t[pos++];
    require(pos < t.size() && !spec.gen.empty(), "BadFixture", "bad extension generator in '" + text + "'");
    ++pos;
    require(pos + 1 < t.size() && t[pos] == '/' && t[pos + 1] == '(', "BadFixture",
            "bad field spec '" + text + "'");
    require(t.back() == ')', "BadFixture", "bad field spec '" + text + "'");
    std::string poly = t.substr(pos + 2, t.size() - pos - 3);
    ExprParser<UniPoly, UniOps> parser(poly, UniOps{spec.gen});
    spec.min_poly = parser.parse();
    return spec;
}

// ---------------------------------------------------------------------------
// Field

namespace {
bool is_prime(unsigned long p) {
    if (p < 2) return false;
    mpz_class n(static_cast<unsigned long>(p));
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}
} // namespace

FieldPtr Field::make(const FieldSpec& spec_in) {
    FieldSpec spec = spec_in;
    if (spec.base == BaseKind::PrimeField)
        require(is_prime(spec.p), "NonPrimeModulus",
                "modulus " + std::to_string(spec.p) + " is not prime");
    FieldPtr f(new Field(spec));
    if (spec.has_extension()) {
        require(spec.min_poly.size() >= 3, "NonMonicMinimalPolynomial",
                "extension degree must be at least 2");
        std::vector<Rational> mp;
        mp.reserve(spec.min_poly.size());
        for (const auto& c : spec.min_poly) mp.push_back(f->base_reduce(c));
        require(mp.back() == 1, "NonMonicMinimalPolynomial", "minimal polynomial is not monic");
        require(mp.front() != 0, "NonMonicMinimalPolynomial",
                "minimal polynomial has zero constant term");
        FieldSpec reduced = spec;
        reduced.min_poly = mp;
        f = FieldPtr(new Field(reduced));
    }
    return f;
}

FieldPtr Field::rationals() {
    static FieldPtr q = make(FieldSpec{});
    return q;
}

Rational Field::base_reduce(const Rational& q) const {
    if (spec_.base == BaseKind::Rationals) return q;
    mpz_class p(spec_.p);
    mpz_class den = q.get_den() % p;
    require(den != 0, "DivisionByZero",
            "denominator divisible by " + std::to_string(spec_.p));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class num = q.get_num() % p;
    mpz_class r = (num * inv) % p;
    if (r < 0) r += p;
    return Rational(r);
}

Rational Field::base_add(const Rational& a, const Rational& b) const {
    return spec_.base == BaseKind::Rationals ? Rational(a + b) : base_reduce(a + b);
}
Rational Field::base_sub(const Rational& a, const Rational& b) const {
    return spec_.base == BaseKind::Rationals ? Rational(a - b) : base_reduce(a - b);
}
Rational Field::base_mul(const Rational& a, const Rational& b) const {
    return spec_.base == BaseKind::Rationals ? Rational(a * b) : base_reduce(a * b);
}
Rational Field::base_inv(const Rational& a) const {
    require(a != 0, "DivisionByZero", "base inverse of zero");
    if (spec_.base == BaseKind::Rationals) return Rational(1) / a;
    mpz_class p(spec_.p), inv;
    mpz_class num = a.get_num() % p;
    if (num < 0) num += p;
    require(num != 0, "DivisionByZero", "base inverse of zero");
    mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    return Rational(inv);
}

std::vector<Rational> Field::reduce_poly(std::vector<Rational> v) const {
    const unsigned e = degree();
    for (auto& c : v) c = base_reduce(c);
    if (v.size() > e) {
        // fold x^k for k >= e using x^e = -(c_{e-1} x^{e-1} + ... + c_0)
        for (size_t k = v.size(); k-- > e;) {
            if (v[k] == 0) continue;
            Rational lead = v[k];
            v[k] = 0;
            for (unsigned i = 0; i < e; ++i)
                v[k - e + i] = base_sub(v[k - e + i], base_mul(lead, spec_.min_poly[i]));
        }
        v.resize(e);
    } else {
        v.resize(e, Rational(0));
    }
    return v;
}

FieldElem::FieldElem(const Field* f, std::vector<Rational> coords) : f_(f), c_(std::move(coords)) {}

FieldElem Field::element(std::vector<Rational> coords) const {
    return FieldElem(this, reduce_poly(std::move(coords)));
}
FieldElem Field::zero() const { return element({}); }
FieldElem Field::one() const { return element({Rational(1)}); }
FieldElem Field::from_int(long n) const { return element({Rational(n)}); }
FieldElem Field::from_rational(const Rational& q) const { return element({q}); }
FieldElem Field::generator() const {
    require(has_extension(), "BadFixture", "field " + spec_.str() + " has no extension generator");
    return element({Rational(0), Rational(1)});
}

bool FieldElem::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}
bool FieldElem::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool FieldElem::operator==(const FieldElem& o) const {
    check_same_field(*this, o);
    return c_ == o.c_;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_field(*this, o);
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = f_->base_add(c_[i], o.c_[i]);
    return FieldElem(f_, std::move(r));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same_field(*this, o);
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = f_->base_sub(c_[i], o.c_[i]);
    return FieldElem(f_, std::move(r));
}

FieldElem FieldElem::operator-() const {
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = f_->base_sub(Rational(0), c_[i]);
    return FieldElem(f_, std::move(r));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_field(*this, o);
    if (c_.size() == 1) return FieldElem(f_, {f_->base_mul(c_[0], o.c_[0])});
    std::vector<Rational> prod(2 * c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    return FieldElem(f_, f_->reduce_poly(std::move(prod)));
}

namespace {

using UP = std::vector<Rational>;

size_t up_deg(const UP& v) {
    for (size_t i = v.size(); i-- > 0;)
        if (v[i] != 0) return i;
    return size_t(-1); // zero polynomial
}

// remainder-producing division step: a -= (lead(a)/lead(b)) x^(da-db) b, in place
void up_divstep(const Field& f, UP& a, const UP& b, size_t da, size_t db, UP& q) {
    Rational c = f.base_mul(a[da], f.base_inv(b[db]));
    size_t shift = da - db;
    if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
    q[shift] = f.base_add(q[shift], c);
    for (size_t i = 0; i <= db; ++i)
        a[shift + i] = f.base_sub(a[shift + i], f.base_mul(c, b[i]));
}

UP up_mul(const Field& f, const UP& a, const UP& b) {
    if (a.empty() || b.empty()) return {};
    UP r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] = f.base_add(r[i + j], f.base_mul(a[i], b[j]));
    }
    return r;
}

UP up_sub(const Field& f, UP a, const UP& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] = f.base_sub(a[i], b[i]);
    return a;
}

} // namespace

FieldElem FieldElem::inv() const {
    require(!is_zero(), "DivisionByZero", "inverse of zero");
    if (c_.size() == 1) return FieldElem(f_, {f_->base_inv(c_[0])});

    // extended Euclid on (min_poly, this); the Bezout coefficient of `this`
    // is the inverse once the gcd is a nonzero constant
    const Field& f = *f_;
    UP r0 = f.spec().min_poly;
    UP r1 = c_;
    UP t0{}, t1{Rational(1)};
    while (up_deg(r1) != size_t(-1)) {
        UP q;
        size_t d1 = up_deg(r1);
        while (true) {
            size_t d0 = up_deg(r0);
            if (d0 == size_t(-1) || d0 < d1) break;
            up_divstep(f, r0, r1, d0, d1, q);
        }
        // r0 is now the remainder; rotate
        std::swap(r0, r1);
        UP tn = up_sub(f, t0, up_mul(f, q, t1));
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    size_t dg = up_deg(r0);
    require(dg == 0, "NonInvertible",
            "zero divisor: the minimal polynomial of " + f.spec().str() + " is reducible");
    Rational scale = f.base_inv(r0[0]);
    for (auto& c : t0) c = f.base_mul(c, scale);
    return f.element(std::move(t0));
}

FieldElem FieldElem::pow(unsigned long e) const {
    FieldElem r = f_->one();
    FieldElem b = *this;
    while (e > 0) {
        if (e & 1ul) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::string FieldElem::str() const {
    if (c_.size() == 1 || is_zero()) return rat_str(c_.empty() ? Rational(0) : c_[0]);
    std::ostringstream os;
    bool first = true;
    const std::string& g = f_->spec().gen;
    for (size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) continue;
        Rational a = c_[k];
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        } else if (a < 0) {
            os << "-";
            a = -a;
        }
        first = false;
        if (k == 0 || a != 1) os << rat_str(a);
        if (k > 0) {
            if (a != 1) os << "*";
            os << g;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

namespace {
struct ElemOps {
    const Field* f;
    const std::map<std::string, FieldElem>* bindings;
    FieldElem add(const FieldElem& a, const FieldElem& b) const { return a + b; }
    FieldElem sub(const FieldElem& a, const FieldElem& b) const { return a - b; }
    FieldElem mul(const FieldElem& a, const FieldElem& b) const { return a * b; }
    FieldElem div(const FieldElem& a, const FieldElem& b) const { return a * b.inv(); }
    FieldElem neg(const FieldElem& a) const { return -a; }
    FieldElem pow(const FieldElem& a, unsigned long e) const { return a.pow(e); }
    FieldElem literal(const std::string& digits) const { return f->from_rational(Rational(digits)); }
    FieldElem variable(const std::string& name) const {
        auto it = bindings->find(name);
        require(it != bindings->end(), "BadFixture", "unknown symbol '" + name + "'");
        return it->second;
    }
};
} // namespace

FieldElem Field::parse(const std::string& text) const {
    std::map<std::string, FieldElem> bindings;
    if (has_extension()) bindings.emplace(spec_.gen, generator());
    ExprParser<FieldElem, ElemOps> parser(text, ElemOps{this, &bindings});
    return parser.parse();
}

FieldElem Field::random(Rng& rng, long band, bool nonzero) const {
    for (;;) {
        std::vector<Rational> coords(degree());
        for (auto& c : coords) {
            if (spec_.base == BaseKind::PrimeField)
                c = Rational(static_cast<unsigned long>(rng.below(spec_.p)));
            else
                c = Rational(static_cast<long>(rng.range(-band, band)));
        }
        FieldElem e = element(std::move(coords));
        if (!nonzero || !e.is_zero()) return e;
    }
}

} // namespace planept
