#ifndef PLANEPT_FIELD_HPP
#define PLANEPT_FIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "planept/error.hpp"
#include "planept/rng.hpp"

namespace planept {

using Rational = mpq_class;

std::string rat_str(const Rational& q);
Rational parse_rational(const std::string& text);

enum class BaseKind { Rationals, PrimeField };

// Scalar domain: QQ, F_p, or a simple extension base[g]/(min_poly).
// Text syntax: "Q", "F7", "Q[a]/(a^4-a^2+4)", "F3[b]/(b^2+1)".
struct FieldSpec {
    BaseKind base = BaseKind::Rationals;
    unsigned long p = 0;             // modulus, PrimeField only
    std::string gen;                 // extension generator name; empty = no extension
    std::vector<Rational> min_poly;  // c0..ce with ce == 1, degree >= 2; empty = no extension

    bool has_extension() const { return !min_poly.empty(); }
    unsigned degree() const { return has_extension() ? unsigned(min_poly.size() - 1) : 1u; }

    static FieldSpec parse(const std::string& text);
    std::string str() const;
    bool operator==(const FieldSpec& o) const;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Element of a Field.  coords() has length = extension degree (1 when there
// is no extension); entries are reduced fractions over QQ, or integer
// residues in [0, p) over F_p.  Elements keep a raw pointer to their field;
// the owning FieldPtr is held by whatever container (matrix, scheme,
// arrangement) the elements live in.  Immutable value semantics throughout.
class FieldElem {
public:
    FieldElem() : f_(nullptr) {}
    FieldElem(const Field* f, std::vector<Rational> coords);

    const Field& field() const { return *f_; }
    const std::vector<Rational>& coords() const { return c_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inv() const;  // errors: DivisionByZero, NonInvertible
    FieldElem pow(unsigned long e) const;

    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    // canonical text, e.g. "-3/2", "a^3/4 - a/2", "b+1"
    std::string str() const;

private:
    const Field* f_;
    std::vector<Rational> c_;
    friend class Field;
};

class Field : public std::enable_shared_from_this<Field> {
public:
    // errors: NonPrimeModulus, NonMonicMinimalPolynomial
    static FieldPtr make(const FieldSpec& spec);
    static FieldPtr rationals();

    const FieldSpec& spec() const { return spec_; }
    unsigned degree() const { return spec_.degree(); }
    bool has_extension() const { return spec_.has_extension(); }
    unsigned long characteristic() const { return spec_.base == BaseKind::PrimeField ? spec_.p : 0ul; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(long n) const;
    FieldElem from_rational(const Rational& q) const;    // errors: DivisionByZero over F_p when p | den
    FieldElem element(std::vector<Rational> coords) const;
    FieldElem generator() const;                         // the extension generator as an element

    // Parse a scalar written in the fixture syntax: "2/3", "-c", "(a^3-3*a-2)/4".
    FieldElem parse(const std::string& text) const;

    // Small random element; never zero when nonzero=true.
    FieldElem random(Rng& rng, long band = 9, bool nonzero = false) const;

    bool same(const Field& o) const { return this == &o || spec_ == o.spec_; }

    // base-scalar helpers (exposed for the linear algebra kernels)
    Rational base_reduce(const Rational& q) const;
    Rational base_add(const Rational& a, const Rational& b) const;
    Rational base_sub(const Rational& a, const Rational& b) const;
    Rational base_mul(const Rational& a, const Rational& b) const;
    Rational base_inv(const Rational& a) const;

private:
    explicit Field(FieldSpec spec) : spec_(std::move(spec)) {}
    std::vector<Rational> reduce_poly(std::vector<Rational> v) const;

    FieldSpec spec_;
    friend class FieldElem;
};

inline void check_same_field(const FieldElem& a, const FieldElem& b) {
    require(a.field().same(b.field()), "FieldMismatch", "elements from different fields");
}

} // namespace planept

#endif
