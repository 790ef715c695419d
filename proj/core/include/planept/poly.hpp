#ifndef PLANEPT_POLY_HPP
#define PLANEPT_POLY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "planept/field.hpp"

namespace planept {

// dense monomial bookkeeping for homogeneous forms in x, y, z
// graded-lex with x > y > z: x^d, x^(d-1)y, x^(d-1)z, x^(d-2)y^2, ...
inline size_t mono_count(unsigned d) { return size_t(d + 1) * (d + 2) / 2; }
inline size_t mono_index(unsigned d, unsigned i, unsigned j) {
    const size_t r = d - i;
    return r * (r + 1) / 2 + (r - j);
}
std::array<unsigned, 3> mono_exps(unsigned d, size_t idx);

// point of P^2, normalized so its last nonzero coordinate is 1
class ProjPoint {
public:
    ProjPoint(FieldPtr f, FieldElem x, FieldElem y, FieldElem z);

    const Field& field() const { return *f_; }
    const FieldPtr& field_ptr() const { return f_; }
    const FieldElem& operator[](size_t i) const { return c_[i]; }
    bool operator==(const ProjPoint& o) const { return c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2]; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    std::string str() const;

private:
    FieldPtr f_;
    std::array<FieldElem, 3> c_;
};

// homogeneous form of fixed degree in K[x,y,z], dense coefficient vector
class Poly3 {
public:
    Poly3() = default;
    Poly3(FieldPtr f, unsigned degree);  // zero form
    Poly3(FieldPtr f, unsigned degree, std::vector<FieldElem> coeffs);

    const Field& field() const { return *f_; }
    const FieldPtr& field_ptr() const { return f_; }
    unsigned degree() const { return deg_; }
    size_t terms() const { return c_.size(); }
    const FieldElem& operator[](size_t idx) const { return c_[idx]; }
    FieldElem& operator[](size_t idx) { return c_[idx]; }
    const FieldElem& coeff(unsigned i, unsigned j) const { return c_[mono_index(deg_, i, j)]; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    bool is_zero() const;

    Poly3 operator+(const Poly3& o) const;
    Poly3 operator-(const Poly3& o) const;
    Poly3 operator*(const Poly3& o) const;
    Poly3 scaled(const FieldElem& s) const;
    Poly3 pow(unsigned e) const;

    FieldElem eval(const ProjPoint& p) const;
    FieldElem eval(const FieldElem& x, const FieldElem& y, const FieldElem& z) const;

    Poly3 dx() const;
    Poly3 dy() const;
    Poly3 dz() const;

    std::string str() const;

    static Poly3 variable(FieldPtr f, unsigned which);  // 0,1,2 -> x,y,z
    static Poly3 linear(FieldPtr f, const FieldElem& a, const FieldElem& b, const FieldElem& c);
    // parse a (homogeneous) polynomial expression such as
    // "(x^5-y^5)*(x^5-z^5)*(y^5-z^5)"; degree of the zero expression is 0
    // unless expected_degree is given; errors: BadFixture, NotHomogeneous
    static Poly3 parse(FieldPtr f, const std::string& text);

private:
    FieldPtr f_;
    unsigned deg_ = 0;
    std::vector<FieldElem> c_;
};

// binary form of fixed degree in K[s,t]; coeffs[i] is the s^(d-i) t^i coefficient
class BinForm {
public:
    BinForm() = default;
    BinForm(FieldPtr f, unsigned degree);
    BinForm(FieldPtr f, unsigned degree, std::vector<FieldElem> coeffs);

    const Field& field() const { return *f_; }
    const FieldPtr& field_ptr() const { return f_; }
    unsigned degree() const { return deg_; }
    const FieldElem& operator[](size_t i) const { return c_[i]; }
    FieldElem& operator[](size_t i) { return c_[i]; }
    bool is_zero() const;

    BinForm operator+(const BinForm& o) const;
    BinForm operator*(const BinForm& o) const;
    BinForm scaled(const FieldElem& s) const;
    FieldElem eval(const FieldElem& s, const FieldElem& t) const;
    std::string str() const;

private:
    FieldPtr f_;
    unsigned deg_ = 0;
    std::vector<FieldElem> c_;
};

// multiplicity of F at p: move p to (0:0:1), dehomogenize, least total degree
// of a surviving term; sound in any characteristic.  errors: ZeroForm
unsigned mult_at(const Poly3& F, const ProjPoint& p);

// F composed with the invertible matrix M (row-major, F(Mv)); errors: SingularMatrix
Poly3 coordinate_change(const Poly3& F, const std::array<std::array<FieldElem, 3>, 3>& M);

FieldElem det3(const std::array<std::array<FieldElem, 3>, 3>& M);
std::array<std::array<FieldElem, 3>, 3> inverse3(const std::array<std::array<FieldElem, 3>, 3>& M);
ProjPoint apply3(const std::array<std::array<FieldElem, 3>, 3>& M, const ProjPoint& p);

// partial derivatives (Fx, Fy, Fz); errors: CharDividesDegree, ZeroForm
std::array<Poly3, 3> jacobian(const Poly3& F);

// substitute the parametrization (s,t) -> s*P0 + t*P1; errors: CoincidentPoints
BinForm restrict_to_line(const Poly3& F, const ProjPoint& p0, const ProjPoint& p1);

} // namespace planept

#endif
