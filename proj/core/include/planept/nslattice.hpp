#ifndef PLANEPT_NSLATTICE_HPP
#define PLANEPT_NSLATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "planept/arrangements.hpp"
#include "planept/field.hpp"

namespace planept {

// class d L - m_1 E_1 - ... - m_s E_s on the blow-up of s points, with the
// intersection form L^2 = 1, E_i^2 = -1, mixed products 0
class DivisorClass {
public:
    DivisorClass() = default;
    DivisorClass(size_t s, Rational d, std::vector<Rational> m);

    size_t points() const { return m_.size(); }
    const Rational& line_coeff() const { return d_; }
    const std::vector<Rational>& point_coeffs() const { return m_; }

    Rational pairing(const DivisorClass& o) const;  // errors: SizeMismatch
    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass scaled(const Rational& c) const;
    bool is_zero() const;
    bool operator==(const DivisorClass& o) const { return d_ == o.d_ && m_ == o.m_; }

    // text form "4L - 3E1 - E2"; parse accepts any +/- combination of
    // rational multiples of L and E<i>
    std::string str() const;
    static DivisorClass parse(size_t s, const std::string& text);

private:
    Rational d_;
    std::vector<Rational> m_;
};

// curves declared prime on the blow-up, with their pairwise pairing either
// derived from the lattice or supplied as an explicit Gram matrix
class CurveSystem {
public:
    CurveSystem(size_t s, std::vector<DivisorClass> curves, std::vector<std::string> names = {});
    // explicit Gram override (for collections whose mutual intersections are
    // known directly); classes may be empty in this mode
    CurveSystem(std::vector<std::vector<Rational>> gram, std::vector<std::string> names = {});

    size_t size() const { return gram_.size(); }
    size_t points() const { return s_; }
    bool has_classes() const { return !curves_.empty(); }
    const std::vector<DivisorClass>& curves() const { return curves_; }
    const std::vector<std::vector<Rational>>& gram() const { return gram_; }
    const std::string& name(size_t i) const { return names_[i]; }

private:
    size_t s_ = 0;
    std::vector<DivisorClass> curves_;
    std::vector<std::vector<Rational>> gram_;
    std::vector<std::string> names_;
};

bool is_negdef_system(const CurveSystem& C);

// dual classes N_i' as nonnegative combinations of the curves, with
// N_i' . N_j = 0 for i != j and N_i' . N_i = (N_i')^2 < 0
// errors: NotNegativeDefinite, TooManySupportCurves
std::vector<std::vector<Rational>> dual_basis(const CurveSystem& C);

struct ZariskiResult {
    std::vector<Rational> p_coeffs, n_coeffs;  // over the system's curves
    std::optional<DivisorClass> P, N;          // lattice classes when available
    mpz_class denominator;                     // lcm of all coefficient denominators
};

// D = P + N relative to the declared curves, following the peel-off /
// dual-transfer procedure; input coefficients must be nonnegative
// errors: NotNonnegative, TooManySupportCurves
ZariskiResult zariski_decompose(const CurveSystem& C, const std::vector<Rational>& coeffs);

// a nonnegative expression of D over the system's curves (exact simplex);
// errors: NotNonnegative when none exists
std::vector<Rational> express_effective(const CurveSystem& C, const DivisorClass& D);

bool nef_relative(const DivisorClass& D, const std::vector<DivisorClass>& curves);

// Waldschmidt constant through the decomposition: requires N = aL - b(E_1+...+E_s)
// with a, b > 0 and P != 0.  errors: PatternMismatch
Rational waldschmidt_zariski(const CurveSystem& C, const std::vector<Rational>& coeffs);

// proper transforms L_i - sum_{p on L_i} E_p of an arrangement's lines,
// together with the exceptional classes E_p; the point order is the
// incidence order
struct TransformSystem {
    CurveSystem system;
    std::vector<ProjPoint> points;
    size_t line_count = 0;  // curves [0, line_count) are the transforms
};
TransformSystem proper_transform_system(const LineArrangement& A);

// product of |C_i^2| over the system; every curve must have negative
// self-intersection
mpz_class denominator_bound(const CurveSystem& C);

} // namespace planept

#endif
