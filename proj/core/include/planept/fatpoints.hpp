#ifndef PLANEPT_FATPOINTS_HPP
#define PLANEPT_FATPOINTS_HPP

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "planept/linalg.hpp"
#include "planept/poly.hpp"

namespace planept {

struct FatPoint {
    ProjPoint p;
    unsigned mult = 1;
};

// Z = m1 p1 + ... + ms ps, distinct points with multiplicities >= 1
class FatPointScheme {
public:
    FatPointScheme(FieldPtr f, std::vector<FatPoint> pts);

    const Field& field() const { return *f_; }
    const FieldPtr& field_ptr() const { return f_; }
    const std::vector<FatPoint>& points() const { return pts_; }
    size_t size() const { return pts_.size(); }

    // scheme-theoretic degree, sum of C(m_i + 1, 2)
    unsigned long degree() const;
    unsigned long mult_sum() const;
    FatPointScheme scaled(unsigned m) const;  // mZ

private:
    FieldPtr f_;
    std::vector<FatPoint> pts_;
};

struct GradedSubspace {
    unsigned degree = 0;
    Mat basis;  // canonical echelon rows in the degree-d monomial basis
    size_t dim() const { return basis.rows(); }
};

// the linear conditions that vanishing on Z imposes on degree-t coefficient rows
Mat conditions_matrix(const FatPointScheme& Z, unsigned t);

Poly3 row_to_poly(FieldPtr f, unsigned d, const std::vector<FieldElem>& row);
std::vector<FieldElem> row_times_row(const Field& f, const std::vector<FieldElem>& a, unsigned da,
                                     const std::vector<FieldElem>& b, unsigned db);

struct ContainmentVerdict {
    bool contained = false;
    std::optional<unsigned> witness_degree;
    std::optional<Poly3> witness;         // in [I(mZ)]_d but not in [I^r]_d
    unsigned checked_lo = 0, checked_hi = 0;
};

struct WaldschmidtBounds {
    Rational lower, upper;
    std::vector<std::pair<unsigned, unsigned>> table;  // (m, alpha(I(mZ)))
};

struct ResurgenceOptions {
    unsigned r_max = 2;                        // containment pairs (m, r), r <= r_max, probed for failures
    std::optional<Rational> exact_alpha_hat;   // externally certified Waldschmidt value
    std::string alpha_hat_certificate;         // label for the certificate when given
};

struct ResurgenceReport {
    unsigned alpha = 0, omega = 0, regularity = 0;
    Rational alpha_hat_lower, alpha_hat_upper;
    std::string alpha_hat_certificate;
    Rational rho_lower, rho_upper;
    std::string rho_lower_certificate;
    Rational rhohat_lower, rhohat_upper;
    std::vector<std::pair<unsigned, unsigned>> failures;  // (m, r) with I^(m) not in I^r
    WaldschmidtBounds waldschmidt;
};

enum class ChudnovskyVerdict { CertifiedHolds, Undetermined };

struct ChudnovskyResult {
    ChudnovskyVerdict verdict = ChudnovskyVerdict::Undetermined;
    Rational needed;           // (alpha + 1) / 2
    Rational certified_lower;  // certified lower bound for the Waldschmidt constant
};

struct HHContainmentReport {
    bool holds = false;
    std::optional<unsigned> fail_degree;
    unsigned checked_lo = 0, checked_hi = 0;
};

// All graded data of one fat point ideal, with memoized pieces, powers and
// symbolic powers.  Non-const methods fill caches; the scheme itself is
// immutable.
class FatIdeal {
public:
    explicit FatIdeal(FatPointScheme Z);

    const FatPointScheme& scheme() const { return Z_; }

    size_t dim(unsigned t);                    // dim [I(Z)]_t
    const GradedSubspace& piece(unsigned t);   // canonical basis of [I(Z)]_t

    unsigned alpha();                          // least t with nonzero piece
    unsigned alpha_symbolic(unsigned m);       // alpha of I(mZ)
    unsigned regularity();                     // 1 + least t at the expected dimension
    unsigned omega();                          // top generator degree

    FatIdeal& symbolic(unsigned m);            // the ideal of mZ (cached)

    // canonical basis of [I(Z)^r]_d
    const GradedSubspace& power_piece(unsigned r, unsigned d);

    unsigned satdeg(unsigned r);
    ContainmentVerdict containment(unsigned m, unsigned r);
    HHContainmentReport hh_containment(unsigned r);  // I(2rZ) vs M^r I(Z)^r
    WaldschmidtBounds waldschmidt_bounds(unsigned m_max);
    ResurgenceReport resurgence_bounds(unsigned m_max, const ResurgenceOptions& opts = {});
    ChudnovskyResult chudnovsky_check(unsigned m_max);

private:
    FatPointScheme Z_;
    std::map<unsigned, size_t> dims_;
    std::map<unsigned, GradedSubspace> pieces_;
    std::map<std::pair<unsigned, unsigned>, GradedSubspace> powers_;
    std::map<unsigned, std::unique_ptr<FatIdeal>> symbolic_;
    std::optional<unsigned> alpha_, reg_, omega_;
};

// I_p(C, D) for curves with no common component through p; errors: NonStabilizing
unsigned intersection_multiplicity(const Poly3& F, const Poly3& G, const ProjPoint& p);

// conjectural dimension count for s general m-fold points in degree t
unsigned long shgh_expected(unsigned long s, unsigned long m, unsigned long t);
// least m with C(m(sqrt(s)+1)+2, 2) > s C(m+1, 2); s a perfect square > 36
unsigned long shgh_least_m(unsigned long s);
// least m (beyond the sign change) with m^2 - (sr - 3t) m + 2 > 0; t^2 - s r^2 = 1
unsigned long pell_least_m(unsigned long s, unsigned long t, unsigned long r);

} // namespace planept

#endif
