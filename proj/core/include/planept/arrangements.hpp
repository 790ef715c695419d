#ifndef PLANEPT_ARRANGEMENTS_HPP
#define PLANEPT_ARRANGEMENTS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planept/fatpoints.hpp"
#include "planept/poly.hpp"
#include "planept/rng.hpp"

namespace planept {

struct ArrLine {
    Poly3 form;         // degree-1 homogeneous form
    unsigned mult = 1;  // component multiplicity (curves C = sum m_i L_i)
};

class LineArrangement {
public:
    LineArrangement(FieldPtr f, std::vector<ArrLine> lines, bool declared_real = false);

    const Field& field() const { return *f_; }
    const FieldPtr& field_ptr() const { return f_; }
    const std::vector<ArrLine>& lines() const { return lines_; }
    size_t size() const { return lines_.size(); }
    bool declared_real() const { return declared_real_; }

    bool reduced() const;            // all multiplicities 1
    unsigned long curve_degree() const;  // sum of multiplicities
    Poly3 product() const;           // product of the line forms (with multiplicities)

private:
    FieldPtr f_;
    std::vector<ArrLine> lines_;
    bool declared_real_;
};

struct CrossingPoint {
    ProjPoint p;
    unsigned k = 0;                // number of lines through p
    std::vector<size_t> lines;     // their indices
};

struct IncidenceData {
    std::vector<CrossingPoint> crossings;
    std::map<unsigned, size_t> tk;  // k -> t_k, k >= 2
    size_t count() const { return crossings.size(); }
};

IncidenceData incidence(const LineArrangement& A);

struct Diagnostics {
    size_t d = 0;  // number of lines
    size_t s = 0;  // number of crossing points
    bool identity_pairs_ok = false;    // C(d,2) = sum t_k C(k,2)
    bool identity_squares_ok = false;  // d^2 - sum t_k k^2 = d - sum t_k k
    bool concurrent = false;
    bool debruijn_ok = false;  // s >= d unless concurrent
    bool melchior_applicable = false;
    std::optional<Rational> melchior_slack;  // t_2 - 3 - sum_{k>2} t_k (k-3)
    bool hirzebruch_applicable = false;
    std::optional<Rational> hirzebruch_slack;  // t_2 + 3/4 t_3 - d - sum_{k>=5} (k-4) t_k
    // distinct per-line incidence profiles (k -> number of k-fold points on
    // the line), with how many lines carry each profile
    std::vector<std::pair<std::map<unsigned, size_t>, size_t>> line_profiles;
};

Diagnostics diagnostics(const LineArrangement& A);

// point <-> line duality by reinterpreting coordinate triples
LineArrangement dualize(FieldPtr f, const std::vector<ProjPoint>& points);
std::vector<ProjPoint> dual_points(const LineArrangement& A);

// H(C, S) = (deg^2 - sum mult_p^2) / (m^2 |S|); errors: EmptySubset
Rational h_constant(const LineArrangement& A, const std::vector<ProjPoint>& S);

struct HConstMin {
    Rational value;
    enum class Kind { InfimumNotAttained, Attained, UpperBoundOnly } kind;
    std::vector<ProjPoint> subset;  // empty for the infimum case
};
// minimize H(C, -) over subsets of the singular points, using the structure
// theorems: H(C,T) >= -1 forces the infimum -1; -4 <= H(C,T) < -1 rules out
// proper subsets; below -4 the search is exhaustive up to subset_cap points
HConstMin h_constant_min(const LineArrangement& A, size_t subset_cap = 22,
                         bool require_exact = false);

// crossing points of multiplicity >= min_mult as a fat point scheme; each
// k-fold point gets multiplicity weights[k] (default 1). errors: NoSuchPoints
FatPointScheme singular_scheme(const LineArrangement& A, unsigned min_mult,
                               const std::map<unsigned, unsigned>& weights = {});

// generators
LineArrangement fermat_arrangement(unsigned n);          // 3n lines, cyclotomic field as needed
LineArrangement finite_field_arrangement(unsigned long q);  // all lines over F_q
LineArrangement klein_arrangement();                     // 21 lines over Q[c]/(c^2+c+2)
LineArrangement wiman_arrangement();                     // 45 lines over Q[a]/(a^4-a^2+4)
LineArrangement general_arrangement(unsigned d, Rng& rng);  // only nodes
LineArrangement concurrent_arrangement(unsigned d);
LineArrangement near_pencil_arrangement(unsigned n);     // n lines through a point + a transversal

// cyclotomic polynomial, integer coefficients
std::vector<mpz_class> cyclotomic_polynomial(unsigned n);

} // namespace planept

#endif
