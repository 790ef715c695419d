#ifndef PLANEPT_UNEXPECTED_HPP
#define PLANEPT_UNEXPECTED_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "planept/arrangements.hpp"
#include "planept/fatpoints.hpp"

namespace planept {

// basis of syzygies (s0,s1,s2) of degree e with s . grad F = 0, rows are the
// concatenated coefficient vectors of the three components
Mat jacobian_syzygies(const Poly3& F, unsigned e);
std::array<Poly3, 3> syzygy_triple(FieldPtr f, unsigned e, const std::vector<FieldElem>& row);

struct SplittingType {
    unsigned a = 0, b = 0;     // a <= b, a + b = deg F - 1
    unsigned samples_used = 0;
    std::uint64_t seed = 0;
    std::vector<unsigned> sample_values;  // minimal syzygy degree seen per sample
};

// splitting type of a reduced point set: restrict grad of the dual-line
// product to seeded random lines, take the least degree of a binary syzygy
// per line, and report the maximum (special lines can only drop it)
// errors: CharDividesDegree, CommonFactorOnLine
SplittingType splitting_type(const FatPointScheme& Z, unsigned samples, std::uint64_t seed);

// least j with dim [I(Z)]_j > C(j,2); matches the worked values its sources
// report (one above the literal scan of dim [I]_{j+1} > C(j+1,2))
unsigned t_z(FatIdeal& I);

struct UnexpectedDegreeCheck {
    unsigned t = 0;
    size_t actual = 0;          // dim [I((t-1)p + Z)]_t
    unsigned long expected = 0; // max(0, dim [I(Z)]_t - C(t,2))
    bool unexpected = false;
};

struct UnexpectedReport {
    SplittingType split;
    unsigned t_z = 0;
    unsigned regularity = 0;
    std::vector<unsigned> degrees;  // a < t < b when a < t_z, else empty
    bool verified = false;
    std::vector<UnexpectedDegreeCheck> checks;
    std::uint64_t point_seed = 0;
};

// errors: VerificationMismatch when the direct dimension counts disagree
// with the splitting-type prediction on every retried sample point
UnexpectedReport detect_unexpected(const FatPointScheme& Z, bool verify, unsigned samples,
                                   std::uint64_t seed);

// the unique degree-t curve through Z with a (t-1)-fold point at p, scaled so
// its first nonzero coefficient is 1; errors: DimensionNotOne
Poly3 unexpected_curve(const FatPointScheme& Z, unsigned t, const ProjPoint& p);

struct DualMapReport {
    bool cross_identity_ok = false;  // grad F x f = -deg(F) F s
    size_t line_checks = 0;
    bool line_duals_ok = false;      // f maps smooth points of each line to its dual
    size_t offcurve_samples = 0;
    bool no_offcurve_fixed_points = true;  // s(p) ~ p forces F(p) = 0
};

// checks for the correspondence f = (x,y,z) x s attached to a syzygy s of
// the line product of A; errors: IdentityFailed
DualMapReport dual_map_checks(const LineArrangement& A, const std::array<Poly3, 3>& syz, Rng& rng);

} // namespace planept

#endif
