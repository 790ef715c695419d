#include <algorithm>

#include "doctest.h"
#include "planept/arrangements.hpp"
#include "planept/fatpoints.hpp"
#include "planept/rng.hpp"

using namespace planept;

namespace {

FieldPtr QQ() { return Field::rationals(); }

ProjPoint pt(const FieldPtr& f, long x, long y, long z) {
    return ProjPoint(f, f->from_int(x), f->from_int(y), f->from_int(z));
}

FatPointScheme simple_points(const FieldPtr& f, const std::vector<std::array<long, 3>>& coords,
                             unsigned mult = 1) {
    std::vector<FatPoint> pts;
    for (const auto& c : coords) pts.push_back({pt(f, c[0], c[1], c[2]), mult});
    return FatPointScheme(f, std::move(pts));
}

// four collinear points plus one off the line (the n = 4 almost-collinear set)
FatPointScheme near_pencil_points() {
    FieldPtr q = QQ();
    return simple_points(q, {{0, 0, 1}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}, {1, 4, 0}});
}

FatPointScheme coordinate_vertices() {
    FieldPtr q = QQ();
    return simple_points(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

FatPointScheme random_scheme(const FieldPtr& f, Rng& rng, size_t n, unsigned max_mult = 1) {
    std::vector<FatPoint> pts;
    while (pts.size() < n) {
        ProjPoint p = pt(f, rng.range(-8, 8), rng.range(-8, 8), rng.range(0, 1) ? 1 : rng.range(1, 3));
        bool dup = false;
        for (const auto& fp : pts) dup = dup || fp.p == p;
        if (!dup) pts.push_back({p, unsigned(rng.range(1, long(max_mult)))});
    }
    return FatPointScheme(f, std::move(pts));
}

} // namespace

TEST_CASE("conditions matrix shapes and ranks") {
    FieldPtr q = QQ();
    FatPointScheme one(q, {{pt(q, 1, 2, 1), 1}});
    Mat c1 = conditions_matrix(one, 1);
    CHECK(c1.rows() == 1);
    CHECK(c1.cols() == 3);
    CHECK(rank(c1) == 1);

    FatPointScheme dbl(q, {{pt(q, 1, 2, 1), 2}});
    Mat c2 = conditions_matrix(dbl, 2);
    CHECK(c2.rows() == 3);
    CHECK(rank(c2) == 3);

    // 4 collinear + 1 off, degree 2: one dependency among the five
    // conditions (the conics through all of them form the 2-dimensional
    // pencil line*{lines through the off point}), so the rank is 4
    CHECK(rank(conditions_matrix(near_pencil_points(), 2)) == 4);
}

TEST_CASE("conditions rows annihilate exactly the forms vanishing to order m") {
    FieldPtr q = QQ();
    Rng rng(41);
    for (int trial = 0; trial < 6; ++trial) {
        ProjPoint p = pt(q, rng.range(-5, 5), rng.range(-5, 5), 1);
        FatPointScheme Z(q, {{p, 3}});
        const unsigned t = 4;
        Mat K = kernel_basis(conditions_matrix(Z, t));
        for (size_t i = 0; i < K.rows(); ++i)
            CHECK(mult_at(row_to_poly(q, t, K.row(i)), p) >= 3);
    }
}

TEST_CASE("ideal dimensions: virtual dimension cases") {
    FieldPtr q = QQ();
    FatIdeal dbl(FatPointScheme(q, {{pt(q, 2, -1, 1), 2}}));
    CHECK(dbl.dim(2) == 3);  // 6 - 3

    Rng rng(43);
    for (int trial = 0; trial < 5; ++trial) {
        FatPointScheme Z = random_scheme(q, rng, 4, 3);
        FatIdeal I(Z);
        for (unsigned t = 0; t <= 6; ++t) {
            long lower = long(mono_count(t)) - long(Z.degree());
            CHECK(long(I.dim(t)) >= std::max(0L, lower));
        }
    }
}

TEST_CASE("alpha for stars of general lines") {
    Rng rng(1);
    LineArrangement star = general_arrangement(6, rng);
    FatPointScheme Z = singular_scheme(star, 2);
    CHECK(Z.size() == 15);
    FatIdeal I(Z);
    CHECK(I.alpha() == 5);            // d - 1 by Bezout
    CHECK(I.alpha_symbolic(2) == 6);  // d m / 2
}

TEST_CASE("alpha on a line: collinear points need the maximum multiplicity") {
    FieldPtr q = QQ();
    Rng rng(47);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<FatPoint> pts;
        unsigned maxm = 0;
        for (long i = 0; long(pts.size()) < 4; ++i) {
            unsigned m = unsigned(rng.range(1, 4));
            pts.push_back({pt(q, 1, i, 0), m});
            maxm = std::max(maxm, m);
        }
        FatIdeal I(FatPointScheme(q, pts));
        CHECK(I.alpha() == maxm);
    }
}

TEST_CASE("regularity values") {
    FieldPtr q = QQ();
    FatIdeal single(FatPointScheme(q, {{pt(q, 3, 5, 1), 1}}));
    CHECK(single.regularity() == 1);

    FatIdeal two(simple_points(q, {{0, 0, 1}, {1, 1, 1}}));
    CHECK(two.regularity() == 2);

    // 4 collinear + 1 off: dim[I]_2 = 2 beats the virtual count 1; dim[I]_3 = 5
    FatIdeal np(near_pencil_points());
    CHECK(np.dim(2) == 2);
    CHECK(np.dim(3) == 5);
    CHECK(np.regularity() == 4);
    CHECK(np.regularity() >= np.omega());
}

TEST_CASE("omega: single point and dual Fermat points") {
    FieldPtr q = QQ();
    FatIdeal single(FatPointScheme(q, {{pt(q, 1, -2, 1), 1}}));
    CHECK(single.omega() == 1);

    // the 15 points dual to the 15 Fermat lines for n = 5; their ideal is
    // (x^5+y^5+z^5, xyz), generated in degrees 3 and 5
    LineArrangement fermat5 = fermat_arrangement(5);
    std::vector<ProjPoint> duals = dual_points(fermat5);
    std::vector<FatPoint> pts;
    for (const auto& p : duals) pts.push_back({p, 1});
    FatIdeal I(FatPointScheme(fermat5.field_ptr(), std::move(pts)));
    CHECK(I.dim(3) == 1);
    CHECK(I.alpha() == 3);
    CHECK(I.omega() == 5);
}

TEST_CASE("power pieces: r = 1 and coordinate vertex products") {
    FieldPtr q = QQ();
    FatIdeal I(coordinate_vertices());
    // xyz is in the symbolic square but not the ordinary one
    CHECK(I.power_piece(2, 3).dim() == 0);
    CHECK(I.symbolic(2).dim(3) == 1);
    CHECK(I.power_piece(2, 4).dim() == 6);
    CHECK(I.symbolic(2).dim(4) == 6);
    for (unsigned d = 2; d <= 5; ++d) CHECK(I.power_piece(1, d).dim() == I.dim(d));
}

TEST_CASE("ordinary powers sit inside symbolic powers at every degree") {
    FieldPtr q = QQ();
    Rng rng(53);
    FatPointScheme Z = random_scheme(q, rng, 4);
    FatIdeal I(Z);
    for (unsigned r = 2; r <= 3; ++r)
        for (unsigned d = 2 * r; d <= 3 * r + 2; ++d) {
            const GradedSubspace& P = I.power_piece(r, d);
            const GradedSubspace& S = I.symbolic(r).piece(d);
            CHECK(P.dim() <= S.dim());
            if (P.dim() > 0) CHECK(subspace_leq(P.basis, S.basis));
        }
}

TEST_CASE("satdeg: single point, three vertices, and the worked 5-point value") {
    FieldPtr q = QQ();
    FatIdeal one(FatPointScheme(q, {{pt(q, 1, 1, 1), 1}}));
    for (unsigned r = 1; r <= 3; ++r) CHECK(one.satdeg(r) == 0);

    FatIdeal tri(coordinate_vertices());
    CHECK(tri.satdeg(2) == 4);  // xyz disagrees in degree 3 only

    FatIdeal np(near_pencil_points());
    CHECK(np.satdeg(5) == 18);
}

TEST_CASE("containment: the general containment theorem bound m = 2r") {
    FieldPtr q = QQ();
    Rng rng(59);
    FatPointScheme Z = random_scheme(q, rng, 3);
    FatIdeal I(Z);
    for (unsigned r = 1; r <= 2; ++r) CHECK(I.containment(2 * r, r).contained);
}

TEST_CASE("containment: m < r fails immediately with an alpha witness") {
    FieldPtr q = QQ();
    FatIdeal I(coordinate_vertices());
    ContainmentVerdict v = I.containment(1, 2);
    CHECK(!v.contained);
    REQUIRE(v.witness_degree.has_value());
    CHECK(*v.witness_degree == I.alpha());
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness_degree < 2 * I.alpha());
}

TEST_CASE("three vertices: I^(2) escapes I^2 exactly at xyz") {
    FieldPtr q = QQ();
    FatIdeal I(coordinate_vertices());
    ContainmentVerdict v = I.containment(2, 2);
    CHECK(!v.contained);
    REQUIRE(v.witness_degree.has_value());
    CHECK(*v.witness_degree == 3);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->degree() == 3);
    CHECK(mult_at(*v.witness, pt(q, 0, 0, 1)) >= 2);
}

TEST_CASE("containment verdicts are monotone in m") {
    FieldPtr q = QQ();
    Rng rng(61);
    FatPointScheme Z = random_scheme(q, rng, 3);
    FatIdeal I(Z);
    bool prev = I.containment(2, 2).contained;
    for (unsigned m = 3; m <= 4; ++m) {
        bool cur = I.containment(m, 2).contained;
        if (prev) CHECK(cur);
        prev = cur;
    }
}

TEST_CASE("waldschmidt bounds sandwich; near-pencil upper bound 7/4") {
    FatIdeal np(near_pencil_points());
    WaldschmidtBounds wb = np.waldschmidt_bounds(4);
    CHECK(wb.upper == Rational(7, 4));
    CHECK(wb.lower <= wb.upper);
    CHECK(wb.table.size() == 4);
    for (const auto& [m, am] : wb.table) CHECK(Rational(long(am)) >= Rational(long(m)) * wb.lower);
}

TEST_CASE("alpha subadditivity on random small schemes") {
    FieldPtr q = QQ();
    Rng rng(67);
    for (int trial = 0; trial < 3; ++trial) {
        FatPointScheme Z = random_scheme(q, rng, 3);
        FatIdeal I(Z);
        for (unsigned m = 1; m <= 2; ++m)
            for (unsigned n = 1; n <= 2; ++n)
                CHECK(I.alpha_symbolic(m + n) <= I.alpha_symbolic(m) + I.alpha_symbolic(n));
    }
}

TEST_CASE("dimension is monotone under enlarging the scheme") {
    FieldPtr q = QQ();
    Rng rng(71);
    FatPointScheme Z = random_scheme(q, rng, 4);
    std::vector<FatPoint> bigger = Z.points();
    bigger[0].mult += 1;
    bigger[2].mult += 2;
    FatPointScheme Z2(q, bigger);
    FatIdeal I(Z), I2(Z2);
    for (unsigned t = 0; t <= 7; ++t) CHECK(I2.dim(t) <= I.dim(t));
}

TEST_CASE("chudnovsky certification") {
    FieldPtr q = QQ();
    FatIdeal one(FatPointScheme(q, {{pt(q, 0, 1, 1), 1}}));
    CHECK(one.chudnovsky_check(1).verdict == ChudnovskyVerdict::CertifiedHolds);

    FatIdeal two(simple_points(q, {{0, 0, 1}, {1, 4, 1}}));
    CHECK(two.chudnovsky_check(1).verdict == ChudnovskyVerdict::CertifiedHolds);
}

TEST_CASE("resurgence on a single point collapses to [1,1]") {
    FieldPtr q = QQ();
    FatIdeal one(FatPointScheme(q, {{pt(q, 2, 3, 1), 1}}));
    ResurgenceReport rep = one.resurgence_bounds(2);
    CHECK(rep.failures.empty());
    CHECK(rep.rho_lower == 1);
    CHECK(rep.rho_upper == 1);
    CHECK(rep.alpha == 1);
    CHECK(rep.omega == 1);
    CHECK(rep.regularity == 1);
    CHECK(rep.rhohat_lower <= rep.rhohat_upper);
}

TEST_CASE("intersection multiplicity") {
    FieldPtr q = QQ();
    CHECK(intersection_multiplicity(Poly3::parse(q, "x"), Poly3::parse(q, "y"), pt(q, 0, 0, 1)) ==
          1);
    // smooth conic against its tangent line at (0:0:1)
    CHECK(intersection_multiplicity(Poly3::parse(q, "y*z-x^2"), Poly3::parse(q, "y"),
                                    pt(q, 0, 0, 1)) == 2);
    CHECK_THROWS_WITH_AS(intersection_multiplicity(Poly3::parse(q, "x*y"), Poly3::parse(q, "x*z"),
                                                   pt(q, 0, 1, 0)),
                         doctest::Contains("NonStabilizing"), Error);
}

TEST_CASE("Bezout sums over products of lines in a prime field") {
    FieldPtr f = Field::make(FieldSpec::parse("F7"));
    Rng rng(73);
    int done = 0;
    while (done < 20) {
        // F = 2 lines, G = 3 lines, pairwise nonproportional: rational
        // intersections whose multiplicities must sum to deg F * deg G = 6
        std::vector<Poly3> ls;
        while (ls.size() < 5) {
            Poly3 cand = Poly3::linear(f, f->random(rng), f->random(rng), f->random(rng));
            if (cand.is_zero()) continue;
            bool dup = false;
            for (const auto& l : ls) {
                FieldElem cx = l[1] * cand[2] - l[2] * cand[1];
                FieldElem cy = l[2] * cand[0] - l[0] * cand[2];
                FieldElem cz = l[0] * cand[1] - l[1] * cand[0];
                if (cx.is_zero() && cy.is_zero() && cz.is_zero()) dup = true;
            }
            if (!dup) ls.push_back(cand);
        }
        Poly3 F = ls[0] * ls[1];
        Poly3 G = ls[2] * ls[3] * ls[4];
        std::vector<ProjPoint> pts;
        for (int i = 0; i < 2; ++i)
            for (int j = 2; j < 5; ++j) {
                const Poly3 &a = ls[size_t(i)], &b = ls[size_t(j)];
                ProjPoint p(f, a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                            a[0] * b[1] - a[1] * b[0]);
                bool dup = false;
                for (const auto& o : pts) dup = dup || o == p;
                if (!dup) pts.push_back(p);
            }
        unsigned total = 0;
        for (const auto& p : pts) total += intersection_multiplicity(F, G, p);
        CHECK(total == 6);
        ++done;
    }
}

TEST_CASE("shgh predictors") {
    CHECK(shgh_least_m(49) == 2);  // ceil((7-3)/2)
    CHECK(shgh_expected(10, 1, 3) == 0);
    CHECK(shgh_expected(5, 1, 3) == 5);
    CHECK(pell_least_m(50, 99, 14) == 403);
    CHECK_THROWS_WITH_AS(shgh_least_m(50), doctest::Contains("PreconditionViolated"), Error);
    CHECK_THROWS_WITH_AS(shgh_least_m(36), doctest::Contains("PreconditionViolated"), Error);
    CHECK_THROWS_WITH_AS(pell_least_m(50, 99, 13), doctest::Contains("PreconditionViolated"),
                         Error);
}

TEST_CASE("shgh expected count matches actual dimensions for few general points") {
    FieldPtr q = QQ();
    Rng rng(79);
    for (unsigned s : {5u, 8u}) {
        FatPointScheme Z = random_scheme(q, rng, s);
        FatIdeal I(Z);
        for (unsigned m = 1; m <= 2; ++m) {
            unsigned long smsum = s * m;
            for (unsigned t = unsigned(smsum - 1); t <= smsum + 1; ++t)
                CHECK(I.symbolic(m).dim(t) == shgh_expected(s, m, t));
        }
    }
}

TEST_CASE("degree-shifted containment I(2rZ) in M^r I^r on a small scheme") {
    FieldPtr q = QQ();
    FatIdeal I(coordinate_vertices());
    CHECK(I.hh_containment(1).holds);
}

TEST_CASE("nine-point configuration: doubled scheme needs the doubled system") {
    // dim[I(2Z)]_5 = 0 while dim[I(4Z)]_10 = 1 (seven lines once plus the
    // two special lines again)
    FieldPtr q = QQ();
    std::vector<std::array<long, 3>> cs = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0},  {1, 1, 1}, {0, 1, 1},
                                           {1, 0, 1}, {1, 1, 0}, {-1, 1, 0}, {1, 1, 2}};
    FatIdeal I(simple_points(q, cs));
    CHECK(I.symbolic(2).dim(5) == 0);
    CHECK(I.symbolic(4).dim(10) == 1);
    CHECK(I.dim(4) == 6);
}
