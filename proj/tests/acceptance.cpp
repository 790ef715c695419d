// One test case per acceptance criterion; each prints a PASS line with its
// wall time when its checks hold.

#include <chrono>
#include <iostream>

#include "doctest.h"
#include "planept/nslattice.hpp"
#include "planept/unexpected.hpp"

using namespace planept;

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

Rational frac(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

void pass_line(const char* id, const Stopwatch& sw) {
    std::cout << "ACCEPTANCE " << id << ": PASS (" << sw.seconds() << " s)" << std::endl;
}

FatPointScheme reduced_singular(const LineArrangement& A) { return singular_scheme(A, 2); }

LineArrangement char3_lines() {
    FieldPtr f3 = Field::make(FieldSpec::parse("F3"));
    std::vector<ArrLine> lines;
    for (long a = 0; a < 3; ++a)
        for (long b = 0; b < 3; ++b)
            lines.push_back({Poly3::linear(f3, f3->from_int(a), f3->from_int(b), f3->one()), 1});
    return LineArrangement(f3, std::move(lines));
}

FatPointScheme dual_scheme(const LineArrangement& A) {
    std::vector<FatPoint> pts;
    for (const auto& p : dual_points(A)) pts.push_back({p, 1});
    return FatPointScheme(A.field_ptr(), std::move(pts));
}

FatPointScheme b3_points() {
    FieldPtr q = Field::rationals();
    auto P = [&](long x, long y, long z) {
        return ProjPoint(q, q->from_int(x), q->from_int(y), q->from_int(z));
    };
    std::vector<FatPoint> pts{{P(0, 0, 1), 1}, {P(0, 1, 0), 1},  {P(1, 0, 0), 1},
                              {P(1, 1, 1), 1}, {P(0, 1, 1), 1},  {P(1, 0, 1), 1},
                              {P(1, 1, 0), 1}, {P(-1, 1, 0), 1}, {P(1, 1, 2), 1}};
    return FatPointScheme(q, std::move(pts));
}

std::string uniform_divisor(const std::string& dl, size_t s, const std::string& b) {
    std::string out = dl + "L";
    for (size_t i = 1; i <= s; ++i) out += " - " + b + "E" + std::to_string(i);
    return out;
}

size_t tk(const IncidenceData& inc, unsigned k) {
    auto it = inc.tk.find(k);
    return it == inc.tk.end() ? 0 : it->second;
}

} // namespace

TEST_CASE("criterion 1: degree-2 Fermat points") {
    Stopwatch sw;
    FatIdeal I(reduced_singular(fermat_arrangement(2)));
    REQUIRE(I.scheme().size() == 7);
    REQUIRE(I.alpha_symbolic(6) == 15);
    REQUIRE(I.symbolic(2).dim(5) == 0);
    REQUIRE(I.symbolic(4).dim(10) >= 1);
    REQUIRE(I.waldschmidt_bounds(6).upper == frac(15, 6));
    REQUIRE(sw.seconds() < 30.0);
    pass_line("criterion 1", sw);
}

TEST_CASE("criterion 2: degree-3 Fermat points over the cyclotomic field") {
    Stopwatch sw;
    LineArrangement A = fermat_arrangement(3);
    FatIdeal I(reduced_singular(A));
    REQUIRE(I.scheme().size() == 12);
    REQUIRE(I.alpha() == 4);
    REQUIRE(I.omega() == 4);
    REQUIRE(I.symbolic(3).dim(8) == 0);
    REQUIRE(I.symbolic(3).dim(9) >= 1);
    REQUIRE(I.alpha_symbolic(3) == 9);

    ContainmentVerdict v = I.containment(3, 2);
    REQUIRE(!v.contained);
    REQUIRE(v.witness_degree.has_value());
    REQUIRE(*v.witness_degree == 9);

    TransformSystem ts = proper_transform_system(A);
    ResurgenceOptions opts;
    opts.r_max = 2;
    opts.exact_alpha_hat = waldschmidt_zariski(
        ts.system,
        express_effective(ts.system, DivisorClass::parse(12, uniform_divisor("10", 12, "3"))));
    opts.alpha_hat_certificate = "zariski-decomposition";
    ResurgenceReport rep = I.resurgence_bounds(3, opts);
    REQUIRE(rep.alpha_hat_lower == Rational(3));
    REQUIRE(rep.alpha_hat_upper == Rational(3));
    REQUIRE(rep.rhohat_lower == Rational(4, 3));
    REQUIRE(rep.rhohat_upper == Rational(4, 3));
    REQUIRE(rep.rho_lower == Rational(3, 2));
    REQUIRE(sw.seconds() < 300.0);
    pass_line("criterion 2", sw);
}

TEST_CASE("criterion 3: characteristic-3 configuration") {
    Stopwatch sw;
    LineArrangement A = char3_lines();
    FatIdeal I(reduced_singular(A));
    REQUIRE(I.scheme().size() == 12);
    REQUIRE(I.dim(4) == 3);

    Poly3 F = A.product();
    REQUIRE(F.degree() == 9);
    EchelonBasis square9(A.field_ptr(), mono_count(9));
    const GradedSubspace& P2 = I.power_piece(2, 9);
    for (size_t i = 0; i < P2.basis.rows(); ++i) square9.insert(P2.basis.row(i));
    REQUIRE(!square9.contains(F.coeffs()));

    REQUIRE(!I.containment(3, 2).contained);
    REQUIRE(sw.seconds() < 60.0);
    pass_line("criterion 3", sw);
}

TEST_CASE("criterion 4: star configurations of 4 and 6 general lines") {
    Stopwatch sw;
    for (unsigned d : {4u, 6u}) {
        Rng rng(1);
        LineArrangement A = general_arrangement(d, rng);
        FatIdeal I(reduced_singular(A));
        for (unsigned m = 1; m <= 4; ++m) {
            size_t dim = I.symbolic(m).dim(m * d / 2);
            REQUIRE(dim == (m % 2 ? 0u : 1u));
        }
        TransformSystem ts = proper_transform_system(A);
        const size_t s = ts.system.points();
        auto cf = express_effective(
            ts.system,
            DivisorClass::parse(s, uniform_divisor(std::to_string(3 * d - 2), s, "4")));
        REQUIRE(waldschmidt_zariski(ts.system, cf) == frac(long(d), 2));
    }
    REQUIRE(sw.seconds() < 60.0);
    pass_line("criterion 4", sw);
}

TEST_CASE("criterion 5: near-pencil decomposition and saturation degree") {
    Stopwatch sw;
    LineArrangement A = near_pencil_arrangement(4);
    TransformSystem ts = proper_transform_system(A);
    DivisorClass F = DivisorClass::parse(5, "11L - 7E1 - 5E2 - 5E3 - 5E4 - 5E5");
    auto cf = express_effective(ts.system, F);
    ZariskiResult zr = zariski_decompose(ts.system, cf);
    REQUIRE(zr.P->str() == "4L - 3E1 - E2 - E3 - E4 - E5");
    REQUIRE(zr.N->str() == "7L - 4E1 - 4E2 - 4E3 - 4E4 - 4E5");
    REQUIRE(waldschmidt_zariski(ts.system, cf) == Rational(7, 4));

    FatIdeal I(reduced_singular(A));
    REQUIRE(I.satdeg(5) == 18);
    REQUIRE(sw.seconds() < 600.0);
    pass_line("criterion 5", sw);
}

TEST_CASE("criterion 6: incidence tables") {
    Stopwatch sw;
    {
        IncidenceData i1 = incidence(fermat_arrangement(1));
        REQUIRE(tk(i1, 3) == 1);
        REQUIRE(tk(i1, 2) == 0);
        IncidenceData i2 = incidence(fermat_arrangement(2));
        REQUIRE(tk(i2, 3) == 4);
        REQUIRE(tk(i2, 2) == 3);
        IncidenceData i3 = incidence(fermat_arrangement(3));
        REQUIRE(tk(i3, 3) == 12);
        REQUIRE(i3.count() == 12);
    }
    {
        IncidenceData ik = incidence(klein_arrangement());
        REQUIRE(tk(ik, 4) == 21);
        REQUIRE(tk(ik, 3) == 28);
        IncidenceData iw = incidence(wiman_arrangement());
        REQUIRE(tk(iw, 5) == 36);
        REQUIRE(tk(iw, 4) == 45);
        REQUIRE(tk(iw, 3) == 120);
    }
    for (unsigned long q : {2ul, 3ul, 4ul}) {
        LineArrangement A = finite_field_arrangement(q);
        IncidenceData inc = incidence(A);
        REQUIRE(A.size() == q * q + q + 1);
        REQUIRE(inc.count() == q * q + q + 1);
        REQUIRE(tk(inc, unsigned(q + 1)) == q * q + q + 1);
    }
    REQUIRE(sw.seconds() < 60.0);
    pass_line("criterion 6", sw);
}

TEST_CASE("criterion 7: H-constants") {
    Stopwatch sw;
    auto h_sing = [](const LineArrangement& A) {
        IncidenceData inc = incidence(A);
        std::vector<ProjPoint> S;
        for (const auto& c : inc.crossings) S.push_back(c.p);
        return h_constant(A, S);
    };
    for (unsigned long q : {2ul, 3ul, 4ul})
        REQUIRE(h_sing(finite_field_arrangement(q)) == -Rational(q));
    REQUIRE(h_sing(fermat_arrangement(3)) == Rational(-9, 4));
    REQUIRE(h_sing(wiman_arrangement()) == Rational(-225, 67));
    REQUIRE(sw.seconds() < 60.0);
    pass_line("criterion 7", sw);
}

TEST_CASE("criterion 8: splitting types and unexpected curves") {
    Stopwatch sw;
    // dual points of the 15 Fermat lines
    {
        FatPointScheme Z = dual_scheme(fermat_arrangement(5));
        UnexpectedReport rep = detect_unexpected(Z, true, 2, 1);
        REQUIRE(rep.split.a == 6);
        REQUIRE(rep.split.b == 8);
        REQUIRE(rep.degrees.size() == 1);
        REQUIRE(rep.degrees[0] == 7);
        bool dim7_is_one = false;
        for (const auto& chk : rep.checks)
            if (chk.t == 7) dim7_is_one = (chk.actual == 1);
        REQUIRE(dim7_is_one);
    }
    // the nine-point configuration
    {
        FatPointScheme Z = b3_points();
        UnexpectedReport rep = detect_unexpected(Z, true, 3, 1);
        REQUIRE(rep.split.a == 3);
        REQUIRE(rep.split.b == 5);
        REQUIRE(rep.t_z == 5);
        REQUIRE(rep.degrees.size() == 1);
        REQUIRE(rep.degrees[0] == 4);
        Rng rng(2);
        ProjPoint p(Z.field_ptr(), Z.field().random(rng), Z.field().random(rng),
                    Z.field().random(rng));
        Poly3 quartic = unexpected_curve(Z, 4, p);
        REQUIRE(quartic.degree() == 4);
        REQUIRE(mult_at(quartic, p) == 3);
        for (const auto& fp : Z.points()) REQUIRE(quartic.eval(fp.p).is_zero());
    }
    // the (n+1, 2n-2) family at n = 6
    {
        SplittingType st = splitting_type(dual_scheme(fermat_arrangement(6)), 2, 1);
        REQUIRE(st.a == 7);
        REQUIRE(st.b == 10);
    }
    REQUIRE(sw.seconds() < 300.0);
    pass_line("criterion 8", sw);
}

TEST_CASE("criterion 9: property suites") {
    Stopwatch sw;

    // field axioms on randomized elements
    {
        Rng rng(101);
        for (const char* s : {"Q", "F7", "Q[c]/(c^2+c+2)"}) {
            FieldPtr k = Field::make(FieldSpec::parse(s));
            for (int i = 0; i < 10; ++i) {
                FieldElem x = k->random(rng), y = k->random(rng), z = k->random(rng);
                REQUIRE((x + y) * z == x * z + y * z);
                REQUIRE((x * y) * z == x * (y * z));
                REQUIRE((x + (-x)).is_zero());
                if (!x.is_zero()) REQUIRE((x * x.inv()).is_one());
            }
        }
    }

    // kernel/rank identities
    {
        Rng rng(103);
        FieldPtr q = Field::rationals();
        for (int trial = 0; trial < 10; ++trial) {
            Mat A(q, 4, 7);
            for (size_t i = 0; i < 4; ++i)
                for (size_t j = 0; j < 7; ++j) A.at(i, j) = q->random(rng, 5);
            Mat K = kernel_basis(A);
            REQUIRE(rank(A) + K.rows() == 7);
            for (size_t i = 0; i < K.rows(); ++i) {
                auto prod = mat_vec(A, K.row(i));
                for (const auto& e : prod) REQUIRE(e.is_zero());
            }
        }
    }

    // negative definiteness against the principal minor oracle
    {
        Rng rng(107);
        auto minor_sign_oracle = [](const std::vector<std::vector<Rational>>& G) {
            const size_t n = G.size();
            for (size_t k = 1; k <= n; ++k) {
                std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
                for (size_t i = 0; i < k; ++i)
                    for (size_t j = 0; j < k; ++j) a[i][j] = G[i][j];
                Rational det(1);
                for (size_t c = 0; c < k; ++c) {
                    size_t p = c;
                    while (p < k && a[p][c] == 0) ++p;
                    if (p == k) return false;  // singular minor: not definite
                    if (p != c) {
                        std::swap(a[p], a[c]);
                        det = -det;
                    }
                    det *= a[c][c];
                    for (size_t i = c + 1; i < k; ++i) {
                        Rational f = a[i][c] / a[c][c];
                        for (size_t j = c; j < k; ++j) a[i][j] -= f * a[c][j];
                    }
                }
                if ((k % 2 == 1 && det >= 0) || (k % 2 == 0 && det <= 0)) return false;
            }
            return true;
        };
        for (int trial = 0; trial < 200; ++trial) {
            const size_t n = 1 + size_t(rng.below(5));
            std::vector<std::vector<Rational>> G(n, std::vector<Rational>(n, Rational(0)));
            if (trial % 2 == 0) {
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = i; j < n; ++j) G[i][j] = G[j][i] = Rational(rng.range(-6, 6));
            } else {
                std::vector<std::vector<long>> M(n, std::vector<long>(n));
                for (auto& row : M)
                    for (auto& v : row) v = rng.range(-3, 3);
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = 0; j < n; ++j) {
                        long acc = i == j ? 1 : 0;
                        for (size_t k2 = 0; k2 < n; ++k2) acc += M[k2][i] * M[k2][j];
                        G[i][j] = Rational(-acc);
                    }
            }
            REQUIRE(is_negative_definite(G) == minor_sign_oracle(G));
        }
    }

    // t_k identities on generated arrangements
    {
        Rng rng(109);
        for (const LineArrangement& A :
             {fermat_arrangement(4), finite_field_arrangement(3), general_arrangement(5, rng),
              near_pencil_arrangement(5), klein_arrangement()}) {
            IncidenceData inc = incidence(A);
            mpz_class pair_sum = 0, ksum = 0, k2sum = 0;
            for (const auto& [k, t] : inc.tk) {
                pair_sum += mpz_class(t) * k * (k - 1) / 2;
                ksum += mpz_class(t) * k;
                k2sum += mpz_class(t) * k * k;
            }
            REQUIRE(pair_sum == mpz_class(A.size()) * (A.size() - 1) / 2);
            REQUIRE(mpz_class(A.size()) * A.size() - k2sum == mpz_class(A.size()) - ksum);
            Diagnostics g = diagnostics(A);
            REQUIRE(g.debruijn_ok);
        }
    }

    // Bezout sums over 20 random coprime pairs in F_7
    {
        FieldPtr f = Field::make(FieldSpec::parse("F7"));
        Rng rng(113);
        int done = 0;
        while (done < 20) {
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
            Poly3 F = ls[0] * ls[1], G = ls[2] * ls[3] * ls[4];
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
            REQUIRE(total == 6);
            ++done;
        }
    }

    // alpha subadditivity and ordinary-inside-symbolic
    {
        FieldPtr q = Field::rationals();
        Rng rng(127);
        std::vector<FatPoint> pts;
        while (pts.size() < 4) {
            ProjPoint p(q, q->from_int(rng.range(-6, 6)), q->from_int(rng.range(-6, 6)), q->one());
            bool dup = false;
            for (const auto& fp : pts) dup = dup || fp.p == p;
            if (!dup) pts.push_back({p, 1});
        }
        FatIdeal I(FatPointScheme(q, pts));
        for (unsigned m = 1; m <= 2; ++m)
            for (unsigned n = 1; n <= 2; ++n)
                REQUIRE(I.alpha_symbolic(m + n) <= I.alpha_symbolic(m) + I.alpha_symbolic(n));
        for (unsigned r = 2; r <= 3; ++r)
            for (unsigned d = 2 * r; d <= 2 * r + 3; ++d) {
                const GradedSubspace& P = I.power_piece(r, d);
                const GradedSubspace& S = I.symbolic(r).piece(d);
                REQUIRE(P.dim() <= S.dim());
                if (P.dim() > 0) REQUIRE(subspace_leq(P.basis, S.basis));
            }
    }

    // Zariski postconditions on the shipped decomposition fixtures
    {
        auto check_zariski = [](const CurveSystem& C, const std::vector<Rational>& coeffs) {
            ZariskiResult zr = zariski_decompose(C, coeffs);
            const auto& G = C.gram();
            std::vector<size_t> supp;
            for (size_t i = 0; i < C.size(); ++i) {
                REQUIRE(zr.p_coeffs[i] >= 0);
                REQUIRE(zr.n_coeffs[i] >= 0);
                REQUIRE(zr.p_coeffs[i] + zr.n_coeffs[i] == coeffs[i]);
                if (zr.n_coeffs[i] != 0) supp.push_back(i);
            }
            for (size_t j = 0; j < C.size(); ++j) {
                Rational pr(0);
                for (size_t i = 0; i < C.size(); ++i) pr += zr.p_coeffs[i] * G[i][j];
                REQUIRE(pr >= 0);
                if (zr.n_coeffs[j] != 0) REQUIRE(pr == 0);
            }
            if (!supp.empty()) {
                std::vector<std::vector<Rational>> sub(supp.size(),
                                                       std::vector<Rational>(supp.size()));
                for (size_t a = 0; a < supp.size(); ++a)
                    for (size_t b = 0; b < supp.size(); ++b) sub[a][b] = G[supp[a]][supp[b]];
                REQUIRE(is_negative_definite(sub));
            }
        };
        {
            TransformSystem ts = proper_transform_system(near_pencil_arrangement(4));
            check_zariski(ts.system,
                          express_effective(ts.system, DivisorClass::parse(
                                                           5, "11L - 7E1 - 5E2 - 5E3 - 5E4 - 5E5")));
        }
        {
            Rng rng(1);
            TransformSystem ts = proper_transform_system(general_arrangement(6, rng));
            for (const char* dl : {"3", "4", "5"})
                check_zariski(ts.system,
                              express_effective(ts.system, DivisorClass::parse(
                                                               15, uniform_divisor(dl, 15, "1"))));
        }
    }

    // Euler identity on random quartics
    {
        FieldPtr q = Field::rationals();
        Rng rng(131);
        for (int trial = 0; trial < 10; ++trial) {
            Poly3 F(q, 4);
            for (size_t i = 0; i < F.terms(); ++i) F[i] = q->random(rng, 4);
            if (F.is_zero()) continue;
            auto G = jacobian(F);
            Poly3 euler = Poly3::variable(q, 0) * G[0] + Poly3::variable(q, 1) * G[1] +
                          Poly3::variable(q, 2) * G[2];
            REQUIRE((euler - F.scaled(q->from_int(4))).is_zero());
        }
    }

    // gradient cross-product identity for a minimal syzygy of a line product
    {
        FieldPtr q = Field::rationals();
        std::vector<ArrLine> tri;
        for (const char* t : {"x", "y", "z", "x-y-z"}) tri.push_back({Poly3::parse(q, t), 1});
        LineArrangement A(q, tri);
        Poly3 F = A.product();
        Mat S(q, 0, 0);
        unsigned e = 1;
        for (; e <= 3; ++e) {
            S = jacobian_syzygies(F, e);
            if (S.rows() > 0) break;
        }
        REQUIRE(S.rows() > 0);
        Rng rng(137);
        DualMapReport rep = dual_map_checks(A, syzygy_triple(q, e, S.row(0)), rng);
        REQUIRE(rep.cross_identity_ok);
        REQUIRE(rep.line_duals_ok);
        REQUIRE(rep.no_offcurve_fixed_points);
    }

    REQUIRE(sw.seconds() < 600.0);
    pass_line("criterion 9", sw);
}
