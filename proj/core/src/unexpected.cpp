#include "planept/unexpected.hpp"

#include <algorithm>

namespace planept {

Mat jacobian_syzygies(const Poly3& F, unsigned e) {
    auto grad = jacobian(F);
    const FieldPtr& f = F.field_ptr();
    const unsigned dg = F.degree() - 1;       // degree of the partials
    const size_t block = mono_count(e);       // unknowns per component
    const size_t target = mono_count(e + dg);
    Mat A(f, target, 3 * block);
    for (unsigned comp = 0; comp < 3; ++comp) {
        for (size_t k = 0; k < block; ++k) {
            auto ek = mono_exps(e, k);
            for (size_t idx = 0; idx < grad[comp].terms(); ++idx) {
                if (grad[comp][idx].is_zero()) continue;
                auto eg = mono_exps(dg, idx);
                size_t row = mono_index(e + dg, ek[0] + eg[0], ek[1] + eg[1]);
                A.at(row, comp * block + k) += grad[comp][idx];
            }
        }
    }
    return kernel_basis(A);
}

std::array<Poly3, 3> syzygy_triple(FieldPtr f, unsigned e, const std::vector<FieldElem>& row) {
    const size_t block = mono_count(e);
    require(row.size() == 3 * block, "DimensionMismatch", "syzygy row has unexpected length");
    std::array<Poly3, 3> out;
    for (unsigned comp = 0; comp < 3; ++comp) {
        std::vector<FieldElem> c(row.begin() + long(comp * block),
                                 row.begin() + long((comp + 1) * block));
        out[comp] = Poly3(f, e, std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// splitting types

namespace {

// degree of the greatest common factor of nonzero binary forms: common
// content in t (degree drop of the dehomogenization) plus the gcd degree of
// the dehomogenized univariate polynomials
size_t updeg(const std::vector<FieldElem>& v) {
    for (size_t i = v.size(); i-- > 0;)
        if (!v[i].is_zero()) return i;
    return size_t(-1);
}

std::vector<FieldElem> dehomogenize(const BinForm& g) {
    // coefficient of u^j (u = s, t = 1) is the s^j t^(d-j) coefficient
    std::vector<FieldElem> v(g.degree() + 1, g.field().zero());
    for (size_t i = 0; i <= g.degree(); ++i) v[g.degree() - i] = g[i];
    return v;
}

size_t common_factor_degree(const std::vector<BinForm>& forms) {
    size_t tdrop = size_t(-1);
    std::vector<std::vector<FieldElem>> polys;
    for (const auto& g : forms) {
        if (g.is_zero()) continue;
        auto v = dehomogenize(g);
        tdrop = std::min(tdrop, g.degree() - updeg(v));
        polys.push_back(std::move(v));
    }
    if (polys.empty()) return size_t(-1);  // all zero
    // univariate Euclid
    auto rem = [&](std::vector<FieldElem> a, const std::vector<FieldElem>& b) {
        size_t db = updeg(b);
        FieldElem lead_inv = b[db].inv();
        for (size_t da = updeg(a); da != size_t(-1) && da >= db; da = updeg(a)) {
            FieldElem c = a[da] * lead_inv;
            for (size_t i = 0; i <= db; ++i)
                if (!b[i].is_zero()) a[da - db + i] -= c * b[i];
            if (da == 0) break;
        }
        return a;
    };
    std::vector<FieldElem> g = polys[0];
    for (size_t i = 1; i < polys.size() && updeg(g) != 0; ++i) {
        std::vector<FieldElem> a = g, b = polys[i];
        while (updeg(b) != size_t(-1)) {
            if (updeg(a) < updeg(b)) std::swap(a, b);
            if (updeg(b) == size_t(-1)) break;
            a = rem(std::move(a), b);
            std::swap(a, b);
        }
        g = a;
    }
    return tdrop + updeg(g);
}

// least e such that the binary forms admit a nonzero syzygy of degree e;
// also returns the syzygy space dimension at a requested degree
size_t binary_syzygy_dim(const std::vector<BinForm>& forms, unsigned e) {
    const FieldPtr& f = forms.front().field_ptr();
    const unsigned dg = forms.front().degree();
    Mat A(f, e + dg + 1, 3 * (e + 1));
    for (unsigned comp = 0; comp < 3; ++comp)
        for (unsigned k = 0; k <= e; ++k)
            for (unsigned i = 0; i <= dg; ++i)
                if (!forms[comp][i].is_zero()) A.at(k + i, comp * (e + 1) + k) += forms[comp][i];
    return 3 * (e + 1) - rank(A);
}

ProjPoint random_point(const FieldPtr& f, Rng& rng) {
    for (;;) {
        FieldElem a = f->random(rng), b = f->random(rng), c = f->random(rng);
        if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
        return ProjPoint(f, a, b, c);
    }
}

Poly3 dual_product(const FatPointScheme& Z) {
    require(!Z.points().empty(), "BadFixture", "empty point set");
    for (const auto& fp : Z.points())
        require(fp.mult == 1, "BadFixture", "splitting types are defined for reduced point sets");
    const FieldPtr& f = Z.field_ptr();
    Poly3 F(f, 0, {f->one()});
    for (const auto& fp : Z.points())
        F = F * Poly3::linear(f, fp.p[0], fp.p[1], fp.p[2]);
    return F;
}

} // namespace

SplittingType splitting_type(const FatPointScheme& Z, unsigned samples, std::uint64_t seed) {
    require(samples >= 1, "BadFixture", "at least one sample line is needed");
    Poly3 F = dual_product(Z);
    auto grad = jacobian(F);  // raises CharDividesDegree when applicable
    const unsigned D = F.degree() - 1;
    const FieldPtr& f = Z.field_ptr();

    Rng rng(seed);
    SplittingType st;
    st.seed = seed;
    unsigned degenerate_streak = 0;
    while (st.sample_values.size() < samples) {
        require(degenerate_streak < 5, "CommonFactorOnLine",
                "every sampled line met the singular locus of the dual-line product");
        ProjPoint p0 = random_point(f, rng);
        ProjPoint p1 = random_point(f, rng);
        if (p0 == p1) {
            ++degenerate_streak;
            continue;
        }
        std::vector<BinForm> g;
        for (const auto& gF : grad) g.push_back(restrict_to_line(gF, p0, p1));
        size_t cf = common_factor_degree(g);
        if (cf != 0) {
            ++degenerate_streak;
            continue;
        }
        degenerate_streak = 0;
        unsigned emin = 0;
        while (binary_syzygy_dim(g, emin) == 0) ++emin;
        st.sample_values.push_back(emin);
        // consistency of the rank-2 splitting on this line: at e = D - emin
        // the syzygy space has dimension (b - a + 2) for (a,b) = (emin, D-emin)
        if (st.sample_values.size() == 1 || emin > st.a) {
            const unsigned b = D - emin;
            require(emin <= b, "Internal", "syzygy degree exceeded half the splitting total");
            size_t dim_b = binary_syzygy_dim(g, b);
            require(dim_b == size_t(b - emin + 2), "VerificationMismatch",
                    "syzygy space dimension is inconsistent with a rank-2 splitting");
        }
        if (st.sample_values.size() == 1)
            st.a = emin;
        else
            st.a = std::max(st.a, emin);
    }
    st.b = D - st.a;
    st.samples_used = unsigned(st.sample_values.size());
    return st;
}

unsigned t_z(FatIdeal& I) {
    for (unsigned j = 1;; ++j) {
        if (I.dim(j) > size_t(j) * (j - 1) / 2) return j;
        require(j <= I.scheme().mult_sum() + 3, "Internal", "t_Z scan exceeded its bound");
    }
}

UnexpectedReport detect_unexpected(const FatPointScheme& Z, bool verify, unsigned samples,
                                   std::uint64_t seed) {
    UnexpectedReport rep;
    rep.split = splitting_type(Z, samples, seed);
    FatIdeal I(Z);
    rep.t_z = t_z(I);
    rep.regularity = I.regularity();
    // the gate compares a against the raw scan value t_z - 1 (the reported
    // t_z is one above it, matching the worked values it is checked against)
    if (rep.split.a + 1 < rep.t_z)
        for (unsigned t = rep.split.a + 1; t < rep.split.b; ++t) rep.degrees.push_back(t);
    if (!verify) return rep;

    const FieldPtr& f = Z.field_ptr();
    // candidate degrees plus both boundary degrees must match the direct count
    std::vector<unsigned> to_check;
    if (rep.split.a >= 1) to_check.push_back(rep.split.a);
    for (unsigned t = rep.split.a + 1; t < rep.split.b; ++t) to_check.push_back(t);
    to_check.push_back(rep.split.b);

    for (unsigned attempt = 0; attempt < 5; ++attempt) {
        Rng rng(seed + 1000 * (attempt + 1));
        ProjPoint p = random_point(f, rng);
        rep.point_seed = seed + 1000 * (attempt + 1);
        rep.checks.clear();
        bool ok = true;
        try {
            for (unsigned t : to_check) {
                if (t < 1) continue;
                UnexpectedDegreeCheck chk;
                chk.t = t;
                std::vector<FatPoint> pts = Z.points();
                bool clash = false;
                for (const auto& fp : pts)
                    if (fp.p == p) clash = true;
                if (clash) {
                    ok = false;
                    break;
                }
                if (t >= 2) pts.push_back({p, t - 1});
                FatIdeal J(FatPointScheme(f, std::move(pts)));
                chk.actual = J.dim(t);
                long naive = long(I.dim(t)) - long(t) * (t - 1) / 2;
                chk.expected = naive > 0 ? (unsigned long)(naive) : 0ul;
                chk.unexpected = chk.actual > chk.expected;
                rep.checks.push_back(chk);
                const bool in_range =
                    rep.split.a + 1 < rep.t_z && t > rep.split.a && t < rep.split.b;
                if (in_range && (!chk.unexpected || chk.actual != 1)) ok = false;
                if (!in_range && chk.unexpected) ok = false;
                if (!ok) break;
            }
        } catch (const Error&) {
            ok = false;
        }
        if (ok) {
            rep.verified = true;
            return rep;
        }
    }
    fail("VerificationMismatch",
         "direct dimension counts disagree with the splitting-type prediction on every sample point");
}

Poly3 unexpected_curve(const FatPointScheme& Z, unsigned t, const ProjPoint& p) {
    require(t >= 1, "BadFixture", "degree must be positive");
    const FieldPtr& f = Z.field_ptr();
    std::vector<FatPoint> pts = Z.points();
    for (const auto& fp : pts)
        require(fp.p != p, "BadFixture", "the general point collides with the point set");
    if (t >= 2) pts.push_back({p, t - 1});
    FatIdeal J(FatPointScheme(f, std::move(pts)));
    const GradedSubspace& gs = J.piece(t);
    require(gs.dim() == 1, "DimensionNotOne",
            "expected a one-dimensional system, found dimension " + std::to_string(gs.dim()));
    return row_to_poly(f, t, gs.basis.row(0));  // echelon rows lead with 1
}

// ---------------------------------------------------------------------------
// the point-line correspondence attached to a syzygy

DualMapReport dual_map_checks(const LineArrangement& A, const std::array<Poly3, 3>& syz, Rng& rng) {
    DualMapReport rep;
    const FieldPtr& f = A.field_ptr();
    Poly3 F = A.product();
    require(A.reduced(), "BadFixture", "the correspondence needs a reduced line product");

    const Poly3 x = Poly3::variable(f, 0), y = Poly3::variable(f, 1), z = Poly3::variable(f, 2);
    const auto& s0 = syz[0];
    const auto& s1 = syz[1];
    const auto& s2 = syz[2];
    // s really is a syzygy of grad F
    auto grad = jacobian(F);
    require((s0 * grad[0] + s1 * grad[1] + s2 * grad[2]).is_zero(), "IdentityFailed",
            "input triple is not a syzygy of the gradient");

    // f = (x,y,z) x s
    std::array<Poly3, 3> fm = {y * s2 - z * s1, z * s0 - x * s2, x * s1 - y * s0};

    // cross-product identity: grad F x f = -deg(F) F s  (the bac-cab expansion
    // of grad F x ((x,y,z) x s), with Euler's identity and s . grad F = 0)
    Poly3 dF = F.scaled(f->from_int(-long(F.degree())));
    std::array<Poly3, 3> lhs = {grad[1] * fm[2] - grad[2] * fm[1],
                                grad[2] * fm[0] - grad[0] * fm[2],
                                grad[0] * fm[1] - grad[1] * fm[0]};
    std::array<Poly3, 3> rhs = {dF * s0, dF * s1, dF * s2};
    for (unsigned i = 0; i < 3; ++i)
        require((lhs[i] - rhs[i]).is_zero(), "IdentityFailed",
                "gradient cross-product identity failed");
    rep.cross_identity_ok = true;

    // smooth points of each line map to the line's dual point
    IncidenceData inc = incidence(A);
    for (size_t li = 0; li < A.size(); ++li) {
        const Poly3& L = A.lines()[li].form;
        // span the line by two of its points
        std::vector<ProjPoint> span;
        const FieldElem one = f->one(), zero = f->zero();
        std::vector<ProjPoint> frame{ProjPoint(f, one, zero, zero), ProjPoint(f, zero, one, zero),
                                     ProjPoint(f, zero, zero, one)};
        for (const auto& q : frame) {
            // intersect L with the dual line of q to get a point of L
            std::array<FieldElem, 3> a{L[0], L[1], L[2]}, b{q[0], q[1], q[2]};
            FieldElem cx = a[1] * b[2] - a[2] * b[1];
            FieldElem cy = a[2] * b[0] - a[0] * b[2];
            FieldElem cz = a[0] * b[1] - a[1] * b[0];
            if (cx.is_zero() && cy.is_zero() && cz.is_zero()) continue;
            ProjPoint cand(f, cx, cy, cz);
            bool dup = false;
            for (const auto& sp : span) dup = dup || sp == cand;
            if (!dup) span.push_back(cand);
            if (span.size() == 2) break;
        }
        require(span.size() == 2, "Internal", "failed to span a line by two points");
        // sample smooth points p = span[0] + tau span[1]
        for (unsigned tries = 0; tries < 50; ++tries) {
            FieldElem tau = f->random(rng);
            ProjPoint p(f, span[0][0] + tau * span[1][0], span[0][1] + tau * span[1][1],
                        span[0][2] + tau * span[1][2]);
            bool singular = false;
            for (const auto& c : inc.crossings) singular = singular || c.p == p;
            if (singular) continue;
            FieldElem v0 = fm[0].eval(p), v1 = fm[1].eval(p), v2 = fm[2].eval(p);
            if (v0.is_zero() && v1.is_zero() && v2.is_zero()) continue;  // indeterminacy
            ProjPoint image(f, v0, v1, v2);
            ProjPoint dual(f, L[0], L[1], L[2]);
            require(image == dual, "IdentityFailed",
                    "a smooth point of a line did not map to the line's dual");
            ++rep.line_checks;
            break;
        }
    }
    rep.line_duals_ok = rep.line_checks == A.size();

    // off the curve the correspondence has no fixed points
    for (unsigned k = 0; k < 25; ++k) {
        ProjPoint p = random_point(f, rng);
        if (F.eval(p).is_zero()) continue;
        FieldElem w0 = s0.eval(p), w1 = s1.eval(p), w2 = s2.eval(p);
        if (w0.is_zero() && w1.is_zero() && w2.is_zero()) continue;
        // s(p) proportional to p would force F(p) = 0
        FieldElem cx = w1 * p[2] - w2 * p[1];
        FieldElem cy = w2 * p[0] - w0 * p[2];
        FieldElem cz = w0 * p[1] - w1 * p[0];
        ++rep.offcurve_samples;
        if (cx.is_zero() && cy.is_zero() && cz.is_zero()) {
            rep.no_offcurve_fixed_points = false;
            fail("IdentityFailed", "found a fixed point off the curve");
        }
    }
    return rep;
}

} // namespace planept
