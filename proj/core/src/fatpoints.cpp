#include "planept/fatpoints.hpp"

#include <algorithm>

namespace planept {

namespace {
mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}
} // namespace

// ---------------------------------------------------------------------------
// FatPointScheme

FatPointScheme::FatPointScheme(FieldPtr f, std::vector<FatPoint> pts)
    : f_(std::move(f)), pts_(std::move(pts)) {
    for (const auto& fp : pts_) {
        require(fp.mult >= 1, "BadFixture", "multiplicities must be at least 1");
        require(f_->same(fp.p.field()), "FieldMismatch", "point over a different field");
    }
    for (size_t i = 0; i < pts_.size(); ++i)
        for (size_t j = i + 1; j < pts_.size(); ++j)
            require(pts_[i].p != pts_[j].p, "BadFixture",
                    "repeated point " + pts_[i].p.str() + " in scheme");
}

unsigned long FatPointScheme::degree() const {
    unsigned long d = 0;
    for (const auto& fp : pts_) d += static_cast<unsigned long>(fp.mult) * (fp.mult + 1) / 2;
    return d;
}

unsigned long FatPointScheme::mult_sum() const {
    unsigned long s = 0;
    for (const auto& fp : pts_) s += fp.mult;
    return s;
}

FatPointScheme FatPointScheme::scaled(unsigned m) const {
    require(m >= 1, "BadFixture", "scaling multiplier must be positive");
    std::vector<FatPoint> pts;
    pts.reserve(pts_.size());
    for (const auto& fp : pts_) pts.push_back({fp.p, fp.mult * m});
    return FatPointScheme(f_, std::move(pts));
}

// ---------------------------------------------------------------------------
// conditions matrix

// Vanishing to order m at p, written on degree-t coefficient rows.  p is
// moved to (0:0:1) by the invertible change sending (x,y,z) to
// x e_u + y e_v + z p, where u < v are the coordinates other than the one
// normalized to 1; dehomogenizing at z = 1 turns the source monomial
// X^e0 Y^e1 Z^e2 into (x + p_u)^{e_u} (y + p_v)^{e_v}, whose low-order
// coefficients are binomial shifts.  This matches mult_at in any
// characteristic.
Mat conditions_matrix(const FatPointScheme& Z, unsigned t) {
    const FieldPtr& f = Z.field_ptr();
    const size_t cols = mono_count(t);
    Mat M(f, 0, cols);

    for (const auto& fp : Z.points()) {
        const ProjPoint& p = fp.p;
        unsigned ell = 2;
        while (p[ell].is_zero()) --ell;
        const unsigned u = (ell == 0) ? 1 : 0;
        const unsigned v = (ell == 2) ? 1 : 2;

        std::vector<FieldElem> pu{f->one()}, pv{f->one()};
        for (unsigned k = 1; k <= t; ++k) {
            pu.push_back(pu.back() * p[u]);
            pv.push_back(pv.back() * p[v]);
        }

        for (unsigned delta = 0; delta < fp.mult; ++delta) {
            for (unsigned al = 0; al <= delta; ++al) {
                const unsigned be = delta - al;
                std::vector<FieldElem> row(cols, f->zero());
                for (size_t idx = 0; idx < cols; ++idx) {
                    auto e = mono_exps(t, idx);
                    const unsigned eu = e[u], ev = e[v];
                    if (eu < al || ev < be) continue;
                    mpz_class b = binom(eu, al) * binom(ev, be);
                    if (b == 0) continue;
                    row[idx] = pu[eu - al] * pv[ev - be] * f->from_rational(Rational(b));
                }
                M.append_row(row);
            }
        }
    }
    return M;
}

Poly3 row_to_poly(FieldPtr f, unsigned d, const std::vector<FieldElem>& row) {
    return Poly3(std::move(f), d, row);
}

std::vector<FieldElem> row_times_row(const Field& f, const std::vector<FieldElem>& a, unsigned da,
                                     const std::vector<FieldElem>& b, unsigned db) {
    std::vector<FieldElem> r(mono_count(da + db), f.zero());
    for (size_t ia = 0; ia < a.size(); ++ia) {
        if (a[ia].is_zero()) continue;
        auto ea = mono_exps(da, ia);
        for (size_t ib = 0; ib < b.size(); ++ib) {
            if (b[ib].is_zero()) continue;
            auto eb = mono_exps(db, ib);
            r[mono_index(da + db, ea[0] + eb[0], ea[1] + eb[1])] += a[ia] * b[ib];
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// FatIdeal

FatIdeal::FatIdeal(FatPointScheme Z) : Z_(std::move(Z)) {
    require(Z_.size() > 0, "BadFixture", "empty fat point scheme");
}

size_t FatIdeal::dim(unsigned t) {
    auto it = dims_.find(t);
    if (it != dims_.end()) return it->second;
    auto pit = pieces_.find(t);
    size_t d;
    if (pit != pieces_.end())
        d = pit->second.dim();
    else
        d = mono_count(t) - rank(conditions_matrix(Z_, t));
    dims_[t] = d;
    return d;
}

const GradedSubspace& FatIdeal::piece(unsigned t) {
    auto it = pieces_.find(t);
    if (it != pieces_.end()) return it->second;
    GradedSubspace gs;
    gs.degree = t;
    gs.basis = kernel_basis(conditions_matrix(Z_, t));
    dims_[t] = gs.dim();
    return pieces_.emplace(t, std::move(gs)).first->second;
}

unsigned FatIdeal::alpha() {
    if (alpha_) return *alpha_;
    // terminates: the product of m_i lines through each p_i gives a nonzero
    // form of degree mult_sum
    for (unsigned t = 0;; ++t) {
        if (dim(t) > 0) {
            alpha_ = t;
            return t;
        }
        require(t <= Z_.mult_sum() + 1, "Internal", "alpha scan exceeded its bound");
    }
}

unsigned FatIdeal::alpha_symbolic(unsigned m) { return symbolic(m).alpha(); }

FatIdeal& FatIdeal::symbolic(unsigned m) {
    require(m >= 1, "BadFixture", "symbolic power index must be positive");
    if (m == 1) return *this;
    auto it = symbolic_.find(m);
    if (it != symbolic_.end()) return *it->second;
    auto ideal = std::make_unique<FatIdeal>(Z_.scaled(m));
    return *symbolic_.emplace(m, std::move(ideal)).first->second;
}

unsigned FatIdeal::regularity() {
    if (reg_) return *reg_;
    const long deg = long(Z_.degree());
    for (unsigned t = 0;; ++t) {
        const long expected = long(mono_count(t)) - deg;
        if (expected >= 0 && long(dim(t)) == expected) {
            reg_ = t + 1;
            return t + 1;
        }
        require(t <= Z_.mult_sum() + 1, "Internal", "regularity scan exceeded its bound");
    }
}

unsigned FatIdeal::omega() {
    if (omega_) return *omega_;
    const unsigned a = alpha(), r = regularity();
    unsigned top = a;  // alpha is always a generator degree
    for (unsigned t = a + 1; t <= r; ++t) {
        if (dim(t) == 0) continue;
        const GradedSubspace& prev = piece(t - 1);
        EchelonBasis span(Z_.field_ptr(), mono_count(t));
        size_t grown = 0;
        for (size_t i = 0; i < prev.basis.rows(); ++i) {
            auto g = prev.basis.row(i);
            for (unsigned var = 0; var < 3; ++var) {
                std::vector<FieldElem> xv(3, Z_.field().zero());
                xv[var] = Z_.field().one();
                if (span.insert(row_times_row(Z_.field(), xv, 1, g, t - 1))) ++grown;
            }
        }
        (void)grown;
        if (dim(t) > span.dim()) top = t;
    }
    omega_ = top;
    return top;
}

const GradedSubspace& FatIdeal::power_piece(unsigned r, unsigned d) {
    require(r >= 1, "BadFixture", "power exponent must be positive");
    if (r == 1) return piece(d);
    auto key = std::make_pair(r, d);
    auto it = powers_.find(key);
    if (it != powers_.end()) return it->second;

    // [I^r]_d = sum over a of [I]_a [I^(r-1)]_{d-a}; factor degrees above the
    // top generator degree are absorbed by lower ones, so one uncapped factor
    // (the innermost) suffices and the rest stop at omega.
    const unsigned a0 = alpha();
    const unsigned w = omega();
    GradedSubspace gs;
    gs.degree = d;
    EchelonBasis acc(Z_.field_ptr(), mono_count(d));
    const size_t cap = symbolic(r).dim(d);  // [I^r]_d sits inside [I(rZ)]_d
    if (d >= unsigned(r) * a0 && cap > 0) {
        const unsigned hi = std::min(w, d - (r - 1) * a0);
        for (unsigned a = a0; a <= hi && acc.dim() < cap; ++a) {
            const GradedSubspace& left = piece(a);
            if (left.dim() == 0) continue;
            const GradedSubspace& right = power_piece(r - 1, d - a);
            if (right.dim() == 0) continue;
            for (size_t i = 0; i < left.basis.rows() && acc.dim() < cap; ++i) {
                auto gi = left.basis.row(i);
                for (size_t j = 0; j < right.basis.rows() && acc.dim() < cap; ++j)
                    acc.insert(row_times_row(Z_.field(), gi, a, right.basis.row(j), d - a));
            }
        }
    }
    gs.basis = acc.to_mat();
    return powers_.emplace(key, std::move(gs)).first->second;
}

unsigned FatIdeal::satdeg(unsigned r) {
    require(r >= 1, "BadFixture", "satdeg needs r >= 1");
    // [I^r]_t = [I(rZ)]_t for t >= r reg(I); scan the degrees below that
    const unsigned hi = r * regularity();
    unsigned last_disagree = 0;
    bool any = false;
    FatIdeal& sym = symbolic(r);
    const unsigned lo = sym.alpha();
    for (unsigned d = lo; d < hi; ++d) {
        const size_t sdim = sym.dim(d);
        if (sdim == 0) continue;
        const size_t pdim = power_piece(r, d).dim();
        require(pdim <= sdim, "Internal", "ordinary power escaped the symbolic power");
        if (pdim != sdim) {
            last_disagree = d;
            any = true;
        }
    }
    return any ? last_disagree + 1 : 0;
}

ContainmentVerdict FatIdeal::containment(unsigned m, unsigned r) {
    require(m >= 1 && r >= 1, "BadFixture", "containment needs m, r >= 1");
    ContainmentVerdict v;
    FatIdeal& sym = symbolic(m);

    if (m < r) {
        // alpha criterion: alpha(I(mZ)) <= m alpha < r alpha = alpha(I^r)
        const unsigned d = sym.alpha();
        v.contained = false;
        v.witness_degree = d;
        v.witness = row_to_poly(Z_.field_ptr(), d, sym.piece(d).basis.row(0));
        v.checked_lo = v.checked_hi = d;
        return v;
    }

    const unsigned lo = sym.alpha();
    const unsigned hi_excl = r * regularity();  // degrees >= r reg agree automatically
    v.checked_lo = lo;
    v.checked_hi = hi_excl > 0 ? hi_excl - 1 : 0;
    for (unsigned d = lo; d < hi_excl; ++d) {
        if (sym.dim(d) == 0) continue;
        const GradedSubspace& U = sym.piece(d);
        const GradedSubspace& P = power_piece(r, d);
        EchelonBasis span(Z_.field_ptr(), mono_count(d));
        for (size_t i = 0; i < P.basis.rows(); ++i) span.insert(P.basis.row(i));
        for (size_t i = 0; i < U.basis.rows(); ++i) {
            auto row = U.basis.row(i);
            if (!span.contains(row)) {
                v.contained = false;
                v.witness_degree = d;
                v.witness = row_to_poly(Z_.field_ptr(), d, row);
                return v;
            }
        }
    }
    v.contained = true;
    return v;
}

HHContainmentReport FatIdeal::hh_containment(unsigned r) {
    require(r >= 1, "BadFixture", "hh check needs r >= 1");
    HHContainmentReport rep;
    FatIdeal& sym = symbolic(2 * r);
    const unsigned lo = sym.alpha();
    // above d - r >= r reg the power piece is generated by lower degrees, so
    // [M^r I^r]_d = [R]_r [I^r]_{d-r} covers everything that can appear
    const unsigned hi_excl = r * regularity() + r;
    rep.checked_lo = lo;
    rep.checked_hi = hi_excl > 0 ? hi_excl - 1 : 0;
    for (unsigned d = lo; d < hi_excl; ++d) {
        if (sym.dim(d) == 0) continue;
        if (d < r) {
            rep.holds = false;
            rep.fail_degree = d;
            return rep;
        }
        const GradedSubspace& P = power_piece(r, d - r);
        EchelonBasis span(Z_.field_ptr(), mono_count(d));
        const size_t nmono = mono_count(r);
        for (size_t k = 0; k < nmono; ++k) {
            std::vector<FieldElem> mono(nmono, Z_.field().zero());
            mono[k] = Z_.field().one();
            for (size_t j = 0; j < P.basis.rows(); ++j)
                span.insert(row_times_row(Z_.field(), mono, r, P.basis.row(j), d - r));
        }
        const GradedSubspace& U = sym.piece(d);
        for (size_t i = 0; i < U.basis.rows(); ++i)
            if (!span.contains(U.basis.row(i))) {
                rep.holds = false;
                rep.fail_degree = d;
                return rep;
            }
    }
    rep.holds = true;
    return rep;
}

WaldschmidtBounds FatIdeal::waldschmidt_bounds(unsigned m_max) {
    require(m_max >= 1, "BadFixture", "waldschmidt bounds need m_max >= 1");
    WaldschmidtBounds wb;
    // a form cannot vanish beyond its degree, so the constant is at least 1
    wb.lower = 1;
    bool first = true;
    for (unsigned m = 1; m <= m_max; ++m) {
        const unsigned am = alpha_symbolic(m);
        wb.table.emplace_back(m, am);
        Rational lo = Rational(am) / Rational(m + 1);
        Rational hi = Rational(am) / Rational(m);
        if (lo > wb.lower) wb.lower = lo;
        if (first || hi < wb.upper) wb.upper = hi;
        first = false;
    }
    require(wb.lower <= wb.upper, "Internal", "waldschmidt sandwich inverted");
    return wb;
}

ResurgenceReport FatIdeal::resurgence_bounds(unsigned m_max, const ResurgenceOptions& opts) {
    ResurgenceReport rep;
    rep.alpha = alpha();
    rep.omega = omega();
    rep.regularity = regularity();
    rep.waldschmidt = waldschmidt_bounds(m_max);
    rep.alpha_hat_lower = rep.waldschmidt.lower;
    rep.alpha_hat_upper = rep.waldschmidt.upper;
    rep.alpha_hat_certificate = "fekete-sandwich";
    if (opts.exact_alpha_hat) {
        const Rational& v = *opts.exact_alpha_hat;
        require(rep.alpha_hat_lower <= v && v <= rep.alpha_hat_upper, "InvalidCertificate",
                "claimed Waldschmidt constant " + rat_str(v) + " falls outside the computed sandwich");
        rep.alpha_hat_lower = rep.alpha_hat_upper = v;
        rep.alpha_hat_certificate =
            opts.alpha_hat_certificate.empty() ? "external" : opts.alpha_hat_certificate;
    }

    // probe small containments for failures; m >= 2r is contained by the
    // general containment theorem, so only r <= m < 2r can fail
    rep.rho_lower = Rational(rep.alpha) / rep.alpha_hat_upper;
    rep.rho_lower_certificate = "alpha/alpha-hat";
    for (unsigned r = 1; r <= opts.r_max; ++r) {
        for (unsigned m = r; m < 2 * r; ++m) {
            ContainmentVerdict cv = containment(m, r);
            if (!cv.contained) {
                rep.failures.emplace_back(m, r);
                Rational ratio = Rational(m) / Rational(r);
                if (ratio > rep.rho_lower) {
                    rep.rho_lower = ratio;
                    rep.rho_lower_certificate = "containment-failure(" + std::to_string(m) + "," +
                                                std::to_string(r) + ")";
                }
            }
        }
    }
    rep.rho_upper = Rational(rep.regularity) / rep.alpha_hat_lower;
    rep.rhohat_lower = Rational(rep.alpha) / rep.alpha_hat_upper;
    rep.rhohat_upper = Rational(rep.omega) / rep.alpha_hat_lower;
    return rep;
}

ChudnovskyResult FatIdeal::chudnovsky_check(unsigned m_max) {
    ChudnovskyResult res;
    res.needed = Rational(alpha() + 1) / 2;
    res.certified_lower = waldschmidt_bounds(std::max(1u, m_max)).lower;
    res.verdict = res.needed <= res.certified_lower ? ChudnovskyVerdict::CertifiedHolds
                                                    : ChudnovskyVerdict::Undetermined;
    return res;
}

// ---------------------------------------------------------------------------
// intersection multiplicity

unsigned intersection_multiplicity(const Poly3& F, const Poly3& G, const ProjPoint& p) {
    require(!F.is_zero() && !G.is_zero(), "ZeroForm", "intersection of zero forms");
    require(F.degree() >= 1 && G.degree() >= 1, "ZeroForm", "intersection needs nonconstant forms");
    const FieldPtr& f = F.field_ptr();

    // stabilized dim [R/J]_t for J = I(p)^m + (F, G)
    auto stable_value = [&](unsigned m) -> size_t {
        FatPointScheme fat(f, {FatPoint{p, m}});
        auto quotient_dim = [&](unsigned t) -> size_t {
            EchelonBasis span(f, mono_count(t));
            Mat K = kernel_basis(conditions_matrix(fat, t));
            for (size_t i = 0; i < K.rows(); ++i) span.insert(K.row(i));
            for (const Poly3* g : {&F, &G}) {
                if (g->degree() > t) continue;
                const unsigned e = t - g->degree();
                for (size_t k = 0; k < mono_count(e); ++k) {
                    std::vector<FieldElem> mono(mono_count(e), f->zero());
                    mono[k] = f->one();
                    span.insert(row_times_row(*f, mono, e, g->coeffs(), g->degree()));
                }
            }
            return mono_count(t) - span.dim();
        };
        // J contains I(p)^m, so R/J is supported at p and the dimension is
        // eventually constant
        unsigned t = std::max(m, F.degree() + G.degree());
        size_t prev = quotient_dim(t);
        for (;;) {
            ++t;
            size_t cur = quotient_dim(t);
            if (cur == prev) return cur;
            prev = cur;
            require(t < 3 * m + F.degree() + G.degree() + 3, "Internal",
                    "local quotient dimension failed to stabilize");
        }
    };

    // a common component through p makes the value grow with the vanishing
    // order instead of being independent of it
    const unsigned m = F.degree() * G.degree();
    size_t v0 = stable_value(m);
    size_t v1 = stable_value(m + 1);
    require(v0 == v1, "NonStabilizing",
            "the curves share a component through " + p.str());
    return unsigned(v0);
}

// ---------------------------------------------------------------------------
// SHGH-style predictors

unsigned long shgh_expected(unsigned long s, unsigned long m, unsigned long t) {
    mpz_class v = binom(t + 2, 2) - mpz_class(s) * binom(m + 1, 2);
    if (v < 0) return 0;
    return v.get_ui();
}

unsigned long shgh_least_m(unsigned long s) {
    mpz_class n(s), root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    unsigned long sigma = root.get_ui();
    require(sigma * sigma == s, "PreconditionViolated", "s must be a perfect square");
    require(s > 36, "PreconditionViolated", "s must exceed 36");
    for (unsigned long m = 1;; ++m) {
        if (binom(m * (sigma + 1) + 2, 2) > mpz_class(s) * binom(m + 1, 2)) return m;
    }
}

unsigned long pell_least_m(unsigned long s, unsigned long t, unsigned long r) {
    mpz_class pell = mpz_class(t) * t - mpz_class(s) * r * r;
    require(pell == 1, "PreconditionViolated", "t^2 - s r^2 = 1 is required");
    require(s > 49, "PreconditionViolated", "s must exceed 49");
    mpz_class n(s), root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    require(root * root != n, "PreconditionViolated", "s must not be a square");

    const mpz_class lin = mpz_class(s) * r - 3 * mpz_class(t);
    auto val = [&](const mpz_class& m) -> mpz_class { return m * m - lin * m + 2; };
    mpz_class m0 = (lin + 1) / 2;  // at or beyond the vertex
    if (m0 < 1) m0 = 1;
    for (mpz_class m = m0;; ++m)
        if (val(m) > 0) return m.get_ui();
}

} // namespace planept
