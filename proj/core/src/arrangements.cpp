#include "planept/arrangements.hpp"

#include <algorithm>

namespace planept {

namespace {

std::array<FieldElem, 3> line_coeffs(const Poly3& L) {
    return {L[0], L[1], L[2]};
}

bool proportional(const Poly3& L1, const Poly3& L2) {
    auto a = line_coeffs(L1), b = line_coeffs(L2);
    // cross product zero
    return (a[1] * b[2] - a[2] * b[1]).is_zero() && (a[2] * b[0] - a[0] * b[2]).is_zero() &&
           (a[0] * b[1] - a[1] * b[0]).is_zero();
}

} // namespace

LineArrangement::LineArrangement(FieldPtr f, std::vector<ArrLine> lines, bool declared_real)
    : f_(std::move(f)), lines_(std::move(lines)), declared_real_(declared_real) {
    require(lines_.size() >= 2, "BadFixture", "a line arrangement needs at least 2 lines");
    for (const auto& l : lines_) {
        require(l.form.degree() == 1, "BadFixture", "arrangement entries must be linear forms");
        require(!l.form.is_zero(), "BadFixture", "zero linear form");
        require(l.mult >= 1, "BadFixture", "line multiplicities must be at least 1");
        require(f_->same(l.form.field()), "FieldMismatch", "line over a different field");
    }
    for (size_t i = 0; i < lines_.size(); ++i)
        for (size_t j = i + 1; j < lines_.size(); ++j)
            require(!proportional(lines_[i].form, lines_[j].form), "BadFixture",
                    "lines " + std::to_string(i) + " and " + std::to_string(j) +
                        " are projectively equal");
}

bool LineArrangement::reduced() const {
    for (const auto& l : lines_)
        if (l.mult != 1) return false;
    return true;
}

unsigned long LineArrangement::curve_degree() const {
    unsigned long d = 0;
    for (const auto& l : lines_) d += l.mult;
    return d;
}

Poly3 LineArrangement::product() const {
    Poly3 acc(f_, 0, {f_->one()});
    for (const auto& l : lines_)
        for (unsigned k = 0; k < l.mult; ++k) acc = acc * l.form;
    return acc;
}

IncidenceData incidence(const LineArrangement& A) {
    IncidenceData out;
    const size_t d = A.size();
    for (size_t i = 0; i < d; ++i) {
        auto a = line_coeffs(A.lines()[i].form);
        for (size_t j = i + 1; j < d; ++j) {
            auto b = line_coeffs(A.lines()[j].form);
            ProjPoint p(A.field_ptr(), a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                        a[0] * b[1] - a[1] * b[0]);
            bool seen = false;
            for (const auto& c : out.crossings)
                if (c.p == p) {
                    seen = true;
                    break;
                }
            if (!seen) out.crossings.push_back(CrossingPoint{p, 0, {}});
        }
    }
    for (auto& c : out.crossings) {
        for (size_t i = 0; i < d; ++i)
            if (A.lines()[i].form.eval(c.p).is_zero()) c.lines.push_back(i);
        c.k = unsigned(c.lines.size());
        ++out.tk[c.k];
    }
    return out;
}

Diagnostics diagnostics(const LineArrangement& A) {
    Diagnostics g;
    g.d = A.size();
    IncidenceData inc = incidence(A);
    g.s = inc.count();

    mpz_class pairs = mpz_class(g.d) * (g.d - 1) / 2;
    mpz_class sum_pairs = 0, sum_k = 0, sum_k2 = 0, t2 = 0, t3 = 0, high = 0;
    size_t t_top = 0, t_next = 0;
    for (const auto& [k, t] : inc.tk) {
        sum_pairs += mpz_class(t) * k * (k - 1) / 2;
        sum_k += mpz_class(t) * k;
        sum_k2 += mpz_class(t) * k * k;
        if (k == 2) t2 = long(t);
        if (k == 3) t3 = long(t);
        if (k >= 5) high += mpz_class(t) * (k - 4);
        if (k == g.d) t_top = t;
        if (k + 1 == g.d) t_next = t;
    }
    g.identity_pairs_ok = (pairs == sum_pairs);
    g.identity_squares_ok =
        (mpz_class(g.d) * g.d - sum_k2 == mpz_class(g.d) - sum_k);
    g.concurrent = (g.s == 1);
    g.debruijn_ok = g.concurrent || g.s >= g.d;

    g.melchior_applicable = A.declared_real() && t_top == 0;
    if (g.melchior_applicable) {
        Rational slack(t2);
        for (const auto& [k, t] : inc.tk)
            if (k > 2) slack -= Rational(t) * Rational(long(k) - 3);
        slack -= 3;
        g.melchior_slack = slack;
    }
    g.hirzebruch_applicable = g.d > 3 && t_top == 0 && t_next == 0;
    if (g.hirzebruch_applicable) {
        Rational slack = Rational(t2) + Rational(3, 4) * Rational(t3) - Rational(long(g.d)) -
                         Rational(high);
        g.hirzebruch_slack = slack;
    }

    // group lines by their incidence profile
    std::vector<std::map<unsigned, size_t>> profiles(g.d);
    for (const auto& c : inc.crossings)
        for (size_t li : c.lines) ++profiles[li][c.k];
    for (const auto& prof : profiles) {
        bool found = false;
        for (auto& [p, n] : g.line_profiles)
            if (p == prof) {
                ++n;
                found = true;
                break;
            }
        if (!found) g.line_profiles.emplace_back(prof, 1);
    }
    return g;
}

LineArrangement dualize(FieldPtr f, const std::vector<ProjPoint>& points) {
    std::vector<ArrLine> lines;
    lines.reserve(points.size());
    for (const auto& p : points) lines.push_back({Poly3::linear(f, p[0], p[1], p[2]), 1});
    return LineArrangement(std::move(f), std::move(lines));
}

std::vector<ProjPoint> dual_points(const LineArrangement& A) {
    std::vector<ProjPoint> pts;
    pts.reserve(A.size());
    for (const auto& l : A.lines())
        pts.emplace_back(A.field_ptr(), l.form[0], l.form[1], l.form[2]);
    return pts;
}

// ---------------------------------------------------------------------------
// H-constants

namespace {
unsigned long mult_at_point(const LineArrangement& A, const ProjPoint& p) {
    unsigned long m = 0;
    for (const auto& l : A.lines())
        if (l.form.eval(p).is_zero()) m += l.mult;
    return m;
}
} // namespace

Rational h_constant(const LineArrangement& A, const std::vector<ProjPoint>& S) {
    require(!S.empty(), "EmptySubset", "H-constants need a nonempty subset");
    unsigned long d = A.curve_degree();
    unsigned long m = 0;
    for (const auto& l : A.lines()) m = std::max(m, static_cast<unsigned long>(l.mult));
    mpz_class num = mpz_class(d) * d;
    for (const auto& p : S) {
        mpz_class mp(mult_at_point(A, p));
        num -= mp * mp;
    }
    Rational h(num, mpz_class(m) * m * mpz_class(S.size()));
    h.canonicalize();
    return h;
}

HConstMin h_constant_min(const LineArrangement& A, size_t subset_cap, bool require_exact) {
    require(A.reduced(), "BadFixture", "H-constant minimization is defined for reduced arrangements");
    IncidenceData inc = incidence(A);
    std::vector<ProjPoint> T;
    for (const auto& c : inc.crossings) T.push_back(c.p);

    Rational ht = h_constant(A, T);
    if (ht >= -1) return HConstMin{Rational(-1), HConstMin::Kind::InfimumNotAttained, {}};
    if (ht >= -4) return HConstMin{ht, HConstMin::Kind::Attained, T};

    // below -4 a proper subset may genuinely do better
    if (T.size() > subset_cap) {
        require(!require_exact, "SubsetCapExceeded",
                "exhaustive search over " + std::to_string(T.size()) + " singular points refused");
        return HConstMin{ht, HConstMin::Kind::UpperBoundOnly, T};
    }
    const unsigned long d = A.curve_degree();
    std::vector<long long> m2(T.size());
    for (size_t i = 0; i < T.size(); ++i) {
        long long m = static_cast<long long>(mult_at_point(A, T[i]));
        m2[i] = m * m;
    }
    long long best_num = 0;
    size_t best_den = 0;  // best = best_num / best_den, den = |subset|
    unsigned long long best_mask = 0;
    const unsigned long long full = (1ull << T.size()) - 1;
    for (unsigned long long mask = 1; mask <= full; ++mask) {
        long long num = static_cast<long long>(d) * static_cast<long long>(d);
        size_t cnt = 0;
        for (size_t i = 0; i < T.size(); ++i)
            if (mask & (1ull << i)) {
                num -= m2[i];
                ++cnt;
            }
        // num/cnt < best_num/best_den, exact cross-multiplied comparison
        if (best_den == 0 || static_cast<__int128>(num) * static_cast<__int128>(best_den) <
                                 static_cast<__int128>(best_num) * static_cast<__int128>(cnt)) {
            best_num = num;
            best_den = cnt;
            best_mask = mask;
        }
    }
    std::vector<ProjPoint> subset;
    for (size_t i = 0; i < T.size(); ++i)
        if (best_mask & (1ull << i)) subset.push_back(T[i]);
    Rational val(mpz_class(static_cast<long>(best_num)), mpz_class(static_cast<unsigned long>(best_den)));
    val.canonicalize();
    return HConstMin{val, HConstMin::Kind::Attained, subset};
}

FatPointScheme singular_scheme(const LineArrangement& A, unsigned min_mult,
                               const std::map<unsigned, unsigned>& weights) {
    require(min_mult >= 2, "BadFixture", "singular points have multiplicity at least 2");
    IncidenceData inc = incidence(A);
    std::vector<FatPoint> pts;
    for (const auto& c : inc.crossings) {
        if (c.k < min_mult) continue;
        auto it = weights.find(c.k);
        pts.push_back({c.p, it == weights.end() ? 1u : it->second});
    }
    require(!pts.empty(), "NoSuchPoints",
            "no crossing points of multiplicity at least " + std::to_string(min_mult));
    return FatPointScheme(A.field_ptr(), std::move(pts));
}

// ---------------------------------------------------------------------------
// generators

std::vector<mpz_class> cyclotomic_polynomial(unsigned n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, exact integer division
    std::vector<mpz_class> f(n + 1, 0);
    f[0] = -1;
    f[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<mpz_class> phi = cyclotomic_polynomial(d);
        // divide f by phi (monic)
        std::vector<mpz_class> q(f.size() - phi.size() + 1, 0);
        std::vector<mpz_class> r = f;
        for (size_t k = q.size(); k-- > 0;) {
            q[k] = r[k + phi.size() - 1];
            if (q[k] == 0) continue;
            for (size_t i = 0; i < phi.size(); ++i) r[k + i] -= q[k] * phi[i];
        }
        f = std::move(q);
    }
    return f;
}

LineArrangement fermat_arrangement(unsigned n) {
    require(n >= 1, "BadFixture", "the Fermat family needs n >= 1");
    FieldPtr f;
    std::vector<FieldElem> roots;  // the n-th roots of unity
    if (n <= 2) {
        f = Field::rationals();
        roots.push_back(f->one());
        if (n == 2) roots.push_back(f->from_int(-1));
    } else {
        FieldSpec spec;
        spec.base = BaseKind::Rationals;
        spec.gen = "w";
        for (const auto& c : cyclotomic_polynomial(n)) spec.min_poly.emplace_back(c);
        f = Field::make(spec);
        FieldElem w = f->generator();
        FieldElem acc = f->one();
        for (unsigned j = 0; j < n; ++j) {
            roots.push_back(acc);
            acc = acc * w;
        }
    }
    std::vector<ArrLine> lines;
    // factors of (x^n - y^n)(x^n - z^n)(y^n - z^n)
    for (const auto& r : roots) lines.push_back({Poly3::linear(f, f->one(), -r, f->zero()), 1});
    for (const auto& r : roots) lines.push_back({Poly3::linear(f, f->one(), f->zero(), -r), 1});
    for (const auto& r : roots) lines.push_back({Poly3::linear(f, f->zero(), f->one(), -r), 1});
    return LineArrangement(f, std::move(lines), n <= 2);
}

namespace {

// irreducibility of a monic polynomial over F_p by trial division against
// every monic polynomial of degree 1..deg/2
bool fp_poly_irreducible(const std::vector<unsigned long>& poly, unsigned long p) {
    const size_t deg = poly.size() - 1;
    auto divides = [&](const std::vector<unsigned long>& g) {
        const size_t gd = g.size() - 1;
        std::vector<unsigned long> r(poly);
        for (auto& c : r) c %= p;
        for (size_t k = r.size(); k-- > gd;) {
            unsigned long c = r[k];
            if (c == 0) continue;
            for (size_t i = 0; i <= gd; ++i)
                r[k - gd + i] = (r[k - gd + i] + (p - c % p) * g[i]) % p;
        }
        for (size_t i = 0; i < gd; ++i)
            if (r[i] != 0) return false;
        return true;
    };
    for (size_t gd = 1; gd * 2 <= deg; ++gd) {
        std::vector<unsigned long> g(gd + 1, 0);
        g[gd] = 1;
        for (;;) {
            if (divides(g)) return false;
            size_t i = 0;
            while (i < gd && g[i] + 1 == p) g[i++] = 0;
            if (i == gd) break;
            ++g[i];
        }
    }
    return true;
}

} // namespace

LineArrangement finite_field_arrangement(unsigned long q) {
    require(q >= 2, "UnsupportedField", "finite field order must be at least 2");
    unsigned long p = 0, k = 0, qq = q;
    for (unsigned long c = 2; c * c <= qq; ++c)
        if (qq % c == 0) {
            p = c;
            break;
        }
    if (p == 0) p = qq;
    k = 0;
    while (qq > 1) {
        require(qq % p == 0, "UnsupportedField", std::to_string(q) + " is not a prime power");
        qq /= p;
        ++k;
    }

    FieldPtr f;
    if (k == 1) {
        FieldSpec spec;
        spec.base = BaseKind::PrimeField;
        spec.p = p;
        f = Field::make(spec);
    } else {
        // first irreducible monic polynomial of degree k in lex order
        std::vector<unsigned long> poly(k + 1, 0);
        poly[k] = 1;
        for (;;) {
            if (poly[0] != 0 && fp_poly_irreducible(poly, p)) break;
            size_t i = 0;
            while (i < k && poly[i] + 1 == p) poly[i++] = 0;
            require(i < k, "UnsupportedField", "no irreducible polynomial found");
            ++poly[i];
        }
        FieldSpec spec;
        spec.base = BaseKind::PrimeField;
        spec.p = p;
        spec.gen = "b";
        for (unsigned long c : poly) spec.min_poly.emplace_back(c);
        f = Field::make(spec);
    }

    // enumerate the q field elements
    std::vector<FieldElem> elems;
    std::vector<unsigned long> digits(k, 0);
    for (;;) {
        std::vector<Rational> coords;
        for (unsigned long dgt : digits) coords.emplace_back(dgt);
        elems.push_back(f->element(coords));
        size_t i = 0;
        while (i < k && digits[i] + 1 == p) digits[i++] = 0;
        if (i == k) break;
        ++digits[i];
    }

    // normalized coefficient triples: (1,b,c), (0,1,c), (0,0,1)
    std::vector<ArrLine> lines;
    for (const auto& b : elems)
        for (const auto& c : elems)
            lines.push_back({Poly3::linear(f, f->one(), b, c), 1});
    for (const auto& c : elems) lines.push_back({Poly3::linear(f, f->zero(), f->one(), c), 1});
    lines.push_back({Poly3::linear(f, f->zero(), f->zero(), f->one()), 1});
    return LineArrangement(f, std::move(lines));
}

LineArrangement general_arrangement(unsigned d, Rng& rng) {
    require(d >= 2, "BadFixture", "need at least 2 lines");
    FieldPtr f = Field::rationals();
    std::vector<ArrLine> lines;
    std::vector<ProjPoint> crossings;
    size_t attempts = 0;
    while (lines.size() < d) {
        require(++attempts < 10000, "Internal", "general arrangement rejection sampling stalled");
        Poly3 cand = Poly3::linear(f, f->random(rng), f->random(rng), f->random(rng));
        if (cand.is_zero()) continue;
        bool ok = true;
        for (const auto& l : lines)
            if (proportional(l.form, cand)) {
                ok = false;
                break;
            }
        // no triple points: the new line must avoid all existing crossings
        for (const auto& p : crossings)
            if (ok && cand.eval(p).is_zero()) ok = false;
        if (!ok) continue;
        auto c = line_coeffs(cand);
        for (const auto& l : lines) {
            auto b = line_coeffs(l.form);
            crossings.emplace_back(f, c[1] * b[2] - c[2] * b[1], c[2] * b[0] - c[0] * b[2],
                                   c[0] * b[1] - c[1] * b[0]);
        }
        lines.push_back({cand, 1});
    }
    return LineArrangement(f, std::move(lines), true);
}

LineArrangement concurrent_arrangement(unsigned d) {
    require(d >= 2, "BadFixture", "need at least 2 lines");
    FieldPtr f = Field::rationals();
    std::vector<ArrLine> lines;
    for (unsigned i = 0; i < d; ++i)
        lines.push_back({Poly3::linear(f, f->one(), f->from_int(long(i)), f->zero()), 1});
    return LineArrangement(f, std::move(lines), true);
}

LineArrangement near_pencil_arrangement(unsigned n) {
    require(n >= 2, "BadFixture", "a near-pencil needs n >= 2");
    FieldPtr f = Field::rationals();
    std::vector<ArrLine> lines;
    for (unsigned i = 1; i <= n; ++i)
        lines.push_back({Poly3::linear(f, f->from_int(long(i)), f->from_int(-1), f->zero()), 1});
    lines.push_back({Poly3::linear(f, f->zero(), f->zero(), f->one()), 1});
    return LineArrangement(f, std::move(lines), true);
}

} // namespace planept
