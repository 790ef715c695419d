#include "planept/nslattice.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "planept/linalg.hpp"

namespace planept {

// ---------------------------------------------------------------------------
// DivisorClass

DivisorClass::DivisorClass(size_t s, Rational d, std::vector<Rational> m)
    : d_(std::move(d)), m_(std::move(m)) {
    require(m_.size() == s, "SizeMismatch", "expected " + std::to_string(s) + " point coefficients");
}

Rational DivisorClass::pairing(const DivisorClass& o) const {
    require(m_.size() == o.m_.size(), "SizeMismatch", "classes live on different blow-ups");
    Rational acc = d_ * o.d_;
    for (size_t i = 0; i < m_.size(); ++i) acc -= m_[i] * o.m_[i];
    return acc;
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    require(m_.size() == o.m_.size(), "SizeMismatch", "classes live on different blow-ups");
    DivisorClass r = *this;
    r.d_ += o.d_;
    for (size_t i = 0; i < m_.size(); ++i) r.m_[i] += o.m_[i];
    return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    require(m_.size() == o.m_.size(), "SizeMismatch", "classes live on different blow-ups");
    DivisorClass r = *this;
    r.d_ -= o.d_;
    for (size_t i = 0; i < m_.size(); ++i) r.m_[i] -= o.m_[i];
    return r;
}

DivisorClass DivisorClass::scaled(const Rational& c) const {
    DivisorClass r = *this;
    r.d_ *= c;
    for (auto& m : r.m_) m *= c;
    return r;
}

bool DivisorClass::is_zero() const {
    if (d_ != 0) return false;
    for (const auto& m : m_)
        if (m != 0) return false;
    return true;
}

std::string DivisorClass::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& c, const std::string& sym) {
        if (c == 0) return;
        Rational a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        } else if (a < 0) {
            os << "-";
            a = -a;
        }
        first = false;
        if (a != 1) os << rat_str(a);
        os << sym;
    };
    emit(d_, "L");
    for (size_t i = 0; i < m_.size(); ++i) emit(-m_[i], "E" + std::to_string(i + 1));
    return os.str();
}

DivisorClass DivisorClass::parse(size_t s, const std::string& text) {
    DivisorClass r(s, Rational(0), std::vector<Rational>(s, Rational(0)));
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    bool first = true;
    while (true) {
        skip_ws();
        if (pos == text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else {
            require(first, "BadFixture", "missing +/- in divisor '" + text + "'");
        }
        first = false;
        skip_ws();
        std::string num;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            num += text[pos++];
        Rational coef = num.empty() ? Rational(1) : parse_rational(num);
        if (sign < 0) coef = -coef;
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
        }
        require(pos < text.size(), "BadFixture", "dangling coefficient in '" + text + "'");
        if (text[pos] == 'L') {
            ++pos;
            r.d_ += coef;
        } else if (text[pos] == 'E') {
            ++pos;
            if (pos < text.size() && text[pos] == '*') {
                // uniform shorthand: bE* puts b at every point
                ++pos;
                for (auto& mi : r.m_) mi -= coef;
                continue;
            }
            std::string idx;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                idx += text[pos++];
            require(!idx.empty(), "BadFixture", "E without an index in '" + text + "'");
            size_t i = std::stoul(idx);
            require(i >= 1 && i <= s, "BadFixture",
                    "index E" + idx + " outside 1..." + std::to_string(s));
            r.m_[i - 1] -= coef;
        } else {
            fail("BadFixture", "expected L or E<i> in '" + text + "'");
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// CurveSystem

namespace {
std::vector<std::string> default_names(size_t n, const std::vector<std::string>& given) {
    if (!given.empty()) return given;
    std::vector<std::string> names;
    names.reserve(n);
    for (size_t i = 0; i < n; ++i) names.push_back("C" + std::to_string(i + 1));
    return names;
}
} // namespace

CurveSystem::CurveSystem(size_t s, std::vector<DivisorClass> curves, std::vector<std::string> names)
    : s_(s), curves_(std::move(curves)), names_(default_names(curves_.size(), names)) {
    require(!curves_.empty(), "BadFixture", "empty curve system");
    gram_.assign(curves_.size(), std::vector<Rational>(curves_.size()));
    for (size_t i = 0; i < curves_.size(); ++i) {
        require(curves_[i].points() == s_, "SizeMismatch", "curve classes on different blow-ups");
        for (size_t j = 0; j < curves_.size(); ++j) gram_[i][j] = curves_[i].pairing(curves_[j]);
    }
    for (size_t i = 0; i < curves_.size(); ++i)
        for (size_t j = i + 1; j < curves_.size(); ++j)
            require(gram_[i][j] >= 0, "BadFixture",
                    "declared prime curves must meet nonnegatively (" + names_[i] + "." +
                        names_[j] + " = " + rat_str(gram_[i][j]) + ")");
}

CurveSystem::CurveSystem(std::vector<std::vector<Rational>> gram, std::vector<std::string> names)
    : s_(0), gram_(std::move(gram)), names_(default_names(gram_.size(), names)) {
    require(!gram_.empty(), "BadFixture", "empty Gram matrix");
    for (const auto& row : gram_)
        require(row.size() == gram_.size(), "NotSymmetric", "Gram matrix is not square");
    for (size_t i = 0; i < gram_.size(); ++i)
        for (size_t j = i + 1; j < gram_.size(); ++j) {
            require(gram_[i][j] == gram_[j][i], "NotSymmetric", "Gram matrix is not symmetric");
            require(gram_[i][j] >= 0, "BadFixture", "declared prime curves must meet nonnegatively");
        }
}

bool is_negdef_system(const CurveSystem& C) {
    // on an s-point blow-up, a negative definite span has rank at most s
    if (C.has_classes() && C.size() > C.points()) return false;
    return is_negative_definite(C.gram());
}

namespace {

std::vector<std::vector<Rational>> submatrix(const std::vector<std::vector<Rational>>& G,
                                             const std::vector<size_t>& idx) {
    std::vector<std::vector<Rational>> S(idx.size(), std::vector<Rational>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) S[i][j] = G[idx[i]][idx[j]];
    return S;
}

// dual basis of a negative definite Gram matrix: column i of the result is
// G^{-1} e_i / (G^{-1})_{ii}, i.e. the combination with N_i'.N_j = 0 (j != i)
// and N_i'.N_i = (N_i')^2
std::vector<std::vector<Rational>> dual_of_gram(const std::vector<std::vector<Rational>>& G) {
    const size_t n = G.size();
    FieldPtr f = Field::rationals();
    Mat A(f, n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) A.at(i, j) = f->from_rational(G[i][j]);
        A.at(i, n + i) = f->one();
    }
    Rref R = rref(A);
    require(R.rank == n && R.pivots.back() == n - 1, "NotNegativeDefinite",
            "singular Gram matrix has no dual basis");
    // inverse sits in the right block
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = R.mat.at(i, n + j).coords()[0];
    std::vector<std::vector<Rational>> dual(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i) {
        require(inv[i][i] != 0, "NotNegativeDefinite", "vanishing diagonal in the inverse Gram");
        for (size_t j = 0; j < n; ++j) dual[i][j] = inv[j][i] / inv[i][i];
    }
    return dual;
}

mpz_class lcm_denoms(const std::vector<Rational>& v, mpz_class acc) {
    for (const auto& q : v) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), q.get_den().get_mpz_t());
    return acc;
}

} // namespace

std::vector<std::vector<Rational>> dual_basis(const CurveSystem& C) {
    if (C.has_classes())
        require(C.size() <= C.points(), "TooManySupportCurves",
                "a negative definite system on an s-point blow-up has at most s curves");
    require(is_negative_definite(C.gram()), "NotNegativeDefinite",
            "dual basis needs a negative definite system");
    auto dual = dual_of_gram(C.gram());
    for (const auto& row : dual)
        for (const auto& c : row)
            require(c >= 0, "Internal", "dual basis coefficients must be nonnegative");
    return dual;
}

ZariskiResult zariski_decompose(const CurveSystem& C, const std::vector<Rational>& coeffs) {
    const size_t n = C.size();
    require(coeffs.size() == n, "SizeMismatch", "one coefficient per declared curve");
    for (const auto& c : coeffs)
        require(c >= 0, "NotNonnegative", "the input must be an effective combination");
    const auto& G = C.gram();

    std::vector<Rational> npart = coeffs;              // shrinking effective part
    std::vector<Rational> ppart(n, Rational(0));       // accumulating nef part

    auto support = [&]() {
        std::vector<size_t> idx;
        for (size_t i = 0; i < n; ++i)
            if (npart[i] != 0) idx.push_back(i);
        return idx;
    };
    auto pairing_with_curve = [&](const std::vector<Rational>& v, size_t j) {
        Rational acc(0);
        for (size_t i = 0; i < n; ++i)
            if (v[i] != 0) acc += v[i] * G[i][j];
        return acc;
    };

    // phase 1: peel off nef nonnegative sums until the support of the
    // remaining part is negative definite
    for (;;) {
        std::vector<size_t> idx = support();
        if (idx.empty()) break;
        NegDefWitness w = negdef_or_nonneg_combination(submatrix(G, idx));
        if (w.negdef) break;
        // w.combination is a nonneg formal sum S over idx with S.C >= 0 for
        // every declared curve; remove as much of it as the coefficients allow
        std::vector<Rational> S(n, Rational(0));
        for (size_t k = 0; k < idx.size(); ++k) S[idx[k]] = w.combination[k];
        bool first = true;
        Rational cmin;
        for (size_t i = 0; i < n; ++i) {
            if (S[i] == 0) continue;
            Rational ratio = npart[i] / S[i];
            if (first || ratio < cmin) {
                cmin = ratio;
                first = false;
            }
        }
        require(!first && cmin > 0, "Internal", "degenerate peel step");
        for (size_t i = 0; i < n; ++i) {
            ppart[i] += cmin * S[i];
            npart[i] -= cmin * S[i];
            if (npart[i] < 0) npart[i] = 0;  // exact arithmetic: only the min hits 0
        }
    }

    // phase 2: transfer along the dual basis until P is orthogonal to the
    // support of N
    for (;;) {
        std::vector<size_t> idx = support();
        if (idx.empty()) break;
        size_t bad = idx.size();
        for (size_t k = 0; k < idx.size(); ++k)
            if (pairing_with_curve(ppart, idx[k]) > 0) {
                bad = k;
                break;
            }
        if (bad == idx.size()) break;
        auto dual = dual_of_gram(submatrix(G, idx));
        const auto& cmb = dual[bad];  // N_bad' over idx, nonnegative
        // (N_bad')^2 = N_bad' . N_bad
        Rational dsq(0);
        for (size_t k = 0; k < idx.size(); ++k)
            if (cmb[k] != 0) dsq += cmb[k] * G[idx[k]][idx[bad]];
        require(dsq < 0, "Internal", "dual class with nonnegative square");
        Rational excess = pairing_with_curve(ppart, idx[bad]);
        Rational t = excess / -dsq;  // (P + t N') . N_bad = 0
        for (size_t k = 0; k < idx.size(); ++k) {
            if (cmb[k] == 0) continue;
            Rational cap = npart[idx[k]] / cmb[k];
            if (cap < t) t = cap;
        }
        require(t > 0, "Internal", "degenerate transfer step");
        for (size_t k = 0; k < idx.size(); ++k) {
            ppart[idx[k]] += t * cmb[k];
            npart[idx[k]] -= t * cmb[k];
            if (npart[idx[k]] < 0) npart[idx[k]] = 0;
        }
    }

    ZariskiResult res;
    res.p_coeffs = std::move(ppart);
    res.n_coeffs = std::move(npart);
    res.denominator = 1;
    res.denominator = lcm_denoms(res.p_coeffs, res.denominator);
    res.denominator = lcm_denoms(res.n_coeffs, res.denominator);
    if (C.has_classes()) {
        DivisorClass P(C.points(), Rational(0), std::vector<Rational>(C.points(), Rational(0)));
        DivisorClass N = P;
        for (size_t i = 0; i < n; ++i) {
            if (res.p_coeffs[i] != 0) P = P + C.curves()[i].scaled(res.p_coeffs[i]);
            if (res.n_coeffs[i] != 0) N = N + C.curves()[i].scaled(res.n_coeffs[i]);
        }
        mpz_class den = res.denominator;
        den = lcm_denoms({P.line_coeff()}, den);
        den = lcm_denoms(P.point_coeffs(), den);
        den = lcm_denoms({N.line_coeff()}, den);
        den = lcm_denoms(N.point_coeffs(), den);
        res.denominator = den;
        res.P = std::move(P);
        res.N = std::move(N);
    }
    return res;
}

bool nef_relative(const DivisorClass& D, const std::vector<DivisorClass>& curves) {
    for (const auto& c : curves)
        if (D.pairing(c) < 0) return false;
    return true;
}

Rational waldschmidt_zariski(const CurveSystem& C, const std::vector<Rational>& coeffs) {
    require(C.has_classes(), "PatternMismatch",
            "the Waldschmidt pattern needs lattice classes, not a bare Gram matrix");
    ZariskiResult zr = zariski_decompose(C, coeffs);
    const DivisorClass& N = *zr.N;
    bool p_zero = zr.P->is_zero();
    require(!p_zero, "PatternMismatch", "the nef part vanishes; no conclusion");
    require(!N.is_zero(), "PatternMismatch", "the negative part vanishes; no conclusion");
    const Rational a = N.line_coeff();
    require(a > 0, "PatternMismatch", "negative part has no line component");
    const auto& m = N.point_coeffs();
    const Rational b = m.empty() ? Rational(0) : m[0];
    for (const auto& mi : m)
        require(mi == b, "PatternMismatch",
                "negative part is not of the uniform shape aL - b(E1+...+Es)");
    require(b > 0, "PatternMismatch", "negative part has no exceptional component");
    return a / b;
}

TransformSystem proper_transform_system(const LineArrangement& A) {
    IncidenceData inc = incidence(A);
    const size_t s = inc.count();

    std::vector<DivisorClass> curves;
    std::vector<std::string> names;
    for (size_t i = 0; i < A.size(); ++i) {
        std::vector<Rational> m(s, Rational(0));
        for (size_t pi = 0; pi < s; ++pi)
            if (std::find(inc.crossings[pi].lines.begin(), inc.crossings[pi].lines.end(), i) !=
                inc.crossings[pi].lines.end())
                m[pi] = 1;
        curves.emplace_back(s, Rational(1), std::move(m));
        names.push_back("H" + std::to_string(i + 1));
    }
    for (size_t pi = 0; pi < s; ++pi) {
        std::vector<Rational> m(s, Rational(0));
        m[pi] = -1;
        curves.emplace_back(s, Rational(0), std::move(m));
        names.push_back("E" + std::to_string(pi + 1));
    }
    std::vector<ProjPoint> pts;
    for (const auto& c : inc.crossings) pts.push_back(c.p);
    return TransformSystem{CurveSystem(s, std::move(curves), std::move(names)), std::move(pts),
                           A.size()};
}

mpz_class denominator_bound(const CurveSystem& C) {
    mpz_class b(1);
    for (size_t i = 0; i < C.size(); ++i) {
        const Rational& sq = C.gram()[i][i];
        require(sq < 0, "BadFixture",
                "denominator bounds need curves of negative self-intersection");
        require(sq.get_den() == 1, "BadFixture", "integer self-intersections expected");
        b *= -sq.get_num();
    }
    return b;
}

// ---------------------------------------------------------------------------
// expressing a divisor as a nonnegative combination (phase-1 simplex with
// Bland's rule, exact rational arithmetic)

std::vector<Rational> express_effective(const CurveSystem& C, const DivisorClass& D) {
    require(C.has_classes(), "BadFixture", "cannot express a divisor over a bare Gram matrix");
    require(D.points() == C.points(), "SizeMismatch", "divisor on a different blow-up");
    const size_t rows = C.points() + 1;  // coordinates L, E_1..E_s
    const size_t n = C.size();

    // tableau for: minimize sum of artificials, A x + a = b, x, a >= 0
    std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(n + rows + 1, Rational(0)));
    auto coord = [&](const DivisorClass& dc, size_t r) {
        return r == 0 ? dc.line_coeff() : dc.point_coeffs()[r - 1];
    };
    for (size_t r = 0; r < rows; ++r) {
        Rational b = coord(D, r);
        for (size_t j = 0; j < n; ++j) A[r][j] = coord(C.curves()[j], r);
        if (b < 0) {
            for (auto& v : A[r]) v = -v;
            b = -b;
        }
        A[r][n + r] = 1;
        A[r][n + rows] = b;
    }
    std::vector<size_t> basis(rows);
    for (size_t r = 0; r < rows; ++r) basis[r] = n + r;

    // objective row: z = sum of artificial variables
    std::vector<Rational> obj(n + rows + 1, Rational(0));
    for (size_t r = 0; r < rows; ++r)
        for (size_t j = 0; j <= n + rows; ++j) obj[j] += A[r][j];
    for (size_t r = 0; r < rows; ++r) obj[n + r] = 0;

    for (;;) {
        // Bland: entering variable = lowest index with positive reduced cost
        size_t enter = n + rows;
        for (size_t j = 0; j < n + rows; ++j)
            if (obj[j] > 0) {
                enter = j;
                break;
            }
        if (enter == n + rows) break;
        // ratio test, ties by lowest basis index
        size_t leave = rows;
        Rational best;
        for (size_t r = 0; r < rows; ++r) {
            if (A[r][enter] <= 0) continue;
            Rational ratio = A[r][n + rows] / A[r][enter];
            if (leave == rows || ratio < best ||
                (ratio == best && basis[r] < basis[leave]))
            {
                leave = r;
                best = ratio;
            }
        }
        require(leave != rows, "Internal", "unbounded phase-1 objective");
        // pivot
        Rational piv = A[leave][enter];
        for (auto& v : A[leave]) v /= piv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == leave || A[r][enter] == 0) continue;
            Rational f = A[r][enter];
            for (size_t j = 0; j <= n + rows; ++j) A[r][j] -= f * A[leave][j];
        }
        Rational fo = obj[enter];
        if (fo != 0)
            for (size_t j = 0; j <= n + rows; ++j) obj[j] -= fo * A[leave][j];
        basis[leave] = enter;
    }

    Rational objective(0);
    for (size_t r = 0; r < rows; ++r)
        if (basis[r] >= n) objective += A[r][n + rows];
    require(objective == 0, "NotNonnegative",
            "the divisor is not a nonnegative combination of the declared curves");
    std::vector<Rational> x(n, Rational(0));
    for (size_t r = 0; r < rows; ++r)
        if (basis[r] < n) x[basis[r]] = A[r][n + rows];
    return x;
}

} // namespace planept
