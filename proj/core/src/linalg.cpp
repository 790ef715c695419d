#include "planept/linalg.hpp"

#include <algorithm>

namespace planept {

Mat::Mat(FieldPtr f, size_t rows, size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, f_->zero()) {}

std::vector<FieldElem> Mat::row(size_t r) const {
    return std::vector<FieldElem>(a_.begin() + long(r * cols_), a_.begin() + long((r + 1) * cols_));
}

void Mat::set_row(size_t r, const std::vector<FieldElem>& v) {
    require(v.size() == cols_, "DimensionMismatch", "row length mismatch");
    std::copy(v.begin(), v.end(), a_.begin() + long(r * cols_));
}

void Mat::append_row(const std::vector<FieldElem>& v) {
    require(v.size() == cols_, "DimensionMismatch", "row length mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
}

void Mat::append_rows(const Mat& other) {
    require(other.cols_ == cols_, "DimensionMismatch", "column count mismatch");
    a_.insert(a_.end(), other.a_.begin(), other.a_.end());
    rows_ += other.rows_;
}

Mat Mat::from_rows(FieldPtr f, size_t cols, const std::vector<std::vector<FieldElem>>& rows) {
    Mat m(std::move(f), 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

std::vector<FieldElem> mat_vec(const Mat& A, const std::vector<FieldElem>& v) {
    require(v.size() == A.cols(), "DimensionMismatch", "matrix-vector size mismatch");
    std::vector<FieldElem> r(A.rows(), A.field().zero());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j)
            if (!A.at(i, j).is_zero()) r[i] += A.at(i, j) * v[j];
    return r;
}

// ---------------------------------------------------------------------------
// elimination engines

namespace {

// fraction-free forward elimination on an integer matrix (Bareiss); returns
// pivot columns; the matrix is left in (non-reduced) row echelon form with
// the usual Bareiss scaling
std::vector<size_t> bareiss_forward(std::vector<mpz_class>& a, size_t rows, size_t cols) {
    std::vector<size_t> pivots;
    mpz_class prev(1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (size_t j = 0; j < cols; ++j) std::swap(a[r * cols + j], a[pr * cols + j]);
        const mpz_class piv = a[r * cols + c];
        for (size_t i = r + 1; i < rows; ++i) {
            const mpz_class fac = a[i * cols + c];
            for (size_t j = c; j < cols; ++j) {
                mpz_class t = a[i * cols + j] * piv - fac * a[r * cols + j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i * cols + j] = std::move(t);
            }
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

bool plain_rationals(const Field& f) {
    return f.spec().base == BaseKind::Rationals && !f.has_extension();
}

Rref rref_rational(const Mat& A) {
    const size_t rows = A.rows(), cols = A.cols();
    const FieldPtr f = A.field_ptr();

    // clear denominators row by row
    std::vector<mpz_class> a(rows * cols);
    for (size_t i = 0; i < rows; ++i) {
        mpz_class l(1);
        for (size_t j = 0; j < cols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                    A.at(i, j).coords()[0].get_den().get_mpz_t());
        for (size_t j = 0; j < cols; ++j) {
            const Rational& q = A.at(i, j).coords()[0];
            a[i * cols + j] = q.get_num() * (l / q.get_den());
        }
    }

    std::vector<size_t> pivots = bareiss_forward(a, rows, cols);
    const size_t rk = pivots.size();

    // normalize the echelon rows to rationals and back-substitute
    std::vector<std::vector<Rational>> rr(rk, std::vector<Rational>(cols, Rational(0)));
    for (size_t i = 0; i < rk; ++i) {
        const mpz_class& piv = a[i * cols + pivots[i]];
        for (size_t j = pivots[i]; j < cols; ++j)
            if (a[i * cols + j] != 0) {
                rr[i][j] = Rational(a[i * cols + j], piv);
                rr[i][j].canonicalize();
            }
    }
    for (size_t i = rk; i-- > 0;) {
        for (size_t k = 0; k < i; ++k) {
            Rational fac = rr[k][pivots[i]];
            if (fac == 0) continue;
            for (size_t j = pivots[i]; j < cols; ++j)
                if (rr[i][j] != 0) rr[k][j] -= fac * rr[i][j];
        }
    }

    Rref out;
    out.mat = Mat(f, rk, cols);
    for (size_t i = 0; i < rk; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (rr[i][j] != 0) out.mat.at(i, j) = f->from_rational(rr[i][j]);
    out.pivots = std::move(pivots);
    out.rank = rk;
    return out;
}

// Scale a row so its rational data is an integer vector of content one.
// Scaling never changes the row space, but it keeps the coefficient growth of
// the elimination near the size of the answer instead of compounding.
void row_normalize_content(const Field& f, std::vector<FieldElem>& row) {
    if (f.spec().base != BaseKind::Rationals) return;
    mpz_class den(1), num(0);
    for (const auto& e : row)
        for (const auto& q : e.coords()) {
            if (q == 0) continue;
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
        }
    for (const auto& e : row)
        for (const auto& q : e.coords()) {
            if (q == 0) continue;
            mpz_class scaled = q.get_num() * (den / q.get_den());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
        }
    if (num == 0 || (num == 1 && den == 1)) return;
    Rational scale(den, num);
    scale.canonicalize();
    FieldElem s = f.from_rational(scale);
    for (auto& e : row)
        if (!e.is_zero()) e = e * s;
}

// forward echelon with content-normalized working rows, then one
// back-substitution pass into reduced form
Rref rref_generic(const Mat& A) {
    const size_t rows = A.rows(), cols = A.cols();
    const FieldPtr f = A.field_ptr();
    std::vector<std::vector<FieldElem>> a(rows);
    for (size_t i = 0; i < rows; ++i) {
        a[i] = A.row(i);
        row_normalize_content(*f, a[i]);
    }

    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(a[r], a[pr]);
        FieldElem inv = a[r][c].inv();
        for (size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            FieldElem fac = a[i][c] * inv;
            for (size_t j = c; j < cols; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= fac * a[r][j];
            row_normalize_content(*f, a[i]);
        }
        pivots.push_back(c);
        ++r;
    }

    // normalize pivots to 1 and eliminate above, bottom row first
    for (size_t i = pivots.size(); i-- > 0;) {
        FieldElem inv = a[i][pivots[i]].inv();
        for (size_t j = pivots[i]; j < cols; ++j)
            if (!a[i][j].is_zero()) a[i][j] = a[i][j] * inv;
        for (size_t k = 0; k < i; ++k) {
            FieldElem fac = a[k][pivots[i]];
            if (fac.is_zero()) continue;
            for (size_t j = pivots[i]; j < cols; ++j)
                if (!a[i][j].is_zero()) a[k][j] -= fac * a[i][j];
        }
    }

    Rref out;
    out.mat = Mat(f, pivots.size(), cols);
    for (size_t i = 0; i < pivots.size(); ++i) out.mat.set_row(i, a[i]);
    out.pivots = std::move(pivots);
    out.rank = out.pivots.size();
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Modular acceleration for kernels over extensions of Q.
//
// The kernel is computed modulo word-size primes at which the minimal
// polynomial stays irreducible, the candidate basis is lifted by Chinese
// remaindering plus rational reconstruction, and the lift is then verified
// over the number field itself: A v = 0 for every candidate and the modular
// image pins the exact kernel dimension from both sides.  Anything that
// fails to verify falls back to direct exact elimination, so the results
// are always exactly certified.

namespace {

// Rabin irreducibility over F_p for word-size p: f of degree d is
// irreducible iff x^(p^d) = x mod f and gcd(x^(p^(d/q)) - x, f) = 1 for
// every prime q dividing d.  Polynomials are dense vectors mod p.
using FpPoly = std::vector<unsigned long>;

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % p);
}

FpPoly fpx_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, unsigned long p) {
    const size_t d = f.size() - 1;
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    for (size_t k = r.size(); k-- > d;) {
        unsigned long c = r[k];
        if (c == 0) continue;
        r[k] = 0;
        for (size_t i = 0; i < d; ++i)
            r[k - d + i] = (r[k - d + i] + mulmod(p - (f[i] % p), c, p)) % p;
    }
    r.resize(d);
    return r;
}

FpPoly fpx_xpow(mpz_class e, const FpPoly& f, unsigned long p) {
    FpPoly base(f.size() - 1, 0);
    base[1] = 1;  // extensions have degree >= 2
    FpPoly acc(f.size() - 1, 0);
    acc[0] = 1;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = fpx_mulmod(acc, base, f, p);
        base = fpx_mulmod(base, base, f, p);
        e >>= 1;
    }
    return acc;
}

FpPoly fpx_gcd(FpPoly a, FpPoly b, unsigned long p) {
    auto deg = [](const FpPoly& v) -> long {
        for (size_t i = v.size(); i-- > 0;)
            if (v[i] != 0) return long(i);
        return -1;
    };
    while (deg(b) >= 0) {
        long da = deg(a), db = deg(b);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        // a -= lead(a)/lead(b) x^(da-db) b
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), mpz_class(b[size_t(db)]).get_mpz_t(),
                   mpz_class(p).get_mpz_t());
        unsigned long c = mulmod(a[size_t(da)], inv.get_ui(), p);
        for (long i = 0; i <= db; ++i)
            a[size_t(da - db + i)] =
                (a[size_t(da - db + i)] + mulmod(p - b[size_t(i)] % p, c, p)) % p;
    }
    return a;
}

bool fpx_irreducible(const FpPoly& poly, unsigned long p) {
    const size_t d = poly.size() - 1;
    if (d == 1) return true;
    // x^(p^d) = x mod poly
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, unsigned(d));
    FpPoly xq = fpx_xpow(pd, poly, p);
    FpPoly x(d, 0);
    x[1] = 1;
    if (xq != x) return false;
    // gcd(x^(p^(d/q)) - x, poly) = 1 for prime divisors q of d
    for (size_t q = 2; q <= d; ++q) {
        if (d % q != 0) continue;
        bool isprime = true;
        for (size_t w = 2; w * w <= q; ++w)
            if (q % w == 0) isprime = false;
        if (!isprime) continue;
        mpz_class pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), p, unsigned(d / q));
        FpPoly sub = fpx_xpow(pk, poly, p);
        sub[1] = (sub[1] + p - 1) % p;
        FpPoly g = fpx_gcd(poly, sub, p);
        long gd = -1;
        for (size_t i = g.size(); i-- > 0;)
            if (g[i] != 0) {
                gd = long(i);
                break;
            }
        if (gd != 0) return false;
    }
    return true;
}

// rational reconstruction: n/d with |n|, d <= sqrt(M/2) congruent to r mod M
bool rat_reconstruct(const mpz_class& r, const mpz_class& M, Rational& out) {
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), mpz_class(M / 2).get_mpz_t());
    mpz_class r0 = M, r1 = r % M, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += M;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class rn = r0 - q * r1;
        mpz_class tn = t0 - q * t1;
        r0 = r1;
        r1 = rn;
        t0 = t1;
        t1 = tn;
    }
    if (t1 == 0) return false;
    mpz_class den = t1 < 0 ? mpz_class(-t1) : t1;
    mpz_class num = t1 < 0 ? mpz_class(-r1) : r1;
    if (den > bound) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) {
        num /= g;
        den /= g;
    }
    out = Rational(num, den);
    out.canonicalize();
    return true;
}

struct ModularImage {
    FieldPtr field;        // F_p[g]/(min poly mod p)
    unsigned long p = 0;
    Mat mat;
    bool ok = false;
};

ModularImage reduce_matrix_mod(const Mat& A, unsigned long p) {
    ModularImage out;
    out.p = p;
    const FieldSpec& spec = A.field().spec();
    // minimal polynomial must stay monic, integral and irreducible mod p
    std::vector<unsigned long> mp;
    for (const auto& c : spec.min_poly) {
        if (mpz_class(c.get_den() % p) == 0) return out;
        mpz_class num = c.get_num() % p, den = c.get_den() % p, inv;
        if (num < 0) num += p;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
        mp.push_back(mpz_class((num * inv) % p).get_ui());
    }
    if (!fpx_irreducible(mp, p)) return out;
    FieldSpec modspec;
    modspec.base = BaseKind::PrimeField;
    modspec.p = p;
    modspec.gen = spec.gen;
    for (unsigned long c : mp) modspec.min_poly.emplace_back(c);
    out.field = Field::make(modspec);

    out.mat = Mat(out.field, A.rows(), A.cols());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) {
            const auto& coords = A.at(i, j).coords();
            std::vector<Rational> red(coords.size());
            for (size_t k = 0; k < coords.size(); ++k) {
                if (mpz_class(coords[k].get_den() % p) == 0) return out;
                red[k] = coords[k];
            }
            out.mat.at(i, j) = out.field->element(std::move(red));
        }
    out.ok = true;
    return out;
}

std::optional<Mat> kernel_via_modular(const Mat& A) {
    static const unsigned long kPrimes[] = {2147483629ul, 2147483587ul, 2147483579ul,
                                            2147483563ul, 2147483549ul, 2147483543ul,
                                            2147483497ul, 2147483489ul};
    const FieldPtr& f = A.field_ptr();
    const unsigned deg = f->degree();

    std::vector<size_t> pivots;
    std::vector<std::vector<mpz_class>> crt;  // per kernel row, flattened coords
    mpz_class modulus = 1;
    size_t used = 0;

    for (unsigned long p : kPrimes) {
        ModularImage img = reduce_matrix_mod(A, p);
        if (!img.ok) continue;
        Rref R = rref(img.mat);
        std::vector<bool> is_pivot(A.cols(), false);
        for (size_t c : R.pivots) is_pivot[c] = true;
        // kernel basis mod p in the standard reduced shape
        std::vector<std::vector<FieldElem>> kp;
        std::vector<size_t> free_cols;
        for (size_t j = 0; j < A.cols(); ++j) {
            if (is_pivot[j]) continue;
            free_cols.push_back(j);
            std::vector<FieldElem> v(A.cols(), img.field->zero());
            v[j] = img.field->one();
            for (size_t i = 0; i < R.pivots.size(); ++i)
                if (!R.mat.at(i, j).is_zero()) v[R.pivots[i]] = -R.mat.at(i, j);
            kp.push_back(std::move(v));
        }
        if (kp.empty()) {
            // full column rank mod p proves the exact kernel is trivial
            return Mat(f, 0, A.cols());
        }
        if (used == 0 || R.pivots.size() > pivots.size()) {
            // first usable prime, or a previous prime was unlucky and
            // dropped rank: restart the lift from this one
            pivots = R.pivots;
            crt.assign(kp.size(), std::vector<mpz_class>(A.cols() * deg, 0));
            modulus = 1;
            used = 0;
        } else if (R.pivots != pivots) {
            continue;  // unlucky prime; skip it
        }
        // fold this prime into the accumulated residues
        for (size_t r = 0; r < kp.size(); ++r)
            for (size_t j = 0; j < A.cols(); ++j)
                for (unsigned k = 0; k < deg; ++k) {
                    const mpz_class res = kp[r][j].coords()[k].get_num();
                    mpz_class& acc = crt[r][j * deg + k];
                    if (used == 0) {
                        acc = res;
                    } else {
                        // acc' = acc + modulus * ((res - acc) / modulus mod p)
                        mpz_class minv, diff = (res - acc) % p;
                        if (diff < 0) diff += p;
                        mpz_invert(minv.get_mpz_t(), mpz_class(modulus % p).get_mpz_t(),
                                   mpz_class(p).get_mpz_t());
                        acc += modulus * ((diff * minv) % p);
                    }
                }
        modulus *= p;
        ++used;

        // attempt the lift and the exact verification
        Mat K(f, 0, A.cols());
        bool lifted = true;
        for (size_t r = 0; r < crt.size() && lifted; ++r) {
            std::vector<FieldElem> row;
            row.reserve(A.cols());
            for (size_t j = 0; j < A.cols() && lifted; ++j) {
                std::vector<Rational> coords(deg);
                for (unsigned k = 0; k < deg; ++k)
                    if (!rat_reconstruct(crt[r][j * deg + k], modulus, coords[k])) {
                        lifted = false;
                        break;
                    }
                if (lifted) row.push_back(f->element(std::move(coords)));
            }
            if (lifted) K.append_row(row);
        }
        if (!lifted) continue;
        bool verified = true;
        for (size_t r = 0; r < K.rows() && verified; ++r) {
            auto prod = mat_vec(A, K.row(r));
            for (const auto& e : prod)
                if (!e.is_zero()) {
                    verified = false;
                    break;
                }
        }
        if (!verified) continue;
        // K's rows are independent (their mod-p images are) and A v = 0 holds
        // exactly, while rank >= rank mod p bounds the kernel from above; so
        // K spans the exact kernel.  Canonicalize and return.
        return rref(K).mat;
    }
    return std::nullopt;
}

bool extension_over_q(const Field& f) {
    return f.spec().base == BaseKind::Rationals && f.has_extension();
}

} // namespace

Rref rref(const Mat& A) {
    if (A.rows() == 0) return Rref{Mat(A.field_ptr(), 0, A.cols()), {}, 0};
    return plain_rationals(A.field()) ? rref_rational(A) : rref_generic(A);
}

namespace {
// forward phase only, for rank queries over extensions
size_t rank_generic(const Mat& A) {
    const size_t rows = A.rows(), cols = A.cols();
    const FieldPtr f = A.field_ptr();
    std::vector<std::vector<FieldElem>> a(rows);
    for (size_t i = 0; i < rows; ++i) {
        a[i] = A.row(i);
        row_normalize_content(*f, a[i]);
    }
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(a[r], a[pr]);
        FieldElem inv = a[r][c].inv();
        for (size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            FieldElem fac = a[i][c] * inv;
            for (size_t j = c; j < cols; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= fac * a[r][j];
            row_normalize_content(*f, a[i]);
        }
        ++r;
    }
    return r;
}
} // namespace

size_t rank(const Mat& A) {
    if (A.rows() == 0) return 0;
    if (extension_over_q(A.field())) {
        auto K = kernel_via_modular(A);
        if (K) return A.cols() - K->rows();
    }
    if (plain_rationals(A.field())) {
        const size_t rows = A.rows(), cols = A.cols();
        std::vector<mpz_class> a(rows * cols);
        for (size_t i = 0; i < rows; ++i) {
            mpz_class l(1);
            for (size_t j = 0; j < cols; ++j)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                        A.at(i, j).coords()[0].get_den().get_mpz_t());
            for (size_t j = 0; j < cols; ++j) {
                const Rational& q = A.at(i, j).coords()[0];
                a[i * cols + j] = q.get_num() * (l / q.get_den());
            }
        }
        return bareiss_forward(a, rows, cols).size();
    }
    return rank_generic(A);
}

Mat kernel_basis(const Mat& A) {
    if (A.rows() > 0 && extension_over_q(A.field())) {
        auto K = kernel_via_modular(A);
        if (K) return *K;
    }
    const size_t cols = A.cols();
    Rref R = rref(A);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : R.pivots) is_pivot[c] = true;

    Mat K(A.field_ptr(), 0, cols);
    const Field& f = A.field();
    for (size_t j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<FieldElem> v(cols, f.zero());
        v[j] = f.one();
        for (size_t i = 0; i < R.pivots.size(); ++i)
            if (!R.mat.at(i, j).is_zero()) v[R.pivots[i]] = -R.mat.at(i, j);
        K.append_row(v);
    }
    if (K.rows() == 0) return K;
    return rref(K).mat;  // canonical form of the kernel space
}

std::optional<std::vector<FieldElem>> solve(const Mat& A, const std::vector<FieldElem>& b) {
    require(b.size() == A.rows(), "DimensionMismatch", "right-hand side length mismatch");
    Mat aug(A.field_ptr(), A.rows(), A.cols() + 1);
    for (size_t i = 0; i < A.rows(); ++i) {
        for (size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    Rref R = rref(aug);
    for (size_t c : R.pivots)
        if (c == A.cols()) return std::nullopt;
    std::vector<FieldElem> x(A.cols(), A.field().zero());
    for (size_t i = 0; i < R.pivots.size(); ++i) x[R.pivots[i]] = R.mat.at(i, A.cols());
    return x;
}

bool subspace_leq(const Mat& U, const Mat& V) {
    require(U.cols() == V.cols(), "DimensionMismatch", "subspace comparison needs equal ambient dimension");
    require(U.field().same(V.field()), "FieldMismatch", "subspaces over different fields");
    EchelonBasis basis(V.field_ptr(), V.cols());
    for (size_t i = 0; i < V.rows(); ++i) basis.insert(V.row(i));
    for (size_t i = 0; i < U.rows(); ++i)
        if (!basis.contains(U.row(i))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// EchelonBasis
//
// Rows are kept in (non-reduced) echelon form with content-normalized
// entries; the full reduction happens once, in to_mat().  Scaling and
// deferring the reduction does not change the span, so the final canonical
// form is the same, but the intermediate entries stay far smaller.

void EchelonBasis::reduce(std::vector<FieldElem>& row) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        const FieldElem& c = row[lead_[k]];
        if (c.is_zero()) continue;
        const auto& rk = rows_[k];
        FieldElem fac = c * rk[lead_[k]].inv();
        for (size_t j = lead_[k]; j < cols_; ++j)
            if (!rk[j].is_zero()) row[j] -= fac * rk[j];
    }
}

bool EchelonBasis::insert(std::vector<FieldElem> row) {
    require(row.size() == cols_, "DimensionMismatch", "row length mismatch");
    reduce(row);
    size_t lead = cols_;
    for (size_t j = 0; j < cols_; ++j)
        if (!row[j].is_zero()) {
            lead = j;
            break;
        }
    if (lead == cols_) return false;
    row_normalize_content(*f_, row);
    auto pos = std::upper_bound(lead_.begin(), lead_.end(), lead);
    size_t idx = size_t(pos - lead_.begin());
    lead_.insert(pos, lead);
    rows_.insert(rows_.begin() + long(idx), std::move(row));
    return true;
}

bool EchelonBasis::contains(std::vector<FieldElem> row) const {
    require(row.size() == cols_, "DimensionMismatch", "row length mismatch");
    reduce(row);
    for (const auto& e : row)
        if (!e.is_zero()) return false;
    return true;
}

Mat EchelonBasis::to_mat() const {
    Mat m(f_, 0, cols_);
    for (const auto& r : rows_) m.append_row(r);
    if (m.rows() == 0) return m;
    return rref(m).mat;
}

// ---------------------------------------------------------------------------
// negative definiteness

NegDefWitness negdef_or_nonneg_combination(const std::vector<std::vector<Rational>>& G) {
    const size_t n = G.size();
    for (const auto& row : G)
        require(row.size() == n, "NotSymmetric", "Gram matrix is not square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            require(G[i][j] == G[j][i], "NotSymmetric", "Gram matrix is not symmetric");

    auto pair = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
        Rational acc(0);
        for (size_t i = 0; i < n; ++i) {
            if (u[i] == 0) continue;
            Rational dot(0);
            for (size_t j = 0; j < n; ++j)
                if (v[j] != 0) dot += G[i][j] * v[j];
            acc += u[i] * dot;
        }
        return acc;
    };

    std::vector<std::vector<Rational>> res;   // orthogonal residues (coordinates)
    std::vector<Rational> sq;                 // their squares, all negative so far
    for (size_t i = 0; i < n; ++i) {
        std::vector<Rational> v(n, Rational(0));
        v[i] = 1;
        for (size_t k = 0; k < res.size(); ++k) {
            // <e_i, res_k>
            Rational dot(0);
            for (size_t j = 0; j < n; ++j)
                if (res[k][j] != 0) dot += G[i][j] * res[k][j];
            if (dot == 0) continue;
            Rational c = dot / sq[k];
            for (size_t j = 0; j < n; ++j) v[j] -= c * res[k][j];
        }
        Rational q = pair(v, v);
        if (q >= 0) return NegDefWitness{false, std::move(v)};
        res.push_back(std::move(v));
        sq.push_back(std::move(q));
    }
    return NegDefWitness{true, {}};
}

bool is_negative_definite(const std::vector<std::vector<Rational>>& G) {
    if (G.empty()) return true;
    return negdef_or_nonneg_combination(G).negdef;
}

} // namespace planept
