#ifndef PLANEPT_LINALG_HPP
#define PLANEPT_LINALG_HPP

#include <optional>
#include <vector>

#include "planept/field.hpp"

namespace planept {

// dense exact matrix over an arbitrary Field
class Mat {
public:
    Mat() = default;
    Mat(FieldPtr f, size_t rows, size_t cols);

    const Field& field() const { return *f_; }
    const FieldPtr& field_ptr() const { return f_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    FieldElem& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const FieldElem& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    std::vector<FieldElem> row(size_t r) const;
    void set_row(size_t r, const std::vector<FieldElem>& v);
    void append_row(const std::vector<FieldElem>& v);
    void append_rows(const Mat& other);

    static Mat from_rows(FieldPtr f, size_t cols, const std::vector<std::vector<FieldElem>>& rows);

private:
    FieldPtr f_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElem> a_;
};

std::vector<FieldElem> mat_vec(const Mat& A, const std::vector<FieldElem>& v);

struct Rref {
    Mat mat;                     // reduced row echelon form, zero rows dropped
    std::vector<size_t> pivots;  // pivot column per rank row
    size_t rank = 0;
};

// Canonical reduced row echelon form.  Plain rational matrices go through
// fraction-free (Bareiss) elimination on cleared-denominator integers; prime
// fields and extensions use ordinary Gauss-Jordan.  Pivot choice is the
// first nonzero entry in column order, so the result is deterministic (and
// RREF is unique anyway).
Rref rref(const Mat& A);
size_t rank(const Mat& A);

// canonical basis of the right kernel (rows of the result); 0 x cols when trivial
Mat kernel_basis(const Mat& A);

// one solution of A x = b with free variables set to zero, or nullopt
std::optional<std::vector<FieldElem>> solve(const Mat& A, const std::vector<FieldElem>& b);

// every row of U lies in the row space of V
bool subspace_leq(const Mat& U, const Mat& V);

// Incremental echelon accumulator.  Internally the rows stay in raw echelon
// form with small entries; to_mat() reduces once and returns the canonical
// reduced form of the span, independent of insertion order.
class EchelonBasis {
public:
    EchelonBasis(FieldPtr f, size_t cols) : f_(std::move(f)), cols_(cols) {}

    // true when the row enlarged the span
    bool insert(std::vector<FieldElem> row);
    bool contains(std::vector<FieldElem> row) const;
    size_t dim() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    Mat to_mat() const;

private:
    void reduce(std::vector<FieldElem>& row) const;

    FieldPtr f_;
    size_t cols_;
    std::vector<std::vector<FieldElem>> rows_;  // echelon, content-normalized
    std::vector<size_t> lead_;                  // strictly increasing
};

// Negative definiteness of a symmetric rational matrix, by Gram-Schmidt
// orthogonalization without normalization: the form is negative definite
// exactly when every orthogonalized residue has negative square.
// errors: NotSymmetric
bool is_negative_definite(const std::vector<std::vector<Rational>>& G);

// Same computation, but when the matrix is not negative definite and all
// off-diagonal entries are nonnegative, also returns a nonzero nonnegative
// combination whose pairing with every basis vector is nonnegative (the
// "nef certificate" used by the decomposition loop).
struct NegDefWitness {
    bool negdef = false;
    std::vector<Rational> combination;  // empty when negdef
};
NegDefWitness negdef_or_nonneg_combination(const std::vector<std::vector<Rational>>& G);

} // namespace planept

#endif
