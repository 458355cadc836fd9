#pragma once

#include <optional>
#include <vector>

#include "gradecheck/scalar.hpp"

namespace gradecheck {

// Coordinate row over Q(i).
using Vec = std::vector<Scalar>;

// Sorted (index, value) pairs; all stored values nonzero.
struct SparseRow {
    std::vector<std::pair<int, Scalar>> ent;

    void add(int idx, const Scalar& v);  // keeps sorted, drops zeros
    bool empty() const { return ent.empty(); }
    Vec to_dense(size_t n) const;
    static SparseRow from_dense(const Vec& v);
};

Vec zero_vec(size_t n);
bool is_zero_vec(const Vec& v);
void add_scaled(Vec& dst, const Vec& src, const Scalar& c);
Vec scaled(const Vec& v, const Scalar& c);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Scalar dot(const Vec& a, const Vec& b);

// Dense matrix, row major. Rows are coordinate rows; linear maps act on the
// right (y = x * M), so row i of an operator matrix is the image of the
// i-th basis vector.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static Matrix identity(size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, size_t cols);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    Scalar& at(size_t i, size_t j) { return a_[i * c_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return a_[i * c_ + j]; }
    Vec row(size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
    void set_row(size_t i, const Vec& v);

    friend Matrix operator*(const Matrix& A, const Matrix& B);
    friend Matrix operator+(const Matrix& A, const Matrix& B);
    friend Matrix operator-(const Matrix& A, const Matrix& B);
    Matrix scaled_by(const Scalar& c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool is_zero() const;

    // Apply to a row vector: returns x * M.
    Vec apply(const Vec& x) const;

    // In-place reduced row echelon form; returns pivot column per produced
    // row. Deterministic, rows end up sorted by pivot.
    std::vector<int> rref();
    size_t rank() const;
    // Basis of {x : M x^T = 0} as rows, canonical (from RREF free columns).
    Matrix kernel() const;
    std::optional<Matrix> inverse() const;

private:
    size_t r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

// Incremental reduced row echelon basis of a subspace of F^n. Rows are kept
// sparse and fully reduced (leading coefficient 1, pivot columns cleared in
// the other rows), so the row set is the canonical RREF basis of the span.
class EchelonBasis {
public:
    explicit EchelonBasis(size_t ambient) : n_(ambient), pivot_row_(ambient, -1) {}

    size_t ambient() const { return n_; }
    size_t dim() const { return rows_.size(); }

    // Reduces v in place against the basis. If record is non-null, appends
    // (row index, coefficient) pairs such that original = sum coeff*row + v.
    void reduce(Vec& v, std::vector<std::pair<int, Scalar>>* record = nullptr) const;

    // Inserts the reduction of v; returns true if the dimension grew.
    bool insert(Vec v);

    bool contains(Vec v) const { reduce(v); return is_zero_vec(v); }

    // Coefficients of v over the basis rows; nullopt if v is not in the span.
    std::optional<Vec> coordinates(Vec v) const;

    // Canonical matrix: rows sorted by pivot column.
    Matrix to_matrix() const;
    // Rows in insertion order; this is the order coordinates() refers to.
    Matrix to_matrix_insertion_order() const;
    const std::vector<SparseRow>& raw_rows() const { return rows_; }

private:
    size_t n_;
    std::vector<SparseRow> rows_;       // insertion order
    std::vector<int> pivot_of_rows_;    // pivot column of each row
    std::vector<int> pivot_row_;        // column -> row index or -1
};

// Canonical RREF matrix spanning the same row space.
Matrix row_space(const Matrix& m);
// Intersection of two row spaces, canonical RREF rows.
Matrix intersect_row_spaces(const Matrix& u, const Matrix& v);

// Square sparse operator matrix with the same row convention as Matrix
// (row i = image of basis vector i). Products compose left-to-right:
// (a * b) means apply a, then b.
struct SpMat {
    size_t n = 0;
    std::vector<SparseRow> rows;

    SpMat() = default;
    explicit SpMat(size_t dim) : n(dim), rows(dim) {}

    Vec apply(const Vec& x) const;
    friend SpMat operator*(const SpMat& a, const SpMat& b);
    friend SpMat operator+(const SpMat& a, const SpMat& b);
    friend SpMat operator-(const SpMat& a, const SpMat& b);
    bool is_zero() const;
    Matrix to_dense() const;
    Vec to_flat() const;  // row-major n*n vector
};

}  // namespace gradecheck
