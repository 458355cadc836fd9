#include "gradecheck/matrix.hpp"

#include <algorithm>

namespace gradecheck {

void SparseRow::add(int idx, const Scalar& v) {
    if (v.is_zero()) return;
    auto it = std::lower_bound(ent.begin(), ent.end(), idx,
                               [](const auto& p, int i) { return p.first < i; });
    if (it != ent.end() && it->first == idx) {
        it->second += v;
        if (it->second.is_zero()) ent.erase(it);
    } else {
        ent.insert(it, {idx, v});
    }
}

Vec SparseRow::to_dense(size_t n) const {
    Vec v(n);
    for (const auto& [i, c] : ent) v[i] = c;
    return v;
}

SparseRow SparseRow::from_dense(const Vec& v) {
    SparseRow r;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r.ent.emplace_back((int)i, v[i]);
    return r;
}

Vec zero_vec(size_t n) { return Vec(n); }

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

void add_scaled(Vec& dst, const Vec& src, const Scalar& c) {
    if (c.is_zero()) return;
    for (size_t i = 0; i < dst.size(); ++i)
        if (!src[i].is_zero()) dst[i] += c * src[i];
}

Vec scaled(const Vec& v, const Scalar& c) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r[i] = v[i] * c;
    return r;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Scalar dot(const Vec& a, const Vec& b) {
    Scalar s;
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, size_t cols) {
    Matrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

void Matrix::set_row(size_t i, const Vec& v) {
    for (size_t j = 0; j < c_; ++j) at(i, j) = v[j];
}

Matrix operator*(const Matrix& A, const Matrix& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("matrix product shape mismatch");
    Matrix C(A.rows(), B.cols());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t k = 0; k < A.cols(); ++k) {
            const Scalar& a = A.at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < B.cols(); ++j)
                if (!B.at(k, j).is_zero()) C.at(i, j) += a * B.at(k, j);
        }
    return C;
}

Matrix operator+(const Matrix& A, const Matrix& B) {
    Matrix C(A.rows(), A.cols());
    for (size_t i = 0; i < A.a_.size(); ++i) C.a_[i] = A.a_[i] + B.a_[i];
    return C;
}

Matrix operator-(const Matrix& A, const Matrix& B) {
    Matrix C(A.rows(), A.cols());
    for (size_t i = 0; i < A.a_.size(); ++i) C.a_[i] = A.a_[i] - B.a_[i];
    return C;
}

Matrix Matrix::scaled_by(const Scalar& c) const {
    Matrix C(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) C.a_[i] = a_[i] * c;
    return C;
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != r_) throw std::invalid_argument("matrix apply shape mismatch");
    Vec y(c_);
    for (size_t i = 0; i < r_; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < c_; ++j)
            if (!at(i, j).is_zero()) y[j] += x[i] * at(i, j);
    }
    return y;
}

std::vector<int> Matrix::rref() {
    std::vector<int> pivots;
    size_t lead = 0;
    for (size_t col = 0; col < c_ && lead < r_; ++col) {
        size_t piv = lead;
        while (piv < r_ && at(piv, col).is_zero()) ++piv;
        if (piv == r_) continue;
        if (piv != lead)
            for (size_t j = 0; j < c_; ++j) std::swap(at(piv, j), at(lead, j));
        Scalar inv = at(lead, col).inv();
        for (size_t j = col; j < c_; ++j)
            if (!at(lead, j).is_zero()) at(lead, j) *= inv;
        for (size_t i = 0; i < r_; ++i) {
            if (i == lead) continue;
            Scalar f = at(i, col);
            if (f.is_zero()) continue;
            for (size_t j = col; j < c_; ++j)
                if (!at(lead, j).is_zero()) at(i, j) -= f * at(lead, j);
        }
        pivots.push_back((int)col);
        ++lead;
    }
    return pivots;
}

size_t Matrix::rank() const {
    Matrix tmp(*this);
    return tmp.rref().size();
}

Matrix Matrix::kernel() const {
    Matrix tmp(*this);
    std::vector<int> pivots = tmp.rref();
    std::vector<bool> is_pivot(c_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (size_t j = 0; j < c_; ++j)
        if (!is_pivot[j]) free_cols.push_back((int)j);
    Matrix K(free_cols.size(), c_);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        K.at(k, fc) = Scalar(1);
        for (size_t i = 0; i < pivots.size(); ++i)
            K.at(k, pivots[i]) = -tmp.at(i, fc);
    }
    return K;
}

std::optional<Matrix> Matrix::inverse() const {
    if (r_ != c_) return std::nullopt;
    Matrix aug(r_, 2 * c_);
    for (size_t i = 0; i < r_; ++i) {
        for (size_t j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, c_ + i) = Scalar(1);
    }
    auto piv = aug.rref();
    if (piv.size() != r_ || piv.back() >= (int)c_) return std::nullopt;
    Matrix inv(r_, c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) inv.at(i, j) = aug.at(i, c_ + j);
    return inv;
}

void EchelonBasis::reduce(Vec& v, std::vector<std::pair<int, Scalar>>* record) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        int p = pivot_of_rows_[r];
        const Scalar& c = v[p];
        if (c.is_zero()) continue;
        Scalar coeff = c;  // pivot entries are 1
        if (record) record->emplace_back((int)r, coeff);
        for (const auto& [j, val] : rows_[r].ent) v[j] -= coeff * val;
    }
}

bool EchelonBasis::insert(Vec v) {
    reduce(v);
    int pivot = -1;
    for (size_t j = 0; j < n_; ++j)
        if (!v[j].is_zero()) { pivot = (int)j; break; }
    if (pivot < 0) return false;
    Scalar inv = v[pivot].inv();
    for (size_t j = pivot; j < n_; ++j)
        if (!v[j].is_zero()) v[j] *= inv;
    SparseRow nr = SparseRow::from_dense(v);
    // clear the new pivot column in the existing rows to stay fully reduced
    for (size_t r = 0; r < rows_.size(); ++r) {
        Scalar c;
        bool hit = false;
        for (const auto& [j, val] : rows_[r].ent)
            if (j == pivot) { c = val; hit = true; break; }
        if (!hit) continue;
        SparseRow updated;
        Vec tmp = rows_[r].to_dense(n_);
        for (const auto& [j, val] : nr.ent) tmp[j] -= c * val;
        rows_[r] = SparseRow::from_dense(tmp);
    }
    pivot_row_[pivot] = (int)rows_.size();
    rows_.push_back(std::move(nr));
    pivot_of_rows_.push_back(pivot);
    return true;
}

std::optional<Vec> EchelonBasis::coordinates(Vec v) const {
    std::vector<std::pair<int, Scalar>> rec;
    reduce(v, &rec);
    if (!is_zero_vec(v)) return std::nullopt;
    Vec c(rows_.size());
    for (const auto& [r, coeff] : rec) c[r] += coeff;
    return c;
}

Matrix EchelonBasis::to_matrix() const {
    std::vector<size_t> order(rows_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return pivot_of_rows_[a] < pivot_of_rows_[b]; });
    Matrix m(rows_.size(), n_);
    for (size_t i = 0; i < order.size(); ++i)
        for (const auto& [j, val] : rows_[order[i]].ent) m.at(i, j) = val;
    return m;
}

Matrix EchelonBasis::to_matrix_insertion_order() const {
    Matrix m(rows_.size(), n_);
    for (size_t i = 0; i < rows_.size(); ++i)
        for (const auto& [j, val] : rows_[i].ent) m.at(i, j) = val;
    return m;
}

Matrix row_space(const Matrix& m) {
    Matrix tmp(m);
    size_t rank = tmp.rref().size();
    Matrix out(rank, m.cols());
    for (size_t i = 0; i < rank; ++i)
        for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = tmp.at(i, j);
    return out;
}

Vec SpMat::apply(const Vec& x) const {
    Vec y(n);
    for (size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (const auto& [j, v] : rows[i].ent) y[j] += x[i] * v;
    }
    return y;
}

SpMat operator*(const SpMat& a, const SpMat& b) {
    SpMat c(a.n);
    Vec buf(a.n);
    for (size_t i = 0; i < a.n; ++i) {
        bool used = false;
        for (const auto& [k, av] : a.rows[i].ent) {
            for (const auto& [j, bv] : b.rows[k].ent) {
                buf[j] += av * bv;
                used = true;
            }
        }
        if (used) {
            c.rows[i] = SparseRow::from_dense(buf);
            for (auto& s : buf) s = Scalar();
        }
    }
    return c;
}

SpMat operator+(const SpMat& a, const SpMat& b) {
    SpMat c(a.n);
    for (size_t i = 0; i < a.n; ++i) {
        c.rows[i] = a.rows[i];
        for (const auto& [j, v] : b.rows[i].ent) c.rows[i].add(j, v);
    }
    return c;
}

SpMat operator-(const SpMat& a, const SpMat& b) {
    SpMat c(a.n);
    for (size_t i = 0; i < a.n; ++i) {
        c.rows[i] = a.rows[i];
        for (const auto& [j, v] : b.rows[i].ent) c.rows[i].add(j, -v);
    }
    return c;
}

bool SpMat::is_zero() const {
    for (const auto& r : rows)
        if (!r.empty()) return false;
    return true;
}

Matrix SpMat::to_dense() const {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (const auto& [j, v] : rows[i].ent) m.at(i, j) = v;
    return m;
}

Vec SpMat::to_flat() const {
    Vec v(n * n);
    for (size_t i = 0; i < n; ++i)
        for (const auto& [j, val] : rows[i].ent) v[i * n + j] = val;
    return v;
}

Matrix intersect_row_spaces(const Matrix& u, const Matrix& v) {
    // x in both spans iff x = a*U = b*V; solve [U^T | -V^T] (a;b)^T = 0.
    size_t n = u.cols();
    Matrix sys(n, u.rows() + v.rows());
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < u.rows(); ++i) sys.at(j, i) = u.at(i, j);
        for (size_t i = 0; i < v.rows(); ++i) sys.at(j, u.rows() + i) = -v.at(i, j);
    }
    Matrix K = sys.kernel();
    EchelonBasis basis(n);
    for (size_t r = 0; r < K.rows(); ++r) {
        Vec x(n);
        for (size_t i = 0; i < u.rows(); ++i)
            if (!K.at(r, i).is_zero()) add_scaled(x, u.row(i), K.at(r, i));
        basis.insert(std::move(x));
    }
    return basis.to_matrix();
}

}  // namespace gradecheck
