#include "gradecheck/smith.hpp"

#include <stdexcept>

namespace gradecheck {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Int(1);
    return m;
}

namespace {

// Quotient rounded to nearest; keeps intermediate entries small.
Int round_div(const Int& a, const Int& b) {
    Int q, r;
    Int::fdiv_qr(a, b, q, r);
    Int twice = r + r;
    if (b.sign() > 0 ? !(twice < b) : !(twice < -b)) q += Int(1);
    return q;
}

struct Smith {
    IntMatrix C;  // n x m, reduced in place
    IntMatrix E;  // n x n, row ops mirrored here
    std::size_t n, m;

    Smith(const IntMatrix& relations)
        : C(relations.cols, relations.rows), E(IntMatrix::identity(relations.cols)),
          n(relations.cols), m(relations.rows) {
        for (std::size_t i = 0; i < relations.rows; ++i)
            for (std::size_t j = 0; j < relations.cols; ++j) C.at(j, i) = relations.at(i, j);
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < m; ++k) std::swap(C.at(i, k), C.at(j, k));
        for (std::size_t k = 0; k < n; ++k) std::swap(E.at(i, k), E.at(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < n; ++k) std::swap(C.at(k, i), C.at(k, j));
    }
    void row_sub(std::size_t i, const Int& q, std::size_t j) {  // row_i -= q*row_j
        if (q.is_zero()) return;
        for (std::size_t k = 0; k < m; ++k)
            if (!C.at(j, k).is_zero()) C.at(i, k) -= q * C.at(j, k);
        for (std::size_t k = 0; k < n; ++k)
            if (!E.at(j, k).is_zero()) E.at(i, k) -= q * E.at(j, k);
    }
    void col_sub(std::size_t i, const Int& q, std::size_t j) {  // col_i -= q*col_j
        if (q.is_zero()) return;
        for (std::size_t k = 0; k < n; ++k)
            if (!C.at(k, j).is_zero()) C.at(k, i) -= q * C.at(k, j);
    }
    void col_add(std::size_t i, std::size_t j) {  // col_i += col_j
        for (std::size_t k = 0; k < n; ++k) C.at(k, i) += C.at(k, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < m; ++k) C.at(i, k) = -C.at(i, k);
        for (std::size_t k = 0; k < n; ++k) E.at(i, k) = -E.at(i, k);
    }
    // (row_i, row_j) <- (x*row_i + y*row_j, -(b/g)*row_i + (a/g)*row_j)
    void row_pair(std::size_t i, std::size_t j, const Int& x, const Int& y, const Int& bg, const Int& ag) {
        for (std::size_t k = 0; k < m; ++k) {
            Int ri = C.at(i, k), rj = C.at(j, k);
            C.at(i, k) = x * ri + y * rj;
            C.at(j, k) = ag * rj - bg * ri;
        }
        for (std::size_t k = 0; k < n; ++k) {
            Int ri = E.at(i, k), rj = E.at(j, k);
            E.at(i, k) = x * ri + y * rj;
            E.at(j, k) = ag * rj - bg * ri;
        }
    }

    std::size_t diagonalize() {
        std::size_t t = 0;
        while (t < n && t < m) {
            // smallest nonzero entry of the trailing submatrix as pivot
            std::size_t pi = n, pj = m;
            Int best;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < m; ++j) {
                    const Int& v = C.at(i, j);
                    if (v.is_zero()) continue;
                    if (pi == n || v.abs() < best) { best = v.abs(); pi = i; pj = j; }
                }
            if (pi == n) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool clean = false;
            while (!clean) {
                clean = true;
                for (std::size_t i = t + 1; i < n; ++i) {
                    if (C.at(i, t).is_zero()) continue;
                    Int q = round_div(C.at(i, t), C.at(t, t));
                    row_sub(i, q, t);
                    if (!C.at(i, t).is_zero()) { swap_rows(i, t); clean = false; }
                }
                if (!clean) continue;
                for (std::size_t j = t + 1; j < m; ++j) {
                    if (C.at(t, j).is_zero()) continue;
                    Int q = round_div(C.at(t, j), C.at(t, t));
                    col_sub(j, q, t);
                    if (!C.at(t, j).is_zero()) { swap_cols(j, t); clean = false; }
                }
            }
            ++t;
        }
        for (std::size_t i = 0; i < t; ++i)
            if (C.at(i, i).sign() < 0) negate_row(i);
        return t;
    }

    void enforce_divisibility(std::size_t r) {
        for (std::size_t i = 0; i + 1 < r; ++i) {
            for (std::size_t j = i + 1; j < r; ++j) {
                Int a = C.at(i, i), b = C.at(j, j);
                Int rem;
                Int q;
                Int::fdiv_qr(b, a, q, rem);
                if (rem.is_zero()) continue;
                // [a 0; 0 b] -> [g 0; 0 ab/g] with tracked row ops
                col_add(j, i);  // block becomes [a a; 0 b]
                // extended gcd over Int via Euclid
                Int x(1), y(0), x1(0), y1(1), aa = a, bb = b;
                while (!bb.is_zero()) {
                    Int qq, rr;
                    Int::fdiv_qr(aa, bb, qq, rr);
                    Int nx = x - qq * x1, ny = y - qq * y1;
                    aa = bb; bb = rr;
                    x = x1; y = y1; x1 = nx; y1 = ny;
                }
                Int g = aa;  // = x*a + y*b
                Int ag = Int::divexact(a, g), bg = Int::divexact(b, g);
                row_pair(i, j, x, y, bg, ag);
                // block now [x*a, g; -ab/g, 0]; clear with column ops
                col_sub(i, Int::divexact(x * a, g), j);
                swap_cols(i, j);
                if (C.at(j, j).sign() < 0) negate_row(j);
            }
        }
    }
};

}  // namespace

std::vector<Int> CokernelForm::class_of(const std::vector<Int>& x) const {
    if (x.size() != gens) throw std::invalid_argument("cokernel class: wrong length");
    std::vector<Int> y(gens);
    for (std::size_t i = 0; i < gens; ++i) {
        Int s(0);
        for (std::size_t j = 0; j < gens; ++j)
            if (!E.at(i, j).is_zero()) s += E.at(i, j) * x[j];
        y[i] = s;
    }
    for (std::size_t i = 0; i < diag.size(); ++i) {
        Int q, r;
        Int::fdiv_qr(y[i], diag[i], q, r);
        y[i] = r;
    }
    return y;
}

CokernelForm cokernel_presentation(const IntMatrix& relations) {
    Smith s(relations);
    std::size_t r = s.diagonalize();
    s.enforce_divisibility(r);
    CokernelForm out;
    out.gens = relations.cols;
    for (std::size_t i = 0; i < r; ++i) out.diag.push_back(s.C.at(i, i));
    out.E = std::move(s.E);
    return out;
}

std::pair<std::size_t, std::vector<Int>> smith_invariants(const IntMatrix& relations) {
    CokernelForm f = cokernel_presentation(relations);
    std::vector<Int> torsion;
    for (const Int& d : f.diag)
        if (!(d == Int(1))) torsion.push_back(d);
    return {f.gens - f.diag.size(), torsion};
}

namespace {

// Row Hermite reduction of [M | I]; rows whose M-part vanishes give the left
// kernel in the I-part.
struct RowHermite {
    IntMatrix a;      // m-part
    IntMatrix t;      // transform, t * M = a
    std::size_t rows, cols;

    explicit RowHermite(const IntMatrix& m)
        : a(m), t(IntMatrix::identity(m.rows)), rows(m.rows), cols(m.cols) {}

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols; ++k) std::swap(a.at(i, k), a.at(j, k));
        for (std::size_t k = 0; k < rows; ++k) std::swap(t.at(i, k), t.at(j, k));
    }
    void row_sub(std::size_t i, const Int& q, std::size_t j) {
        if (q.is_zero()) return;
        for (std::size_t k = 0; k < cols; ++k)
            if (!a.at(j, k).is_zero()) a.at(i, k) -= q * a.at(j, k);
        for (std::size_t k = 0; k < rows; ++k)
            if (!t.at(j, k).is_zero()) t.at(i, k) -= q * t.at(j, k);
    }

    std::size_t reduce() {
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            while (true) {
                std::size_t best = rows;
                for (std::size_t i = r; i < rows; ++i) {
                    if (a.at(i, c).is_zero()) continue;
                    if (best == rows || a.at(i, c).abs() < a.at(best, c).abs()) best = i;
                }
                if (best == rows) break;
                swap_rows(r, best);
                bool done = true;
                for (std::size_t i = r + 1; i < rows; ++i) {
                    if (a.at(i, c).is_zero()) continue;
                    Int q, rem;
                    Int::fdiv_qr(a.at(i, c), a.at(r, c), q, rem);
                    row_sub(i, q, r);
                    if (!a.at(i, c).is_zero()) done = false;
                }
                if (done) { ++r; break; }
            }
        }
        return r;  // rank of M's row space
    }
};

}  // namespace

IntMatrix int_left_kernel(const IntMatrix& m) {
    RowHermite h(m);
    std::size_t r = h.reduce();
    IntMatrix out(m.rows - r, m.rows);
    std::size_t k = 0;
    for (std::size_t i = 0; i < m.rows; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < m.cols; ++j)
            if (!h.a.at(i, j).is_zero()) { zero = false; break; }
        if (!zero) continue;
        for (std::size_t j = 0; j < m.rows; ++j) out.at(k, j) = h.t.at(i, j);
        ++k;
    }
    if (k != out.rows) throw std::logic_error("left kernel extraction mismatch");
    return out;
}

std::optional<std::vector<Int>> int_solve(const IntMatrix& m, const std::vector<Int>& b) {
    // Solve x^T M^T = b^T by row-reducing M^T with a tracked transform:
    // t * M^T = h; write b as a combination of h's rows, pull back through t.
    IntMatrix mt(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) mt.at(j, i) = m.at(i, j);
    RowHermite h(mt);
    h.reduce();
    std::vector<Int> rem = b, coeff(m.cols);
    for (std::size_t i = 0; i < mt.rows; ++i) {
        // leading column of row i
        std::size_t lead = mt.cols;
        for (std::size_t j = 0; j < mt.cols; ++j)
            if (!h.a.at(i, j).is_zero()) { lead = j; break; }
        if (lead == mt.cols) continue;
        if (rem[lead].is_zero()) continue;
        Int q, r;
        Int::fdiv_qr(rem[lead], h.a.at(i, lead), q, r);
        if (!r.is_zero()) {
            // leading coefficients may not divide; try exact division only
            continue;
        }
        for (std::size_t j = 0; j < mt.cols; ++j) rem[j] -= q * h.a.at(i, j);
        coeff[i] = q;
    }
    for (const Int& v : rem)
        if (!v.is_zero()) return std::nullopt;
    std::vector<Int> x(m.cols);
    for (std::size_t i = 0; i < mt.rows; ++i) {
        if (coeff[i].is_zero()) continue;
        for (std::size_t j = 0; j < mt.rows; ++j) x[j] += coeff[i] * h.t.at(i, j);
    }
    // verify
    for (std::size_t i = 0; i < m.rows; ++i) {
        Int s(0);
        for (std::size_t j = 0; j < m.cols; ++j)
            if (!m.at(i, j).is_zero()) s += m.at(i, j) * x[j];
        if (!(s == b[i])) return std::nullopt;
    }
    return x;
}

}  // namespace gradecheck
