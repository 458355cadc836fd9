#include "gradecheck/algebra.hpp"

#include <algorithm>
#include <deque>

#include "gradecheck/modular.hpp"

namespace gradecheck {

std::string format_vec(const Algebra& a, const Vec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (!v[i].is_one()) s += "(" + v[i].str() + ")*";
        s += a.labels()[i];
    }
    return s.empty() ? "0" : s;
}

Vec Algebra::basis_vec(size_t i) const {
    Vec v(dim_);
    v[i] = Scalar(1);
    return v;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw std::invalid_argument("multiply: vector length mismatch");
    Vec out(dim_);
    for (size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (const auto& [k, v] : prod(i, j).ent) out[k] += c * v;
        }
    }
    return out;
}

Vec Algebra::conj(const Vec& x) const {
    if (!involution_) throw std::invalid_argument(name_ + ": no involution");
    return involution_->apply(x);
}

SpMat Algebra::left_mult(const Vec& x) const {
    SpMat m(dim_);
    for (size_t w = 0; w < dim_; ++w) {
        Vec row(dim_);
        for (size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (const auto& [k, v] : prod(i, w).ent) row[k] += x[i] * v;
        }
        m.rows[w] = SparseRow::from_dense(row);
    }
    return m;
}

SpMat Algebra::right_mult(const Vec& x) const {
    SpMat m(dim_);
    for (size_t w = 0; w < dim_; ++w) {
        Vec row(dim_);
        for (size_t j = 0; j < dim_; ++j) {
            if (x[j].is_zero()) continue;
            for (const auto& [k, v] : prod(w, j).ent) row[k] += x[j] * v;
        }
        m.rows[w] = SparseRow::from_dense(row);
    }
    return m;
}

namespace {

// Solves for a two-sided unit; nullopt when the algebra is not unital.
std::optional<Vec> solve_unit(size_t dim, const std::vector<SparseRow>& structure) {
    EchelonBasis eqs(dim + 1);
    for (size_t j = 0; j < dim; ++j) {
        for (size_t k = 0; k < dim; ++k) {
            Vec left(dim + 1), right(dim + 1);
            bool lnz = false, rnz = false;
            for (size_t i = 0; i < dim; ++i) {
                for (const auto& [kk, v] : structure[i * dim + j].ent)
                    if ((size_t)kk == k) { left[i] = v; lnz = true; }
                for (const auto& [kk, v] : structure[j * dim + i].ent)
                    if ((size_t)kk == k) { right[i] = v; rnz = true; }
            }
            if (j == k) {
                left[dim] = Scalar(-1);
                right[dim] = Scalar(-1);
                lnz = rnz = true;
            }
            if (lnz) eqs.insert(std::move(left));
            if (rnz) eqs.insert(std::move(right));
        }
    }
    // System rows are [A | -b] with A u^T = b; a pivot in the last column
    // means inconsistency.
    Matrix sys = eqs.to_matrix();
    Vec u(dim);
    for (size_t r = 0; r < sys.rows(); ++r) {
        int pivot = -1;
        for (size_t j = 0; j <= dim; ++j)
            if (!sys.at(r, j).is_zero()) { pivot = (int)j; break; }
        if (pivot == (int)dim) return std::nullopt;
        if (pivot >= 0) u[pivot] = -sys.at(r, dim);
    }
    return u;
}

}  // namespace

std::shared_ptr<const Algebra> Algebra::create(std::string name, size_t dim,
                                               std::vector<std::string> labels,
                                               std::vector<SparseRow> structure,
                                               std::optional<Matrix> involution,
                                               std::optional<Vec> unit, AlgebraOptions opt) {
    if (dim == 0) throw std::invalid_argument("algebra dimension must be positive");
    if (labels.size() != dim) throw std::invalid_argument("label count must equal dim");
    if (structure.size() != dim * dim) throw std::invalid_argument("structure table must be dim^2");
    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->name_ = std::move(name);
    a->dim_ = dim;
    a->labels_ = std::move(labels);
    a->structure_ = std::move(structure);
    a->involution_ = std::move(involution);
    a->unit_ = unit ? std::move(unit) : solve_unit(dim, a->structure_);
    if (opt.validate) {
        if (a->unit_) {
            const Vec& u = *a->unit_;
            for (size_t j = 0; j < dim; ++j) {
                Vec bj = a->basis_vec(j);
                if (a->multiply(u, bj) != bj || a->multiply(bj, u) != bj)
                    throw std::invalid_argument(a->name_ + ": unit axiom fails on basis " +
                                                a->labels_[j]);
            }
        }
        if (a->involution_) {
            const Matrix& s = *a->involution_;
            if (s.rows() != dim || s.cols() != dim)
                throw std::invalid_argument(a->name_ + ": involution shape mismatch");
            if (!((s * s) == Matrix::identity(dim)))
                throw std::invalid_argument(a->name_ + ": involution does not square to identity");
            for (size_t i = 0; i < dim; ++i)
                for (size_t j = 0; j < dim; ++j) {
                    Vec lhs = a->conj(a->multiply(a->basis_vec(i), a->basis_vec(j)));
                    Vec rhs = a->multiply(a->conj(a->basis_vec(j)), a->conj(a->basis_vec(i)));
                    if (lhs != rhs)
                        throw std::invalid_argument(a->name_ +
                                                    ": involution does not reverse products at (" +
                                                    a->labels_[i] + ", " + a->labels_[j] + ")");
                }
        }
    }
    return a;
}

std::shared_ptr<const Algebra> Algebra::rebased(const Matrix& h, std::string new_name,
                                                std::vector<std::string> new_labels) const {
    auto hinv = h.inverse();
    if (!hinv) throw std::invalid_argument("rebase: basis matrix is singular");
    std::vector<SparseRow> structure(dim_ * dim_);
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) {
            Vec p = multiply(h.row(i), h.row(j));
            structure[i * dim_ + j] = SparseRow::from_dense(hinv->apply(p));
        }
    std::optional<Matrix> inv;
    if (involution_) inv = h * (*involution_) * (*hinv);
    std::optional<Vec> unit;
    if (unit_) unit = hinv->apply(*unit_);
    if (new_labels.empty())
        for (size_t i = 0; i < dim_; ++i) new_labels.push_back("h" + std::to_string(i));
    return create(std::move(new_name), dim_, std::move(new_labels), std::move(structure),
                  std::move(inv), std::move(unit));
}

SpMat t_operator_matrix(const Algebra& a, const Vec& x) {
    // T_x(z) = xz + zx - z*conj(x)
    return a.left_mult(x) + a.right_mult(x) - a.right_mult(a.conj(x));
}

namespace {

// out += (u * v) in the algebra, with u, v dense.
void mult_acc(const Algebra& a, const Vec& u, const Vec& v, Vec& out, bool negate = false) {
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (size_t j = 0; j < v.size(); ++j) {
            if (v[j].is_zero()) continue;
            Scalar c = u[i] * v[j];
            if (negate) c = -c;
            for (const auto& [k, val] : a.prod(i, j).ent) out[k] += c * val;
        }
    }
}

// Full operator matrix of V_{x,y}: w -> (x conj(y))w + (w conj(y))x - (w conj(x))y.
SpMat v_full(const Algebra& a, const Vec& x, const Vec& y, const Vec& cx, const Vec& cy) {
    size_t n = a.dim();
    Vec xcy = a.multiply(x, cy);
    SpMat m(n);
    Vec row(n), wcy(n), wcx(n);
    for (size_t w = 0; w < n; ++w) {
        std::fill(row.begin(), row.end(), Scalar());
        std::fill(wcy.begin(), wcy.end(), Scalar());
        std::fill(wcx.begin(), wcx.end(), Scalar());
        for (size_t i = 0; i < n; ++i) {
            if (xcy[i].is_zero()) continue;
            for (const auto& [k, v] : a.prod(i, w).ent) row[k] += xcy[i] * v;
        }
        for (size_t j = 0; j < n; ++j) {
            if (!cy[j].is_zero())
                for (const auto& [k, v] : a.prod(w, j).ent) wcy[k] += cy[j] * v;
            if (!cx[j].is_zero())
                for (const auto& [k, v] : a.prod(w, j).ent) wcx[k] += cx[j] * v;
        }
        mult_acc(a, wcy, x, row);
        mult_acc(a, wcx, y, row, /*negate=*/true);
        m.rows[w] = SparseRow::from_dense(row);
    }
    return m;
}

}  // namespace

SpMat v_operator_matrix(const Algebra& a, const Vec& x, const Vec& y) {
    return v_full(a, x, y, a.conj(x), a.conj(y));
}

Report check_structurable(const Algebra& a) {
    Stopwatch sw;
    if (!a.has_unit() || !a.has_involution())
        throw std::invalid_argument("check_structurable requires a unital algebra with involution");
    size_t n = a.dim();
    std::vector<Vec> cb(n);
    for (size_t i = 0; i < n; ++i) cb[i] = a.conj(a.basis_vec(i));
    std::vector<SpMat> tz(n), tzbar(n);
    for (size_t z = 0; z < n; ++z) {
        tz[z] = t_operator_matrix(a, a.basis_vec(z));
        tzbar[z] = t_operator_matrix(a, cb[z]);
    }
    size_t checks = 0;
    for (size_t x = 0; x < n; ++x) {
        Vec bx = a.basis_vec(x);
        for (size_t y = 0; y < n; ++y) {
            Vec by = a.basis_vec(y);
            SpMat vxy = v_full(a, bx, by, cb[x], cb[y]);
            for (size_t z = 0; z < n; ++z) {
                // operators compose left-to-right: T_z(V(w)) is V * T_z
                SpMat lhs = vxy * tz[z] - tz[z] * vxy;
                Vec tzx = tz[z].rows[x].to_dense(n);
                Vec tzby = tzbar[z].rows[y].to_dense(n);
                SpMat rhs = v_full(a, tzx, by, a.conj(tzx), cb[y]) -
                            v_full(a, bx, tzby, cb[x], a.conj(tzby));
                ++checks;
                if (!(lhs - rhs).is_zero())
                    return Report::fail(checks,
                                        {"(x, y, z) = (" + a.labels()[x] + ", " + a.labels()[y] +
                                             ", " + a.labels()[z] + ")",
                                         "[T_z, V_{x,y}] = V_{T_z x, y} - V_{x, T_conj(z) y}",
                                         "operator mismatch"},
                                        sw.ms());
            }
        }
    }
    return Report::pass(checks, sw.ms());
}

Subspace generalized_alt_nucleus(const AlgebraPtr& a) {
    size_t n = a->dim();
    // kernel shrink over constraints a*(M) = 0 for the two associator
    // conditions, pair by pair
    Matrix K = Matrix::identity(n);
    for (size_t x = 0; x < n && K.rows() > 0; ++x) {
        Vec bx = a->basis_vec(x);
        SpMat lx = a->left_mult(bx), rx = a->right_mult(bx);
        for (size_t y = 0; y < n && K.rows() > 0; ++y) {
            Vec by = a->basis_vec(y);
            SpMat ly = a->left_mult(by), ry = a->right_mult(by);
            Vec xy = a->multiply(bx, by);
            SpMat lxy = a->left_mult(xy), rxy = a->right_mult(xy);
            // (a,x,y) = a*(R_x R_y - R_xy); (x,a,y) = a*(L_x R_y - R_y L_x)
            // (x,y,a) = a*(L_xy - L_y L_x)
            SpMat assoc_right = rx * ry - rxy;
            SpMat assoc_mid = lx * ry - ry * lx;
            SpMat assoc_left = lxy - ly * lx;
            for (const SpMat& cond : {assoc_right + assoc_mid, assoc_mid + assoc_left}) {
                Matrix km(K.rows(), n);
                bool nonzero = false;
                for (size_t r = 0; r < K.rows(); ++r) {
                    Vec img = cond.apply(K.row(r));
                    for (size_t j = 0; j < n; ++j) {
                        if (!img[j].is_zero()) nonzero = true;
                        km.at(r, j) = img[j];
                    }
                }
                if (!nonzero) continue;
                Matrix null = km.transpose().kernel();  // rows c with c*km = 0
                Matrix K2(null.rows(), n);
                for (size_t r = 0; r < null.rows(); ++r) {
                    Vec v(n);
                    for (size_t s = 0; s < K.rows(); ++s)
                        if (!null.at(r, s).is_zero()) add_scaled(v, K.row(s), null.at(r, s));
                    K2.set_row(r, v);
                }
                K = std::move(K2);
                if (K.rows() == 0) break;
            }
        }
    }
    return Subspace{a, row_space(K)};
}

// Streams the sparse rows of the linear system D(b_i b_j) = D(b_i) b_j +
// b_i D(b_j); unknown (r, c) [entry c of D(b_r)] has flat index r*dim + c.
template <typename Emit>
static void for_each_derivation_constraint(const Algebra& a, Emit&& emit) {
    size_t n = a.dim();
    std::vector<std::vector<std::pair<int, Scalar>>> rows(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            for (auto& r : rows) r.clear();
            for (const auto& [k, c] : a.prod(i, j).ent)
                for (size_t m = 0; m < n; ++m) rows[m].emplace_back((int)(k * n + m), c);
            for (size_t k = 0; k < n; ++k) {
                for (const auto& [m, c] : a.prod(k, j).ent)
                    rows[m].emplace_back((int)(i * n + k), -c);
                for (const auto& [m, c] : a.prod(i, k).ent)
                    rows[m].emplace_back((int)(j * n + k), -c);
            }
            for (size_t m = 0; m < n; ++m) {
                if (rows[m].empty()) continue;
                std::sort(rows[m].begin(), rows[m].end(),
                          [](const auto& p, const auto& q) { return p.first < q.first; });
                // merge duplicates
                std::vector<std::pair<int, Scalar>> merged;
                for (const auto& [idx, c] : rows[m]) {
                    if (!merged.empty() && merged.back().first == idx)
                        merged.back().second += c;
                    else
                        merged.emplace_back(idx, c);
                }
                std::erase_if(merged, [](const auto& p) { return p.second.is_zero(); });
                if (!merged.empty()) emit(merged);
            }
        }
    }
}

Subspace derivation_algebra(const AlgebraPtr& a) {
    size_t n = a->dim();
    size_t unknowns = n * n;
    std::vector<Vec> rows;
    for_each_derivation_constraint(*a, [&](const std::vector<std::pair<int, Scalar>>& r) {
        Vec v(unknowns);
        for (const auto& [idx, c] : r) v[idx] = c;
        rows.push_back(std::move(v));
    });
    Matrix sys = Matrix::from_rows(rows, unknowns);
    Matrix K = sys.kernel();  // rows: flattened derivation matrices
    return Subspace{a, row_space(K)};
}

size_t derivation_dimension(const Algebra& a, std::uint64_t p1, std::uint64_t p2,
                            std::uint64_t seed) {
    size_t n = a.dim();
    size_t unknowns = n * n;
    size_t result = 0;
    bool first = true;
    int which = 0;
    for (std::uint64_t p : {p1, p2}) {
        MontCtx ctx = MontCtx::make(p);
        SketchRank sk(unknowns, unknowns + 64, seed + 1000003 * (++which), ctx);
        std::vector<std::pair<int, std::uint32_t>> row;
        for_each_derivation_constraint(a, [&](const std::vector<std::pair<int, Scalar>>& r) {
            row.clear();
            for (const auto& [idx, c] : r) {
                std::uint32_t res = residue_mont(c, ctx);
                if (res) row.emplace_back(idx, res);
            }
            if (!row.empty()) sk.add_row(row);
        });
        size_t dim = unknowns - sk.rank();
        if (first) {
            result = dim;
            first = false;
        } else if (dim != result) {
            throw std::runtime_error("derivation dimension: modular results disagree (" +
                                     std::to_string(result) + " vs " + std::to_string(dim) + ")");
        }
    }
    return result;
}

Subspace ideal_closure(const AlgebraPtr& a, const Matrix& seed) {
    size_t n = a->dim();
    EchelonBasis basis(n);
    std::deque<Vec> work;
    for (size_t r = 0; r < seed.rows(); ++r) {
        Vec v = seed.row(r);
        if (basis.insert(v)) work.push_back(std::move(v));
    }
    while (!work.empty()) {
        Vec v = std::move(work.front());
        work.pop_front();
        for (size_t i = 0; i < n; ++i) {
            Vec bi = a->basis_vec(i);
            for (Vec w : {a->multiply(bi, v), a->multiply(v, bi)}) {
                if (basis.insert(w)) work.push_back(std::move(w));
            }
        }
    }
    return Subspace{a, basis.to_matrix()};
}

std::pair<Subspace, Subspace> split_involution(const AlgebraPtr& a) {
    if (!a->has_involution()) throw std::invalid_argument("split_involution: no involution");
    size_t n = a->dim();
    Matrix s = a->involution();
    // row convention: sigma(x) = x*S, so x skew iff (S + I)^T x^T = 0
    Matrix skew_sys = (s + Matrix::identity(n)).transpose();
    Matrix herm_sys = (s - Matrix::identity(n)).transpose();
    Subspace skew{a, row_space(skew_sys.kernel())};
    Subspace herm{a, row_space(herm_sys.kernel())};
    if (skew.dim() + herm.dim() != n)
        throw std::logic_error("involution eigenspaces do not fill the algebra");
    return {std::move(skew), std::move(herm)};
}

Report check_alternative(const Algebra& a) {
    Stopwatch sw;
    size_t n = a.dim();
    size_t checks = 0;
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            Vec xy = a.multiply(a.basis_vec(x), a.basis_vec(y));
            Vec yx = a.multiply(a.basis_vec(y), a.basis_vec(x));
            for (size_t z = 0; z < n; ++z) {
                Vec bz = a.basis_vec(z);
                Vec assoc_xyz = sub(a.multiply(xy, bz),
                                    a.multiply(a.basis_vec(x), a.multiply(a.basis_vec(y), bz)));
                Vec assoc_yxz = sub(a.multiply(yx, bz),
                                    a.multiply(a.basis_vec(y), a.multiply(a.basis_vec(x), bz)));
                Vec xz = a.multiply(a.basis_vec(x), bz);
                Vec assoc_xzy = sub(a.multiply(xz, a.basis_vec(y)),
                                    a.multiply(a.basis_vec(x), a.multiply(bz, a.basis_vec(y))));
                ++checks;
                if (!is_zero_vec(add(assoc_xyz, assoc_yxz)) ||
                    !is_zero_vec(add(assoc_xyz, assoc_xzy)))
                    return Report::fail(checks,
                                        {"(x, y, z) = (" + a.labels()[x] + ", " + a.labels()[y] +
                                             ", " + a.labels()[z] + ")",
                                         "alternativity (polarized)", "nonzero associator"},
                                        sw.ms());
            }
        }
    return Report::pass(checks, sw.ms());
}

}  // namespace gradecheck
