#include "gradecheck/smirnov.hpp"

#include <algorithm>

namespace gradecheck {

size_t SmirnovModel::sym_index(size_t i, size_t j) {
    if (i > j) std::swap(i, j);
    return 7 + i * (13 - i) / 2 + j;
}

namespace {

constexpr size_t kSkew = 7, kDim = 35;

// adds a (x) b into the symmetric-square coordinates (positions 7..34)
void sym_acc(Vec& out, const Vec& a7, const Vec& b7, const Scalar& c) {
    if (c.is_zero()) return;
    for (size_t i = 0; i < kSkew; ++i) {
        if (a7[i].is_zero()) continue;
        for (size_t j = 0; j < kSkew; ++j) {
            if (b7[j].is_zero()) continue;
            out[SmirnovModel::sym_index(i, j)] += c * a7[i] * b7[j];
        }
    }
}

void skew_acc(Vec& out, const Vec& a7, const Scalar& c) {
    for (size_t i = 0; i < kSkew; ++i)
        if (!a7[i].is_zero()) out[i] += c * a7[i];
}

}  // namespace

SmirnovModel build_smirnov(const AlgebraPtr& cayley, const QuadraticForm& n,
                           const Scalar& sym_sq_coeff) {
    if (cayley->dim() != 8)
        throw std::invalid_argument("Smirnov construction needs an 8-dimensional input");
    auto [skew, herm] = split_involution(cayley);
    if (skew.dim() != kSkew) throw std::invalid_argument("skew part must be 7-dimensional");
    Matrix sb = skew.basis;
    EchelonBasis skew_eb(8);
    for (size_t r = 0; r < kSkew; ++r) skew_eb.insert(sb.row(r));

    // commutators [s_i, s_j] in skew coordinates, and the norm Gram on S
    std::vector<std::vector<Vec>> br(kSkew, std::vector<Vec>(kSkew));
    Matrix gram(kSkew, kSkew);
    for (size_t i = 0; i < kSkew; ++i)
        for (size_t j = 0; j < kSkew; ++j) {
            Vec c = sub(cayley->multiply(sb.row(i), sb.row(j)),
                        cayley->multiply(sb.row(j), sb.row(i)));
            auto coords = skew_eb.coordinates(std::move(c));
            if (!coords) throw std::logic_error("commutator left the skew part");
            br[i][j] = *coords;
            gram.at(i, j) = n.bilinear(sb.row(i), sb.row(j));
        }
    auto e7 = [](size_t i) {
        Vec v(kSkew);
        v[i] = Scalar(1);
        return v;
    };

    std::vector<SparseRow> st(kDim * kDim);
    auto set_prod = [&](size_t x, size_t y, const Vec& v) {
        st[x * kDim + y] = SparseRow::from_dense(v);
    };
    const Scalar half = Scalar::of(1, 2);

    // skew * skew
    for (size_t i = 0; i < kSkew; ++i)
        for (size_t j = 0; j < kSkew; ++j) {
            Vec out(kDim);
            out[SmirnovModel::sym_index(i, j)] += Scalar(1);
            skew_acc(out, br[i][j], half);
            set_prod(i, j, out);
        }
    // skew * sym and sym * skew
    for (size_t i = 0; i < kSkew; ++i)
        for (size_t a = 0; a < kSkew; ++a)
            for (size_t b = a; b < kSkew; ++b) {
                Vec dot(kDim);  // s_i . (s_a x s_b), lands in S
                dot[i] -= gram.at(a, b);
                skew_acc(dot, e7(b), -half * gram.at(i, a));
                skew_acc(dot, e7(a), -half * gram.at(i, b));
                Vec brk(kDim);  // [s_i, s_a x s_b], lands in H
                sym_acc(brk, br[i][a], e7(b), Scalar(1));
                sym_acc(brk, e7(a), br[i][b], Scalar(1));
                Vec left(kDim), right(kDim);
                for (size_t k = 0; k < kDim; ++k) {
                    left[k] = dot[k] + half * brk[k];
                    right[k] = dot[k] - half * brk[k];
                }
                set_prod(i, SmirnovModel::sym_index(a, b), left);
                set_prod(SmirnovModel::sym_index(a, b), i, right);
            }
    // sym * sym
    for (size_t a = 0; a < kSkew; ++a)
        for (size_t b = a; b < kSkew; ++b)
            for (size_t c = 0; c < kSkew; ++c)
                for (size_t d = c; d < kSkew; ++d) {
                    Vec out(kDim);
                    sym_acc(out, br[a][c], br[b][d], sym_sq_coeff);
                    sym_acc(out, br[a][d], br[b][c], sym_sq_coeff);
                    out[SmirnovModel::sym_index(c, d)] -= gram.at(a, b);
                    out[SmirnovModel::sym_index(a, b)] -= gram.at(c, d);
                    // bracket part, lands in S
                    Vec brk(kSkew);
                    add_scaled(brk, br[b][d], -half * gram.at(a, c));
                    add_scaled(brk, br[b][c], -half * gram.at(a, d));
                    add_scaled(brk, br[a][d], -half * gram.at(b, c));
                    add_scaled(brk, br[a][c], -half * gram.at(b, d));
                    skew_acc(out, brk, half);
                    set_prod(SmirnovModel::sym_index(a, b), SmirnovModel::sym_index(c, d), out);
                }
    Matrix inv(kDim, kDim);
    for (size_t i = 0; i < kDim; ++i) inv.at(i, i) = Scalar(i < kSkew ? -1 : 1);
    std::vector<std::string> labels;
    for (size_t i = 0; i < kSkew; ++i) labels.push_back("s" + std::to_string(i + 1));
    for (size_t i = 0; i < kSkew; ++i)
        for (size_t j = i; j < kSkew; ++j)
            labels.push_back("s" + std::to_string(i + 1) + "xs" + std::to_string(j + 1));
    AlgebraPtr T = Algebra::create("T(" + cayley->name() + ")", kDim, std::move(labels),
                                   std::move(st), std::move(inv));
    return {T, cayley, n, sb};
}

std::vector<Vec> canonical_orthogonal_skew_basis(const SmirnovModel& m) {
    // e1-e2, u_i+v_i, u_i-v_i in good-basis coordinates
    auto v = [&](std::initializer_list<std::pair<int, int>> terms) {
        Vec x(8);
        for (auto [i, c] : terms) x[i] += Scalar(c);
        return x;
    };
    return {v({{0, 1}, {1, -1}}), v({{2, 1}, {5, 1}}), v({{2, 1}, {5, -1}}),
            v({{3, 1}, {6, 1}}), v({{3, 1}, {6, -1}}), v({{4, 1}, {7, 1}}),
            v({{4, 1}, {7, -1}})};
}

Vec smirnov_unit_vector(const SmirnovModel& m, const std::vector<Vec>& orth_basis) {
    if (orth_basis.size() != kSkew)
        throw std::invalid_argument("unit formula needs a basis of the 7-dimensional skew part");
    EchelonBasis skew_eb(8);
    for (size_t r = 0; r < kSkew; ++r) skew_eb.insert(m.skew_basis.row(r));
    for (size_t i = 0; i < orth_basis.size(); ++i)
        for (size_t j = i + 1; j < orth_basis.size(); ++j)
            if (!m.cayley_norm.bilinear(orth_basis[i], orth_basis[j]).is_zero())
                throw std::invalid_argument("unit formula needs an orthogonal basis");
    Vec out(kDim);
    for (const Vec& x : orth_basis) {
        Scalar alpha = m.cayley_norm.norm(x);
        if (alpha.is_zero()) throw std::invalid_argument("unit formula needs anisotropic vectors");
        auto coords = skew_eb.coordinates(x);
        if (!coords) throw std::invalid_argument("unit basis vector is not skew");
        sym_acc(out, *coords, *coords, Scalar(-1) / (Scalar(16) * alpha));
    }
    return out;
}

TensorSmirnov build_smirnov_in_tensor(const SmirnovModel& m, const AlgebraPtr& tensor) {
    Stopwatch sw;
    const Algebra& C = *m.C;
    size_t n = C.dim(), N = n * n;
    if (tensor->dim() != N) throw std::invalid_argument("tensor algebra dimension mismatch");
    size_t checks = 0;
    auto fail = [&](const std::string& what, const std::string& expect, const std::string& got) {
        return TensorSmirnov{tensor, Matrix(), Matrix(),
                             Report::fail(checks, {what, expect, got}, sw.ms())};
    };
    // span of a(x)b + b(x)a - n(a,b) 1(x)1 over basis pairs
    const Vec& unit1 = C.unit();
    Vec unit_t(N);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) unit_t[i * n + j] = unit1[i] * unit1[j];
    EchelonBasis span(N);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a; b < n; ++b) {
            Vec w(N);
            w[a * n + b] += Scalar(1);
            w[b * n + a] += Scalar(1);
            Scalar nab = m.cayley_norm.gram.at(a, b);
            add_scaled(w, unit_t, -nab);
            span.insert(std::move(w));
        }
    ++checks;
    if (span.dim() != kDim)
        return fail("span dimension", "35", std::to_string(span.dim()));
    // closure under product and involution
    Matrix sp = span.to_matrix();
    for (size_t r = 0; r < kDim; ++r) {
        ++checks;
        if (!span.contains(tensor->conj(sp.row(r))))
            return fail("involution closure", "in span", "escapes");
        for (size_t s = 0; s < kDim; ++s) {
            ++checks;
            if (!span.contains(tensor->multiply(sp.row(r), sp.row(s))))
                return fail("product closure", "in span", "escapes");
        }
    }
    // psi on the T-basis
    Matrix psi(kDim, N);
    for (size_t i = 0; i < kSkew; ++i)
        psi.set_row(i, embed_skew_pair(C, m.skew_basis.row(i), m.skew_basis.row(i)));
    for (size_t i = 0; i < kSkew; ++i)
        for (size_t j = i; j < kSkew; ++j) {
            Vec w(N);
            const Vec si = m.skew_basis.row(i), sj = m.skew_basis.row(j);
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b) {
                    Scalar c = si[a] * sj[b] + sj[a] * si[b];
                    if (!c.is_zero()) w[a * n + b] += c;
                }
            add_scaled(w, unit_t, -m.cayley_norm.bilinear(si, sj));
            psi.set_row(SmirnovModel::sym_index(i, j), w);
        }
    ++checks;
    if (psi.rank() != kDim) return fail("psi", "bijective", "rank deficient");
    for (size_t r = 0; r < kDim; ++r) {
        ++checks;
        if (!span.contains(psi.row(r))) return fail("psi image", "inside span", "escapes");
    }
    const Algebra& T = *m.T;
    for (size_t x = 0; x < kDim; ++x) {
        ++checks;
        if (psi.apply(T.conj(T.basis_vec(x))) != tensor->conj(psi.row(x)))
            return fail("psi conj(" + T.labels()[x] + ")", "conj psi", "differs");
        for (size_t y = 0; y < kDim; ++y) {
            ++checks;
            Vec lhs = psi.apply(T.multiply(T.basis_vec(x), T.basis_vec(y)));
            Vec rhs = tensor->multiply(psi.row(x), psi.row(y));
            if (lhs != rhs)
                return fail("psi(" + T.labels()[x] + " * " + T.labels()[y] + ")",
                            "psi(x)psi(y)", "differs");
        }
    }
    return {tensor, std::move(sp), std::move(psi), Report::pass(checks, sw.ms())};
}

TraceForms trace_forms(const SmirnovModel& m) {
    Matrix gram(kSkew, kSkew);
    for (size_t i = 0; i < kSkew; ++i)
        for (size_t j = 0; j < kSkew; ++j)
            gram.at(i, j) = m.cayley_norm.bilinear(m.skew_basis.row(i), m.skew_basis.row(j));
    Vec linear(kDim);
    for (size_t i = 0; i < kSkew; ++i)
        for (size_t j = i; j < kSkew; ++j)
            linear[SmirnovModel::sym_index(i, j)] = Scalar(-8) * gram.at(i, j);
    const Algebra& T = *m.T;
    Matrix bil(kDim, kDim);
    for (size_t x = 0; x < kDim; ++x)
        for (size_t y = 0; y < kDim; ++y) {
            Vec p = T.multiply(T.basis_vec(x), T.conj(T.basis_vec(y)));
            Scalar s;
            for (size_t k = 0; k < kDim; ++k)
                if (!p[k].is_zero() && !linear[k].is_zero()) s += p[k] * linear[k];
            bil.at(x, y) = s;
        }
    return {std::move(linear), std::move(bil)};
}

Grading induce_grading(const SmirnovModel& m, const Grading& on_cayley) {
    if (on_cayley.algebra.get() != m.C.get())
        throw std::invalid_argument("induce_grading: grading must live on the model's Cayley algebra");
    Report rep = verify_grading(on_cayley, true);
    if (!rep.passed)
        throw std::invalid_argument("induce_grading: Cayley grading fails verification (" +
                                    rep.counterexample->inputs + ")");
    EchelonBasis skew_eb(8);
    for (size_t r = 0; r < kSkew; ++r) skew_eb.insert(m.skew_basis.row(r));
    Matrix skew_mat = skew_eb.to_matrix();
    // homogeneous basis of the skew part
    std::vector<std::pair<Vec, GroupElem>> homskew;
    for (const GroupElem& s : on_cayley.support()) {
        Matrix inter = intersect_row_spaces(on_cayley.component(s), skew_mat);
        for (size_t r = 0; r < inter.rows(); ++r) homskew.emplace_back(inter.row(r), s);
    }
    if (homskew.size() != kSkew)
        throw std::logic_error("homogeneous skew vectors do not span the skew part");
    std::vector<Vec> rows(kDim, Vec(kDim));
    std::vector<GroupElem> deg(kDim);
    std::vector<Vec> coords(kSkew);
    for (size_t p = 0; p < kSkew; ++p) {
        auto c = skew_eb.coordinates(homskew[p].first);
        if (!c) throw std::logic_error("homogeneous skew vector escapes the skew part");
        coords[p] = *c;
        for (size_t k = 0; k < kSkew; ++k) rows[p][k] = coords[p][k];
        deg[p] = homskew[p].second;
    }
    size_t r = kSkew;
    for (size_t p = 0; p < kSkew; ++p)
        for (size_t q = p; q < kSkew; ++q, ++r) {
            sym_acc(rows[r], coords[p], coords[q], Scalar(1));
            deg[r] = g_add(on_cayley.group, homskew[p].second, homskew[q].second);
        }
    Grading g = Grading::make(m.T, on_cayley.group, Matrix::from_rows(rows, kDim),
                              std::move(deg));
    Report check = verify_grading(g, true);
    if (!check.passed)
        throw std::logic_error("induced grading fails verification (" +
                               check.counterexample->inputs + ")");
    return g;
}

RecoveredCayley recover_cayley(const SmirnovModel& m) {
    Stopwatch sw;
    const Algebra& T = *m.T;
    // pi_1 coefficient of a T element
    Vec pi1(kDim);
    for (size_t i = 0; i < kSkew; ++i)
        for (size_t j = i; j < kSkew; ++j)
            pi1[SmirnovModel::sym_index(i, j)] =
                Scalar::of(-1, 2) * m.cayley_norm.bilinear(m.skew_basis.row(i), m.skew_basis.row(j));
    std::vector<SparseRow> st(8 * 8);
    auto put = [&](size_t i, size_t j, const Vec& v8) {
        st[i * 8 + j] = SparseRow::from_dense(v8);
    };
    Vec one(8);
    one[0] = Scalar(1);
    put(0, 0, one);
    for (size_t k = 0; k < kSkew; ++k) {
        Vec ek(8);
        ek[1 + k] = Scalar(1);
        put(0, 1 + k, ek);
        put(1 + k, 0, ek);
    }
    for (size_t i = 0; i < kSkew; ++i)
        for (size_t j = 0; j < kSkew; ++j) {
            Vec p = T.multiply(T.basis_vec(i), T.basis_vec(j));
            Vec out(8);
            Scalar c;
            for (size_t k = 0; k < kDim; ++k)
                if (!p[k].is_zero() && !pi1[k].is_zero()) c += p[k] * pi1[k];
            out[0] = c;
            for (size_t k = 0; k < kSkew; ++k) out[1 + k] = p[k];
            put(1 + i, 1 + j, out);
        }
    Matrix inv(8, 8);
    inv.at(0, 0) = Scalar(1);
    for (size_t k = 0; k < kSkew; ++k) inv.at(1 + k, 1 + k) = Scalar(-1);
    std::vector<std::string> labels = {"1", "s1", "s2", "s3", "s4", "s5", "s6", "s7"};
    AlgebraPtr rec = Algebra::create("recovered(" + m.C->name() + ")", 8, std::move(labels),
                                     std::move(st), std::move(inv));
    // isomorphism onto C: 1 -> unit, s_k -> skew row k
    Matrix phi(8, 8);
    phi.set_row(0, m.C->unit());
    for (size_t k = 0; k < kSkew; ++k) phi.set_row(1 + k, m.skew_basis.row(k));
    size_t checks = 0;
    for (size_t i = 0; i < 8; ++i) {
        ++checks;
        if (phi.apply(rec->conj(rec->basis_vec(i))) != m.C->conj(phi.row(i)))
            return {rec, Report::fail(checks,
                                      {"conjugation at " + rec->labels()[i],
                                       "recovered conjugation matches standard", "differs"},
                                      sw.ms())};
        for (size_t j = 0; j < 8; ++j) {
            ++checks;
            Vec lhs = phi.apply(rec->multiply(rec->basis_vec(i), rec->basis_vec(j)));
            Vec rhs = m.C->multiply(phi.row(i), phi.row(j));
            if (lhs != rhs)
                return {rec, Report::fail(checks,
                                          {"pair (" + rec->labels()[i] + ", " + rec->labels()[j] +
                                               ")",
                                           "recovered product matches the Cayley table", "differs"},
                                          sw.ms())};
        }
    }
    // recovered norm pulls back to the Cayley norm
    QuadraticForm rn = norm_from_conjugation(*rec);
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j) {
            ++checks;
            if (rn.gram.at(i, j) != m.cayley_norm.bilinear(phi.row(i), phi.row(j)))
                return {rec, Report::fail(checks, {"norm Gram", "matches through phi", "differs"},
                                          sw.ms())};
        }
    return {rec, Report::pass(checks, sw.ms())};
}

}  // namespace gradecheck
