#include "gradecheck/composition.hpp"

#include <array>
#include <map>

namespace gradecheck {

Scalar QuadraticForm::bilinear(const Vec& x, const Vec& y) const {
    Scalar s;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero() && !gram.at(i, j).is_zero()) s += x[i] * y[j] * gram.at(i, j);
    }
    return s;
}

Scalar QuadraticForm::norm(const Vec& x) const { return bilinear(x, x) / Scalar(2); }

namespace {

// Good-basis table of the split Cayley algebra; entries are (index, sign),
// index -1 meaning zero. Basis order: e1 e2 u1 u2 u3 v1 v2 v3.
struct Mono {
    int idx;
    int sign;
};
constexpr int E1 = 0, E2 = 1, U1 = 2, U2 = 3, U3 = 4, V1 = 5, V2 = 6, V3 = 7;
constexpr Mono Z{-1, 0};
constexpr Mono cayley_table[8][8] = {
    // e1        e2        u1        u2        u3        v1        v2        v3
    {{E1, 1}, Z, {U1, 1}, {U2, 1}, {U3, 1}, Z, Z, Z},                          // e1
    {Z, {E2, 1}, Z, Z, Z, {V1, 1}, {V2, 1}, {V3, 1}},                          // e2
    {Z, {U1, 1}, Z, {V3, 1}, {V2, -1}, {E1, -1}, Z, Z},                        // u1
    {Z, {U2, 1}, {V3, -1}, Z, {V1, 1}, Z, {E1, -1}, Z},                        // u2
    {Z, {U3, 1}, {V2, 1}, {V1, -1}, Z, Z, Z, {E1, -1}},                        // u3
    {{V1, 1}, Z, {E2, -1}, Z, Z, Z, {U3, 1}, {U2, -1}},                        // v1
    {{V2, 1}, Z, Z, {E2, -1}, Z, {U3, -1}, Z, {U1, 1}},                        // v2
    {{V3, 1}, Z, Z, Z, {E2, -1}, {U2, 1}, {U1, -1}, Z},                        // v3
};

const std::vector<std::string> kCayleyLabels = {"e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"};

AlgebraPtr build_split(size_t dim) {
    // dims 2 and 4 are the subalgebras spanned by {e1,e2} and {e1,e2,u1,v1}
    std::vector<int> sub;
    std::string name;
    switch (dim) {
        case 1: {
            std::vector<SparseRow> st(1);
            st[0].add(0, Scalar(1));
            Matrix inv = Matrix::identity(1);
            return Algebra::create("F", 1, {"1"}, std::move(st), std::move(inv));
        }
        case 2: sub = {E1, E2}; name = "K"; break;
        case 4: sub = {E1, E2, U1, V1}; name = "H"; break;
        case 8: sub = {E1, E2, U1, U2, U3, V1, V2, V3}; name = "C"; break;
        default: throw std::invalid_argument("split Hurwitz dimension must be 1, 2, 4 or 8");
    }
    std::vector<int> pos(8, -1);
    for (size_t i = 0; i < sub.size(); ++i) pos[sub[i]] = (int)i;
    std::vector<SparseRow> st(dim * dim);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            Mono m = cayley_table[sub[i]][sub[j]];
            if (m.idx < 0) continue;
            if (pos[m.idx] < 0) throw std::logic_error("subalgebra is not closed");
            st[i * dim + j].add(pos[m.idx], Scalar(m.sign));
        }
    // standard conjugation: e1 <-> e2, u_i -> -u_i, v_i -> -v_i
    Matrix inv(dim, dim);
    for (size_t i = 0; i < dim; ++i) {
        int b = sub[i];
        if (b == E1) inv.at(i, pos[E2]) = Scalar(1);
        else if (b == E2) inv.at(i, pos[E1]) = Scalar(1);
        else inv.at(i, i) = Scalar(-1);
    }
    std::vector<std::string> labels;
    for (int b : sub) labels.push_back(kCayleyLabels[b]);
    return Algebra::create(std::move(name), dim, std::move(labels), std::move(st),
                           std::move(inv));
}

}  // namespace

QuadraticForm norm_from_conjugation(const Algebra& a) {
    if (!a.has_involution() || !a.has_unit())
        throw std::invalid_argument("norm_from_conjugation: need unit and involution");
    size_t n = a.dim();
    const Vec& unit = a.unit();
    Matrix gram(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            // b_i conj(b_j) + b_j conj(b_i) = n(b_i, b_j) * 1
            Vec v = add(a.multiply(a.basis_vec(i), a.conj(a.basis_vec(j))),
                        a.multiply(a.basis_vec(j), a.conj(a.basis_vec(i))));
            Scalar lambda;
            bool found = false;
            for (size_t k = 0; k < n; ++k) {
                if (unit[k].is_zero()) {
                    if (!v[k].is_zero())
                        throw std::invalid_argument("x*conj(x) is not a multiple of the unit");
                    continue;
                }
                Scalar cand = v[k] / unit[k];
                if (found && cand != lambda)
                    throw std::invalid_argument("x*conj(x) is not a multiple of the unit");
                lambda = cand;
                found = true;
            }
            gram.at(i, j) = lambda;
            gram.at(j, i) = lambda;
        }
    return {gram};
}

std::pair<AlgebraPtr, QuadraticForm> split_hurwitz(size_t dim) {
    AlgebraPtr a = build_split(dim);
    return {a, norm_from_conjugation(*a)};
}

std::pair<AlgebraPtr, QuadraticForm> cayley_dickson_double(const AlgebraPtr& a,
                                                           const Scalar& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("Cayley-Dickson parameter must be nonzero");
    if (a->dim() > 4)
        throw std::invalid_argument("Cayley-Dickson doubling only applies up to dimension 4");
    if (!a->has_involution()) throw std::invalid_argument("Cayley-Dickson needs the conjugation");
    size_t n = a->dim(), m = 2 * n;
    // (a,b)(c,d) = (ac + alpha*conj(d) b, da + b conj(c))
    std::vector<SparseRow> st(m * m);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec bi = a->basis_vec(i), bj = a->basis_vec(j);
            Vec cbi = a->conj(bi), cbj = a->conj(bj);
            // (b_i, 0)(b_j, 0) = (b_i b_j, 0)
            {
                Vec p = a->multiply(bi, bj);
                for (size_t k = 0; k < n; ++k)
                    if (!p[k].is_zero()) st[i * m + j].add((int)k, p[k]);
            }
            // (b_i, 0)(0, b_j) = (0, b_j b_i)
            {
                Vec p = a->multiply(bj, bi);
                for (size_t k = 0; k < n; ++k)
                    if (!p[k].is_zero()) st[i * m + (n + j)].add((int)(n + k), p[k]);
            }
            // (0, b_i)(b_j, 0) = (0, b_i conj(b_j))
            {
                Vec p = a->multiply(bi, cbj);
                for (size_t k = 0; k < n; ++k)
                    if (!p[k].is_zero()) st[(n + i) * m + j].add((int)(n + k), p[k]);
            }
            // (0, b_i)(0, b_j) = (alpha conj(b_j) b_i, 0)
            {
                Vec p = a->multiply(cbj, bi);
                for (size_t k = 0; k < n; ++k)
                    if (!p[k].is_zero()) st[(n + i) * m + (n + j)].add((int)k, alpha * p[k]);
            }
        }
    Matrix inv(m, m);
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < n; ++k) inv.at(i, k) = a->involution().at(i, k);
        inv.at(n + i, n + i) = Scalar(-1);
    }
    std::vector<std::string> labels;
    for (const auto& l : a->labels()) labels.push_back(l);
    for (const auto& l : a->labels()) labels.push_back(l == "1" ? "w" : l + "w");
    Vec unit(m);
    for (size_t k = 0; k < n; ++k) unit[k] = a->unit()[k];
    AlgebraPtr out = Algebra::create("CD(" + a->name() + ")", m, std::move(labels), std::move(st),
                                     std::move(inv), std::move(unit));
    return {out, norm_from_conjugation(*out)};
}

Report check_composition(const Algebra& a, const QuadraticForm& n) {
    Stopwatch sw;
    size_t dim = a.dim();
    size_t checks = 0;
    std::vector<Vec> basis(dim);
    for (size_t i = 0; i < dim; ++i) basis[i] = a.basis_vec(i);
    std::vector<std::vector<Vec>> prods(dim, std::vector<Vec>(dim));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) prods[i][j] = a.multiply(basis[i], basis[j]);
    // pairs: n(b_i b_j) = n(b_i) n(b_j)
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            ++checks;
            if (n.norm(prods[i][j]) != n.norm(basis[i]) * n.norm(basis[j]))
                return Report::fail(checks,
                                    {"pair (" + a.labels()[i] + ", " + a.labels()[j] + ")",
                                     "n(xy) = n(x)n(y)", "norm is not multiplicative"},
                                    sw.ms());
        }
    // one-sided polarizations on triples
    for (size_t x = 0; x < dim; ++x)
        for (size_t y = 0; y < dim; ++y)
            for (size_t z = 0; z < dim; ++z) {
                ++checks;
                if (n.bilinear(prods[x][y], prods[x][z]) !=
                    n.norm(basis[x]) * n.bilinear(basis[y], basis[z]))
                    return Report::fail(checks,
                                        {"triple (" + a.labels()[x] + ", " + a.labels()[y] + ", " +
                                             a.labels()[z] + ")",
                                         "n(xy, xz) = n(x) n(y,z)", "violated"},
                                        sw.ms());
                if (n.bilinear(prods[x][y], prods[z][y]) !=
                    n.bilinear(basis[x], basis[z]) * n.norm(basis[y]))
                    return Report::fail(checks,
                                        {"triple (" + a.labels()[x] + ", " + a.labels()[y] + ", " +
                                             a.labels()[z] + ")",
                                         "n(xy, zy) = n(x,z) n(y)", "violated"},
                                        sw.ms());
            }
    // full polarization on quadruples: n(xy,zw) + n(zy,xw) = n(x,z) n(y,w)
    for (size_t x = 0; x < dim; ++x)
        for (size_t y = 0; y < dim; ++y)
            for (size_t z = 0; z < dim; ++z)
                for (size_t w = 0; w < dim; ++w) {
                    ++checks;
                    Scalar lhs =
                        n.bilinear(prods[x][y], prods[z][w]) + n.bilinear(prods[z][y], prods[x][w]);
                    if (lhs != n.bilinear(basis[x], basis[z]) * n.bilinear(basis[y], basis[w]))
                        return Report::fail(
                            checks,
                            {"quadruple (" + a.labels()[x] + ", " + a.labels()[y] + ", " +
                                 a.labels()[z] + ", " + a.labels()[w] + ")",
                             "n(xy,zw) + n(zy,xw) = n(x,z)n(y,w)", "violated"},
                            sw.ms());
                }
    return Report::pass(checks, sw.ms());
}

Grading standard_grading(size_t dim, StandardGradingKind kind) {
    auto [alg, nf] = split_hurwitz(dim);
    (void)nf;
    if (kind == StandardGradingKind::cartan) {
        if (dim == 8) {
            AbelianGroup z2 = AbelianGroup::free_group(2);
            std::vector<GroupElem> deg = {{0, 0},  {0, 0},  {1, 0},   {0, 1},
                                          {-1, -1}, {-1, 0}, {0, -1}, {1, 1}};
            return Grading::diagonal(alg, z2, std::move(deg));
        }
        if (dim == 4) {
            AbelianGroup z = AbelianGroup::free_group(1);
            std::vector<GroupElem> deg = {{0}, {0}, {1}, {-1}};
            return Grading::diagonal(alg, z, std::move(deg));
        }
        throw std::invalid_argument("Cartan grading exists only in dimensions 4 and 8");
    }
    // Cayley-Dickson gradings, expressed on the good basis via
    // u = e1 - e2, v = u1 + v1, w = u2 + v2.
    auto S = [&](std::initializer_list<std::pair<int, int>> terms) {
        Vec v(dim);
        for (auto [idx, c] : terms) v[idx] += Scalar(c);
        return v;
    };
    if (dim == 2) {
        AbelianGroup g = AbelianGroup::cyclic(2);
        std::vector<Vec> rows = {S({{0, 1}, {1, 1}}), S({{0, 1}, {1, -1}})};
        std::vector<GroupElem> deg = {{0}, {1}};
        return Grading::make(alg, g, Matrix::from_rows(rows, dim), std::move(deg), {"1", "u"});
    }
    if (dim == 4) {
        AbelianGroup g{0, {2, 2}};
        // basis {1, u, v, uv}: 1 = e1+e2, u = e1-e2, v = u1+v1, uv = u1-v1
        std::vector<Vec> rows = {S({{0, 1}, {1, 1}}), S({{0, 1}, {1, -1}}), S({{2, 1}, {3, 1}}),
                                 S({{2, 1}, {3, -1}})};
        std::vector<GroupElem> deg = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
        return Grading::make(alg, g, Matrix::from_rows(rows, dim), std::move(deg),
                             {"1", "u", "v", "uv"});
    }
    if (dim == 8) {
        AbelianGroup g{0, {2, 2, 2}};
        // u = e1-e2, v = u1+v1, w = u2+v2; then uv = u1-v1, uw = u2-v2,
        // vw = u3+v3, (uv)w = -u3+v3 in the good basis.
        std::vector<Vec> rows = {
            S({{E1, 1}, {E2, 1}}),   // 1
            S({{E1, 1}, {E2, -1}}),  // u
            S({{U1, 1}, {V1, 1}}),   // v
            S({{U2, 1}, {V2, 1}}),   // w
            S({{U1, 1}, {V1, -1}}),  // uv
            S({{U2, 1}, {V2, -1}}),  // uw
            S({{U3, 1}, {V3, 1}}),   // vw
            S({{U3, -1}, {V3, 1}}),  // (uv)w
        };
        std::vector<GroupElem> deg = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                      {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
        return Grading::make(alg, g, Matrix::from_rows(rows, dim), std::move(deg),
                             {"1", "u", "v", "w", "uv", "uw", "vw", "uvw"});
    }
    throw std::invalid_argument("Cayley-Dickson grading exists only in dimensions 2, 4 and 8");
}

}  // namespace gradecheck
