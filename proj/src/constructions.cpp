#include "gradecheck/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace gradecheck {

Scalar Character::value(const GroupElem& x) const {
    long long e = 0;
    for (std::size_t k = 0; k < x.size(); ++k) e += (long long)i_exponents[k] * x[k];
    return Scalar::i_pow(e);
}

bool Character::valid() const {
    if (i_exponents.size() != group.coords()) return false;
    for (int e : i_exponents)
        if (e < 0 || e > 3) return false;
    for (std::size_t t = 0; t < group.torsion.size(); ++t) {
        long long m = group.torsion[t];
        if ((i_exponents[group.free_rank + t] * m) % 4 != 0) return false;
    }
    return true;
}

AlgebraPtr tensor_with_involution(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (!a->has_involution() || !b->has_involution() || !a->has_unit() || !b->has_unit())
        throw std::invalid_argument("tensor_with_involution: factors must be unital with involution");
    size_t n1 = a->dim(), n2 = b->dim(), n = n1 * n2;
    std::vector<SparseRow> st(n * n);
    for (size_t i1 = 0; i1 < n1; ++i1)
        for (size_t j1 = 0; j1 < n1; ++j1) {
            const SparseRow& p1 = a->prod(i1, j1);
            if (p1.empty()) continue;
            for (size_t i2 = 0; i2 < n2; ++i2)
                for (size_t j2 = 0; j2 < n2; ++j2) {
                    const SparseRow& p2 = b->prod(i2, j2);
                    if (p2.empty()) continue;
                    SparseRow& dst = st[(i1 * n2 + i2) * n + (j1 * n2 + j2)];
                    for (const auto& [k1, c1] : p1.ent)
                        for (const auto& [k2, c2] : p2.ent) dst.add((int)(k1 * n2 + k2), c1 * c2);
                }
        }
    Matrix inv(n, n);
    for (size_t i1 = 0; i1 < n1; ++i1)
        for (size_t i2 = 0; i2 < n2; ++i2)
            for (size_t k1 = 0; k1 < n1; ++k1) {
                if (a->involution().at(i1, k1).is_zero()) continue;
                for (size_t k2 = 0; k2 < n2; ++k2) {
                    if (b->involution().at(i2, k2).is_zero()) continue;
                    inv.at(i1 * n2 + i2, k1 * n2 + k2) =
                        a->involution().at(i1, k1) * b->involution().at(i2, k2);
                }
            }
    Vec unit(n);
    for (size_t k1 = 0; k1 < n1; ++k1)
        for (size_t k2 = 0; k2 < n2; ++k2) unit[k1 * n2 + k2] = a->unit()[k1] * b->unit()[k2];
    std::vector<std::string> labels(n);
    for (size_t i1 = 0; i1 < n1; ++i1)
        for (size_t i2 = 0; i2 < n2; ++i2)
            labels[i1 * n2 + i2] = a->labels()[i1] + "(x)" + b->labels()[i2];
    return Algebra::create(a->name() + "(x)" + b->name(), n, std::move(labels), std::move(st),
                           std::move(inv), std::move(unit));
}

AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b) {
    size_t n1 = a->dim(), n2 = b->dim(), n = n1 + n2;
    std::vector<SparseRow> st(n * n);
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = 0; j < n1; ++j) st[i * n + j] = a->prod(i, j);
    for (size_t i = 0; i < n2; ++i)
        for (size_t j = 0; j < n2; ++j) {
            SparseRow r;
            for (const auto& [k, c] : b->prod(i, j).ent) r.add((int)(n1 + k), c);
            st[(n1 + i) * n + (n1 + j)] = std::move(r);
        }
    std::optional<Matrix> inv;
    if (a->has_involution() && b->has_involution()) {
        Matrix m(n, n);
        for (size_t i = 0; i < n1; ++i)
            for (size_t k = 0; k < n1; ++k) m.at(i, k) = a->involution().at(i, k);
        for (size_t i = 0; i < n2; ++i)
            for (size_t k = 0; k < n2; ++k) m.at(n1 + i, n1 + k) = b->involution().at(i, k);
        inv = std::move(m);
    }
    std::optional<Vec> unit;
    if (a->has_unit() && b->has_unit()) {
        Vec u(n);
        for (size_t k = 0; k < n1; ++k) u[k] = a->unit()[k];
        for (size_t k = 0; k < n2; ++k) u[n1 + k] = b->unit()[k];
        unit = std::move(u);
    }
    std::vector<std::string> labels(n);
    for (size_t i = 0; i < n1; ++i) labels[i] = "(" + a->labels()[i] + ",0)";
    for (size_t i = 0; i < n2; ++i) labels[n1 + i] = "(0," + b->labels()[i] + ")";
    return Algebra::create(a->name() + "x" + b->name(), n, std::move(labels), std::move(st),
                           std::move(inv), std::move(unit));
}

namespace {

// For each support degree of the base grading, the fiber of pi above it.
std::map<GroupElem, std::vector<GroupElem>> support_fibers(const Grading& base,
                                                           const GroupHom& pi) {
    if (!(pi.codomain == base.group))
        throw std::invalid_argument("loop: pi must map onto the base grading group");
    if (!pi.valid()) throw std::invalid_argument("loop: pi violates torsion orders");
    if (!pi.surjective()) throw std::invalid_argument("loop: pi must be surjective");
    std::vector<GroupElem> kernel = pi.kernel_elements();
    std::map<GroupElem, std::vector<GroupElem>> fibers;
    for (const GroupElem& s : base.support()) {
        auto p0 = pi.canonical_preimage(s);
        if (!p0) throw std::logic_error("loop: no preimage for a support degree");
        std::set<GroupElem> fiber;
        for (const GroupElem& k : kernel) fiber.insert(g_add(pi.domain, *p0, k));
        fibers[s] = {fiber.begin(), fiber.end()};
    }
    return fibers;
}

}  // namespace

LoopAlgebra loop_algebra(const Grading& base, const GroupHom& pi) {
    Report rep = verify_grading(base, false);
    if (!rep.passed) throw std::invalid_argument("loop_algebra: base grading fails verification");
    auto fibers = support_fibers(base, pi);
    const Algebra& A = *base.algebra;
    std::vector<std::pair<size_t, GroupElem>> info;
    std::map<std::pair<size_t, GroupElem>, size_t> index;
    for (const auto& [s, fiber] : fibers)
        for (const GroupElem& g : fiber)
            for (size_t r : base.rows_of_degree(s)) {
                index[{r, g}] = info.size();
                info.emplace_back(r, g);
            }
    size_t n = info.size();
    std::vector<SparseRow> st(n * n);
    for (size_t p = 0; p < n; ++p) {
        auto [r, g] = info[p];
        for (size_t q = 0; q < n; ++q) {
            auto [s, g2] = info[q];
            Vec prod = A.multiply(base.hbasis.row(r), base.hbasis.row(s));
            if (is_zero_vec(prod)) continue;
            Vec coords = base.hinv.apply(prod);
            GroupElem gg = g_add(pi.domain, g, g2);
            for (size_t t = 0; t < A.dim(); ++t) {
                if (coords[t].is_zero()) continue;
                auto it = index.find({t, gg});
                if (it == index.end())
                    throw std::logic_error("loop_algebra: product leaves the enumerated support");
                st[p * n + q].add((int)it->second, coords[t]);
            }
        }
    }
    std::optional<Matrix> inv;
    if (A.has_involution()) {
        Matrix m(n, n);
        for (size_t p = 0; p < n; ++p) {
            auto [r, g] = info[p];
            Vec coords = base.hinv.apply(A.conj(base.hbasis.row(r)));
            for (size_t t = 0; t < A.dim(); ++t) {
                if (coords[t].is_zero()) continue;
                auto it = index.find({t, g});
                if (it == index.end())
                    throw std::logic_error("loop_algebra: involution leaves the support");
                m.at(p, it->second) = coords[t];
            }
        }
        inv = std::move(m);
    }
    std::vector<std::string> labels(n);
    for (size_t p = 0; p < n; ++p)
        labels[p] = base.row_label(info[p].first) + "@" + g_str(info[p].second);
    AlgebraPtr L = Algebra::create("Loop(" + A.name() + ")", n, std::move(labels), std::move(st),
                                   std::move(inv));
    std::vector<GroupElem> deg(n);
    for (size_t p = 0; p < n; ++p) deg[p] = info[p].second;
    Grading grading = Grading::diagonal(L, pi.domain, std::move(deg));
    return {L, std::move(grading), std::move(info)};
}

Grading loop_to_product(const Grading& base, const GroupHom& pi, const GroupElem& h,
                        const Character& chi, AlgebraPtr product_algebra) {
    Report rep = verify_grading(base, false);
    if (!rep.passed) throw std::invalid_argument("loop_to_product: base grading not verified");
    if (!chi.valid() || !(chi.group == pi.domain))
        throw std::invalid_argument("loop_to_product: character undefined on the group");
    if (g_order(pi.domain, h) != 2)
        throw std::invalid_argument("loop_to_product: h must have order 2");
    if (!(chi.value(h) == Scalar(-1)))
        throw std::invalid_argument("loop_to_product: chi(h) must be -1");
    auto kernel = pi.kernel_elements();
    std::set<GroupElem> ker(kernel.begin(), kernel.end());
    if (ker != std::set<GroupElem>{g_zero(pi.domain), h})
        throw std::invalid_argument("loop_to_product: ker(pi) must be {0, h}");
    size_t nA = base.algebra->dim();
    if (product_algebra->dim() != 2 * nA)
        throw std::invalid_argument("loop_to_product: product algebra dimension mismatch");
    auto fibers = support_fibers(base, pi);
    std::vector<Vec> rows;
    std::vector<GroupElem> deg;
    std::vector<std::string> labels;
    for (const auto& [s, fiber] : fibers)
        for (const GroupElem& g : fiber) {
            Scalar c = chi.value(g);
            for (size_t r : base.rows_of_degree(s)) {
                Vec x = base.hbasis.row(r);
                Vec v(2 * nA);
                for (size_t k = 0; k < nA; ++k) {
                    v[k] = x[k];
                    v[nA + k] = c * x[k];
                }
                rows.push_back(std::move(v));
                deg.push_back(g);
                labels.push_back("(x," + c.str() + "x)[" + base.row_label(r) + "]@" + g_str(g));
            }
        }
    return Grading::make(std::move(product_algebra), pi.domain, Matrix::from_rows(rows, 2 * nA),
                         std::move(deg), std::move(labels));
}

Grading grading_closure(const GradedGenerators& gens) {
    const Algebra& A = *gens.algebra;
    size_t n = A.dim();
    std::map<GroupElem, EchelonBasis> comps;
    std::deque<std::pair<GroupElem, Vec>> work;
    size_t total = 0;
    auto insert = [&](const GroupElem& d, Vec v) {
        auto it = comps.find(d);
        if (it == comps.end()) it = comps.emplace(d, EchelonBasis(n)).first;
        Vec copy = v;
        if (it->second.insert(std::move(copy))) {
            ++total;
            if (total > n)
                throw std::runtime_error("grading_closure: components collide (sum not direct)");
            work.emplace_back(d, std::move(v));
        }
    };
    for (const auto& [v, d] : gens.gens) {
        if (is_zero_vec(v)) throw std::invalid_argument("grading_closure: zero generator");
        insert(g_reduce(gens.group, d), v);
    }
    while (!work.empty()) {
        auto [d, v] = std::move(work.front());
        work.pop_front();
        std::vector<std::pair<GroupElem, Vec>> snapshot;
        for (const auto& [d2, basis] : comps)
            for (const auto& row : basis.raw_rows()) snapshot.emplace_back(d2, row.to_dense(n));
        for (const auto& [d2, w] : snapshot) {
            Vec p1 = A.multiply(v, w);
            if (!is_zero_vec(p1)) insert(g_add(gens.group, d, d2), std::move(p1));
            Vec p2 = A.multiply(w, v);
            if (!is_zero_vec(p2)) insert(g_add(gens.group, d2, d), std::move(p2));
        }
    }
    if (total < n) throw std::runtime_error("grading_closure: generators do not generate");
    std::vector<Vec> rows;
    std::vector<GroupElem> deg;
    for (const auto& [d, basis] : comps) {
        Matrix m = basis.to_matrix();
        for (size_t r = 0; r < m.rows(); ++r) {
            rows.push_back(m.row(r));
            deg.push_back(d);
        }
    }
    Grading g =
        Grading::make(gens.algebra, gens.group, Matrix::from_rows(rows, n), std::move(deg));
    Report rep = verify_grading(g, false);
    if (!rep.passed)
        throw std::runtime_error("grading_closure: inconsistent generator degrees (" +
                                 rep.counterexample->inputs + ")");
    return g;
}

Vec embed_skew_pair(const Algebra& cayley, const Vec& x, const Vec& y) {
    size_t n = cayley.dim();
    const Vec& unit = cayley.unit();
    Vec v(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Scalar c = x[i] * unit[j] + unit[i] * y[j];
            if (!c.is_zero()) v[i * n + j] = c;
        }
    return v;
}

Grading transfer_product_to_tensor(const Grading& on_product, const AlgebraPtr& cayley,
                                   const AlgebraPtr& tensor_algebra) {
    size_t n = cayley->dim();
    if (on_product.algebra->dim() != 2 * n || tensor_algebra->dim() != n * n)
        throw std::invalid_argument("transfer: dimension mismatch");
    auto [skew, herm] = split_involution(on_product.algebra);
    GradedGenerators gens{tensor_algebra, on_product.group, {}};
    for (const GroupElem& s : on_product.support()) {
        Matrix inter = intersect_row_spaces(on_product.component(s), skew.basis);
        for (size_t r = 0; r < inter.rows(); ++r) {
            Vec xy = inter.row(r);
            Vec x(xy.begin(), xy.begin() + n), y(xy.begin() + n, xy.end());
            gens.gens.emplace_back(embed_skew_pair(*cayley, x, y), s);
        }
    }
    return grading_closure(gens);
}

}  // namespace gradecheck
