#include "gradecheck/grading.hpp"

#include <algorithm>
#include <set>

namespace gradecheck {

Grading Grading::make(AlgebraPtr a, AbelianGroup g, Matrix hbasis, std::vector<GroupElem> deg,
                      std::vector<std::string> labels) {
    if (hbasis.rows() != a->dim() || hbasis.cols() != a->dim())
        throw std::invalid_argument("grading: homogeneous basis must be square of the dimension");
    if (deg.size() != a->dim()) throw std::invalid_argument("grading: one degree per basis row");
    for (auto& d : deg) d = g_reduce(g, d);
    auto inv = hbasis.inverse();
    if (!inv) throw std::invalid_argument("grading: homogeneous basis is singular");
    Grading out;
    out.algebra = std::move(a);
    out.group = std::move(g);
    out.hbasis = std::move(hbasis);
    out.hinv = std::move(*inv);
    out.degrees = std::move(deg);
    out.hlabels = std::move(labels);
    return out;
}

Grading Grading::diagonal(AlgebraPtr a, AbelianGroup g, std::vector<GroupElem> deg) {
    size_t n = a->dim();
    return make(std::move(a), std::move(g), Matrix::identity(n), std::move(deg));
}

bool Grading::is_diagonal() const { return hbasis == Matrix::identity(algebra->dim()); }

std::vector<GroupElem> Grading::support() const {
    std::set<GroupElem> s(degrees.begin(), degrees.end());
    return {s.begin(), s.end()};
}

std::vector<size_t> Grading::rows_of_degree(const GroupElem& g) const {
    std::vector<size_t> rows;
    for (size_t r = 0; r < degrees.size(); ++r)
        if (degrees[r] == g) rows.push_back(r);
    return rows;
}

Matrix Grading::component(const GroupElem& g) const {
    std::vector<Vec> rows;
    for (size_t r : rows_of_degree(g)) rows.push_back(hbasis.row(r));
    return row_space(Matrix::from_rows(rows, algebra->dim()));
}

std::string Grading::row_label(size_t r) const {
    if (r < hlabels.size() && !hlabels[r].empty()) return hlabels[r];
    if (is_diagonal()) return algebra->labels()[r];
    return format_vec(*algebra, hbasis.row(r));
}

Report verify_graded_product(const AbelianGroup& group, const std::vector<GroupElem>& degrees,
                             const Matrix& hbasis, const Matrix& hinv, size_t dim,
                             const std::function<Vec(const Vec&, const Vec&)>& product,
                             const std::function<Vec(const Vec&)>* involution,
                             const std::function<std::string(size_t)>& rowname) {
    Stopwatch sw;
    size_t checks = 0;
    std::vector<Vec> hrows(dim);
    for (size_t r = 0; r < dim; ++r) hrows[r] = hbasis.row(r);
    for (size_t r = 0; r < dim; ++r) {
        for (size_t s = 0; s < dim; ++s) {
            Vec p = product(hrows[r], hrows[s]);
            ++checks;
            if (is_zero_vec(p)) continue;
            Vec coords = hinv.apply(p);
            GroupElem want = g_add(group, degrees[r], degrees[s]);
            for (size_t t = 0; t < dim; ++t) {
                if (coords[t].is_zero() || degrees[t] == want) continue;
                return Report::fail(checks,
                                    {"pair (" + rowname(r) + ", " + rowname(s) + ")",
                                     "product supported in degree " + g_str(want),
                                     "component " + rowname(t) + " of degree " +
                                         g_str(degrees[t]) + " is hit"},
                                    sw.ms());
            }
        }
        if (involution) {
            Vec si = (*involution)(hrows[r]);
            ++checks;
            Vec coords = hinv.apply(si);
            for (size_t t = 0; t < dim; ++t) {
                if (coords[t].is_zero() || degrees[t] == degrees[r]) continue;
                return Report::fail(checks,
                                    {"involution of " + rowname(r),
                                     "supported in degree " + g_str(degrees[r]),
                                     "component of degree " + g_str(degrees[t]) + " is hit"},
                                    sw.ms());
            }
        }
    }
    return Report::pass(checks, sw.ms());
}

Report verify_grading(const Grading& g, bool with_involution) {
    const Algebra& a = *g.algebra;
    std::function<Vec(const Vec&, const Vec&)> prod = [&](const Vec& x, const Vec& y) {
        return a.multiply(x, y);
    };
    std::function<Vec(const Vec&)> inv;
    if (with_involution) {
        if (!a.has_involution())
            throw std::invalid_argument("verify with_involution: algebra has no involution");
        inv = [&](const Vec& x) { return a.conj(x); };
    }
    return verify_graded_product(g.group, g.degrees, g.hbasis, g.hinv, a.dim(), prod,
                                 with_involution ? &inv : nullptr,
                                 [&](size_t r) { return g.row_label(r); });
}

std::pair<AbelianGroup, Grading> universal_group(const Grading& g) {
    Report rep = verify_grading(g, false);
    if (!rep.passed)
        throw std::invalid_argument("universal_group requires a verified grading (failure at " +
                                    rep.counterexample->inputs + ")");
    std::vector<GroupElem> supp = g.support();
    auto index_of = [&](const GroupElem& e) {
        return (size_t)(std::lower_bound(supp.begin(), supp.end(), e) - supp.begin());
    };
    // relations from nonzero component products
    std::set<std::vector<long long>> relations;
    std::map<GroupElem, std::vector<size_t>> rows_by_degree;
    for (size_t r = 0; r < g.degrees.size(); ++r) rows_by_degree[g.degrees[r]].push_back(r);
    for (const auto& [ga, rows_a] : rows_by_degree) {
        for (const auto& [gb, rows_b] : rows_by_degree) {
            bool nonzero = false;
            for (size_t r : rows_a) {
                for (size_t s : rows_b) {
                    if (!is_zero_vec(g.algebra->multiply(g.hbasis.row(r), g.hbasis.row(s)))) {
                        nonzero = true;
                        break;
                    }
                }
                if (nonzero) break;
            }
            if (!nonzero) continue;
            GroupElem gc = g_add(g.group, ga, gb);
            std::vector<long long> rel(supp.size(), 0);
            rel[index_of(ga)] += 1;
            rel[index_of(gb)] += 1;
            rel[index_of(gc)] -= 1;
            bool trivial = std::all_of(rel.begin(), rel.end(), [](long long v) { return v == 0; });
            if (!trivial) relations.insert(rel);
        }
    }
    IntMatrix rel((std::size_t)relations.size(), supp.size());
    {
        size_t i = 0;
        for (const auto& r : relations) {
            for (size_t j = 0; j < supp.size(); ++j) rel.at(i, j) = Int(r[j]);
            ++i;
        }
    }
    CokernelForm ck = cokernel_presentation(rel);
    // canonical group: free coordinates after the diagonal block; torsion
    // from diagonal entries > 1
    std::vector<size_t> torsion_pos;
    std::vector<long long> torsion;
    for (size_t i = 0; i < ck.diag.size(); ++i) {
        if (ck.diag[i] == Int(1)) continue;
        if (!ck.diag[i].is_small())
            throw std::runtime_error("universal group: torsion factor out of range");
        torsion_pos.push_back(i);
        torsion.push_back(ck.diag[i].small());
    }
    AbelianGroup U{supp.size() - ck.diag.size(), torsion};
    // canonical degree of each support element
    std::vector<GroupElem> supp_deg(supp.size());
    for (size_t j = 0; j < supp.size(); ++j) {
        std::vector<Int> x(supp.size());
        x[j] = Int(1);
        std::vector<Int> cls = ck.class_of(x);
        GroupElem e(U.coords(), 0);
        for (size_t k = ck.diag.size(); k < supp.size(); ++k) {
            if (!cls[k].is_small()) throw std::runtime_error("universal group: degree overflow");
            e[k - ck.diag.size()] = cls[k].small();
        }
        for (size_t t = 0; t < torsion_pos.size(); ++t) {
            if (!cls[torsion_pos[t]].is_small())
                throw std::runtime_error("universal group: degree overflow");
            e[U.free_rank + t] = cls[torsion_pos[t]].small();
        }
        supp_deg[j] = g_reduce(U, std::move(e));
    }
    std::vector<GroupElem> new_deg(g.degrees.size());
    for (size_t r = 0; r < g.degrees.size(); ++r) new_deg[r] = supp_deg[index_of(g.degrees[r])];
    Grading regraded = Grading::make(g.algebra, U, g.hbasis, std::move(new_deg), g.hlabels);
    return {U, std::move(regraded)};
}

Grading coarsen(const Grading& g, const GroupHom& hom) {
    if (!(hom.domain == g.group))
        throw std::invalid_argument("coarsen: homomorphism domain differs from grading group");
    if (!hom.valid())
        throw std::invalid_argument("coarsen: homomorphism violates torsion orders");
    std::vector<GroupElem> deg;
    deg.reserve(g.degrees.size());
    for (const auto& d : g.degrees) deg.push_back(hom.apply(d));
    return Grading::make(g.algebra, hom.codomain, g.hbasis, std::move(deg), g.hlabels);
}

Grading combine(const Grading& g1, const Grading& g2, CombineMode mode, AlgebraPtr combined) {
    size_t n1 = g1.algebra->dim(), n2 = g2.algebra->dim();
    if (mode == CombineMode::tensor) {
        if (combined->dim() != n1 * n2)
            throw std::invalid_argument("combine tensor: algebra dimension mismatch");
        AbelianGroup G = AbelianGroup::product(g1.group, g2.group);
        Matrix h(n1 * n2, n1 * n2);
        std::vector<GroupElem> deg(n1 * n2);
        std::vector<std::string> labels(n1 * n2);
        for (size_t r = 0; r < n1; ++r)
            for (size_t s = 0; s < n2; ++s) {
                size_t row = r * n2 + s;
                for (size_t i = 0; i < n1; ++i)
                    for (size_t j = 0; j < n2; ++j) {
                        Scalar c = g1.hbasis.at(r, i) * g2.hbasis.at(s, j);
                        if (!c.is_zero()) h.at(row, i * n2 + j) = c;
                    }
                deg[row] = g_add(G, g_embed_left(g1.group, g2.group, g1.degrees[r]),
                                 g_embed_right(g1.group, g2.group, g2.degrees[s]));
                labels[row] = g1.row_label(r) + "(x)" + g2.row_label(s);
            }
        return Grading::make(std::move(combined), G, std::move(h), std::move(deg),
                             std::move(labels));
    }
    if (combined->dim() != n1 + n2)
        throw std::invalid_argument("combine product: algebra dimension mismatch");
    AbelianGroup G;
    bool same_group = (mode == CombineMode::product_same_group);
    if (same_group) {
        if (!(g1.group == g2.group))
            throw std::invalid_argument("product_same_group requires identical groups");
        G = g1.group;
    } else {
        G = AbelianGroup::product(g1.group, g2.group);
    }
    Matrix h(n1 + n2, n1 + n2);
    std::vector<GroupElem> deg(n1 + n2);
    std::vector<std::string> labels(n1 + n2);
    for (size_t r = 0; r < n1; ++r) {
        for (size_t i = 0; i < n1; ++i) h.at(r, i) = g1.hbasis.at(r, i);
        deg[r] = same_group ? g1.degrees[r] : g_embed_left(g1.group, g2.group, g1.degrees[r]);
        labels[r] = "(" + g1.row_label(r) + ",0)";
    }
    for (size_t s = 0; s < n2; ++s) {
        for (size_t j = 0; j < n2; ++j) h.at(n1 + s, n1 + j) = g2.hbasis.at(s, j);
        deg[n1 + s] =
            same_group ? g2.degrees[s] : g_embed_right(g1.group, g2.group, g2.degrees[s]);
        labels[n1 + s] = "(0," + g2.row_label(s) + ")";
    }
    return Grading::make(std::move(combined), G, std::move(h), std::move(deg), std::move(labels));
}

bool graded_simple(const Grading& g, const std::vector<Subspace>& minimal_ideals) {
    if (minimal_ideals.empty())
        throw std::invalid_argument("graded_simple: minimal ideal list must be nonempty");
    size_t n = g.algebra->dim();
    // AA != 0
    bool product_nonzero = false;
    for (size_t i = 0; i < n && !product_nonzero; ++i)
        for (size_t j = 0; j < n && !product_nonzero; ++j)
            if (!g.algebra->prod(i, j).empty()) product_nonzero = true;
    if (!product_nonzero) return false;

    std::vector<GroupElem> supp = g.support();
    size_t count = minimal_ideals.size();
    for (size_t mask = 1; mask < (1u << count); ++mask) {
        std::vector<Vec> rows;
        for (size_t i = 0; i < count; ++i)
            if (mask & (1u << i))
                for (size_t r = 0; r < minimal_ideals[i].basis.rows(); ++r)
                    rows.push_back(minimal_ideals[i].basis.row(r));
        Matrix v = row_space(Matrix::from_rows(rows, n));
        if (v.rows() == 0 || v.rows() == n) continue;  // not proper nonzero
        size_t pieces = 0;
        for (const auto& s : supp) {
            Matrix inter = intersect_row_spaces(v, g.component(s));
            pieces += inter.rows();
        }
        if (pieces == v.rows()) return false;  // graded proper ideal found
    }
    return true;
}

Report check_equivalence_witness(const Grading& g1, const Grading& g2,
                                 const EquivalenceWitness& w) {
    Stopwatch sw;
    size_t checks = 0;
    const Algebra& A = *g1.algebra;
    const Algebra& B = *g2.algebra;
    if (A.dim() != B.dim())
        return Report::fail(1, {"dimensions", std::to_string(A.dim()), std::to_string(B.dim())},
                            sw.ms());
    if (w.map.rank() != A.dim())
        return Report::fail(1, {"witness map", "bijective", "rank deficient"}, sw.ms());
    for (size_t i = 0; i < A.dim(); ++i)
        for (size_t j = 0; j < A.dim(); ++j) {
            ++checks;
            Vec lhs = w.map.apply(A.multiply(A.basis_vec(i), A.basis_vec(j)));
            Vec rhs = B.multiply(w.map.row(i), w.map.row(j));
            if (lhs != rhs)
                return Report::fail(checks,
                                    {"pair (" + A.labels()[i] + ", " + A.labels()[j] + ")",
                                     "phi(xy) = phi(x)phi(y)", "not multiplicative"},
                                    sw.ms());
        }
    if (A.has_involution() && B.has_involution()) {
        for (size_t i = 0; i < A.dim(); ++i) {
            ++checks;
            if (w.map.apply(A.conj(A.basis_vec(i))) != B.conj(w.map.row(i)))
                return Report::fail(
                    checks, {"basis " + A.labels()[i], "phi(conj x) = conj(phi x)", "violated"},
                    sw.ms());
        }
    }
    // support bijection
    std::vector<GroupElem> s1 = g1.support(), s2 = g2.support();
    std::set<GroupElem> dom, img;
    for (const auto& [a, b] : w.support_bijection) {
        dom.insert(a);
        img.insert(b);
    }
    ++checks;
    if (dom != std::set<GroupElem>(s1.begin(), s1.end()) ||
        img != std::set<GroupElem>(s2.begin(), s2.end()) ||
        w.support_bijection.size() != s1.size())
        return Report::fail(
            checks, {"support bijection", "bijection Supp(G1) -> Supp(G2)", "not a bijection"},
            sw.ms());
    for (const auto& [a, b] : w.support_bijection) {
        ++checks;
        Matrix comp = g1.component(a);
        std::vector<Vec> mapped;
        for (size_t r = 0; r < comp.rows(); ++r) mapped.push_back(w.map.apply(comp.row(r)));
        Matrix image = row_space(Matrix::from_rows(mapped, B.dim()));
        if (!(image == g2.component(b)))
            return Report::fail(checks,
                                {"component of degree " + g_str(a),
                                 "maps onto component of degree " + g_str(b), "image differs"},
                                sw.ms());
    }
    return Report::pass(checks, sw.ms());
}

std::string GradingInvariants::str() const {
    std::string s = "support " + std::to_string(support_size) + "; dims {";
    for (size_t i = 0; i < component_dims.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(component_dims[i]);
    }
    s += "}; universal free rank " + std::to_string(universal.first) + ", torsion [";
    for (size_t i = 0; i < universal.second.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(universal.second[i]);
    }
    return s + "]";
}

GradingInvariants grading_invariants(const Grading& g) {
    GradingInvariants inv;
    std::vector<GroupElem> supp = g.support();
    inv.support_size = supp.size();
    for (const auto& s : supp) inv.component_dims.push_back(g.rows_of_degree(s).size());
    std::sort(inv.component_dims.begin(), inv.component_dims.end());
    auto [U, regraded] = universal_group(g);
    (void)regraded;
    inv.universal = U.canonical_invariants();
    return inv;
}

}  // namespace gradecheck
