#include "gradecheck/kantor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <thread>

#include "gradecheck/modular.hpp"

namespace gradecheck {

Vec LieAlgebra::bracket_vec(const Vec& x, const Vec& y) const {
    Vec out(dim);
    for (size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (const auto& [k, v] : br(i, j).ent) out[k] += c * v;
        }
    }
    return out;
}

namespace {

// nu(x, y) = (V_{x,y} | -V_{y,x}) flattened row-major into 2n^2 coordinates.
Vec nu_flat(const Algebra& a, const Vec& x, const Vec& y) {
    size_t n = a.dim();
    SpMat e = v_operator_matrix(a, x, y);
    SpMat f = v_operator_matrix(a, y, x);
    Vec out(2 * n * n);
    for (size_t i = 0; i < n; ++i) {
        for (const auto& [j, v] : e.rows[i].ent) out[i * n + j] = v;
        for (const auto& [j, v] : f.rows[i].ent) out[n * n + i * n + j] = -v;
    }
    return out;
}

struct InnstrBasis {
    EchelonBasis basis;
    std::vector<std::pair<size_t, size_t>> pivot_pairs;
};

InnstrBasis innstr_echelon(const Algebra& a) {
    size_t n = a.dim();
    size_t width = 2 * n * n;
    // modular pre-pass locates the pivot pairs cheaply
    MontCtx ctx = MontCtx::make(kPrime1);
    ModEchelon filter(width, ctx);
    std::vector<std::pair<size_t, size_t>> pivots;
    std::vector<std::uint32_t> resid(width);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec row = nu_flat(a, a.basis_vec(i), a.basis_vec(j));
            std::fill(resid.begin(), resid.end(), 0);
            for (size_t k = 0; k < width; ++k)
                if (!row[k].is_zero()) resid[k] = residue_mont(row[k], ctx);
            if (filter.insert(resid)) pivots.emplace_back(i, j);
        }
    InnstrBasis out{EchelonBasis(width), pivots};
    for (auto [i, j] : pivots)
        if (!out.basis.insert(nu_flat(a, a.basis_vec(i), a.basis_vec(j))))
            throw std::logic_error("innstr: modular pivot is exactly dependent");
    if (out.basis.dim() != filter.dim())
        throw std::logic_error("innstr: exact and modular dimensions disagree");
    return out;
}

}  // namespace

Subspace innstr_subspace(const AlgebraPtr& a) {
    InnstrBasis ib = innstr_echelon(*a);
    return Subspace{a, ib.basis.to_matrix()};
}

KantorModel kantor(const AlgebraPtr& a, bool require_structurable) {
    if (!a->has_unit() || !a->has_involution())
        throw std::invalid_argument("kantor: input must be unital with involution");
    if (require_structurable) {
        Report rep = check_structurable(*a);
        if (!rep.passed)
            throw std::invalid_argument("kantor: input is not structurable (" +
                                        rep.counterexample->inputs + ")");
    }
    size_t n = a->dim();
    auto [skew, herm] = split_involution(a);
    size_t ds = skew.dim();
    InnstrBasis inn = innstr_echelon(*a);
    size_t di = inn.basis.dim();
    KantorModel m;
    m.A = a;
    m.skew = skew.basis;
    // insertion order, so rows match the coordinates() of the echelon basis
    m.innstr_basis = inn.basis.to_matrix_insertion_order();
    m.dim_s = ds;
    m.dim_a = n;
    m.dim_i = di;
    m.off_sminus = 0;
    m.off_aminus = ds;
    m.off_innstr = ds + n;
    m.off_aplus = ds + n + di;
    m.off_splus = ds + n + di + n;
    size_t N = 2 * ds + 2 * n + di;

    LieAlgebra& L = m.L;
    L.dim = N;
    L.bracket.assign(N * N, SparseRow{});
    L.zlabel.assign(N, 0);
    L.labels.assign(N, "");
    for (size_t p = 0; p < ds; ++p) {
        L.zlabel[m.off_sminus + p] = -2;
        L.zlabel[m.off_splus + p] = 2;
        L.labels[m.off_sminus + p] = "S-" + std::to_string(p);
        L.labels[m.off_splus + p] = "S+" + std::to_string(p);
    }
    for (size_t i = 0; i < n; ++i) {
        L.zlabel[m.off_aminus + i] = -1;
        L.zlabel[m.off_aplus + i] = 1;
        L.labels[m.off_aminus + i] = "A-" + a->labels()[i];
        L.labels[m.off_aplus + i] = "A+" + a->labels()[i];
    }
    for (size_t r = 0; r < di; ++r) {
        L.zlabel[m.off_innstr + r] = 0;
        L.labels[m.off_innstr + r] = "I" + std::to_string(r);
    }

    EchelonBasis skew_eb(n);
    for (size_t r = 0; r < ds; ++r) skew_eb.insert(m.skew.row(r));
    auto skew_coords = [&](const Vec& s) {
        auto c = skew_eb.coordinates(s);
        if (!c) throw std::logic_error("kantor: vector expected in the skew part");
        return *c;
    };
    auto innstr_coords = [&](Vec flat) {
        auto c = inn.basis.coordinates(std::move(flat));
        if (!c) throw std::logic_error("kantor: operator pair escapes innstr");
        return *c;
    };
    auto set = [&](size_t p, size_t q, const Vec& v) {
        L.bracket[p * N + q] = SparseRow::from_dense(v);
        Vec neg = scaled(v, Scalar(-1));
        L.bracket[q * N + p] = SparseRow::from_dense(neg);
    };
    auto lie_vec = [&](size_t offset, const Vec& coords) {
        Vec v(N);
        for (size_t k = 0; k < coords.size(); ++k) v[offset + k] = coords[k];
        return v;
    };

    // left multiplications by the skew basis (row convention)
    std::vector<SpMat> lmul(ds);
    for (size_t p = 0; p < ds; ++p) lmul[p] = a->left_mult(m.skew.row(p));
    // innstr rows as row-convention matrices (E, F)
    std::vector<SpMat> ie(di), iff(di);
    for (size_t r = 0; r < di; ++r) {
        SpMat e(n), f(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                const Scalar& ev = m.innstr_basis.at(r, i * n + j);
                if (!ev.is_zero()) e.rows[i].add((int)j, ev);
                const Scalar& fv = m.innstr_basis.at(r, n * n + i * n + j);
                if (!fv.is_zero()) f.rows[i].add((int)j, fv);
            }
        ie[r] = std::move(e);
        iff[r] = std::move(f);
    }
    auto flat_of = [&](const SpMat& e, const SpMat& f) {
        Vec out(2 * n * n);
        for (size_t i = 0; i < n; ++i) {
            for (const auto& [j, v] : e.rows[i].ent) out[i * n + j] = v;
            for (const auto& [j, v] : f.rows[i].ent) out[n * n + i * n + j] = v;
        }
        return out;
    };
    auto psi_skew = [&](const Vec& x, const Vec& y) {
        // x conj(y) - y conj(x), a skew element
        return sub(a->multiply(x, a->conj(y)), a->multiply(y, a->conj(x)));
    };

    // [A-, A+] -> innstr; [A-, A-] -> S-; [A+, A+] -> S+
    for (size_t i = 0; i < n; ++i) {
        Vec bi = a->basis_vec(i);
        for (size_t j = 0; j < n; ++j) {
            Vec bj = a->basis_vec(j);
            set(m.off_aminus + i, m.off_aplus + j,
                lie_vec(m.off_innstr, innstr_coords(nu_flat(*a, bi, bj))));
            if (j > i) {
                Vec s = psi_skew(bi, bj);
                Vec sc = skew_coords(s);
                set(m.off_aminus + i, m.off_aminus + j, lie_vec(m.off_sminus, sc));
                set(m.off_aplus + i, m.off_aplus + j, lie_vec(m.off_splus, sc));
            }
        }
    }
    // [S-, A+] = (s a)^-; [S+, A-] = (s a)^+
    for (size_t p = 0; p < ds; ++p)
        for (size_t j = 0; j < n; ++j) {
            Vec sa = a->multiply(m.skew.row(p), a->basis_vec(j));
            set(m.off_sminus + p, m.off_aplus + j, lie_vec(m.off_aminus, sa));
            set(m.off_splus + p, m.off_aminus + j, lie_vec(m.off_aplus, sa));
        }
    // [S-, S+] = (L_s o L_t | -L_t o L_s) in innstr
    for (size_t p = 0; p < ds; ++p)
        for (size_t q = 0; q < ds; ++q) {
            SpMat e = lmul[q] * lmul[p];        // function L_s o L_t, row matrices compose reversed
            SpMat f = lmul[p] * lmul[q];
            Vec flat(2 * n * n);
            for (size_t i = 0; i < n; ++i) {
                for (const auto& [j, v] : e.rows[i].ent) flat[i * n + j] = v;
                for (const auto& [j, v] : f.rows[i].ent) flat[n * n + i * n + j] = -v;
            }
            set(m.off_sminus + p, m.off_splus + q, lie_vec(m.off_innstr, innstr_coords(flat)));
        }
    // [innstr, A±]
    for (size_t r = 0; r < di; ++r) {
        for (size_t j = 0; j < n; ++j) {
            set(m.off_innstr + r, m.off_aminus + j,
                lie_vec(m.off_aminus, ie[r].rows[j].to_dense(n)));
            set(m.off_innstr + r, m.off_aplus + j,
                lie_vec(m.off_aplus, iff[r].rows[j].to_dense(n)));
        }
        // [innstr, S-]: E o L_s - L_s o F must be L_{s'}
        for (size_t p = 0; p < ds; ++p) {
            SpMat op_minus = lmul[p] * ie[r] - iff[r] * lmul[p];
            Vec sminus = op_minus.apply(a->unit());
            if (!(op_minus - a->left_mult(sminus)).is_zero())
                throw std::logic_error("kantor: [innstr, S-] is not a left multiplication");
            set(m.off_innstr + r, m.off_sminus + p, lie_vec(m.off_sminus, skew_coords(sminus)));
            SpMat op_plus = lmul[p] * iff[r] - ie[r] * lmul[p];
            Vec splus = op_plus.apply(a->unit());
            if (!(op_plus - a->left_mult(splus)).is_zero())
                throw std::logic_error("kantor: [innstr, S+] is not a left multiplication");
            set(m.off_innstr + r, m.off_splus + p, lie_vec(m.off_splus, skew_coords(splus)));
        }
    }
    // [innstr, innstr]
    for (size_t r = 0; r < di; ++r)
        for (size_t s = r + 1; s < di; ++s) {
            SpMat e = ie[s] * ie[r] - ie[r] * ie[s];  // function commutator [E_r, E_s]
            SpMat f = iff[s] * iff[r] - iff[r] * iff[s];
            set(m.off_innstr + r, m.off_innstr + s,
                lie_vec(m.off_innstr, innstr_coords(flat_of(e, f))));
        }
    return m;
}

namespace {

bool jacobi_holds(const LieAlgebra& l, size_t i, size_t j, size_t k, Vec& acc) {
    std::fill(acc.begin(), acc.end(), Scalar());
    auto addbr = [&](const SparseRow& inner, size_t z, bool flip) {
        for (const auto& [mIdx, c] : inner.ent)
            for (const auto& [t, v] : l.br(mIdx, z).ent) {
                if (flip)
                    acc[t] -= c * v;
                else
                    acc[t] += c * v;
            }
    };
    addbr(l.br(i, j), k, false);
    addbr(l.br(j, k), i, false);
    addbr(l.br(k, i), j, false);
    return is_zero_vec(acc);
}

Report antisymmetry(const LieAlgebra& l, Stopwatch& sw, size_t& checks) {
    for (size_t i = 0; i < l.dim; ++i)
        for (size_t j = i; j < l.dim; ++j) {
            ++checks;
            SparseRow sum = l.br(i, j);
            for (const auto& [k, v] : l.br(j, i).ent) sum.add(k, v);
            if (!sum.empty())
                return Report::fail(checks,
                                    {"pair (" + l.labels[i] + ", " + l.labels[j] + ")",
                                     "[x,y] = -[y,x]", "antisymmetry fails"},
                                    sw.ms());
        }
    return Report::pass(checks, sw.ms());
}

}  // namespace

Report check_lie_full(const LieAlgebra& l, int threads) {
    Stopwatch sw;
    size_t checks = 0;
    Report anti = antisymmetry(l, sw, checks);
    if (!anti.passed) return anti;
    size_t n = l.dim;
    std::atomic<size_t> counter{0};
    std::vector<std::array<size_t, 3>> failures;
    std::mutex mu;
    auto work = [&](size_t lo, size_t hi) {
        Vec acc(n);
        size_t local = 0;
        for (size_t i = lo; i < hi; ++i)
            for (size_t j = i + 1; j < n; ++j)
                for (size_t k = j + 1; k < n; ++k) {
                    ++local;
                    if (!jacobi_holds(l, i, j, k, acc)) {
                        std::lock_guard<std::mutex> lk(mu);
                        failures.push_back({i, j, k});
                    }
                }
        counter += local;
    };
    if (threads > 1 && n > 64) {
        // split at the index where the triple count below it is about half
        size_t mid = (size_t)(n * (1.0 - 0.7937));  // (1 - 2^{-1/3}) n
        if (mid == 0 || mid >= n) mid = n / 5;
        std::thread t(work, 0, mid);
        work(mid, n);
        t.join();
    } else {
        work(0, n);
    }
    checks += counter;
    if (!failures.empty()) {
        std::sort(failures.begin(), failures.end());
        auto [i, j, k] = failures.front();
        return Report::fail(checks,
                            {"triple (" + l.labels[i] + ", " + l.labels[j] + ", " + l.labels[k] +
                                 ")",
                             "Jacobi identity", "nonzero cyclic sum"},
                            sw.ms());
    }
    return Report::pass(checks, sw.ms());
}

Report check_lie_sampled(const LieAlgebra& l, std::uint64_t seed, size_t samples) {
    Stopwatch sw;
    size_t checks = 0;
    Report anti = antisymmetry(l, sw, checks);
    if (!anti.passed) return anti;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, l.dim - 1);
    Vec acc(l.dim);
    for (size_t t = 0; t < samples; ++t) {
        size_t i = pick(rng), j = pick(rng), k = pick(rng);
        ++checks;
        if (!jacobi_holds(l, i, j, k, acc))
            return Report::fail(checks,
                                {"triple (" + l.labels[i] + ", " + l.labels[j] + ", " +
                                     l.labels[k] + ")",
                                 "Jacobi identity", "nonzero cyclic sum"},
                                sw.ms());
    }
    return Report::pass(checks, sw.ms());
}

LieGrading extend_grading(const KantorModel& m, const Grading& on_a) {
    if (on_a.algebra.get() != m.A.get())
        throw std::invalid_argument("extend_grading: grading must live on the Kantor input");
    Report rep = verify_grading(on_a, true);
    if (!rep.passed)
        throw std::invalid_argument("extend_grading: grading is not involution preserving (" +
                                    rep.counterexample->inputs + ")");
    size_t n = m.dim_a, N = m.L.dim;
    const AbelianGroup& G = on_a.group;
    AbelianGroup ZG = AbelianGroup::product(AbelianGroup::free_group(1), G);
    auto zg = [&](long long z, const GroupElem& d) {
        GroupElem e = g_embed_right(AbelianGroup::free_group(1), G, d);
        e[0] = z;
        return e;
    };
    std::vector<Vec> rows;
    std::vector<GroupElem> deg;
    std::vector<std::string> labels;
    rows.reserve(N);
    auto lie_vec = [&](size_t offset, const Vec& coords) {
        Vec v(N);
        for (size_t k = 0; k < coords.size(); ++k) v[offset + k] = coords[k];
        return v;
    };
    EchelonBasis skew_eb(n);
    for (size_t r = 0; r < m.dim_s; ++r) skew_eb.insert(m.skew.row(r));
    // homogeneous skew vectors
    std::vector<std::pair<Vec, GroupElem>> homskew;
    for (const GroupElem& s : on_a.support()) {
        Matrix inter = intersect_row_spaces(on_a.component(s), m.skew);
        for (size_t r = 0; r < inter.rows(); ++r) homskew.emplace_back(inter.row(r), s);
    }
    if (homskew.size() != m.dim_s)
        throw std::logic_error("extend_grading: homogeneous vectors do not span the skew part");
    for (auto [sign, off] : {std::pair<long long, size_t>{-2, m.off_sminus},
                             std::pair<long long, size_t>{2, m.off_splus}}) {
        for (const auto& [v, d] : homskew) {
            auto c = skew_eb.coordinates(v);
            rows.push_back(lie_vec(off, *c));
            deg.push_back(zg(sign, d));
            labels.push_back((sign < 0 ? "S-[" : "S+[") + format_vec(*m.A, v) + "]");
        }
    }
    for (auto [sign, off] : {std::pair<long long, size_t>{-1, m.off_aminus},
                             std::pair<long long, size_t>{1, m.off_aplus}}) {
        for (size_t r = 0; r < n; ++r) {
            rows.push_back(lie_vec(off, on_a.hbasis.row(r)));
            deg.push_back(zg(sign, on_a.degrees[r]));
            labels.push_back((sign < 0 ? "A-[" : "A+[") + on_a.row_label(r) + "]");
        }
    }
    // innstr re-spanned from homogeneous pairs, echelonized per degree
    EchelonBasis inn_eb(2 * n * n);
    for (size_t r = 0; r < m.innstr_basis.rows(); ++r) inn_eb.insert(m.innstr_basis.row(r));
    std::map<GroupElem, EchelonBasis> by_degree;
    size_t placed = 0;
    for (size_t r = 0; r < n; ++r)
        for (size_t s = 0; s < n; ++s) {
            Vec flat = nu_flat(*m.A, on_a.hbasis.row(r), on_a.hbasis.row(s));
            if (is_zero_vec(flat)) continue;
            auto coords = inn_eb.coordinates(std::move(flat));
            if (!coords) throw std::logic_error("extend_grading: nu pair escapes innstr");
            GroupElem d = g_add(G, on_a.degrees[r], on_a.degrees[s]);
            auto it = by_degree.find(d);
            if (it == by_degree.end()) it = by_degree.emplace(d, EchelonBasis(m.dim_i)).first;
            if (it->second.insert(std::move(*coords))) ++placed;
        }
    if (placed != m.dim_i)
        throw std::logic_error("extend_grading: homogeneous innstr spans " +
                               std::to_string(placed) + " of " + std::to_string(m.dim_i));
    for (const auto& [d, eb] : by_degree) {
        Matrix mtx = eb.to_matrix();
        for (size_t r = 0; r < mtx.rows(); ++r) {
            rows.push_back(lie_vec(m.off_innstr, mtx.row(r)));
            deg.push_back(zg(0, d));
            labels.push_back("I@" + g_str(d));
        }
    }
    Matrix h = Matrix::from_rows(rows, N);
    auto hinv = h.inverse();
    if (!hinv) throw std::logic_error("extend_grading: homogeneous basis is singular");
    LieGrading out{ZG, std::move(h), std::move(*hinv), std::move(deg), std::move(labels)};
    Report check = verify_lie_grading(m.L, out);
    if (!check.passed)
        throw std::logic_error("extend_grading: verification failed at " +
                               check.counterexample->inputs);
    return out;
}

Report verify_lie_grading(const LieAlgebra& l, const LieGrading& g) {
    std::function<Vec(const Vec&, const Vec&)> prod = [&](const Vec& x, const Vec& y) {
        return l.bracket_vec(x, y);
    };
    return verify_graded_product(g.group, g.degrees, g.hbasis, g.hinv, l.dim, prod, nullptr,
                                 [&](size_t r) {
                                     return r < g.labels.size() && !g.labels[r].empty()
                                                ? g.labels[r]
                                                : "row " + std::to_string(r);
                                 });
}

}  // namespace gradecheck
