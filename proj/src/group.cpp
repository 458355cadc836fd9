#include "gradecheck/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gradecheck {

std::string AbelianGroup::str() const {
    if (free_rank == 0 && torsion.empty()) return "0";
    std::string s;
    if (free_rank == 1) s = "Z";
    if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
    for (long long m : torsion) {
        if (!s.empty()) s += " x ";
        s += "Z/" + std::to_string(m);
    }
    return s;
}

std::pair<std::size_t, std::vector<long long>> AbelianGroup::canonical_invariants() const {
    if (torsion.empty()) return {free_rank, {}};
    IntMatrix rel(torsion.size(), torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i) rel.at(i, i) = Int(torsion[i]);
    auto [fr, tor] = smith_invariants(rel);
    if (fr != 0) throw std::logic_error("torsion moduli must be nonzero");
    std::vector<long long> t;
    for (const Int& d : tor) t.push_back(d.small());
    return {free_rank, t};
}

AbelianGroup AbelianGroup::product(const AbelianGroup& g, const AbelianGroup& h) {
    AbelianGroup p;
    p.free_rank = g.free_rank + h.free_rank;
    p.torsion = g.torsion;
    p.torsion.insert(p.torsion.end(), h.torsion.begin(), h.torsion.end());
    return p;
}

GroupElem g_zero(const AbelianGroup& g) { return GroupElem(g.coords(), 0); }

GroupElem g_reduce(const AbelianGroup& g, GroupElem x) {
    if (x.size() != g.coords()) throw std::invalid_argument("group element: wrong length");
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        long long m = g.torsion[i];
        long long& v = x[g.free_rank + i];
        v %= m;
        if (v < 0) v += m;
    }
    return x;
}

GroupElem g_add(const AbelianGroup& g, const GroupElem& a, const GroupElem& b) {
    GroupElem c(a);
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return g_reduce(g, std::move(c));
}

GroupElem g_sub(const AbelianGroup& g, const GroupElem& a, const GroupElem& b) {
    GroupElem c(a);
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return g_reduce(g, std::move(c));
}

GroupElem g_neg(const AbelianGroup& g, const GroupElem& a) {
    GroupElem c(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return g_reduce(g, std::move(c));
}

GroupElem g_scale(const AbelianGroup& g, long long k, const GroupElem& a) {
    GroupElem c(a);
    for (auto& v : c) v *= k;
    return g_reduce(g, std::move(c));
}

bool g_is_zero(const GroupElem& a) {
    return std::all_of(a.begin(), a.end(), [](long long v) { return v == 0; });
}

std::string g_str(const GroupElem& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

long long g_order(const AbelianGroup& g, const GroupElem& a) {
    for (std::size_t i = 0; i < g.free_rank; ++i)
        if (a[i] != 0) return 0;
    long long ord = 1;
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        long long v = a[g.free_rank + i], m = g.torsion[i];
        if (v == 0) continue;
        long long d = std::gcd(v, m);
        long long o = m / d;
        ord = ord / std::gcd(ord, o) * o;
    }
    return ord;
}

GroupElem g_embed_left(const AbelianGroup& g, const AbelianGroup& h, const GroupElem& a) {
    AbelianGroup p = AbelianGroup::product(g, h);
    GroupElem c(p.coords(), 0);
    for (std::size_t i = 0; i < g.free_rank; ++i) c[i] = a[i];
    for (std::size_t i = 0; i < g.torsion.size(); ++i)
        c[p.free_rank + i] = a[g.free_rank + i];
    return c;
}

GroupElem g_embed_right(const AbelianGroup& g, const AbelianGroup& h, const GroupElem& b) {
    AbelianGroup p = AbelianGroup::product(g, h);
    GroupElem c(p.coords(), 0);
    for (std::size_t i = 0; i < h.free_rank; ++i) c[g.free_rank + i] = b[i];
    for (std::size_t i = 0; i < h.torsion.size(); ++i)
        c[p.free_rank + g.torsion.size() + i] = b[h.free_rank + i];
    return c;
}

GroupElem GroupHom::apply(const GroupElem& x) const {
    if (x.size() != domain.coords()) throw std::invalid_argument("hom apply: wrong length");
    GroupElem y = g_zero(codomain);
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] == 0) continue;
        y = g_add(codomain, y, g_scale(codomain, x[k], images[k]));
    }
    return y;
}

bool GroupHom::valid() const {
    if (images.size() != domain.coords()) return false;
    for (std::size_t i = 0; i < domain.torsion.size(); ++i) {
        const GroupElem& img = images[domain.free_rank + i];
        long long o = g_order(codomain, img);
        if (o == 0) return false;
        if (domain.torsion[i] % o != 0) return false;
    }
    return true;
}

namespace {

// Integer matrix whose columns are the generator images plus the codomain
// torsion relations; the hom's image lattice in Z^{codomain.coords()}.
IntMatrix image_with_relations(const GroupHom& h) {
    std::size_t nc = h.codomain.coords();
    std::size_t nd = h.domain.coords();
    std::size_t tc = h.codomain.torsion.size();
    IntMatrix m(nc, nd + tc);
    for (std::size_t k = 0; k < nd; ++k)
        for (std::size_t i = 0; i < nc; ++i) m.at(i, k) = Int(h.images[k][i]);
    for (std::size_t j = 0; j < tc; ++j)
        m.at(h.codomain.free_rank + j, nd + j) = Int(h.codomain.torsion[j]);
    return m;
}

}  // namespace

bool GroupHom::surjective() const {
    // quotient of codomain by the image must be trivial
    IntMatrix m = image_with_relations(*this);
    IntMatrix rows(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) rows.at(j, i) = m.at(i, j);
    auto [fr, tor] = smith_invariants(rows);
    return fr == 0 && tor.empty();
}

std::vector<GroupElem> GroupHom::kernel_elements(std::size_t bound) const {
    std::size_t nd = domain.coords();
    // kernel lattice of [images | codomain relations] in the x-part
    IntMatrix m = image_with_relations(*this);
    IntMatrix mt(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) mt.at(j, i) = m.at(i, j);
    IntMatrix ker = int_left_kernel(mt);  // rows y with y * m^T = 0, i.e. m y^T = 0
    std::vector<GroupElem> gens;
    for (std::size_t r = 0; r < ker.rows; ++r) {
        GroupElem x(nd, 0);
        bool fits = true;
        for (std::size_t j = 0; j < nd; ++j) {
            Int v = ker.at(r, j);
            if (!v.is_small()) { fits = false; break; }
            x[j] = v.small();
        }
        if (!fits) throw std::runtime_error("kernel generator exceeds representable range");
        gens.push_back(g_reduce(domain, std::move(x)));
    }
    // also the domain's own torsion relations
    for (std::size_t i = 0; i < domain.torsion.size(); ++i) {
        GroupElem x(nd, 0);
        x[domain.free_rank + i] = domain.torsion[i];
        gens.push_back(g_reduce(domain, std::move(x)));
    }
    std::set<GroupElem> seen{g_zero(domain)};
    std::vector<GroupElem> work{g_zero(domain)};
    while (!work.empty()) {
        GroupElem e = work.back();
        work.pop_back();
        for (const auto& gen : gens) {
            for (const GroupElem& next :
                 {g_add(domain, e, gen), g_sub(domain, e, gen)}) {
                if (seen.insert(next).second) {
                    if (seen.size() > bound)
                        throw std::runtime_error("homomorphism kernel is infinite or too large");
                    work.push_back(next);
                }
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::optional<GroupElem> GroupHom::preimage(const GroupElem& y) const {
    IntMatrix m = image_with_relations(*this);
    std::vector<Int> b(codomain.coords());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = Int(y[i]);
    auto x = int_solve(m, b);
    if (!x) return std::nullopt;
    GroupElem e(domain.coords(), 0);
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (!(*x)[j].is_small()) throw std::runtime_error("preimage exceeds representable range");
        e[j] = (*x)[j].small();
    }
    return g_reduce(domain, std::move(e));
}

std::optional<GroupElem> GroupHom::canonical_preimage(const GroupElem& y) const {
    auto p = preimage(y);
    if (!p) return std::nullopt;
    GroupElem best = *p;
    for (const GroupElem& k : kernel_elements()) {
        GroupElem cand = g_add(domain, *p, k);
        if (cand < best) best = cand;
    }
    return best;
}

}  // namespace gradecheck
