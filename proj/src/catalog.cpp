#include "gradecheck/catalog.hpp"

#include <map>
#include <mutex>

namespace gradecheck {

namespace {

std::mutex cache_mu;

Grading cartan_c() { return standard_grading(8, StandardGradingKind::cartan); }
Grading cd_c() { return standard_grading(8, StandardGradingKind::cayley_dickson); }

// Catalog entries share one Cayley algebra object so that component
// comparisons across entries are meaningful; standard_grading builds fresh
// copies, so rebind them onto the shared instance.
Grading on_shared_cayley(Grading g) {
    return Grading::make(cayley_algebra(), g.group, g.hbasis, g.degrees, g.hlabels);
}

GroupElem el(std::initializer_list<long long> v) { return GroupElem(v); }

Grading tensor_catalog(const Grading& g1, const Grading& g2, AlgebraPtr combined) {
    return combine(g1, g2, CombineMode::tensor, std::move(combined));
}

// The three loop gradings on C x C.
Grading loop_grading(const std::string& which) {
    AlgebraPtr cxc = cayley_times_cayley();
    if (which == "z2z2") {
        // G = Z^2 x Z/2 (free coordinates first), h the torsion generator,
        // chi = (-1)^torsion, pi drops the torsion coordinate onto Z^2.
        AbelianGroup G{2, {2}};
        Grading base = on_shared_cayley(cartan_c());
        GroupHom pi{G, base.group, {el({1, 0}), el({0, 1}), el({0, 0})}};
        Character chi{G, {0, 0, 2}};
        return loop_to_product(base, pi, el({0, 0, 1}), chi, cxc);
    }
    if (which == "z2^4") {
        AbelianGroup G{0, {2, 2, 2, 2}};
        Grading base = on_shared_cayley(cd_c());
        GroupHom pi{G, base.group,
                    {el({0, 0, 0}), el({1, 0, 0}), el({0, 1, 0}), el({0, 0, 1})}};
        Character chi{G, {2, 0, 0, 0}};
        return loop_to_product(base, pi, el({1, 0, 0, 0}), chi, cxc);
    }
    if (which == "z4") {
        AbelianGroup G{0, {4, 2, 2}};
        Grading base = on_shared_cayley(cd_c());
        GroupHom pi{G, base.group, {el({1, 0, 0}), el({0, 1, 0}), el({0, 0, 1})}};
        Character chi{G, {1, 0, 0}};
        return loop_to_product(base, pi, el({2, 0, 0}), chi, cxc);
    }
    throw std::invalid_argument("unknown loop grading " + which);
}

// The three fine gradings on C (x) C that are generated from homogeneous
// skew elements x(x)1 +- 1(x)x (and the Z/4 variant with i-coefficients).
Grading generated_tensor_grading(int which) {
    AlgebraPtr cxc = cayley_tensor_cayley();
    AlgebraPtr c = cayley_algebra();
    if (which == 4) {
        AbelianGroup G{2, {2}};  // Z^2 x Z/2, free first
        Grading base = on_shared_cayley(cartan_c());
        GradedGenerators gens{cxc, G, {}};
        // degree (0|eps) component: x (x) 1 + (-1)^eps 1 (x) x for x in C_g,
        // including g = 0 with x = e1 - e2
        Vec d = sub(c->basis_vec(0), c->basis_vec(1));
        gens.gens.emplace_back(embed_skew_pair(*c, d, d), el({0, 0, 0}));
        gens.gens.emplace_back(embed_skew_pair(*c, d, scaled(d, Scalar(-1))), el({0, 0, 1}));
        for (const GroupElem& g : base.support()) {
            if (g_is_zero(g)) continue;
            Matrix comp = base.component(g);
            for (size_t r = 0; r < comp.rows(); ++r) {
                Vec x = comp.row(r);
                gens.gens.emplace_back(embed_skew_pair(*c, x, x), el({g[0], g[1], 0}));
                gens.gens.emplace_back(embed_skew_pair(*c, x, scaled(x, Scalar(-1))),
                                       el({g[0], g[1], 1}));
            }
        }
        return grading_closure(gens);
    }
    if (which == 5) {
        AbelianGroup G{0, {2, 2, 2, 2}};  // first coordinate distinguishes the sign
        Grading base = on_shared_cayley(cd_c());
        GradedGenerators gens{cxc, G, {}};
        for (const GroupElem& g : base.support()) {
            if (g_is_zero(g)) continue;
            Matrix comp = base.component(g);
            for (size_t r = 0; r < comp.rows(); ++r) {
                Vec x = comp.row(r);
                gens.gens.emplace_back(embed_skew_pair(*c, x, x), el({0, g[0], g[1], g[2]}));
                gens.gens.emplace_back(embed_skew_pair(*c, x, scaled(x, Scalar(-1))),
                                       el({1, g[0], g[1], g[2]}));
            }
        }
        return grading_closure(gens);
    }
    if (which == 6) {
        AbelianGroup G{0, {4, 2, 2}};
        Grading base = on_shared_cayley(cd_c());
        GradedGenerators gens{cxc, G, {}};
        for (long long mhat = 0; mhat < 4; ++mhat)
            for (long long nn = 0; nn < 2; ++nn)
                for (long long rr = 0; rr < 2; ++rr) {
                    GroupElem proj = el({mhat % 2, nn, rr});
                    if (g_is_zero(proj)) continue;
                    Matrix comp = base.component(proj);
                    if (comp.rows() == 0) continue;
                    for (size_t r = 0; r < comp.rows(); ++r) {
                        Vec x = comp.row(r);
                        // x (x) 1 + i^m (1 (x) x)
                        Vec gen = embed_skew_pair(*c, x, scaled(x, Scalar::i_pow(mhat)));
                        gens.gens.emplace_back(std::move(gen), el({mhat, nn, rr}));
                    }
                }
        return grading_closure(gens);
    }
    throw std::invalid_argument("unknown generated tensor grading");
}

CatalogEntry build(const std::string& name) {
    auto mk = [&](std::string title, AlgebraPtr alg, Grading g,
                  AbelianGroup stated) -> CatalogEntry {
        return {name, std::move(title), std::move(alg), std::move(g), std::move(stated)};
    };
    AlgebraPtr c = cayley_algebra();
    if (name == "cayley-cartan")
        return mk("Cartan grading on the split Cayley algebra", c, on_shared_cayley(cartan_c()),
                  AbelianGroup::free_group(2));
    if (name == "cayley-cd")
        return mk("Cayley-Dickson grading on the split Cayley algebra", c,
                  on_shared_cayley(cd_c()), AbelianGroup{0, {2, 2, 2}});
    if (name == "cxk-1" || name == "cxk-2") {
        auto [k, nk] = split_hurwitz(2);
        AlgebraPtr ck = tensor_with_involution(c, k);
        Grading gk = standard_grading(2, StandardGradingKind::cayley_dickson);
        gk = Grading::make(k, gk.group, gk.hbasis, gk.degrees, gk.hlabels);
        if (name == "cxk-1")
            return mk("CD (x) CD grading on C (x) K", ck,
                      tensor_catalog(on_shared_cayley(cd_c()), gk, ck),
                      AbelianGroup{0, {2, 2, 2, 2}});
        return mk("Cartan (x) CD grading on C (x) K", ck,
                  tensor_catalog(on_shared_cayley(cartan_c()), gk, ck), AbelianGroup{2, {2}});
    }
    if (name.rfind("cxh-", 0) == 0) {
        auto [h, nh] = split_hurwitz(4);
        AlgebraPtr ch = tensor_with_involution(c, h);
        Grading hcd = standard_grading(4, StandardGradingKind::cayley_dickson);
        hcd = Grading::make(h, hcd.group, hcd.hbasis, hcd.degrees, hcd.hlabels);
        Grading hca = standard_grading(4, StandardGradingKind::cartan);
        hca = Grading::make(h, hca.group, hca.hbasis, hca.degrees, hca.hlabels);
        if (name == "cxh-1")
            return mk("CD (x) CD grading on C (x) H", ch,
                      tensor_catalog(on_shared_cayley(cd_c()), hcd, ch),
                      AbelianGroup{0, {2, 2, 2, 2, 2}});
        if (name == "cxh-2")
            return mk("CD (x) Cartan grading on C (x) H", ch,
                      tensor_catalog(on_shared_cayley(cd_c()), hca, ch),
                      AbelianGroup{1, {2, 2, 2}});
        if (name == "cxh-3")
            return mk("Cartan (x) CD grading on C (x) H", ch,
                      tensor_catalog(on_shared_cayley(cartan_c()), hcd, ch),
                      AbelianGroup{2, {2, 2}});
        if (name == "cxh-4")
            return mk("Cartan (x) Cartan grading on C (x) H", ch,
                      tensor_catalog(on_shared_cayley(cartan_c()), hca, ch),
                      AbelianGroup::free_group(3));
    }
    if (name.rfind("cxc-prod-", 0) == 0) {
        AlgebraPtr cc = cayley_times_cayley();
        auto pick = [&](char ch) {
            return ch == '1' ? on_shared_cayley(cartan_c()) : on_shared_cayley(cd_c());
        };
        std::string suffix = name.substr(9);
        if (suffix.size() == 2) {
            Grading g = combine(pick(suffix[0]), pick(suffix[1]), CombineMode::direct_product, cc);
            AbelianGroup stated =
                AbelianGroup::product(pick(suffix[0]).group, pick(suffix[1]).group);
            return mk("product grading on C x C", cc, std::move(g), std::move(stated));
        }
    }
    if (name == "cxc-loop-z2z2")
        return mk("loop grading on C x C over Z/2 x Z^2", cayley_times_cayley(),
                  loop_grading("z2z2"), AbelianGroup{2, {2}});
    if (name == "cxc-loop-z2^4")
        return mk("loop grading on C x C over (Z/2)^4", cayley_times_cayley(),
                  loop_grading("z2^4"), AbelianGroup{0, {2, 2, 2, 2}});
    if (name == "cxc-loop-z4")
        return mk("loop grading on C x C over Z/4 x (Z/2)^2", cayley_times_cayley(),
                  loop_grading("z4"), AbelianGroup{0, {4, 2, 2}});
    if (name.rfind("ctc-", 0) == 0) {
        AlgebraPtr cc = cayley_tensor_cayley();
        int which = std::stoi(name.substr(4));
        switch (which) {
            case 1:
                return mk("Cartan (x) Cartan on C (x) C", cc,
                          tensor_catalog(on_shared_cayley(cartan_c()),
                                         on_shared_cayley(cartan_c()), cc),
                          AbelianGroup::free_group(4));
            case 2:
                return mk("Cartan (x) CD on C (x) C", cc,
                          tensor_catalog(on_shared_cayley(cartan_c()), on_shared_cayley(cd_c()),
                                         cc),
                          AbelianGroup{2, {2, 2, 2}});
            case 3:
                return mk("CD (x) CD on C (x) C", cc,
                          tensor_catalog(on_shared_cayley(cd_c()), on_shared_cayley(cd_c()), cc),
                          AbelianGroup{0, {2, 2, 2, 2, 2, 2}});
            case 4:
                return mk("graded-simple transfer over Z/2 x Z^2", cc,
                          generated_tensor_grading(4), AbelianGroup{2, {2}});
            case 5:
                return mk("graded-simple transfer over (Z/2)^4", cc, generated_tensor_grading(5),
                          AbelianGroup{0, {2, 2, 2, 2}});
            case 6:
                return mk("graded-simple transfer over Z/4 x (Z/2)^2", cc,
                          generated_tensor_grading(6), AbelianGroup{0, {4, 2, 2}});
            default:;
        }
    }
    if (name == "smirnov-z2") {
        const SmirnovModel& m = smirnov_model();
        return mk("grading on T(C) induced from the Cartan grading", m.T,
                  induce_grading(m, on_shared_cayley(cartan_c())), AbelianGroup::free_group(2));
    }
    if (name == "smirnov-z2cubed") {
        const SmirnovModel& m = smirnov_model();
        return mk("grading on T(C) induced from the Cayley-Dickson grading", m.T,
                  induce_grading(m, on_shared_cayley(cd_c())), AbelianGroup{0, {2, 2, 2}});
    }
    throw std::invalid_argument("unknown catalog name: " + name);
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "cayley-cartan", "cayley-cd",     "cxk-1",         "cxk-2",         "cxh-1",
        "cxh-2",         "cxh-3",         "cxh-4",         "cxc-prod-11",   "cxc-prod-12",
        "cxc-prod-22",   "cxc-loop-z2z2", "cxc-loop-z2^4", "cxc-loop-z4",   "ctc-1",
        "ctc-2",         "ctc-3",         "ctc-4",         "ctc-5",         "ctc-6",
        "smirnov-z2",    "smirnov-z2cubed"};
    return names;
}

AlgebraPtr cayley_algebra() {
    static AlgebraPtr c = split_hurwitz(8).first;
    return c;
}

QuadraticForm cayley_norm() {
    static QuadraticForm n = norm_from_conjugation(*cayley_algebra());
    return n;
}

AlgebraPtr cayley_tensor_cayley() {
    static AlgebraPtr cc = tensor_with_involution(cayley_algebra(), cayley_algebra());
    return cc;
}

AlgebraPtr cayley_times_cayley() {
    static AlgebraPtr cc = direct_product(cayley_algebra(), cayley_algebra());
    return cc;
}

const SmirnovModel& smirnov_model() {
    static SmirnovModel m = build_smirnov(cayley_algebra(), cayley_norm());
    return m;
}

CatalogEntry catalog_entry(const std::string& name) {
    std::lock_guard<std::mutex> lk(cache_mu);
    static std::map<std::string, CatalogEntry> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, build(name)).first;
    return it->second;
}

}  // namespace gradecheck
