#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradecheck/smith.hpp"

namespace gradecheck {

// Finitely generated abelian group Z^free_rank x prod Z/m_i. Elements are
// coordinate vectors: free coordinates first, then torsion residues reduced
// into [0, m_i).
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<long long> torsion;

    std::size_t coords() const { return free_rank + torsion.size(); }
    bool operator==(const AbelianGroup&) const = default;
    std::string str() const;

    // Invariant factors (free rank, d_1 | d_2 | ...) for isomorphism tests.
    std::pair<std::size_t, std::vector<long long>> canonical_invariants() const;
    bool isomorphic_to(const AbelianGroup& o) const {
        return canonical_invariants() == o.canonical_invariants();
    }

    static AbelianGroup product(const AbelianGroup& g, const AbelianGroup& h);
    static AbelianGroup trivial() { return {0, {}}; }
    static AbelianGroup free_group(std::size_t rank) { return {rank, {}}; }
    static AbelianGroup cyclic(long long m) { return {0, {m}}; }
};

using GroupElem = std::vector<long long>;

GroupElem g_zero(const AbelianGroup& g);
GroupElem g_reduce(const AbelianGroup& g, GroupElem x);
GroupElem g_add(const AbelianGroup& g, const GroupElem& a, const GroupElem& b);
GroupElem g_sub(const AbelianGroup& g, const GroupElem& a, const GroupElem& b);
GroupElem g_neg(const AbelianGroup& g, const GroupElem& a);
GroupElem g_scale(const AbelianGroup& g, long long k, const GroupElem& a);
bool g_is_zero(const GroupElem& a);
std::string g_str(const GroupElem& a);
// order of the element; 0 means infinite
long long g_order(const AbelianGroup& g, const GroupElem& a);
// embeddings into a product group (left/right factor)
GroupElem g_embed_left(const AbelianGroup& g, const AbelianGroup& h, const GroupElem& a);
GroupElem g_embed_right(const AbelianGroup& g, const AbelianGroup& h, const GroupElem& b);

// Homomorphism given by the images of the domain's generators (free
// generators first, then one generator per torsion factor).
struct GroupHom {
    AbelianGroup domain, codomain;
    std::vector<GroupElem> images;

    GroupElem apply(const GroupElem& x) const;
    // each torsion generator's image order must divide the generator order
    bool valid() const;
    bool surjective() const;
    // All kernel elements; throws if the kernel is infinite or exceeds the
    // bound.
    std::vector<GroupElem> kernel_elements(std::size_t bound = 4096) const;
    // Some preimage of y, or nullopt.
    std::optional<GroupElem> preimage(const GroupElem& y) const;
    // Lexicographically smallest preimage (among preimage + finite kernel).
    std::optional<GroupElem> canonical_preimage(const GroupElem& y) const;
};

}  // namespace gradecheck
