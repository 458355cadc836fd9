#pragma once

#include <functional>
#include <map>

#include "gradecheck/algebra.hpp"
#include "gradecheck/group.hpp"

namespace gradecheck {

// Grading presented by a homogeneous basis: row r of hbasis is a homogeneous
// vector (in algebra coordinates) of degree degrees[r]. For gradings whose
// homogeneous basis is the algebra's own basis, hbasis is the identity.
struct Grading {
    AlgebraPtr algebra;
    AbelianGroup group;
    Matrix hbasis;
    Matrix hinv;
    std::vector<GroupElem> degrees;
    std::vector<std::string> hlabels;  // optional; empty means algebra labels/h<i>

    static Grading make(AlgebraPtr a, AbelianGroup g, Matrix hbasis, std::vector<GroupElem> deg,
                        std::vector<std::string> labels = {});
    static Grading diagonal(AlgebraPtr a, AbelianGroup g, std::vector<GroupElem> deg);

    bool is_diagonal() const;
    std::vector<GroupElem> support() const;                 // sorted, unique
    std::vector<size_t> rows_of_degree(const GroupElem&) const;
    Matrix component(const GroupElem&) const;               // canonical RREF
    std::string row_label(size_t r) const;
};

// A_g A_h <= A_{g+h} on all homogeneous basis pairs; optionally also
// sigma(A_g) <= A_g.
Report verify_grading(const Grading& g, bool with_involution);

// Universal group of a verified grading plus the canonical relabeling of the
// same homogeneous basis over it.
std::pair<AbelianGroup, Grading> universal_group(const Grading& g);

// Degrees pushed through a homomorphism (grading group = hom domain).
Grading coarsen(const Grading& g, const GroupHom& hom);

enum class CombineMode { tensor, product_same_group, direct_product };

// Combined grading on the supplied combined algebra (tensor or direct
// product of the two graded algebras, built by the constructions module).
Grading combine(const Grading& g1, const Grading& g2, CombineMode mode, AlgebraPtr combined);

// True iff no proper nonzero sum of the given minimal ideals is a graded
// subspace. The caller supplies the complete minimal-ideal list.
bool graded_simple(const Grading& g, const std::vector<Subspace>& minimal_ideals);

struct EquivalenceWitness {
    Matrix map;  // candidate algebra isomorphism (row i = image of basis i)
    std::vector<std::pair<GroupElem, GroupElem>> support_bijection;
};

Report check_equivalence_witness(const Grading& g1, const Grading& g2,
                                 const EquivalenceWitness& w);

struct GradingInvariants {
    size_t support_size = 0;
    std::vector<size_t> component_dims;  // sorted
    std::pair<std::size_t, std::vector<long long>> universal;  // canonical invariants
    bool operator==(const GradingInvariants&) const = default;
    std::string str() const;
};

GradingInvariants grading_invariants(const Grading& g);

// Shared verification core, also used for Lie-algebra gradings: checks that
// product(h_r, h_s) is supported on rows of degree deg_r + deg_s.
Report verify_graded_product(const AbelianGroup& group, const std::vector<GroupElem>& degrees,
                             const Matrix& hbasis, const Matrix& hinv, size_t dim,
                             const std::function<Vec(const Vec&, const Vec&)>& product,
                             const std::function<Vec(const Vec&)>* involution,
                             const std::function<std::string(size_t)>& rowname);

}  // namespace gradecheck
