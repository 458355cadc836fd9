#pragma once

#include "gradecheck/grading.hpp"

namespace gradecheck {

// Lie algebra with sparse bracket constants and the Z-labels of the
// 5-grading it was built with.
struct LieAlgebra {
    size_t dim = 0;
    std::vector<SparseRow> bracket;  // [b_i, b_j] at i*dim + j
    std::vector<int> zlabel;
    std::vector<std::string> labels;

    const SparseRow& br(size_t i, size_t j) const { return bracket[i * dim + j]; }
    Vec bracket_vec(const Vec& x, const Vec& y) const;
};

// Kantor construction bookkeeping: block layout S^- A^- innstr A^+ S^+.
struct KantorModel {
    AlgebraPtr A;
    LieAlgebra L;
    Matrix skew;            // dim_s x n: skew basis of A
    Matrix innstr_basis;    // dim_i x 2n^2: canonical rows (E | F) flattened
    size_t dim_s = 0, dim_a = 0, dim_i = 0;
    size_t off_sminus = 0, off_aminus = 0, off_innstr = 0, off_aplus = 0, off_splus = 0;
};

// span{nu(x,y) = (V_{x,y}, -V_{y,x})} as flattened (E|F) rows of width
// 2 dim(A)^2; the dimension is certified by a modular pre-pass and the exact
// echelon agreeing.
Subspace innstr_subspace(const AlgebraPtr& a);

// The 5-graded Lie algebra S^- + A^- + innstr(A) + A^+ + S^+. By default the
// structurable identity is checked first.
KantorModel kantor(const AlgebraPtr& a, bool require_structurable = true);

// Antisymmetry on all pairs plus the Jacobi identity on all triples
// (i < j < k; degenerate triples vanish identically once antisymmetry
// holds).
Report check_lie_full(const LieAlgebra& l, int threads = 2);
// Antisymmetry on all pairs; Jacobi on `samples` seeded pseudorandom
// triples.
Report check_lie_sampled(const LieAlgebra& l, std::uint64_t seed, size_t samples);

struct LieGrading {
    AbelianGroup group;
    Matrix hbasis, hinv;
    std::vector<GroupElem> degrees;
    std::vector<std::string> labels;
};

// Z x G extension of an involution preserving grading on A: deg s± = (±2, d),
// deg a± = (±1, d), deg f = (0, d). Verified before being returned.
LieGrading extend_grading(const KantorModel& m, const Grading& on_a);

Report verify_lie_grading(const LieAlgebra& l, const LieGrading& g);

}  // namespace gradecheck
