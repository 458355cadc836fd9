#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gradecheck/matrix.hpp"
#include "gradecheck/report.hpp"

namespace gradecheck {

// Finite-dimensional algebra over Q(i) given by sparse structure constants.
// Immutable after construction; all operations on it are pure.
struct AlgebraOptions {
    bool validate = true;  // involution/unit axioms checked on construction
};

class Algebra {
public:

    // structure[i*dim+j] is the product b_i * b_j. The involution matrix, if
    // present, has row i = sigma(b_i). If no unit is supplied one is solved
    // for; absence of a solution just leaves the algebra non-unital.
    static std::shared_ptr<const Algebra> create(std::string name, size_t dim,
                                                 std::vector<std::string> labels,
                                                 std::vector<SparseRow> structure,
                                                 std::optional<Matrix> involution = std::nullopt,
                                                 std::optional<Vec> unit = std::nullopt,
                                                 AlgebraOptions opt = AlgebraOptions());

    const std::string& name() const { return name_; }
    size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const SparseRow& prod(size_t i, size_t j) const { return structure_[i * dim_ + j]; }
    const std::vector<SparseRow>& structure() const { return structure_; }
    bool has_involution() const { return involution_.has_value(); }
    const Matrix& involution() const { return *involution_; }
    bool has_unit() const { return unit_.has_value(); }
    const Vec& unit() const { return *unit_; }

    Vec multiply(const Vec& x, const Vec& y) const;
    Vec conj(const Vec& x) const;       // requires involution
    SpMat left_mult(const Vec& x) const;
    SpMat right_mult(const Vec& x) const;
    Vec basis_vec(size_t i) const;

    // Same algebra expressed on a new basis (rows of h = new basis vectors
    // in old coordinates; must be invertible).
    std::shared_ptr<const Algebra> rebased(const Matrix& h, std::string new_name,
                                           std::vector<std::string> new_labels) const;

private:
    std::string name_;
    size_t dim_;
    std::vector<std::string> labels_;
    std::vector<SparseRow> structure_;
    std::optional<Matrix> involution_;
    std::optional<Vec> unit_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Subspace of an algebra, rows kept in canonical reduced row echelon form.
struct Subspace {
    AlgebraPtr ambient;
    Matrix basis;
    size_t dim() const { return basis.rows(); }
};

std::string format_vec(const Algebra& a, const Vec& v);

// T_x = V_{x,1}: z -> xz + zx - z*conj(x).
SpMat t_operator_matrix(const Algebra& a, const Vec& x);

// V_{x,y}: z -> (x conj(y))z + (z conj(y))x - (z conj(x))y.
SpMat v_operator_matrix(const Algebra& a, const Vec& x, const Vec& y);

// Structurable identity [T_z, V_{x,y}] = V_{T_z x, y} - V_{x, T_conj(z) y},
// swept over all basis triples (complete by multilinearity).
Report check_structurable(const Algebra& a);

// Largest subspace of elements a with (a,x,y) = -(x,a,y) = (x,y,a).
Subspace generalized_alt_nucleus(const AlgebraPtr& a);

// Exact derivation algebra: rows are flattened n x n matrices D with
// D(xy) = D(x)y + x D(y). Intended for moderate dimensions.
Subspace derivation_algebra(const AlgebraPtr& a);

// Derivation-space dimension via modular rank at two primes (sketched
// elimination, loud failure on disagreement). Suitable for large algebras.
size_t derivation_dimension(const Algebra& a, std::uint64_t p1, std::uint64_t p2,
                            std::uint64_t seed = 42);

// Smallest subspace containing seed and closed under multiplication by the
// whole algebra on both sides.
Subspace ideal_closure(const AlgebraPtr& a, const Matrix& seed);

// Eigenspace split of the involution: (skew = -1, hermitian = +1).
std::pair<Subspace, Subspace> split_involution(const AlgebraPtr& a);

// Full alternativity sweep: polarized (x,y,z)+(y,x,z) = 0 and
// (x,y,z)+(x,z,y) = 0 on basis triples.
Report check_alternative(const Algebra& a);

}  // namespace gradecheck
