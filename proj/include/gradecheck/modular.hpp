#pragma once

#include <cstdint>
#include <vector>

#include "gradecheck/matrix.hpp"

namespace gradecheck {

// Default primes for the two-prime modular checks. Both exceed 2^31, fit in
// 32 bits, and are 1 mod 4 so that a square root of -1 exists mod p (needed
// to reduce Q(i) scalars to F_p).
inline constexpr std::uint64_t kPrime1 = 3221225473ULL;  // 3*2^30 + 1
inline constexpr std::uint64_t kPrime2 = 3489660929ULL;  // 13*2^28 + 1

bool is_prime_u64(std::uint64_t n);

// Montgomery arithmetic mod an odd 32-bit prime. Residues are kept in the
// Montgomery domain throughout elimination.
struct MontCtx {
    std::uint32_t p = 0;
    std::uint32_t pprime = 0;   // -p^{-1} mod 2^32
    std::uint32_t r2 = 0;       // 2^64 mod p (Montgomery form of 1 squared)
    std::uint32_t one = 0;      // Montgomery form of 1
    std::uint32_t root_m1 = 0;  // Montgomery form of sqrt(-1); 0 if p != 1 mod 4

    static MontCtx make(std::uint64_t p);  // validates primality and range

    static std::uint32_t redc(std::uint64_t t, std::uint32_t p, std::uint32_t pprime) {
        std::uint32_t m = (std::uint32_t)t * pprime;
        std::uint64_t r = (t >> 32) + ((std::uint64_t)m * p >> 32) + ((std::uint32_t)t != 0);
        if (r >= p) r -= p;
        return (std::uint32_t)r;
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return redc((std::uint64_t)a * b, p, pprime);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = (std::uint64_t)a + b;
        if (s >= p) s -= p;
        return (std::uint32_t)s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : (std::uint32_t)(a + (std::uint64_t)p - b);
    }
    std::uint32_t neg(std::uint32_t a) const { return a ? p - a : 0; }
    std::uint32_t to_mont(std::uint64_t x) const { return mul((std::uint32_t)(x % p), r2); }
    std::uint32_t from_mont(std::uint32_t a) const { return redc(a, p, pprime); }
    std::uint32_t pow(std::uint32_t base_mont, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a_mont) const { return pow(a_mont, (std::uint64_t)p - 2); }
};

// Montgomery-domain residue of an exact scalar. Throws if p divides a
// denominator, or if the scalar has an imaginary part and p != 1 mod 4.
std::uint32_t residue_mont(const Scalar& s, const MontCtx& ctx);

// saxpy kernel: row[i] = row[i] - f*piv[i] (mod p), everything Montgomery.
// The active kernel is chosen at runtime (AVX2 when the CPU supports it,
// scalar otherwise); GRADECHECK_SIMD=scalar forces the reference lane.
struct ModKernel {
    void (*saxpy)(std::uint32_t* row, const std::uint32_t* piv, std::size_t n,
                  std::uint32_t f, std::uint32_t p, std::uint32_t pprime);
    const char* name;
};
const ModKernel& scalar_kernel();
const ModKernel* avx2_kernel();  // nullptr when unsupported on this CPU
const ModKernel& active_kernel();

// Dense matrix over F_p in Montgomery domain.
struct ModMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint32_t> a;
    ModMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    std::uint32_t* row(std::size_t i) { return a.data() + i * cols; }
};

// Forward elimination rank; destroys the matrix. Deterministic.
std::size_t mod_rank_destructive(ModMatrix& m, const MontCtx& ctx, int threads = 2);

// Incremental echelon basis mod p with sparse rows; suited to spans whose
// rank is far below the ambient dimension.
class ModEchelon {
public:
    ModEchelon(std::size_t ambient, const MontCtx& ctx)
        : n_(ambient), ctx_(&ctx), pivot_row_(ambient, -1) {}

    std::size_t dim() const { return rows_.size(); }
    // Reduces a dense Montgomery-domain vector in place.
    void reduce(std::vector<std::uint32_t>& v) const;
    // Returns true if v was independent (basis grew). v is consumed.
    bool insert(std::vector<std::uint32_t> v);

private:
    std::size_t n_;
    const MontCtx* ctx_;
    std::vector<std::vector<std::pair<int, std::uint32_t>>> rows_;
    std::vector<int> pivot_of_rows_;
    std::vector<int> pivot_row_;
};

// Streaming sketched rank: sparse rows are folded into `buckets` random rows
// (a few taps each), and the rank of the compressed dense matrix is
// computed. rank(sketch) <= rank(stream) always; equality holds with
// overwhelming probability once buckets comfortably exceeds the true rank.
class SketchRank {
public:
    SketchRank(std::size_t cols, std::size_t buckets, std::uint64_t seed, const MontCtx& ctx);
    // Entries are (column, Montgomery residue) with distinct columns.
    void add_row(const std::vector<std::pair<int, std::uint32_t>>& row);
    std::size_t rank(int threads = 2);

private:
    const MontCtx* ctx_;
    ModMatrix m_;
    std::uint64_t state_;
    std::uint64_t next();
};

// Exact rank (RREF over Q(i)).
std::size_t matrix_rank_exact(const Matrix& m);
// Rank mod two primes with loud disagreement failure. Throws
// std::invalid_argument on bad primes, std::domain_error if a prime divides
// a denominator, std::runtime_error if the two ranks differ.
std::size_t matrix_rank_modular(const Matrix& m, std::uint64_t p1 = kPrime1,
                                std::uint64_t p2 = kPrime2);

}  // namespace gradecheck
