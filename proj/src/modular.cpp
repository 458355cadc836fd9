#include "gradecheck/modular.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <thread>

namespace gradecheck {

static std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return (std::uint64_t)((unsigned __int128)a * b % m);
}

static std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic for all 64-bit integers with this base set
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

MontCtx MontCtx::make(std::uint64_t p) {
    if (p <= (1ULL << 31) || p >= (1ULL << 32))
        throw std::invalid_argument("modular prime must satisfy 2^31 < p < 2^32");
    if (!is_prime_u64(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
    MontCtx c;
    c.p = (std::uint32_t)p;
    // Newton iteration for p^{-1} mod 2^32, then negate.
    std::uint32_t inv = c.p;
    for (int i = 0; i < 5; ++i) inv *= 2 - c.p * inv;
    c.pprime = (std::uint32_t)(0 - inv);
    c.r2 = (std::uint32_t)(((unsigned __int128)1 << 64) % p);
    c.one = (std::uint32_t)((1ULL << 32) % p);
    if (p % 4 == 1) {
        std::uint64_t q = 2;
        while (powmod_u64(q, (p - 1) / 2, p) != p - 1) ++q;
        std::uint64_t s = powmod_u64(q, (p - 1) / 4, p);
        if (mulmod_u64(s, s, p) != p - 1) throw std::logic_error("sqrt(-1) computation failed");
        c.root_m1 = c.to_mont(s);
    }
    return c;
}

std::uint32_t MontCtx::pow(std::uint32_t base_mont, std::uint64_t e) const {
    std::uint32_t r = one, b = base_mont;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

static std::uint32_t rat_residue_mont(const Rat& r, const MontCtx& ctx) {
    std::uint64_t den = r.den().mod_u64(ctx.p);
    if (den == 0) throw std::domain_error("prime divides a denominator");
    std::uint32_t n = ctx.to_mont(r.num().abs().mod_u64(ctx.p));
    if (r.num().sign() < 0) n = ctx.neg(n);
    return ctx.mul(n, ctx.inv(ctx.to_mont(den)));
}

std::uint32_t residue_mont(const Scalar& s, const MontCtx& ctx) {
    std::uint32_t v = rat_residue_mont(s.re(), ctx);
    if (!s.im().is_zero()) {
        if (ctx.p % 4 != 1)
            throw std::invalid_argument("prime must be 1 mod 4 to reduce Gaussian scalars");
        v = ctx.add(v, ctx.mul(rat_residue_mont(s.im(), ctx), ctx.root_m1));
    }
    return v;
}

const ModKernel& active_kernel() {
    static const ModKernel* chosen = [] {
        const char* env = std::getenv("GRADECHECK_SIMD");
        if (env && std::strcmp(env, "scalar") == 0) return &scalar_kernel();
        if (const ModKernel* k = avx2_kernel()) return k;
        return &scalar_kernel();
    }();
    return *chosen;
}

std::size_t mod_rank_destructive(ModMatrix& m, const MontCtx& ctx, int threads) {
    const ModKernel& K = active_kernel();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = rank;
        while (piv < m.rows && m.row(piv)[col] == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank) {
            for (std::size_t j = col; j < m.cols; ++j)
                std::swap(m.row(piv)[j], m.row(rank)[j]);
        }
        std::uint32_t pinv = ctx.inv(m.row(rank)[col]);
        const std::uint32_t* prow = m.row(rank);
        auto work = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                std::uint32_t* r = m.row(i);
                if (!r[col]) continue;
                std::uint32_t f = ctx.mul(r[col], pinv);
                K.saxpy(r + col, prow + col, m.cols - col, f, ctx.p, ctx.pprime);
                r[col] = 0;  // cancel any residual representation difference
            }
        };
        std::size_t below = m.rows - rank - 1;
        if (threads > 1 && below > 256) {
            std::size_t mid = rank + 1 + below / 2;
            std::thread t(work, rank + 1, mid);
            work(mid, m.rows);
            t.join();
        } else {
            work(rank + 1, m.rows);
        }
        ++rank;
    }
    return rank;
}

void ModEchelon::reduce(std::vector<std::uint32_t>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t c = v[pivot_of_rows_[r]];
        if (!c) continue;
        for (const auto& [j, val] : rows_[r]) {
            std::uint32_t prod = ctx_->mul(c, val);
            v[j] = ctx_->sub(v[j], prod);
        }
    }
}

bool ModEchelon::insert(std::vector<std::uint32_t> v) {
    reduce(v);
    int pivot = -1;
    for (std::size_t j = 0; j < n_; ++j)
        if (v[j]) { pivot = (int)j; break; }
    if (pivot < 0) return false;
    std::uint32_t inv = ctx_->inv(v[pivot]);
    std::vector<std::pair<int, std::uint32_t>> row;
    for (std::size_t j = pivot; j < n_; ++j)
        if (v[j]) row.emplace_back((int)j, ctx_->mul(v[j], inv));
    // keep existing rows fully reduced against the new pivot
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t c = 0;
        for (const auto& [j, val] : rows_[r])
            if (j == pivot) { c = val; break; }
        if (!c) continue;
        std::vector<std::uint32_t> dense(n_, 0);
        for (const auto& [j, val] : rows_[r]) dense[j] = val;
        for (const auto& [j, val] : row) dense[j] = ctx_->sub(dense[j], ctx_->mul(c, val));
        rows_[r].clear();
        for (std::size_t j = 0; j < n_; ++j)
            if (dense[j]) rows_[r].emplace_back((int)j, dense[j]);
    }
    pivot_row_[pivot] = (int)rows_.size();
    rows_.push_back(std::move(row));
    pivot_of_rows_.push_back(pivot);
    return true;
}

SketchRank::SketchRank(std::size_t cols, std::size_t buckets, std::uint64_t seed, const MontCtx& ctx)
    : ctx_(&ctx), m_(buckets, cols), state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

std::uint64_t SketchRank::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void SketchRank::add_row(const std::vector<std::pair<int, std::uint32_t>>& row) {
    for (int tap = 0; tap < 4; ++tap) {
        std::size_t b = next() % m_.rows;
        std::uint32_t coeff = ctx_->to_mont(next() % ctx_->p);
        if (!coeff) coeff = ctx_->one;
        std::uint32_t* dst = m_.row(b);
        for (const auto& [j, val] : row) dst[j] = ctx_->add(dst[j], ctx_->mul(coeff, val));
    }
}

std::size_t SketchRank::rank(int threads) { return mod_rank_destructive(m_, *ctx_, threads); }

std::size_t matrix_rank_exact(const Matrix& m) { return m.rank(); }

static std::size_t rank_one_prime(const Matrix& m, std::uint64_t p) {
    MontCtx ctx = MontCtx::make(p);
    ModMatrix mm(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Scalar& s = m.at(i, j);
            if (!s.is_zero()) mm.row(i)[j] = residue_mont(s, ctx);
        }
    return mod_rank_destructive(mm, ctx);
}

std::size_t matrix_rank_modular(const Matrix& m, std::uint64_t p1, std::uint64_t p2) {
    if (p1 == p2) throw std::invalid_argument("the two primes must be distinct");
    std::size_t r1 = rank_one_prime(m, p1);
    std::size_t r2 = rank_one_prime(m, p2);
    if (r1 != r2)
        throw std::runtime_error("modular ranks disagree (" + std::to_string(r1) + " vs " +
                                 std::to_string(r2) + "); exact recomputation required");
    return r1;
}

}  // namespace gradecheck
