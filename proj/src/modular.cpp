#include "symderiv/modular.hpp"

#include <random>
#include <string>

namespace symderiv {

namespace {

using u128 = unsigned __int128;

// Multiplication by a fixed operand with a precomputed quotient (Shoup).
struct FixedMultiplier {
    std::uint64_t w;
    std::uint64_t w_quot;
    std::uint64_t p;

    FixedMultiplier(std::uint64_t w_, std::uint64_t p_)
        : w(w_), w_quot(static_cast<std::uint64_t>((static_cast<u128>(w_) << 64) / p_)), p(p_)
    {
    }

    std::uint64_t operator()(std::uint64_t a) const noexcept
    {
        std::uint64_t q = static_cast<std::uint64_t>((static_cast<u128>(a) * w_quot) >> 64);
        std::uint64_t r = a * w - q * p;
        return r >= p ? r - p : r;
    }
};

// dst[from..] -= c * src[from..]
void axpy_mod(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src, std::uint64_t c,
              std::size_t from, std::uint64_t p)
{
    FixedMultiplier mul(c, p);
    const std::size_t n = dst.size();
    std::uint64_t* d = dst.data();
    const std::uint64_t* s = src.data();
    for (std::size_t j = from; j < n; ++j) {
        if (s[j] == 0) continue;
        std::uint64_t t = mul(s[j]);
        d[j] = d[j] >= t ? d[j] - t : d[j] + p - t;
    }
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p)
{
    if (p < 2 || p >= (std::uint64_t{1} << 63)) throw std::invalid_argument("PrimeField: modulus out of range");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const noexcept { return powmod(a, e, p_); }

std::uint64_t PrimeField::inv(std::uint64_t a) const
{
    if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
    return powmod(a, p_ - 2, p_);
}

std::uint64_t PrimeField::reduce(const Scalar& q) const
{
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    std::uint64_t n = mpz_fdiv_ui(q.get_num_mpz_t(), p_);
    std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
    if (d == 0) throw std::domain_error("PrimeField: prime divides a denominator");
    return d == 1 ? n : mul(n, inv(d));
}

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are a deterministic witness set for all 64-bit integers.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> random_primes_62bit(std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const std::uint64_t lo = std::uint64_t{1} << 61;
    std::vector<std::uint64_t> out;
    while (out.size() < count) {
        std::uint64_t candidate = lo | (rng() & (lo - 1)) | 1;
        if (!is_prime_u64(candidate)) continue;
        bool fresh = true;
        for (auto p : out) fresh = fresh && p != candidate;
        if (fresh) out.push_back(candidate);
    }
    return out;
}

const std::vector<std::uint64_t>& default_primes()
{
    static const std::vector<std::uint64_t> primes = random_primes_62bit(3, 0x5d3a9e11c07f2b47ULL);
    return primes;
}

ModularSubspace::ModularSubspace(std::uint64_t prime, std::size_t ambient_dim)
    : field_(prime), ambient_(ambient_dim), pivot_row_(ambient_dim, -1)
{
}

std::vector<std::uint64_t> ModularSubspace::residual(const SparseVector& v) const
{
    std::vector<std::uint64_t> dense(ambient_, 0);
    for (const auto& [i, c] : v.entries()) {
        if (i >= ambient_) throw std::out_of_range("ModularSubspace: index beyond ambient dimension");
        dense[i] = field_.reduce(c);
    }
    // RREF rows vanish at the other pivots, so the original coefficients at
    // pivot columns are the exact multiples to remove.
    for (const auto& [i, c] : v.entries()) {
        std::int64_t r = pivot_row_[i];
        if (r < 0) continue;
        std::uint64_t coeff = dense[i];
        if (coeff == 0) continue;
        axpy_mod(dense, rows_[r], coeff, i, field_.modulus());
    }
    return dense;
}

bool ModularSubspace::insert(const SparseVector& v)
{
    std::vector<std::uint64_t> r = residual(v);
    std::size_t pivot = 0;
    while (pivot < ambient_ && r[pivot] == 0) ++pivot;
    if (pivot == ambient_) return true;

    const std::uint64_t p = field_.modulus();
    std::uint64_t scale = field_.inv(r[pivot]);
    if (scale != 1) {
        FixedMultiplier mul(scale, p);
        for (std::size_t j = pivot; j < ambient_; ++j)
            if (r[j]) r[j] = mul(r[j]);
    }
    for (auto& row : rows_) {
        std::uint64_t c = row[pivot];
        if (c) axpy_mod(row, r, c, pivot, p);
    }
    pivot_row_[pivot] = static_cast<std::int64_t>(rows_.size());
    pivot_cols_.push_back(pivot);
    rows_.push_back(std::move(r));
    return false;
}

bool ModularSubspace::contains(const SparseVector& v) const
{
    for (auto x : residual(v))
        if (x) return false;
    return true;
}

std::size_t modular_rank(std::span<const SparseVector> vectors, std::size_t ambient_dim, std::uint64_t prime)
{
    ModularSubspace s(prime, ambient_dim);
    for (const auto& v : vectors) {
        s.insert(v);
        if (s.dim() == ambient_dim) break;
    }
    return s.dim();
}

std::size_t checked_rank(std::span<const SparseVector> vectors, std::size_t ambient_dim)
{
    std::size_t exact = span_dim(vectors);
    for (auto p : default_primes()) {
        std::size_t r = modular_rank(vectors, ambient_dim, p);
        if (r != exact)
            throw RankDisagreement("rank mod " + std::to_string(p) + " is " + std::to_string(r) +
                                   " but the exact rank is " + std::to_string(exact));
    }
    return exact;
}

} // namespace symderiv
