#pragma once

// Brute-force reference computations. Nothing here calls into the library
// beyond reading tensor terms, so agreement with the library is evidence.

#include "symderiv/tensor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Letters = std::vector<int>;   // 0-based generators, x_1..x_g then y_1..y_g
using Terms = std::map<Letters, Q>; // zero coefficients never stored

inline void add(Terms& t, const Letters& w, const Q& c)
{
    if (c == 0) return;
    auto [it, fresh] = t.emplace(w, c);
    if (!fresh && (it->second += c) == 0) t.erase(it);
}

inline Terms terms_of(const symderiv::Tensor& t)
{
    Terms out;
    t.for_each_term([&](const symderiv::Word& w, const Q& c) { out.emplace(Letters(w.begin(), w.end()), c); });
    return out;
}

inline Terms scaled(Terms t, const Q& c)
{
    if (c == 0) return {};
    for (auto& [w, v] : t) v *= c;
    return t;
}

inline Terms plus(Terms a, const Terms& b)
{
    for (const auto& [w, c] : b) add(a, w, c);
    return a;
}

// x_i . y_i = 1, y_i . x_i = -1
inline int pair(int g, int a, int b)
{
    if (a < g && b == a + g) return 1;
    if (a >= g && b == a - g) return -1;
    return 0;
}

inline std::vector<Letters> all_words(int n, int m)
{
    std::vector<Letters> out{{}};
    for (int s = 0; s < m; ++s) {
        std::vector<Letters> next;
        for (const auto& w : out)
            for (int a = 0; a < n; ++a) {
                Letters v = w;
                v.push_back(a);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

inline Letters rotate_left(Letters w, std::size_t r)
{
    std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
    return w;
}

inline std::uint64_t necklaces(int n, int m)
{
    std::set<Letters> reps;
    for (const auto& w : all_words(n, m)) {
        Letters best = w;
        for (std::size_t r = 1; r < w.size(); ++r) best = std::min(best, rotate_left(w, r));
        reps.insert(best);
    }
    return reps.size();
}

// A Lyndon word is strictly smaller than each of its proper rotations.
inline std::uint64_t lyndon_count(int n, int d)
{
    std::uint64_t count = 0;
    for (const auto& w : all_words(n, d)) {
        bool lyndon = true;
        for (std::size_t r = 1; r < w.size() && lyndon; ++r) lyndon = w < rotate_left(w, r);
        count += lyndon;
    }
    return count;
}

inline bool cyclic_invariant(const Terms& t)
{
    for (const auto& [w, c] : t) {
        auto it = t.find(rotate_left(w, 1));
        if (it == t.end() || it->second != c) return false;
    }
    return true;
}

// Pairs slots p < q (1-based) and deletes them.
inline Terms contract(int g, const Terms& t, int p, int q)
{
    Terms out;
    for (const auto& [w, c] : t) {
        const int s = pair(g, w[p - 1], w[q - 1]);
        if (s == 0) continue;
        Letters rest;
        for (int i = 0; i < static_cast<int>(w.size()); ++i)
            if (i != p - 1 && i != q - 1) rest.push_back(w[i]);
        add(out, rest, c * s);
    }
    return out;
}

// Bracket of two degree-one symplectic derivations given by dual tensors of
// degree 3, by the four-term pairing formula.
inline Terms four_term_bracket(int g, const Terms& xi, const Terms& eta)
{
    Terms out;
    for (const auto& [u, a] : xi)
        for (const auto& [v, b] : eta) {
            const Q c = a * b;
            add(out, {v[0], u[1], u[2], v[2]}, c * pair(g, u[0], v[1]));
            add(out, {v[0], v[1], u[1], u[2]}, c * pair(g, u[0], v[2]));
            add(out, {u[0], v[1], v[2], u[2]}, -c * pair(g, v[0], u[1]));
            add(out, {u[0], u[1], v[1], v[2]}, -c * pair(g, v[0], u[2]));
        }
    return out;
}

inline int permutation_sign(const std::vector<int>& p)
{
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

inline Terms antisymmetrized(const Letters& letters)
{
    Terms out;
    std::vector<int> p(letters.size());
    std::iota(p.begin(), p.end(), 0);
    do {
        Letters w;
        for (int i : p) w.push_back(letters[i]);
        add(out, w, permutation_sign(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Distinct rearrangements, coefficient 1 each.
inline Terms symmetrized(Letters letters)
{
    Terms out;
    std::sort(letters.begin(), letters.end());
    do out.emplace(letters, 1);
    while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

// Signed sum over S_k of factor products f_{pi(1)} (x) .. (x) f_{pi(k)} with
// f_i = x_i y_{i+1} -/+ y_{i+1} x_i (indices mod k, genus k), contracted by
// pairing slot 2 of each factor with slot 1 of the next one cyclically.
// Expanded term by term, so only practical for k <= 7.
inline Q polygon(int k, bool symmetric)
{
    const int g = k;
    const int swap_sign = symmetric ? 1 : -1;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    Q total = 0;
    do {
        const int sgn = permutation_sign(p);
        for (int mask = 0; mask < (1 << k); ++mask) {
            Letters w;
            int coeff = sgn;
            for (int s = 0; s < k; ++s) {
                const int i = p[s];
                const int x = i, y = g + (i + 1) % k;
                if (mask >> s & 1) {
                    w.push_back(y);
                    w.push_back(x);
                    coeff *= swap_sign;
                } else {
                    w.push_back(x);
                    w.push_back(y);
                }
            }
            int prod = coeff;
            for (int s = 0; s < k && prod != 0; ++s) prod *= pair(g, w[2 * s + 1], w[(2 * s + 2) % (2 * k)]);
            total += prod;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// Rank over Q by dense Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<Q>> rows)
{
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Q f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

// Rank of a list of tensors of one degree.
inline std::size_t rank_of(const std::vector<Terms>& ts)
{
    std::map<Letters, std::size_t> column;
    for (const auto& t : ts)
        for (const auto& [w, c] : t) column.emplace(w, 0);
    std::size_t next = 0;
    for (auto& [w, i] : column) i = next++;
    std::vector<std::vector<Q>> rows;
    for (const auto& t : ts) {
        std::vector<Q> row(column.size());
        for (const auto& [w, c] : t) row[column.at(w)] = c;
        rows.push_back(std::move(row));
    }
    return rank(std::move(rows));
}

// Weyl dimension for type C_g: with l = lambda + rho and rho = (g, .., 1),
// dim = prod_i l_i / rho_i * prod_{i<j} (l_i^2 - l_j^2) / (rho_i^2 - rho_j^2).
inline std::uint64_t weyl_dim_c(std::vector<int> parts, int g)
{
    parts.resize(static_cast<std::size_t>(g), 0);
    Q dim = 1;
    for (int i = 0; i < g; ++i) {
        const Q li = parts[i] + g - i, ri = g - i;
        dim *= li / ri;
        for (int j = i + 1; j < g; ++j) {
            const Q lj = parts[j] + g - j, rj = g - j;
            dim *= (li * li - lj * lj) / (ri * ri - rj * rj);
        }
    }
    return dim.get_num().get_ui();
}

} // namespace oracle
