#pragma once

#include <algorithm>
#include <random>

#include "commlie/algebra.hpp"
#include "commlie/cochain.hpp"
#include "commlie/f2la.hpp"

namespace commlie::testing {

inline BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5)
{
    std::bernoulli_distribution bit(density);
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c);
    return m;
}

inline BitVector random_vector(std::mt19937_64& rng, std::size_t n)
{
    std::bernoulli_distribution bit(0.5);
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (bit(rng)) v.set(i);
    return v;
}

inline Subspace random_subspace(std::mt19937_64& rng, std::size_t ambient, std::size_t generators)
{
    return Subspace::span(random_matrix(rng, generators, ambient));
}

/// Every vector of F_2^n, as bit masks; n must be small.
inline BitVector vector_from_mask(std::size_t n, std::uint64_t mask)
{
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1U) v.set(i);
    return v;
}

/// Random symmetric bracket table satisfying Jacobi; alternating when requested.
inline BracketTable random_commutative_lie(std::mt19937_64& rng, std::size_t d, bool alternating = false)
{
    for (;;) {
        BracketTable t(d);
        const Elem mask = (Elem{1} << d) - 1;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j) {
                const Elem v = (i == j && alternating) ? 0 : (rng() & mask);
                t.set(i, j, v);
                t.set(j, i, v);
            }
        if (classify_algebra(t).jacobi) return t;
    }
}

/// Every module structure of dimension m (m <= 2) on the algebra.
inline std::vector<ModuleSpec> all_modules(const BracketTable& t, std::size_t m)
{
    const std::size_t bits = m * m;
    const std::size_t choices = std::size_t{1} << (bits * t.dim());
    std::vector<ModuleSpec> out;
    for (std::size_t code = 0; code < choices; ++code) {
        ModuleSpec mod{m, {}};
        for (std::size_t i = 0; i < t.dim(); ++i) {
            BitMatrix a(m, m);
            for (std::size_t b = 0; b < bits; ++b)
                if ((code >> (i * bits + b)) & 1U) a.set(b / m, b % m);
            mod.rho.push_back(std::move(a));
        }
        if (check_module_axioms(t, mod)) out.push_back(std::move(mod));
    }
    return out;
}

inline ModuleSpec random_module(std::mt19937_64& rng, const BracketTable& t, std::size_t m)
{
    const auto mods = all_modules(t, m);
    return mods[rng() % mods.size()];
}

inline BitMatrix random_invertible(std::mt19937_64& rng, std::size_t d)
{
    for (;;) {
        BitMatrix p = random_matrix(rng, d, d);
        if (rank(p) == d) return p;
    }
}

// Independent evaluation of the symmetric-cochain differential: builds d f for every
// basis cochain f (trivial coefficients) by evaluating on multisets directly.
inline BitMatrix naive_sym_differential_trivial(const BracketTable& t, std::size_t n)
{
    const MonomialBasis src(Flavor::Sym, t.dim(), n);
    const MonomialBasis tgt(Flavor::Sym, t.dim(), n + 1);
    BitMatrix out(tgt.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
        const Word& f_support = src.word(col);  // f is the indicator of this multiset
        for (std::size_t row = 0; row < tgt.size(); ++row) {
            const Word& w = tgt.word(row);
            bool value = false;
            for (std::size_t i = 0; i < w.size(); ++i)
                for (std::size_t j = i + 1; j < w.size(); ++j)
                    for (std::size_t k = 0; k < t.dim(); ++k) {
                        if (((t.at(w[i], w[j]) >> k) & 1U) == 0) continue;
                        Word arg{static_cast<std::uint8_t>(k)};
                        for (std::size_t p = 0; p < w.size(); ++p)
                            if (p != i && p != j) arg.push_back(w[p]);
                        std::sort(arg.begin(), arg.end());
                        if (arg == f_support) value = !value;
                    }
            if (value) out.set(row, col);
        }
    }
    return out;
}

}  // namespace commlie::testing
