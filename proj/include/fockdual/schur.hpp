// Schur and skew Schur polynomials by semistandard tableau enumeration, the
// Littlewood-Richardson rule, its extension to generalized partitions by
// shift normalization, and Schur-basis expansion by leading-term subtraction.
//
// Everything here is exact integer arithmetic; no determinants, no division.
#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "fockdual/numeric.hpp"
#include "fockdual/partition.hpp"
#include "fockdual/series.hpp"

namespace fockdual {

namespace detail {

struct Cell {
    int row;
    int col;
};

inline std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner) {
    std::vector<Cell> cells;
    const Partition in = inner.length() < outer.length() ? inner.padded(outer.length()) : inner;
    for (int i = 1; i <= outer.length(); ++i)
        for (int j = in.part(i) + 1; j <= outer.part(i); ++j) cells.push_back({i, j});
    return cells;
}

// Backtracking enumeration of fillings with entries 1..nletters.  `conjugate`
// selects row-strict/column-weak fillings instead of the usual row-weak/
// column-strict ones.  fn receives the content vector (counts per letter).
inline void enumerate_fillings(const Partition& outer, const Partition& inner, int nletters,
                               bool conjugate, const std::function<void(const std::vector<int>&)>& fn) {
    if (!contains(outer, inner)) throw std::invalid_argument("skew shape: inner not contained in outer");
    const auto cells = skew_cells(outer, inner);
    if (cells.empty()) {
        std::vector<int> content(static_cast<std::size_t>(nletters), 0);
        fn(content);
        return;
    }
    if (nletters == 0) return;

    // grid[row][col] buffers the chosen entries; rows/cols are 1-based
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(outer.length()) + 1,
                                       std::vector<int>(static_cast<std::size_t>(outer.first()) + 1, 0));
    const Partition in = inner.length() < outer.length() ? inner.padded(outer.length()) : inner;
    std::vector<int> content(static_cast<std::size_t>(nletters), 0);

    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            fn(content);
            return;
        }
        const auto [r, c] = cells[k];
        int lo = 1;
        const bool has_left = c - 1 > in.part(r);
        const bool has_above = r > 1 && c > in.part(r - 1) && c <= outer.part(r - 1);
        if (!conjugate) {
            if (has_left) lo = std::max(lo, grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
            if (has_above) lo = std::max(lo, grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        } else {
            if (has_left) lo = std::max(lo, grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] + 1);
            if (has_above) lo = std::max(lo, grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)]);
        }
        for (int v = lo; v <= nletters; ++v) {
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            content[static_cast<std::size_t>(v - 1)]++;
            rec(k + 1);
            content[static_cast<std::size_t>(v - 1)]--;
        }
    };
    rec(0);
}

} // namespace detail

// Semistandard skew tableaux (rows weakly increase, columns strictly increase).
inline void for_each_ssyt(const Partition& outer, const Partition& inner, int nletters,
                          const std::function<void(const std::vector<int>&)>& fn) {
    detail::enumerate_fillings(outer, inner, nletters, false, fn);
}

// Conjugate-semistandard skew tableaux (rows strictly increase, columns weakly).
inline void for_each_conjugate_ssyt(const Partition& outer, const Partition& inner, int nletters,
                                    const std::function<void(const std::vector<int>&)>& fn) {
    detail::enumerate_fillings(outer, inner, nletters, true, fn);
}

namespace detail {

// Writes a content vector into the slice of `group`, honoring the group sign.
inline std::vector<int> content_to_exps(const VarTable& table, int group, const std::vector<int>& content) {
    std::vector<int> e(static_cast<std::size_t>(table.total()), 0);
    const int s = table.group_start(group);
    const int sign = table.group(group).sign;
    for (std::size_t i = 0; i < content.size(); ++i)
        e[static_cast<std::size_t>(s) + i] = sign * content[i];
    return e;
}

} // namespace detail

// s_{outer/inner} in the variables of `group`; the zero series when the shape
// admits no semistandard filling.
inline GradedSeries skew_schur_poly(const SkewShape& shape, const VarTable& table, int group) {
    const int k = table.group(group).count;
    GradedSeries out(table);
    for_each_ssyt(shape.outer, shape.inner, k, [&](const std::vector<int>& content) {
        out.add_term(detail::content_to_exps(table, group, content), 1);
    });
    return out;
}

inline GradedSeries schur_poly(const Partition& lam, const VarTable& table, int group) {
    return skew_schur_poly(SkewShape(lam, Partition{}), table, group);
}

// Laurent Schur function for a generalized partition of length d:
// s_lambda = (z_1...z_d)^{-k} s_{lambda + k*1}, k = max(0, -lambda_d).
inline GradedSeries schur_poly_generalized(const GeneralizedPartition& lam, const VarTable& table,
                                           int group) {
    const int d = lam.length();
    if (table.group(group).count != d)
        throw std::invalid_argument("schur_poly_generalized: variable count must equal length");
    const int k = lam.length() == 0 ? 0 : std::max(0, -lam.part(d));
    GradedSeries s = schur_poly(Partition(lam.shifted(k)), table, group);
    if (k == 0) return s;
    std::vector<int> mono(static_cast<std::size_t>(table.total()), 0);
    const int sign = table.group(group).sign;
    for (int i = 1; i <= d; ++i) mono[static_cast<std::size_t>(table.var(group, i))] = -k * sign;
    return s.times_monomial(mono);
}

// ---- Littlewood-Richardson rule -------------------------------------------

// Number of LR skew tableaux of shape lam/mu and content nu: semistandard
// fillings whose reverse reading word (right to left, top to bottom) is a
// lattice word.  Cells are filled in reading order so the lattice property is
// enforced incrementally.
inline Int count_lr_tableaux(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (!contains(lam, mu)) return 0;
    if (lam.sum() != mu.sum() + nu.sum()) return 0;
    const int rows = lam.length();
    const Partition mup = mu.length() < rows ? mu.padded(rows) : mu;
    const int letters = nu.length();

    std::vector<detail::Cell> cells;
    for (int i = 1; i <= rows; ++i)
        for (int j = lam.part(i); j >= mup.part(i) + 1; --j) cells.push_back({i, j});
    if (cells.empty()) return nu.sum() == 0 ? 1 : 0;
    if (letters == 0) return 0;

    std::vector<std::vector<int>> grid(static_cast<std::size_t>(rows) + 1,
                                       std::vector<int>(static_cast<std::size_t>(lam.first()) + 1, 0));
    std::vector<int> cnt(static_cast<std::size_t>(letters) + 1, 0);
    Int total = 0;

    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            total += 1;
            return;
        }
        const auto [r, c] = cells[k];
        const bool has_right = c + 1 <= lam.part(r);
        const bool has_above = r > 1 && c > mup.part(r - 1) && c <= lam.part(r - 1);
        const int hi = has_right ? grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)] : letters;
        const int lo = has_above ? grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1 : 1;
        for (int v = lo; v <= hi; ++v) {
            if (cnt[static_cast<std::size_t>(v)] >= nu.part(v)) continue;                 // content bound
            if (v > 1 && cnt[static_cast<std::size_t>(v)] >= cnt[static_cast<std::size_t>(v - 1)]) continue; // lattice word
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            cnt[static_cast<std::size_t>(v)]++;
            rec(k + 1);
            cnt[static_cast<std::size_t>(v)]--;
        }
    };
    rec(0);
    return total;
}

// C^lam_{mu nu}: multiplicity of V^lam in V^mu (x) V^nu.
inline Int lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    return count_lr_tableaux(lam, mu, nu);
}

// Shift-normalized coefficient for generalized partitions of one common
// length d: C^lam_{mu nu} = C^{lam+(a+b)1}_{mu+a1, nu+b1} for any shifts
// making all three partitions.
inline Int lr_coefficient_generalized(const GeneralizedPartition& lam, const GeneralizedPartition& mu,
                                      const GeneralizedPartition& nu) {
    const int d = lam.length();
    if (mu.length() != d || nu.length() != d)
        throw std::invalid_argument("lr_coefficient_generalized: lengths must agree");
    if (lam.sum() != mu.sum() + nu.sum()) return 0;
    if (d == 0) return 1;
    int a = std::max(0, -mu.part(d));
    const int b = std::max(0, -nu.part(d));
    a += std::max(0, -(lam.part(d) + a + b)); // ensure the shifted lam is a partition too
    return lr_coefficient(Partition(lam.shifted(a + b)), Partition(mu.shifted(a)),
                          Partition(nu.shifted(b)));
}

// ---- Schur expansion -------------------------------------------------------

// Expands a symmetric series over a single d-variable group in the Schur
// basis by repeated subtraction of the lexicographically leading term (the
// leading monomial of s_lambda is x^lambda).  Laurent exponents are handled
// by premultiplying with (x_1...x_d)^k and shifting the labels back, so the
// returned labels are generalized partitions of length d.
//
// Throws if the input is not symmetric (checked exactly via invariance under
// all adjacent transpositions of the stored exponent vectors).
inline std::map<GeneralizedPartition, Int> schur_expand(const GradedSeries& f, int group) {
    const VarTable& table = f.table();
    const int d = table.group(group).count;
    const int s = table.group_start(group);
    for (const auto& [e, c] : f.terms())
        for (std::size_t v = 0; v < e.size(); ++v)
            if ((static_cast<int>(v) < s || static_cast<int>(v) >= s + d) && e[v] != 0)
                throw std::invalid_argument("schur_expand: series involves foreign variables");

    for (int i = 0; i + 1 < d; ++i) {
        for (const auto& [e, c] : f.terms()) {
            std::vector<int> swapped = e;
            std::swap(swapped[static_cast<std::size_t>(s + i)], swapped[static_cast<std::size_t>(s + i + 1)]);
            if (f.coefficient(swapped) != c)
                throw std::invalid_argument("schur_expand: series is not symmetric");
        }
    }

    int shift = 0;
    for (const auto& [e, c] : f.terms())
        for (int v = s; v < s + d; ++v) shift = std::max(shift, -e[static_cast<std::size_t>(v)]);

    GradedSeries residual = f;
    if (shift > 0) {
        std::vector<int> mono(static_cast<std::size_t>(table.total()), 0);
        for (int v = s; v < s + d; ++v) mono[static_cast<std::size_t>(v)] = shift;
        residual = residual.times_monomial(mono);
    }

    std::map<GeneralizedPartition, Int> out;
    while (!residual.is_zero()) {
        const std::vector<int> lead = residual.leading_exponent();
        std::vector<int> lamv(lead.begin() + s, lead.begin() + s + d);
        for (int i = 0; i + 1 < d; ++i)
            if (lamv[static_cast<std::size_t>(i)] < lamv[static_cast<std::size_t>(i + 1)])
                throw std::invalid_argument(
                    "schur_expand: leading exponent is not a partition (truncation artifact?)");
        const Partition lam{std::vector<int>(lamv)};
        const Int c = residual.coefficient(lead);
        residual -= schur_poly(lam, table, group).scale(c);
        out[lam.generalized().shifted(-shift)] += c;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0) it = out.erase(it);
        else ++it;
    }
    return out;
}

} // namespace fockdual
