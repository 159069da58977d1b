// Sparse multivariate Laurent series with exact integer coefficients and an
// explicit truncation grade.
//
// Variables come in named groups; a group may be flagged as grading so that
// the auxiliary degree of a monomial is the sum of |exponent - offset| over
// all grading groups.  The offset records prefactor monomials (e.g. the
// (y_1...y_p)^{-d} twist in dual characters) so that truncation stays uniform
// across different prefactors.  trunc == nullopt means the series is exact
// (a polynomial, all terms known); otherwise every term of auxiliary degree
// <= trunc is exact and nothing above it is stored.
//
// Arithmetic refuses to mix incompatible variable tables or offsets, and a
// product/sum re-truncates at the finer of the two truncation grades.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fockdual/numeric.hpp"

namespace fockdual {

struct VariableSet {
    std::string name;
    int count = 0;
    int sign = +1;      // -1 marks an inverse-variable alphabet (display/semantics)
    bool graded = true; // participates in the truncation grading

    friend bool operator==(const VariableSet& a, const VariableSet& b) {
        return a.name == b.name && a.count == b.count && a.sign == b.sign && a.graded == b.graded;
    }
};

class VarTable {
public:
    VarTable() = default;

    explicit VarTable(std::vector<VariableSet> groups) : groups_(std::move(groups)) {
        starts_.reserve(groups_.size());
        int s = 0;
        for (const auto& g : groups_) {
            if (g.count < 0) throw std::invalid_argument("variable group with negative count");
            starts_.push_back(s);
            s += g.count;
        }
        total_ = s;
    }

    int group_count() const { return static_cast<int>(groups_.size()); }
    const VariableSet& group(int g) const { return groups_.at(static_cast<std::size_t>(g)); }
    int group_start(int g) const { return starts_.at(static_cast<std::size_t>(g)); }
    int total() const { return total_; }
    const std::vector<VariableSet>& groups() const { return groups_; }

    int find_group(const std::string& name) const {
        for (int g = 0; g < group_count(); ++g)
            if (groups_[static_cast<std::size_t>(g)].name == name) return g;
        throw std::invalid_argument("no variable group named " + name);
    }

    // var index of the i-th variable (1-based) of group g
    int var(int g, int i) const {
        if (i < 1 || i > group(g).count) throw std::out_of_range("variable index out of range");
        return group_start(g) + i - 1;
    }

    std::string var_name(int v) const {
        for (int g = 0; g < group_count(); ++g) {
            const int s = group_start(g), c = group(g).count;
            if (v >= s && v < s + c)
                return groups_[static_cast<std::size_t>(g)].name + std::to_string(v - s + 1);
        }
        throw std::out_of_range("variable id out of range");
    }

    friend bool operator==(const VarTable& a, const VarTable& b) { return a.groups_ == b.groups_; }
    friend bool operator!=(const VarTable& a, const VarTable& b) { return !(a == b); }

private:
    std::vector<VariableSet> groups_;
    std::vector<int> starts_;
    int total_ = 0;
};

class GradedSeries {
public:
    using TermMap = std::map<std::vector<int>, Int>;

    GradedSeries() = default;

    explicit GradedSeries(VarTable table, std::optional<int> trunc = std::nullopt)
        : table_(std::move(table)), trunc_(trunc), offset_(static_cast<std::size_t>(table_.total()), 0) {
        if (trunc_ && *trunc_ < 0) throw std::invalid_argument("negative truncation");
    }

    static GradedSeries one(const VarTable& table, std::optional<int> trunc = std::nullopt) {
        GradedSeries s(table, trunc);
        s.add_term(std::vector<int>(static_cast<std::size_t>(table.total()), 0), 1);
        return s;
    }

    const VarTable& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    std::optional<int> truncation() const { return trunc_; }
    const std::vector<int>& offset() const { return offset_; }
    bool is_zero() const { return terms_.empty(); }

    int aux_degree(const std::vector<int>& exps) const {
        int deg = 0;
        for (int g = 0; g < table_.group_count(); ++g) {
            if (!table_.group(g).graded) continue;
            const int s = table_.group_start(g), c = table_.group(g).count;
            for (int v = s; v < s + c; ++v)
                deg += std::abs(exps[static_cast<std::size_t>(v)] - offset_[static_cast<std::size_t>(v)]);
        }
        return deg;
    }

    void add_term(std::vector<int> exps, Int coef) {
        if (static_cast<int>(exps.size()) != table_.total())
            throw std::invalid_argument("exponent vector length mismatch");
        if (coef == 0) return;
        if (trunc_ && aux_degree(exps) > *trunc_) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(std::move(exps), std::move(coef));
        } else {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Int coefficient(const std::vector<int>& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? Int(0) : it->second;
    }

    GradedSeries& operator+=(const GradedSeries& o) {
        require_same_frame(o);
        merge_trunc(o.trunc_);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        retruncate();
        return *this;
    }

    GradedSeries& operator-=(const GradedSeries& o) {
        require_same_frame(o);
        merge_trunc(o.trunc_);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        retruncate();
        return *this;
    }

    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }

    GradedSeries& scale(const Int& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= k;
        return *this;
    }

    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
        if (a.table_ != b.table_)
            throw std::invalid_argument("series multiplication: variable tables differ");
        GradedSeries out(a.table_);
        out.trunc_ = min_trunc(a.trunc_, b.trunc_);
        for (std::size_t i = 0; i < out.offset_.size(); ++i)
            out.offset_[i] = a.offset_[i] + b.offset_[i];
        const std::size_t nv = out.offset_.size();
        std::vector<int> e(nv);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    // Multiply by a plain monomial (no offset change).
    GradedSeries times_monomial(const std::vector<int>& mono, const Int& coef = 1) const {
        GradedSeries out(table_);
        out.trunc_ = trunc_;
        out.offset_ = offset_;
        const std::size_t nv = offset_.size();
        std::vector<int> e(nv);
        for (const auto& [ea, ca] : terms_) {
            for (std::size_t i = 0; i < nv; ++i) e[i] = ea[i] + mono[i];
            out.add_term(e, ca * coef);
        }
        return out;
    }

    // Multiply by a prefactor monomial and shift the grading reference with it.
    GradedSeries with_prefactor(const std::vector<int>& mono) const {
        GradedSeries out(table_);
        out.trunc_ = trunc_;
        out.offset_ = offset_;
        for (std::size_t i = 0; i < out.offset_.size(); ++i) out.offset_[i] += mono[i];
        for (const auto& [ea, ca] : terms_) {
            std::vector<int> e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += mono[i];
            out.terms_.emplace(std::move(e), ca);
        }
        return out;
    }

    // Re-stamp the truncation grade, dropping any term above it.  Tightening is
    // always allowed; loosening is only meaningful for exact series.
    GradedSeries truncated(int n) const {
        if (n < 0) throw std::invalid_argument("negative truncation");
        if (trunc_ && *trunc_ < n)
            throw std::invalid_argument("cannot loosen a truncated series");
        GradedSeries out(table_);
        out.trunc_ = n;
        out.offset_ = offset_;
        for (const auto& [e, c] : terms_)
            if (aux_degree(e) <= n) out.terms_.emplace(e, c);
        return out;
    }

    // Lexicographically greatest exponent vector (highest weight for the Borel
    // order induced by the variable ordering).  Series must be nonzero.
    std::vector<int> leading_exponent() const {
        if (terms_.empty()) throw std::logic_error("leading_exponent of zero series");
        return terms_.rbegin()->first;
    }

    // Comparisons refuse to mix truncations: truncate explicitly first.
    friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
        if (a.table_ != b.table_) return false;
        if (a.trunc_ != b.trunc_)
            throw std::invalid_argument("comparing series with different truncations");
        return a.offset_ == b.offset_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GradedSeries& a, const GradedSeries& b) { return !(a == b); }

    std::string to_text() const {
        if (terms_.empty()) return "0";
        // graded-lex term order: auxiliary grade, then exponent vector
        std::vector<const TermMap::value_type*> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_) ts.push_back(&t);
        std::stable_sort(ts.begin(), ts.end(), [&](const auto* x, const auto* y) {
            const int gx = aux_degree(x->first), gy = aux_degree(y->first);
            if (gx != gy) return gx < gy;
            return x->first < y->first;
        });
        std::string out;
        for (const auto* t : ts) {
            const Int& c = t->second;
            if (!out.empty()) out += (c >= 0) ? " + " : " - ";
            else if (c < 0) out += "-";
            const Int ac = abs(c);
            std::string mono;
            for (std::size_t v = 0; v < t->first.size(); ++v) {
                const int e = t->first[v];
                if (e == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += table_.var_name(static_cast<int>(v));
                if (e != 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty()) out += to_decimal(ac);
            else {
                if (ac != 1) out += to_decimal(ac) + "*";
                out += mono;
            }
        }
        return out;
    }

private:
    static std::optional<int> min_trunc(std::optional<int> a, std::optional<int> b) {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }

    void merge_trunc(std::optional<int> o) { trunc_ = min_trunc(trunc_, o); }

    void retruncate() {
        if (!trunc_) return;
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (aux_degree(it->first) > *trunc_) it = terms_.erase(it);
            else ++it;
        }
    }

    void require_same_frame(const GradedSeries& o) const {
        if (table_ != o.table_) throw std::invalid_argument("series addition: variable tables differ");
        if (offset_ != o.offset_) throw std::invalid_argument("series addition: grading offsets differ");
    }

    VarTable table_;
    TermMap terms_;
    std::optional<int> trunc_;
    std::vector<int> offset_;
};

} // namespace fockdual
