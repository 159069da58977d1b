// Partitions and generalized partitions with declared length.
//
// A partition carries its declared length: trailing zeros are significant,
// because several admissibility conditions index positions up to the declared
// length d.  Equality compares the full declared-length vectors; padded() and
// trimmed() convert between lengths explicitly.  All part accessors are
// 1-based.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fockdual {

class GeneralizedPartition {
public:
    GeneralizedPartition() = default;

    explicit GeneralizedPartition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i - 1] < parts_[i])
                throw std::invalid_argument("generalized partition: parts must be weakly decreasing");
    }

    GeneralizedPartition(std::initializer_list<int> parts)
        : GeneralizedPartition(std::vector<int>(parts)) {}

    int length() const { return static_cast<int>(parts_.size()); }

    // 1-based, valid for 1 <= i <= length(); no implicit zero-extension.
    int part(int i) const {
        if (i < 1 || i > length()) throw std::out_of_range("partition index out of range");
        return parts_[static_cast<std::size_t>(i - 1)];
    }

    const std::vector<int>& parts() const { return parts_; }

    int sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    int abs_sum() const {
        int s = 0;
        for (int v : parts_) s += std::abs(v);
        return s;
    }

    bool is_zero() const {
        return std::all_of(parts_.begin(), parts_.end(), [](int v) { return v == 0; });
    }

    bool is_nonnegative() const { return parts_.empty() || parts_.back() >= 0; }
    bool is_nonpositive() const { return parts_.empty() || parts_.front() <= 0; }

    // Extends with zeros up to length d; only valid when the result is still
    // weakly decreasing (last part >= 0).
    GeneralizedPartition padded(int d) const {
        if (d < length()) throw std::invalid_argument("padded: target length too small");
        if (d > length() && !parts_.empty() && parts_.back() < 0)
            throw std::invalid_argument("padded: cannot zero-extend below a negative part");
        std::vector<int> v = parts_;
        v.resize(static_cast<std::size_t>(d), 0);
        return GeneralizedPartition(std::move(v));
    }

    GeneralizedPartition trimmed() const {
        std::vector<int> v = parts_;
        while (!v.empty() && v.back() == 0) v.pop_back();
        return GeneralizedPartition(std::move(v));
    }

    GeneralizedPartition shifted(int k) const {
        std::vector<int> v = parts_;
        for (int& x : v) x += k;
        return GeneralizedPartition(std::move(v));
    }

    friend bool operator==(const GeneralizedPartition& a, const GeneralizedPartition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const GeneralizedPartition& a, const GeneralizedPartition& b) {
        return !(a == b);
    }
    friend bool operator<(const GeneralizedPartition& a, const GeneralizedPartition& b) {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
};

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : gp_(std::move(parts)) {
        if (!gp_.is_nonnegative())
            throw std::invalid_argument("partition: parts must be non-negative");
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    explicit Partition(GeneralizedPartition gp) : gp_(std::move(gp)) {
        if (!gp_.is_nonnegative())
            throw std::invalid_argument("partition: parts must be non-negative");
    }

    int length() const { return gp_.length(); }
    int part(int i) const { return gp_.part(i); }
    const std::vector<int>& parts() const { return gp_.parts(); }
    int sum() const { return gp_.sum(); }
    bool is_zero() const { return gp_.is_zero(); }
    int first() const { return length() == 0 ? 0 : part(1); }

    const GeneralizedPartition& generalized() const { return gp_; }

    Partition padded(int d) const { return Partition(gp_.padded(d)); }
    Partition trimmed() const { return Partition(gp_.trimmed()); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.gp_ == b.gp_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.gp_ < b.gp_; }

private:
    GeneralizedPartition gp_;
};

// lambda'_j = #{i : lambda_i >= j}; declared length of the result is lambda_1.
inline Partition transpose(const Partition& lam) {
    std::vector<int> t(static_cast<std::size_t>(lam.first()), 0);
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j) t[static_cast<std::size_t>(j - 1)]++;
    return Partition(std::move(t));
}

// lambda* = (-lambda_d, ..., -lambda_1).
inline GeneralizedPartition star(const GeneralizedPartition& lam) {
    std::vector<int> v(lam.parts().rbegin(), lam.parts().rend());
    for (int& x : v) x = -x;
    return GeneralizedPartition(std::move(v));
}

// Number of strictly positive parts.
inline int depth(const GeneralizedPartition& lam) {
    int c = 0;
    for (int v : lam.parts())
        if (v > 0) ++c;
    return c;
}

inline int depth(const Partition& lam) { return depth(lam.generalized()); }

// lambda = lambda^+ + lambda^-, componentwise clamp; both keep length d.
inline std::pair<Partition, GeneralizedPartition> split_plus_minus(const GeneralizedPartition& lam) {
    std::vector<int> plus, minus;
    plus.reserve(lam.parts().size());
    minus.reserve(lam.parts().size());
    for (int v : lam.parts()) {
        plus.push_back(std::max(v, 0));
        minus.push_back(std::min(v, 0));
    }
    return {Partition(std::move(plus)), GeneralizedPartition(std::move(minus))};
}

// The highest-weight admissibility conditions: lambda_{m+1} <= n and
// lambda_{d-p} >= -q, where each condition is waived outright when m >= d
// (resp. p >= d) rather than read through zero-extension.
inline bool check_admissible(const GeneralizedPartition& lam, int m, int n, int p, int q) {
    const int d = lam.length();
    if (d < 1) throw std::invalid_argument("check_admissible: length must be >= 1");
    const bool hook_ok = (m >= d) || (lam.part(m + 1) <= n);
    const bool dual_ok = (p >= d) || (lam.part(d - p) >= -q);
    return hook_ok && dual_ok;
}

// inner_i <= outer_i for all i, with parts beyond a declared length read as 0.
inline bool contains(const Partition& outer, const Partition& inner) {
    for (int i = 1; i <= inner.length(); ++i) {
        const int o = (i <= outer.length()) ? outer.part(i) : 0;
        if (inner.part(i) > o) return false;
    }
    return true;
}

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
        if (!contains(outer, inner))
            throw std::invalid_argument("skew shape: inner must be contained in outer");
    }

    int size() const { return outer.sum() - inner.sum(); }
};

// ---- text syntax: comma-separated integers, empty string = empty partition.

inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in integer list");
        std::size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer: " + item);
        out.push_back(v);
    }
    return out;
}

inline GeneralizedPartition parse_generalized_partition(const std::string& s) {
    return GeneralizedPartition(parse_int_list(s));
}

inline Partition parse_partition(const std::string& s) {
    return Partition(parse_int_list(s));
}

inline std::string to_string(const GeneralizedPartition& lam) {
    std::string out;
    for (int i = 1; i <= lam.length(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(lam.part(i));
    }
    return out;
}

inline std::string to_string(const Partition& lam) { return to_string(lam.generalized()); }

// ---- enumeration helpers -------------------------------------------------

// All partitions of `total` with at most max_len parts, each part <= max_part,
// emitted trimmed in lexicographically decreasing order.
inline void for_each_partition_of(int total, int max_len, int max_part,
                                  const std::function<void(const Partition&)>& fn) {
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int cap) {
        if (rem == 0) {
            fn(Partition(cur));
            return;
        }
        if (static_cast<int>(cur.size()) >= max_len) return;
        for (int v = std::min(rem, cap); v >= 1; --v) {
            cur.push_back(v);
            rec(rem - v, v);
            cur.pop_back();
        }
    };
    rec(total, std::min(max_part, total));
}

inline std::vector<Partition> partitions_of(int total, int max_len, int max_part) {
    std::vector<Partition> out;
    for_each_partition_of(total, max_len, max_part, [&](const Partition& p) { out.push_back(p); });
    return out;
}

// All partitions with |lambda| <= max_total and at most max_len parts,
// trimmed, ordered by size then lexicographically decreasing.
inline std::vector<Partition> partitions_up_to(int max_total, int max_len) {
    std::vector<Partition> out;
    for (int t = 0; t <= max_total; ++t)
        for_each_partition_of(t, max_len, t, [&](const Partition& p) { out.push_back(p); });
    return out;
}

// All mu with mu subset of lambda (componentwise), emitted trimmed.
inline std::vector<Partition> subpartitions(const Partition& lam) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int row) {
        if (row > lam.length()) {
            std::vector<int> v = cur;
            while (!v.empty() && v.back() == 0) v.pop_back();
            out.push_back(Partition(std::move(v)));
            return;
        }
        const int above = (row == 1) ? lam.part(1) : cur[static_cast<std::size_t>(row - 2)];
        for (int v = std::min(lam.part(row), above); v >= 0; --v) {
            cur.push_back(v);
            rec(row + 1);
            cur.pop_back();
        }
    };
    if (lam.length() == 0)
        out.push_back(Partition{});
    else
        rec(1);
    return out;
}

// Graded-lex order used for deterministic enumeration and table output:
// smaller |.|-grade first, ties broken by numerically decreasing lex order.
inline bool graded_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    int ga = 0, gb = 0;
    for (int v : a) ga += std::abs(v);
    for (int v : b) gb += std::abs(v);
    if (ga != gb) return ga < gb;
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
}

// All generalized partitions of length exactly d with sum of |parts| <= bound,
// in graded-lex order.
inline std::vector<GeneralizedPartition> generalized_partitions_abs_bounded(int d, int bound) {
    std::vector<GeneralizedPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int pos, int budget) {
        if (pos == d) {
            out.push_back(GeneralizedPartition(cur));
            return;
        }
        const int hi = pos == 0 ? budget : std::min(budget, cur.back());
        for (int v = hi; v >= -budget; --v) {
            if (pos > 0 && v > cur.back()) continue;
            cur.push_back(v);
            rec(pos + 1, budget - std::abs(v));
            cur.pop_back();
        }
    };
    rec(0, bound);
    std::sort(out.begin(), out.end(), [](const GeneralizedPartition& a, const GeneralizedPartition& b) {
        return graded_lex_less(a.parts(), b.parts());
    });
    return out;
}

} // namespace fockdual
