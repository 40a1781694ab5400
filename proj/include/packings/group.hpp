#pragma once

#include "packings/common.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

namespace packings {

enum class GroupKind { Cyclic, Product, Symmetric, Explicit };

// A finite group on element indices 0..N-1 with the identity at index 0.
// Cyclic, product and symmetric groups compute products arithmetically;
// explicit Cayley tables are accepted for testing and are validated
// (Latin square, two-sided identity, inverses, associativity) and
// re-indexed so that the identity lands on index 0.
class FiniteGroup {
public:
    static FiniteGroup cyclic(long long n) {
        if (n <= 0) throw std::invalid_argument("cyclic: order must be positive");
        FiniteGroup g;
        g.kind_ = GroupKind::Cyclic;
        g.order_ = static_cast<int>(n);
        g.abelian_ = true;
        g.name_ = "Z" + std::to_string(n);
        return g;
    }

    static FiniteGroup product(const std::vector<int>& orders) {
        if (orders.empty()) throw std::invalid_argument("product: empty factor list");
        long long n = 1;
        for (int m : orders) {
            if (m <= 0) throw std::invalid_argument("product: orders must be positive");
            n *= m;
            if (n > kMaxOrder) throw std::invalid_argument("product: order too large");
        }
        FiniteGroup g;
        g.kind_ = GroupKind::Product;
        g.order_ = static_cast<int>(n);
        g.factors_ = orders;
        g.abelian_ = true;
        std::string nm;
        for (size_t i = 0; i < orders.size(); ++i) {
            if (i) nm += "x";
            nm += "Z" + std::to_string(orders[i]);
        }
        g.name_ = nm;
        return g;
    }

    static FiniteGroup symmetric(int k) {
        if (k < 1 || k > 6) throw std::invalid_argument("symmetric: k must be in 1..6");
        FiniteGroup g;
        g.kind_ = GroupKind::Symmetric;
        g.sym_k_ = k;
        int n = 1;
        for (int j = 2; j <= k; ++j) n *= j;
        g.order_ = n;
        g.abelian_ = (k <= 2);
        g.name_ = "S" + std::to_string(k);
        // decode table: rank -> permutation (Lehmer-code order, identity at rank 0)
        g.perms_.resize(n);
        for (int r = 0; r < n; ++r) g.perms_[r] = unrank_permutation(r, k);
        return g;
    }

    // table: row-major N*N, table[a*N+b] = a*b in an arbitrary labelling.
    static FiniteGroup from_table(int n, std::vector<int> table) {
        if (n <= 0) throw std::invalid_argument("from_table: order must be positive");
        if (static_cast<long long>(n) * n != static_cast<long long>(table.size()))
            throw std::invalid_argument("from_table: table must have N*N entries");
        for (int v : table)
            if (v < 0 || v >= n) throw std::invalid_argument("from_table: entry out of range");
        validate_latin_square(n, table);
        int e = find_identity(n, table);
        if (e != 0) relabel_identity_to_zero(n, table, e);
        validate_associativity(n, table);
        validate_inverses(n, table);
        FiniteGroup g;
        g.kind_ = GroupKind::Explicit;
        g.order_ = n;
        g.table_ = std::move(table);
        g.abelian_ = true;
        for (int a = 0; a < n && g.abelian_; ++a)
            for (int b = a + 1; b < n; ++b)
                if (g.table_[a * n + b] != g.table_[b * n + a]) { g.abelian_ = false; break; }
        g.name_ = "table(" + std::to_string(n) + ")";
        return g;
    }

    // "Z8", "Z2xZ3", "S3", or a path to a table file (N followed by N*N entries).
    static FiniteGroup parse(const std::string& descriptor) {
        if (descriptor.empty()) throw std::invalid_argument("parse: empty group descriptor");
        if (descriptor[0] == 'Z' || descriptor[0] == 'S') {
            std::optional<FiniteGroup> g = parse_symbolic(descriptor);
            if (g) return *g;
        }
        std::ifstream in(descriptor);
        if (!in) throw std::invalid_argument("parse: not a group descriptor and not a readable file: " + descriptor);
        long long n = 0;
        if (!(in >> n) || n <= 0 || n > kMaxOrder)
            throw std::invalid_argument("parse: bad table header in " + descriptor);
        std::vector<int> table;
        table.reserve(n * n);
        long long v;
        while (in >> v) table.push_back(static_cast<int>(v));
        if (static_cast<long long>(table.size()) != n * n)
            throw std::invalid_argument("parse: expected N*N table entries in " + descriptor);
        return from_table(static_cast<int>(n), std::move(table));
    }

    int order() const { return order_; }
    GroupKind kind() const { return kind_; }
    bool abelian() const { return abelian_; }
    const std::string& name() const { return name_; }

    int mul(int a, int b) const {
        check_index(a);
        check_index(b);
        switch (kind_) {
            case GroupKind::Cyclic: {
                int s = a + b;
                return s >= order_ ? s - order_ : s;
            }
            case GroupKind::Product: {
                int r = 0;
                int ra = a, rb = b;
                for (size_t i = 0; i < factors_.size(); ++i) {
                    // strides are recomputed on the fly; factor lists are tiny
                    int stride = 1;
                    for (size_t j = i + 1; j < factors_.size(); ++j) stride *= factors_[j];
                    int da = ra / stride, db = rb / stride;
                    ra %= stride;
                    rb %= stride;
                    int d = da + db;
                    if (d >= factors_[i]) d -= factors_[i];
                    r += d * stride;
                }
                return r;
            }
            case GroupKind::Symmetric: {
                const auto& p = perms_[a];
                const auto& q = perms_[b];
                std::array<uint8_t, 6> c{};
                for (int x = 0; x < sym_k_; ++x) c[x] = p[q[x]];
                return rank_permutation(c, sym_k_);
            }
            case GroupKind::Explicit:
                return table_[a * order_ + b];
        }
        return 0;  // unreachable
    }

    int inv(int a) const {
        check_index(a);
        switch (kind_) {
            case GroupKind::Cyclic:
                return a == 0 ? 0 : order_ - a;
            case GroupKind::Product: {
                int r = 0;
                int ra = a;
                for (size_t i = 0; i < factors_.size(); ++i) {
                    int stride = 1;
                    for (size_t j = i + 1; j < factors_.size(); ++j) stride *= factors_[j];
                    int d = ra / stride;
                    ra %= stride;
                    r += (d == 0 ? 0 : factors_[i] - d) * stride;
                }
                return r;
            }
            case GroupKind::Symmetric: {
                const auto& p = perms_[a];
                std::array<uint8_t, 6> c{};
                for (int x = 0; x < sym_k_; ++x) c[p[x]] = static_cast<uint8_t>(x);
                return rank_permutation(c, sym_k_);
            }
            case GroupKind::Explicit: {
                for (int b = 0; b < order_; ++b)
                    if (table_[a * order_ + b] == 0) return b;
                throw std::logic_error("inv: no inverse found");  // excluded by construction
            }
        }
        return 0;  // unreachable
    }

private:
    static constexpr long long kMaxOrder = 1 << 20;

    GroupKind kind_ = GroupKind::Cyclic;
    int order_ = 1;
    bool abelian_ = true;
    std::string name_;
    std::vector<int> factors_;                    // Product
    int sym_k_ = 0;                               // Symmetric
    std::vector<std::array<uint8_t, 6>> perms_;   // Symmetric: rank -> one-line notation
    std::vector<int> table_;                      // Explicit

    void check_index(int a) const {
        if (a < 0 || a >= order_) throw std::out_of_range("element index out of range");
    }

    static std::array<uint8_t, 6> unrank_permutation(int rank, int k) {
        std::array<uint8_t, 6> out{};
        std::vector<uint8_t> pool(k);
        std::iota(pool.begin(), pool.end(), 0);
        int fact = 1;
        for (int j = 2; j < k; ++j) fact *= j;  // (k-1)!
        for (int pos = 0; pos < k; ++pos) {
            int d = (k - 1 - pos > 0) ? rank / fact : rank;
            out[pos] = pool[d];
            pool.erase(pool.begin() + d);
            rank -= d * fact;
            if (k - 1 - pos > 1) fact /= (k - 1 - pos);
        }
        return out;
    }

    static int rank_permutation(const std::array<uint8_t, 6>& p, int k) {
        int rank = 0;
        for (int pos = 0; pos < k; ++pos) {
            int smaller = 0;
            for (int j = pos + 1; j < k; ++j)
                if (p[j] < p[pos]) ++smaller;
            rank = rank * (k - pos) + smaller;
        }
        return rank;
    }

    static std::optional<FiniteGroup> parse_symbolic(const std::string& s) {
        if (s[0] == 'S') {
            if (s.size() == 2 && s[1] >= '1' && s[1] <= '6') return symmetric(s[1] - '0');
            return std::nullopt;
        }
        // ZnxZm... chains
        std::vector<int> orders;
        size_t pos = 0;
        while (pos < s.size()) {
            if (s[pos] != 'Z') return std::nullopt;
            ++pos;
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) return std::nullopt;
            long long v = std::stoll(s.substr(start, pos - start));
            if (v <= 0 || v > kMaxOrder) return std::nullopt;
            orders.push_back(static_cast<int>(v));
            if (pos == s.size()) break;
            if (s[pos] != 'x') return std::nullopt;
            ++pos;
            if (pos == s.size()) return std::nullopt;
        }
        if (orders.empty()) return std::nullopt;
        if (orders.size() == 1) return cyclic(orders[0]);
        return product(orders);
    }

    static void validate_latin_square(int n, const std::vector<int>& t) {
        std::vector<char> seen(n);
        for (int a = 0; a < n; ++a) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int b = 0; b < n; ++b) {
                int v = t[a * n + b];
                if (seen[v]) throw std::invalid_argument("from_table: row " + std::to_string(a) + " is not a permutation");
                seen[v] = 1;
            }
        }
        for (int b = 0; b < n; ++b) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int a = 0; a < n; ++a) {
                int v = t[a * n + b];
                if (seen[v]) throw std::invalid_argument("from_table: column " + std::to_string(b) + " is not a permutation");
                seen[v] = 1;
            }
        }
    }

    static int find_identity(int n, const std::vector<int>& t) {
        for (int e = 0; e < n; ++e) {
            bool ok = true;
            for (int a = 0; a < n && ok; ++a)
                if (t[e * n + a] != a || t[a * n + e] != a) ok = false;
            if (ok) return e;
        }
        throw std::invalid_argument("from_table: no two-sided identity");
    }

    static void relabel_identity_to_zero(int n, std::vector<int>& t, int e) {
        auto relabel = [&](int x) { return x == e ? 0 : (x == 0 ? e : x); };
        std::vector<int> nt(n * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                nt[relabel(a) * n + relabel(b)] = relabel(t[a * n + b]);
        t = std::move(nt);
    }

    static void validate_associativity(int n, const std::vector<int>& t) {
        auto check = [&](int a, int b, int c) {
            if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]])
                throw std::invalid_argument("from_table: not associative at (" + std::to_string(a) + "," +
                                            std::to_string(b) + "," + std::to_string(c) + ")");
        };
        if (n <= 64) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c) check(a, b, c);
        } else {
            std::mt19937 rng(12345);
            std::uniform_int_distribution<int> d(0, n - 1);
            for (int s = 0; s < 200000; ++s) check(d(rng), d(rng), d(rng));
        }
    }

    static void validate_inverses(int n, const std::vector<int>& t) {
        for (int a = 0; a < n; ++a) {
            bool found = false;
            for (int b = 0; b < n && !found; ++b)
                if (t[a * n + b] == 0 && t[b * n + a] == 0) found = true;
            if (!found) throw std::invalid_argument("from_table: element " + std::to_string(a) + " has no two-sided inverse");
        }
    }
};

using Subset = std::vector<int>;  // sorted, duplicate-free element indices

inline Subset normalize_subset(Subset s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline Subset translate(const FiniteGroup& g, int a, const Subset& s) {
    Subset out;
    out.reserve(s.size());
    for (int x : s) out.push_back(g.mul(a, x));
    return normalize_subset(std::move(out));
}

inline Subset inverse_set(const FiniteGroup& g, const Subset& s) {
    Subset out;
    out.reserve(s.size());
    for (int x : s) out.push_back(g.inv(x));
    return normalize_subset(std::move(out));
}

// S^{-1}S = { a^{-1} b : a, b in S }; always contains the identity.
inline Subset difference_set(const FiniteGroup& g, const Subset& s) {
    if (s.empty()) throw std::invalid_argument("difference_set: empty subset");
    Subset out;
    out.reserve(s.size() * s.size());
    for (int a : s) {
        int ai = g.inv(a);
        for (int b : s) out.push_back(g.mul(ai, b));
    }
    return normalize_subset(std::move(out));
}

// An ordered list of labelled non-empty subsets of one group. n = 0 is allowed.
class SubsetFamily {
public:
    SubsetFamily(FiniteGroup group, std::vector<Subset> subsets)
        : group_(std::move(group)) {
        subsets_.reserve(subsets.size());
        for (auto& s : subsets) {
            Subset t = normalize_subset(std::move(s));
            if (t.empty()) throw std::invalid_argument("SubsetFamily: subsets must be non-empty");
            if (t.front() < 0 || t.back() >= group_.order())
                throw std::invalid_argument("SubsetFamily: element index out of range");
            subsets_.push_back(std::move(t));
        }
    }

    const FiniteGroup& group() const { return group_; }
    int n() const { return static_cast<int>(subsets_.size()); }
    const Subset& subset(int i) const { return subsets_.at(i); }
    const std::vector<Subset>& subsets() const { return subsets_; }
    int cardinality(int i) const { return static_cast<int>(subsets_.at(i).size()); }

    std::vector<int> cardinalities() const {
        std::vector<int> c;
        c.reserve(subsets_.size());
        for (const auto& s : subsets_) c.push_back(static_cast<int>(s.size()));
        return c;
    }

    long long cardinality_sum() const {
        long long t = 0;
        for (const auto& s : subsets_) t += static_cast<long long>(s.size());
        return t;
    }

    SubsetFamily with_extra(const Subset& extra) const {
        std::vector<Subset> ss = subsets_;
        ss.push_back(extra);
        return SubsetFamily(group_, std::move(ss));
    }

private:
    FiniteGroup group_;
    std::vector<Subset> subsets_;
};

// "0,1;0,2;0,4" -> three subsets. An empty string is the empty family.
inline std::vector<Subset> parse_subsets(const std::string& text) {
    std::vector<Subset> out;
    if (text.empty()) return out;
    std::stringstream groups(text);
    std::string part;
    while (std::getline(groups, part, ';')) {
        Subset s;
        std::stringstream elems(part);
        std::string tok;
        while (std::getline(elems, tok, ',')) {
            if (tok.empty()) continue;
            s.push_back(std::stoi(tok));
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace packings
