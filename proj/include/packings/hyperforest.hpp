#pragma once

#include "packings/bruteforce.hpp"
#include "packings/stirling.hpp"

#include <map>
#include <optional>

namespace packings {

namespace detail {

// Both hyperforest axioms at once: distinct hyperedges share at most one
// vertex, and per connected component sum(|e|-1) = |vertices| - 1. The two
// conditions together say every cycle lies inside a single hyperedge.
inline bool hyperforest_axioms(const std::vector<std::vector<int>>& edges, int n) {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : edges) {
        // an edge whose vertices already share a component either overlaps an
        // earlier hyperedge in >= 2 vertices or closes a cycle through
        // several hyperedges; both are excluded
        std::vector<int> roots;
        for (int v : e) roots.push_back(find(v));
        std::sort(roots.begin(), roots.end());
        if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) return false;
        for (size_t i = 1; i < roots.size(); ++i) parent[roots[i]] = roots[0];
    }
    return true;
}

}  // namespace detail

// A set of hyperedges (vertex sets of size >= 2) on labelled vertices 0..n-1
// such that distinct hyperedges meet in at most one vertex and every cycle is
// contained in a hyperedge. Canonical form: sorted hyperedges in lex order.
class Hyperforest {
public:
    Hyperforest(int n, std::vector<std::vector<int>> edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("Hyperforest: negative vertex count");
        for (auto& e : edges) {
            std::sort(e.begin(), e.end());
            e.erase(std::unique(e.begin(), e.end()), e.end());
            if (e.size() < 2) throw std::invalid_argument("Hyperforest: hyperedges need >= 2 vertices");
            if (e.front() < 0 || e.back() >= n) throw std::invalid_argument("Hyperforest: vertex out of range");
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("Hyperforest: duplicate hyperedge");
        if (!detail::hyperforest_axioms(edges, n)) throw std::invalid_argument("Hyperforest: axioms violated");
        edges_ = std::move(edges);
    }

    static Hyperforest trivial(int n) { return Hyperforest(n, {}); }

    int n() const { return n_; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    int degree(int v) const {
        int d = 0;
        for (const auto& e : edges_)
            if (std::binary_search(e.begin(), e.end(), v)) ++d;
        return d;
    }

    // kappa[j] = number of hyperedges with exactly j vertices
    std::map<int, int> kappa() const {
        std::map<int, int> k;
        for (const auto& e : edges_) ++k[static_cast<int>(e.size())];
        return k;
    }

    // Connected components, counting isolated vertices.
    int component_count() const {
        std::vector<int> parent(n_);
        for (int i = 0; i < n_; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        for (const auto& e : edges_)
            for (size_t i = 1; i < e.size(); ++i) parent[find(e[i])] = find(e[0]);
        int c = 0;
        for (int i = 0; i < n_; ++i)
            if (find(i) == i) ++c;
        return c;
    }

    bool connected() const { return component_count() <= 1; }

    bool spanning() const {  // no isolated vertices, single component
        std::vector<char> touched(n_, 0);
        for (const auto& e : edges_)
            for (int v : e) touched[v] = 1;
        for (char t : touched)
            if (!t) return false;
        return connected();
    }

    IntersectionGraph primal_graph() const {
        std::vector<std::pair<int, int>> pe;
        for (const auto& e : edges_)
            for (size_t i = 0; i < e.size(); ++i)
                for (size_t j = i + 1; j < e.size(); ++j) pe.emplace_back(e[i], e[j]);
        return IntersectionGraph(n_, std::move(pe));
    }

    std::string key() const {
        std::string k = std::to_string(n_) + ":";
        for (const auto& e : edges_) {
            for (int v : e) k += std::to_string(v) + ",";
            k += ";";
        }
        return k;
    }

    bool operator==(const Hyperforest& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator<(const Hyperforest& o) const { return edges_ < o.edges_; }

private:
    int n_;
    std::vector<std::vector<int>> edges_;
};

inline bool is_hyperforest(const std::vector<std::vector<int>>& edges, int n) {
    std::vector<std::vector<int>> es = edges;
    for (auto& e : es) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.size() < 2 || e.front() < 0 || e.back() >= n) return false;
    }
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
    return detail::hyperforest_axioms(es, n);
}

// Complete duplicate-free enumeration of HF(n) in canonical order.
inline std::vector<Hyperforest> enumerate_hyperforests(int n, int guard = 7) {
    if (n < 0) throw std::invalid_argument("enumerate_hyperforests: negative n");
    if (n > guard) throw std::invalid_argument("enumerate_hyperforests: n exceeds guard " + std::to_string(guard));
    // candidate hyperedges in lex order
    std::vector<std::vector<int>> candidates;
    for (unsigned m = 0; m < (1u << n); ++m) {
        if (std::popcount(m) < 2) continue;
        std::vector<int> e;
        for (int v = 0; v < n; ++v)
            if (m & (1u << v)) e.push_back(v);
        candidates.push_back(std::move(e));
    }
    std::sort(candidates.begin(), candidates.end());

    std::vector<Hyperforest> out;
    std::vector<std::vector<int>> current;
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : find(parent[x]); };

    std::function<void(size_t)> extend = [&](size_t from) {
        out.emplace_back(n, current);
        for (size_t c = from; c < candidates.size(); ++c) {
            const auto& e = candidates[c];
            std::vector<int> roots;
            for (int v : e) roots.push_back(find(v));
            std::sort(roots.begin(), roots.end());
            if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) continue;
            for (size_t i = 1; i < roots.size(); ++i) parent[roots[i]] = roots[0];
            current.push_back(e);
            extend(c + 1);
            current.pop_back();
            for (size_t i = 1; i < roots.size(); ++i) parent[roots[i]] = roots[i];
        }
    };
    extend(0);
    std::sort(out.begin(), out.end());
    return out;
}

// Connected hyperforests spanning all n vertices with exactly k hyperedges.
inline std::vector<Hyperforest> enumerate_hypertrees(int n, int k, int guard = 7) {
    std::vector<Hyperforest> out;
    for (auto& f : enumerate_hyperforests(n, guard))
        if (f.edge_count() == k && f.spanning()) out.push_back(std::move(f));
    if (n == 1 && k == 0) return {Hyperforest::trivial(1)};  // single vertex is connected
    return out;
}

// F' <= F iff every hyperedge of F' is contained in some hyperedge of F.
inline bool poset_leq(const Hyperforest& fp, const Hyperforest& f) {
    if (fp.n() != f.n()) throw std::invalid_argument("poset_leq: vertex count mismatch");
    for (const auto& ep : fp.edges()) {
        bool inside = false;
        for (const auto& e : f.edges()) {
            if (std::includes(e.begin(), e.end(), ep.begin(), ep.end())) {
                inside = true;
                break;
            }
        }
        if (!inside) return false;
    }
    return true;
}

// mu(F) = prod over hyperedges of -(|e|-2)!.
inline Int moebius_closed_form(const Hyperforest& f) {
    Int mu = 1;
    for (const auto& e : f.edges()) {
        mu *= -factorial(static_cast<long long>(e.size()) - 2);
    }
    return mu;
}

// Recursive Moebius values over the down-sets of HF(n), memoized on the
// canonical form. Exists to validate the closed form, not to replace it.
class MoebiusTable {
public:
    explicit MoebiusTable(int n, int guard = 6) : all_(enumerate_hyperforests(n, guard)) {}

    Int mu(const Hyperforest& f) {
        auto it = memo_.find(f.key());
        if (it != memo_.end()) return it->second;
        Int v;
        if (f.edge_count() == 0) {
            v = 1;
        } else {
            v = 0;
            for (const auto& fp : all_) {
                if (fp == f) continue;
                if (poset_leq(fp, f)) v -= mu(fp);
            }
        }
        memo_.emplace(f.key(), v);
        return v;
    }

    const std::vector<Hyperforest>& all() const { return all_; }

private:
    std::vector<Hyperforest> all_;
    std::map<std::string, Int> memo_;
};

inline Int moebius_recursive(const Hyperforest& f, int guard = 6) {
    MoebiusTable table(f.n(), guard);
    return table.mu(f);
}

// alpha = sum over F in HF(n) of mu(F) N^{c(F)} prod_j s_j^{deg_F(j)},
// with the closed-form Moebius values.
inline Int alpha_via_hyperforest_sum(const Int& N, const std::vector<int>& cards, int guard = 6) {
    int n = static_cast<int>(cards.size());
    Int alpha = 0;
    for (const auto& f : enumerate_hyperforests(n, guard)) {
        Int term = moebius_closed_form(f) * int_pow(N, f.component_count());
        for (int j = 0; j < n; ++j) term *= int_pow(Int(cards[j]), f.degree(j));
        alpha += term;
    }
    return alpha;
}

// Number of labelled hypertrees with n vertices and k hyperedges:
// n^{k-1} S2(n-1, k). (Husimi-type count.)
inline Int husimi_count(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("husimi_count: bad arguments");
    StirlingTables st(std::max(0, n - 1));
    if (n == 1) return k == 0 ? 1 : 0;
    if (k == 0) return 0;
    return int_pow(Int(n), k - 1) * st.s2(n - 1, k);
}

// sum over HT_k(n) of prod (|e|-2)! prod s_j^{deg(j)}; checked on the fly
// against (-1)^{n+k+1} sigma_n sigma_1^{k-1} S1(n-1,k).
inline Int weighted_hypertree_sum(int n, int k, const std::vector<Int>& s, int guard = 7) {
    if (static_cast<int>(s.size()) != n) throw std::invalid_argument("weighted_hypertree_sum: need n weights");
    if (k < 1) throw std::invalid_argument("weighted_hypertree_sum: k must be >= 1");
    Int lhs = 0;
    for (const auto& t : enumerate_hypertrees(n, k, guard)) {
        Int term = 1;
        for (const auto& e : t.edges()) term *= factorial(static_cast<long long>(e.size()) - 2);
        for (int j = 0; j < n; ++j) term *= int_pow(s[j], t.degree(j));
        lhs += term;
    }
    Int sigma1 = 0, sigman = 1;
    for (const Int& v : s) {
        sigma1 += v;
        sigman *= v;
    }
    StirlingTables st(std::max(0, n - 1));
    Int rhs = sigman * int_pow(sigma1, k - 1) * st.s1(n - 1, k);
    if ((n + k + 1) % 2 == 1) rhs = -rhs;
    if (lhs != rhs)
        throw std::logic_error("weighted_hypertree_sum: enumeration disagrees with the closed form (n=" +
                               std::to_string(n) + ", k=" + std::to_string(k) + ")");
    return lhs;
}

// All inclusion-maximal cliques with >= 2 vertices, by subset enumeration.
inline std::vector<std::vector<int>> maximal_cliques(const IntersectionGraph& g) {
    if (g.n > 20) throw std::invalid_argument("maximal_cliques: too many vertices");
    std::vector<unsigned> cliques;
    for (unsigned m = 0; m < (1u << g.n); ++m) {
        if (std::popcount(m) < 2) continue;
        bool ok = true;
        for (int a = 0; a < g.n && ok; ++a) {
            if (!(m & (1u << a))) continue;
            for (int b = a + 1; b < g.n && ok; ++b)
                if ((m & (1u << b)) && !g.has_edge(a, b)) ok = false;
        }
        if (ok) cliques.push_back(m);
    }
    std::vector<std::vector<int>> out;
    for (unsigned m : cliques) {
        bool maximal = true;
        for (unsigned m2 : cliques)
            if (m2 != m && (m2 & m) == m) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        std::vector<int> e;
        for (int v = 0; v < g.n; ++v)
            if (m & (1u << v)) e.push_back(v);
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Recognize primal graphs of hyperforests (block graphs): the maximal cliques
// must themselves form a hyperforest. Returns the hyperforest on success.
inline std::optional<Hyperforest> as_hyperforest_primal(const IntersectionGraph& g) {
    auto cliques = maximal_cliques(g);
    if (!is_hyperforest(cliques, g.n)) return std::nullopt;
    return Hyperforest(g.n, std::move(cliques));
}

}  // namespace packings
