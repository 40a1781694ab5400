#pragma once

#include "packings/genericity.hpp"
#include "packings/group.hpp"

#include <bit>
#include <functional>
#include <set>

namespace packings {

// Simple graph on vertices 0..n-1 recording which translates meet.
struct IntersectionGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // i < j, sorted, unique

    IntersectionGraph() = default;
    IntersectionGraph(int nn, std::vector<std::pair<int, int>> ee) : n(nn), edges(std::move(ee)) {
        for (auto& [a, b] : edges) {
            if (a > b) std::swap(a, b);
            if (a < 0 || b >= n || a == b) throw std::invalid_argument("IntersectionGraph: bad edge");
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    bool has_edge(int a, int b) const {
        if (a > b) std::swap(a, b);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
    }

    // Vertex -> component id; isolated vertices are their own components.
    std::vector<int> component_labels() const {
        std::vector<int> parent(n);
        for (int i = 0; i < n; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        for (auto [a, b] : edges) parent[find(a)] = find(b);
        std::vector<int> label(n);
        for (int i = 0; i < n; ++i) label[i] = find(i);
        return label;
    }

    int component_count() const {
        auto lab = component_labels();
        std::set<int> roots(lab.begin(), lab.end());
        return static_cast<int>(roots.size());
    }

    bool operator==(const IntersectionGraph& o) const { return n == o.n && edges == o.edges; }

    // The Boolean poset of all 2^C(n,2) simple graphs on n vertices.
    static std::vector<IntersectionGraph> all_graphs(int n) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        if (pairs.size() > 20) throw std::invalid_argument("all_graphs: too many vertices");
        std::vector<IntersectionGraph> out;
        out.reserve(1u << pairs.size());
        for (unsigned m = 0; m < (1u << pairs.size()); ++m) {
            std::vector<std::pair<int, int>> e;
            for (size_t t = 0; t < pairs.size(); ++t)
                if (m & (1u << t)) e.push_back(pairs[t]);
            out.emplace_back(n, std::move(e));
        }
        return out;
    }
};

namespace detail {

struct ScanBudget {
    unsigned long long tuples = 100'000'000ULL;
};

inline void check_scan_budget(const FiniteGroup& g, int n, const ScanBudget& b, int replicas = 1) {
    Int total = int_pow(Int(g.order()), static_cast<unsigned long long>(n)) * replicas;
    if (total > Int(b.tuples))
        throw BudgetExceeded("scan of " + total.str() + " tuples exceeds budget " + std::to_string(b.tuples));
}

template <class Mask>
struct MaskOps;

template <>
struct MaskOps<uint64_t> {
    static uint64_t zero(int) { return 0; }
    static void set(uint64_t& m, int b) { m |= (uint64_t{1} << b); }
    static bool intersects(uint64_t a, uint64_t b) { return (a & b) != 0; }
    static uint64_t unite(uint64_t a, uint64_t b) { return a | b; }
    static int popcount(uint64_t a) { return std::popcount(a); }
};

using WideMask = std::vector<uint64_t>;

template <>
struct MaskOps<WideMask> {
    static WideMask zero(int nbits) { return WideMask((nbits + 63) / 64, 0); }
    static void set(WideMask& m, int b) { m[b / 64] |= (uint64_t{1} << (b % 64)); }
    static bool intersects(const WideMask& a, const WideMask& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] & b[i]) return true;
        return false;
    }
    static WideMask unite(const WideMask& a, const WideMask& b) {
        WideMask r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] | b[i];
        return r;
    }
    static int popcount(const WideMask& a) {
        int c = 0;
        for (uint64_t w : a) c += std::popcount(w);
        return c;
    }
};

template <class Mask>
class Scanner {
public:
    explicit Scanner(const SubsetFamily& fam) : fam_(fam), n_(fam.n()), N_(fam.group().order()) {
        tr_.resize(n_);
        for (int i = 0; i < n_; ++i) {
            tr_[i].resize(N_);
            for (int g = 0; g < N_; ++g) {
                Mask m = MaskOps<Mask>::zero(N_);
                for (int x : fam.subset(i)) MaskOps<Mask>::set(m, fam.group().mul(g, x));
                tr_[i][g] = std::move(m);
            }
        }
    }

    Int count_packings() const {
        Int count = 0;
        Mask empty = MaskOps<Mask>::zero(N_);
        packings_rec(0, empty, count);
        return count;
    }

    Int count_coverings() const {
        std::vector<long long> remaining(n_ + 1, 0);
        for (int i = n_ - 1; i >= 0; --i) remaining[i] = remaining[i + 1] + fam_.cardinality(i);
        Int count = 0;
        Mask empty = MaskOps<Mask>::zero(N_);
        coverings_rec(0, empty, remaining, count);
        return count;
    }

    // #R_Gamma and #E_Gamma for a fixed constraint graph.
    std::pair<Int, Int> count_r_and_e(const IntersectionGraph& gamma) const {
        if (gamma.n != n_) throw std::invalid_argument("count_r_and_e: vertex count mismatch");
        std::vector<int> labels = gamma.component_labels();
        // component -> its smallest vertex
        std::vector<int> anchor(n_, -1);
        for (int i = 0; i < n_; ++i)
            if (anchor[labels[i]] < 0) anchor[labels[i]] = i;

        Int r = 0;
        std::set<std::vector<int>> classes;
        std::vector<int> tuple(n_, 0);
        const FiniteGroup& g = fam_.group();
        while (true) {
            bool ok = true;
            for (auto [a, b] : gamma.edges) {
                if (!MaskOps<Mask>::intersects(tr_[a][tuple[a]], tr_[b][tuple[b]])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                ++r;
                std::vector<int> sig(n_);
                for (int i = 0; i < n_; ++i) sig[i] = g.mul(g.inv(tuple[anchor[labels[i]]]), tuple[i]);
                classes.insert(std::move(sig));
            }
            int d = n_ - 1;
            while (d >= 0 && tuple[d] == N_ - 1) tuple[d--] = 0;
            if (d < 0) break;
            ++tuple[d];
        }
        return {r, Int(static_cast<long long>(classes.size()))};
    }

    IntersectionGraph graph_of(const std::vector<int>& tuple) const {
        std::vector<std::pair<int, int>> e;
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (MaskOps<Mask>::intersects(tr_[a][tuple[a]], tr_[b][tuple[b]])) e.emplace_back(a, b);
        return IntersectionGraph(n_, std::move(e));
    }

private:
    void packings_rec(int depth, const Mask& used, Int& count) const {
        if (depth == n_) {
            ++count;
            return;
        }
        for (int g = 0; g < N_; ++g) {
            if (MaskOps<Mask>::intersects(tr_[depth][g], used)) continue;
            packings_rec(depth + 1, MaskOps<Mask>::unite(used, tr_[depth][g]), count);
        }
    }

    void coverings_rec(int depth, const Mask& covered, const std::vector<long long>& remaining, Int& count) const {
        int missing = N_ - MaskOps<Mask>::popcount(covered);
        if (missing > remaining[depth]) return;  // cannot cover any more
        if (depth == n_) {
            if (missing == 0) ++count;
            return;
        }
        for (int g = 0; g < N_; ++g)
            coverings_rec(depth + 1, MaskOps<Mask>::unite(covered, tr_[depth][g]), remaining, count);
    }

    const SubsetFamily& fam_;
    int n_;
    int N_;
    std::vector<std::vector<Mask>> tr_;
};

template <class F>
auto with_scanner(const SubsetFamily& fam, F&& f) {
    if (fam.group().order() <= 64) {
        Scanner<uint64_t> s(fam);
        return f(s);
    }
    Scanner<WideMask> s(fam);
    return f(s);
}

}  // namespace detail

using ScanBudget = detail::ScanBudget;

// Exact number of tuples (g_1..g_n) whose translates g_i S_i are pairwise
// disjoint, by exhaustive scan with incremental pruning. n = 0 counts 1.
inline Int count_packings_bruteforce(const SubsetFamily& fam, const ScanBudget& budget = {}) {
    if (fam.n() == 0) return 1;
    detail::check_scan_budget(fam.group(), fam.n(), budget);
    return detail::with_scanner(fam, [](const auto& s) { return s.count_packings(); });
}

inline IntersectionGraph intersection_graph(const SubsetFamily& fam, const std::vector<int>& tuple) {
    if (static_cast<int>(tuple.size()) != fam.n())
        throw std::invalid_argument("intersection_graph: tuple length must equal n");
    for (int g : tuple)
        if (g < 0 || g >= fam.group().order()) throw std::out_of_range("intersection_graph: tuple entry out of range");
    return detail::with_scanner(fam, [&](const auto& s) { return s.graph_of(tuple); });
}

// (#R_Gamma, #E_Gamma): tuples whose intersection graph contains Gamma, and
// their classes under g ~ h iff g_i h_i^{-1} is constant on Gamma-components.
inline std::pair<Int, Int> count_R_and_E(const SubsetFamily& fam, const IntersectionGraph& gamma,
                                         const ScanBudget& budget = {}) {
    detail::check_scan_budget(fam.group(), fam.n(), budget);
    return detail::with_scanner(fam, [&](const auto& s) { return s.count_r_and_e(gamma); });
}

// Packing count via inclusion-exclusion over the Boolean lattice of simple
// graphs: sum over Gamma of (-1)^{e(Gamma)} #E_Gamma N^{c(Gamma)}.
// Valid for arbitrary families, generic or not.
inline Int alpha_via_boolean_moebius(const SubsetFamily& fam, const ScanBudget& budget = {}) {
    int n = fam.n();
    if (n > 5) throw std::invalid_argument("alpha_via_boolean_moebius: n must be <= 5");
    if (n == 0) return 1;
    auto graphs = IntersectionGraph::all_graphs(n);
    detail::check_scan_budget(fam.group(), n, budget, static_cast<int>(graphs.size()));
    Int alpha = 0;
    Int N(fam.group().order());
    detail::with_scanner(fam, [&](const auto& s) {
        for (const auto& gamma : graphs) {
            auto [r, e] = s.count_r_and_e(gamma);
            (void)r;
            Int term = e * int_pow(N, gamma.component_count());
            if (gamma.edge_count() % 2 == 1)
                alpha -= term;
            else
                alpha += term;
        }
        return 0;
    });
    return alpha;
}

struct ExtensionBounds {
    Int a;       // packings of the base family
    Int b;       // packings with the extra subset appended
    Int lower;   // (N - #S_{n+1} * sum #S_i) * a
    Int upper;   // (N - sum #S_i) * a
    bool within = false;
    bool singleton_equality = false;  // b == upper, guaranteed when #S_{n+1} == 1
};

inline ExtensionBounds check_extension_bounds(const SubsetFamily& fam, const Subset& extra,
                                              const ScanBudget& budget = {}) {
    SubsetFamily extended = fam.with_extra(extra);
    ExtensionBounds out;
    out.a = count_packings_bruteforce(fam, budget);
    out.b = count_packings_bruteforce(extended, budget);
    Int N(fam.group().order());
    Int sum_cards(fam.cardinality_sum());
    Int extra_card(static_cast<long long>(normalize_subset(extra).size()));
    out.lower = (N - extra_card * sum_cards) * out.a;
    out.upper = (N - sum_cards) * out.a;
    out.within = out.lower <= out.b && out.b <= out.upper;
    out.singleton_equality = (out.b == out.upper);
    return out;
}

// Tuples (g_1..g_n) with union of translates equal to the whole group.
inline Int count_coverings_bruteforce(const SubsetFamily& fam, const ScanBudget& budget = {}) {
    if (fam.n() == 0) return fam.group().order() == 0 ? 1 : 0;
    detail::check_scan_budget(fam.group(), fam.n(), budget);
    return detail::with_scanner(fam, [](const auto& s) { return s.count_coverings(); });
}

// Closed form N^n - N prod #S_j for the number of coverings by the
// complements G \ S_i of a generic family with n >= 2 parts.
inline Int complement_covering_count(const SubsetFamily& fam, const GenericityOptions& opt = {}) {
    if (fam.n() < 2) throw std::invalid_argument("complement_covering_count: needs at least two parts");
    GenericityResult gen = is_generic(fam, opt);
    if (!gen.generic) throw std::invalid_argument("complement_covering_count: family is not generic");
    Int N(fam.group().order());
    Int prod = 1;
    for (int i = 0; i < fam.n(); ++i) prod *= fam.cardinality(i);
    return int_pow(N, fam.n()) - N * prod;
}

// The family of complements G \ S_i.
inline SubsetFamily complement_family(const SubsetFamily& fam) {
    std::vector<Subset> comps;
    for (int i = 0; i < fam.n(); ++i) {
        Subset c;
        const Subset& s = fam.subset(i);
        for (int x = 0; x < fam.group().order(); ++x)
            if (!std::binary_search(s.begin(), s.end(), x)) c.push_back(x);
        comps.push_back(std::move(c));
    }
    return SubsetFamily(fam.group(), std::move(comps));
}

}  // namespace packings
