#pragma once

#include "packings/group.hpp"

#include <optional>

namespace packings {

// A product g_{i_1} g_{i_2} ... g_{i_k} = e that violates genericity,
// recorded as (subset index, element) steps in product order.
struct GenericityWitness {
    std::vector<std::pair<int, int>> steps;
};

struct GenericityResult {
    bool generic = true;
    std::optional<GenericityWitness> witness;
};

struct GenericityOptions {
    // Upper bound on enumeration nodes; the check refuses beyond it.
    unsigned long long budget = 10'000'000ULL;
    enum class Mode { Auto, Ordered, AbelianSubset } mode = Mode::Auto;
};

namespace detail {

// Nodes visited by the ordered search: sum over k>=1 of k! e_k(d_1..d_n).
inline Int ordered_enumeration_cost(const std::vector<size_t>& d) {
    size_t n = d.size();
    std::vector<Int> e(n + 1);
    e[0] = 1;
    for (size_t i = 0; i < n; ++i)
        for (size_t k = std::min(i + 1, n); k >= 1; --k) e[k] += e[k - 1] * static_cast<long long>(d[i]);
    Int total = 0;
    Int kfact = 1;
    for (size_t k = 1; k <= n; ++k) {
        kfact *= static_cast<long long>(k);
        total += kfact * e[k];
    }
    return total;
}

inline Int subset_enumeration_cost(const std::vector<size_t>& d) {
    Int total = 1;
    for (size_t x : d) total *= static_cast<long long>(1 + x);
    return total;
}

inline bool abelian_search(const std::vector<Subset>& diffs, const FiniteGroup& g, size_t idx, int sum,
                           int chosen, std::vector<std::pair<int, int>>& stack, GenericityWitness& out) {
    if (idx == diffs.size()) {
        if (chosen >= 2 && sum == 0) {
            out.steps = stack;
            return true;
        }
        return false;
    }
    if (abelian_search(diffs, g, idx + 1, sum, chosen, stack, out)) return true;
    for (int x : diffs[idx]) {
        stack.emplace_back(static_cast<int>(idx), x);
        if (abelian_search(diffs, g, idx + 1, g.mul(sum, x), chosen + 1, stack, out)) return true;
        stack.pop_back();
    }
    return false;
}

inline bool ordered_search(const std::vector<Subset>& diffs, const FiniteGroup& g, unsigned used, int prod,
                           int chosen, std::vector<std::pair<int, int>>& stack, GenericityWitness& out) {
    if (chosen >= 2 && prod == 0) {
        out.steps = stack;
        return true;
    }
    for (size_t i = 0; i < diffs.size(); ++i) {
        if (used & (1u << i)) continue;
        for (int x : diffs[i]) {
            stack.emplace_back(static_cast<int>(i), x);
            if (ordered_search(diffs, g, used | (1u << i), g.mul(prod, x), chosen + 1, stack, out)) return true;
            stack.pop_back();
        }
    }
    return false;
}

}  // namespace detail

// Genericity: no ordered product of non-identity elements drawn from distinct
// difference sets S_i^{-1}S_i equals the identity. Abelian groups are checked
// with one choice-vector pass over index subsets; the ordering-sensitive
// search is used otherwise (or on request, for cross-validation).
inline GenericityResult is_generic(const SubsetFamily& fam, const GenericityOptions& opt = {}) {
    const FiniteGroup& g = fam.group();
    if (fam.n() > 31) throw std::invalid_argument("is_generic: more than 31 subsets unsupported");
    std::vector<Subset> diffs;
    std::vector<size_t> sizes;
    diffs.reserve(fam.n());
    for (int i = 0; i < fam.n(); ++i) {
        Subset d = difference_set(g, fam.subset(i));
        d.erase(std::remove(d.begin(), d.end(), 0), d.end());  // drop the identity
        sizes.push_back(d.size());
        diffs.push_back(std::move(d));
    }

    bool use_subset_pass;
    switch (opt.mode) {
        case GenericityOptions::Mode::Ordered: use_subset_pass = false; break;
        case GenericityOptions::Mode::AbelianSubset:
            if (!g.abelian()) throw std::invalid_argument("is_generic: subset mode requires an abelian group");
            use_subset_pass = true;
            break;
        default: use_subset_pass = g.abelian(); break;
    }

    Int cost = use_subset_pass ? detail::subset_enumeration_cost(sizes)
                               : detail::ordered_enumeration_cost(sizes);
    if (cost > Int(opt.budget))
        throw BudgetExceeded("is_generic: enumeration cost " + cost.str() + " exceeds budget " +
                             std::to_string(opt.budget));

    GenericityResult res;
    GenericityWitness w;
    std::vector<std::pair<int, int>> stack;
    bool bad = use_subset_pass ? detail::abelian_search(diffs, g, 0, 0, 0, stack, w)
                               : detail::ordered_search(diffs, g, 0u, 0, 0, stack, w);
    if (bad) {
        res.generic = false;
        res.witness = std::move(w);
    }
    return res;
}

// S_1 = {0..s_1-1}, then S_i = {0, k_i, ..., (s_i-1) k_i} with the minimal
// admissible step k_i = 1 + sum_{j<i} (s_j-1) k_j. Generic in Z by construction.
inline std::vector<std::vector<long long>> make_generic_in_Z(const std::vector<int>& cards) {
    std::vector<std::vector<long long>> out;
    long long spread = 0;  // sum of (s_j - 1) k_j so far
    for (size_t i = 0; i < cards.size(); ++i) {
        if (cards[i] < 1) throw std::invalid_argument("make_generic_in_Z: cardinalities must be >= 1");
        long long k = spread + 1;
        std::vector<long long> s;
        s.reserve(cards[i]);
        for (int t = 0; t < cards[i]; ++t) {
            long long v = static_cast<long long>(t) * k;
            if (v < 0) throw std::overflow_error("make_generic_in_Z: overflow");
            s.push_back(v);
        }
        spread += static_cast<long long>(cards[i] - 1) * k;
        if (spread < 0) throw std::overflow_error("make_generic_in_Z: overflow");
        out.push_back(std::move(s));
    }
    return out;
}

struct ReduceResult {
    SubsetFamily family;
    GenericityResult genericity;
};

// Reduce integer sets mod N and re-decide genericity directly on the result.
// Collapsing a subset (two elements identified) is an error, not a silent shrink.
inline ReduceResult reduce_mod_N(const std::vector<std::vector<long long>>& sets, long long N,
                                 const GenericityOptions& opt = {}) {
    if (N < 1) throw std::invalid_argument("reduce_mod_N: N must be >= 1");
    std::vector<Subset> reduced;
    reduced.reserve(sets.size());
    for (const auto& s : sets) {
        Subset r;
        r.reserve(s.size());
        for (long long v : s) {
            long long m = v % N;
            if (m < 0) m += N;
            r.push_back(static_cast<int>(m));
        }
        r = normalize_subset(std::move(r));
        if (r.size() != s.size())
            throw std::invalid_argument("reduce_mod_N: cardinality collapse inside a subset (mod " +
                                        std::to_string(N) + ")");
        reduced.push_back(std::move(r));
    }
    SubsetFamily fam(FiniteGroup::cyclic(N), std::move(reduced));
    GenericityResult gen = is_generic(fam, opt);
    return ReduceResult{std::move(fam), std::move(gen)};
}

}  // namespace packings
