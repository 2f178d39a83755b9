#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chamber/complex.hpp"
#include "chamber/weyl.hpp"

namespace chamber {

// A permutation of the facets of a complex, by facet id.
struct FacetOrdering {
    std::vector<int> order;
};

// Certificate for an accepted shelling.  For each position k it lists the
// vertices v of F_k whose codimension-one face F_k \ {v} already lies in an
// earlier facet, with the earliest such position j; a witness for a pair
// (i, k) is any entry whose vertex is outside F_i.  This is the Lemma-2.3
// data without materializing all t^2/2 triples.
struct ShellingWitness {
    std::vector<std::vector<std::pair<int, int>>> codim_sources;  // per k: (vertex, j)

    // The witness index j for a pair i < k; -1 if none (never on accepted
    // orderings).
    int witness_for(const Complex& k_complex, const FacetOrdering& ordering, int i,
                    int k) const;
    // All (i, k, j) triples; quadratic, intended for export of small runs.
    std::vector<std::array<int, 3>> all_triples(const Complex& k_complex,
                                                const FacetOrdering& ordering) const;
};

struct VerifyOutcome {
    bool accepted = false;
    ShellingWitness witness;          // populated when accepted
    std::pair<int, int> failing{-1, -1};  // first failing (i, k), 0-based, when rejected
};

// Exhaustive Bjorner-Wachs check: for every i < k some j < k must satisfy
// F_i n F_k c F_j n F_k with |F_j n F_k| = |F_k| - 1.  Deterministic; the
// failing pair is the smallest (k, i) in that order.
VerifyOutcome verify_shelling(const Complex& k_complex, const FacetOrdering& ordering,
                              int threads = 1);

// The explicit lexicographic shelling order of the facets of
// odd_complex_B(n): maximal chains compared level by level under
// 1 < 2 < ... < n < -1 < ... < -n.
FacetOrdering lex_chain_ordering(int n, const WeylBudget& budget = {});

struct InduceResult {
    Complex induced;          // full subcomplex on the filtered vertices
    FacetOrdering ordering;   // shelling order of the induced facets
    std::vector<int> first_container;  // d_m: first input position containing facet m
    std::vector<int> dropped;          // input positions dropped as duplicates/non-facets
};

// Restricts a shelling to a vertex subset: each facet is intersected with
// the filter, duplicates keep their first occurrence, and faces that are
// not facets of the induced complex are dropped.  Throws if the input is
// not a shelling or if the surviving faces miss a facet of the induced
// complex.
InduceResult induce_shelling(const Complex& k_complex, const FacetOrdering& shelling,
                             const std::vector<int>& filter_vertices, int threads = 1);

enum class SearchStatus { found, exhausted, none_exists };

struct SearchResult {
    SearchStatus status = SearchStatus::none_exists;
    FacetOrdering ordering;  // populated when found
    long long nodes = 0;
};

// Backtracking over facet orderings with the incremental Lemma-2.3 test
// (shellings are prefix-closed, so every prefix is checked exactly once).
// `none_exists` is reported only after the whole tree is exhausted.
SearchResult search_shelling(const Complex& k_complex, long long node_budget = 1'000'000);

struct NonshellableCertificate {
    int dimension;
    int components;
    std::string description() const;
};

// A pure complex of dimension >= 1 that is disconnected cannot be shellable;
// returns that certificate or nothing (inconclusive).
std::optional<NonshellableCertificate> nonshellable_certificate(const Complex& k_complex);

}  // namespace chamber
