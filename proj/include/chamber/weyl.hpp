#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chamber/complex.hpp"
#include "chamber/poset.hpp"

namespace chamber {

// A subset I of {+-1, ..., +-n} containing at most one of each pair
// {i, -i} (the star condition).  Members are kept in the order
// 1 < 2 < ... < n < -1 < ... < -n, which is the ordering the lexicographic
// shelling uses; the canonical order on signed sets is by cardinality, then
// lexicographically on the member sequences under that ordering.
struct SignedSet {
    int n = 0;
    std::vector<int> members;       // sorted by prec_rank
    std::uint64_t smask = 0;        // bit 2(k-1) for +k, bit 2(k-1)+1 for -k

    static SignedSet from_members(int n, std::vector<int> members);
    static SignedSet parse(int n, const std::string& text);

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int v) const;
    bool subset_of(const SignedSet& other) const {
        return (smask & other.smask) == smask;
    }
    // I^+- = (I u -I) n [n], ascending.
    std::vector<int> pm() const;
    std::uint32_t pm_mask() const;  // bit k-1 for coordinate k

    // "1,-2" style: members joined by commas in prec order.
    std::string to_string() const;

    bool operator==(const SignedSet&) const = default;
};

// 1 < 2 < ... < n < -1 < ... < -n
int prec_rank(int n, int v);
// Canonical order: by cardinality, then prec-lexicographic.
bool canonical_less(const SignedSet& a, const SignedSet& b);

// An integer characteristic map together with its mod-2 reduction, columns
// aligned with the vertex order of the complex it belongs to.
struct CharacteristicMap {
    int rows = 0;
    std::vector<std::string> column_labels;
    std::vector<std::vector<int>> int_columns;   // one length-`rows` vector per vertex
    std::vector<std::uint32_t> mod2_columns;     // bit i-1 = row i of the mod-2 matrix

    // [m]_S: ids of the columns where the mod-2 row sum over S is nonzero.
    std::vector<int> support_S(std::uint32_t s_mask) const;
};

struct WeylBudget {
    int max_n_vertices = 7;  // vertex / odd-complex enumeration
    int max_n_full_b = 5;    // full K_B face structure (facets grow as 2^n n!)
    int max_n_full_a = 6;
};

// Type B: vertices are the nonempty signed sets, faces the chains under
// inclusion, facets the maximal chains I_1 c ... c I_n.
std::vector<SignedSet> vertices_B(int n, const WeylBudget& budget = {});
Complex complex_B(int n, const WeylBudget& budget = {});
CharacteristicMap char_map_B(int n, const WeylBudget& budget = {});

// Type A: vertices are the nonempty proper subsets of [n+1], faces the
// chains; lambda(I) flips to the complement rule when n+1 lies in I.
Complex complex_A(int n, const WeylBudget& budget = {});
CharacteristicMap char_map_A(int n, const WeylBudget& budget = {});

// K_B^odd: restriction of K_B to odd-cardinality vertices, built directly
// from odd chains (valid for all n within the vertex budget).
Complex odd_complex_B(int n, const WeylBudget& budget = {});
// K_A^odd for odd r, via the characteristic-map support over S = [r].
Complex odd_complex_A(int r, const WeylBudget& budget = {});

// (K_B)_S: full subcomplex on the vertices with |S n I^+-| odd.  S is given
// as a subset of [n]; the empty S yields the empty complex.
Complex restriction_S(int n, const std::vector<int>& s, const WeylBudget& budget = {});

struct DeletionStep {
    std::string vertex;  // the deleted vertex I
    std::string apex;    // cone apex of its link, certifying contractibility
    int overlap;         // |I^+- n S|
};
struct ReduceResult {
    Complex complex;
    std::vector<DeletionStep> log;
};

// Star-deletes the vertices with I^+- not contained in S, in increasing
// order of |I^+- n S| (canonical order within ties), certifying each link
// as a cone.  The result has exactly the vertices {I : I^+- c S, |I| odd};
// anything else throws (a construction bug, not an input error).
ReduceResult reduce_S(int n, const std::vector<int>& s, const WeylBudget& budget = {});

struct Relabeling {
    std::vector<std::pair<std::string, std::string>> vertex_map;
};

// The order-preserving bijection S -> [r] extended to signed labels,
// verified to map `reduced` isomorphically onto odd_complex_B(|S|).
Relabeling canonical_iso_to_odd(const Complex& reduced, const std::vector<int>& s,
                                const WeylBudget& budget = {});

// Poset of the odd vertices under inclusion (its order complex is
// K_B^odd), and the same with formal bottom/top adjoined.
Poset odd_poset_B(int n, const WeylBudget& budget = {});
struct BoundedPoset {
    Poset poset;
    int bottom;
    int top;
};
BoundedPoset odd_poset_B_bounded(int n, const WeylBudget& budget = {});

// Type C counterexample data: the vertex set of K_C^odd per the four
// printed conditions, and the closed interval [{4,...,n}, [+-n]] in the
// bounded odd-subset poset of type C (n even, n >= 4).
std::vector<SignedSet> c_odd_vertices(int n, const WeylBudget& budget = {});
BoundedPoset c_interval(int n, const WeylBudget& budget = {});

}  // namespace chamber
