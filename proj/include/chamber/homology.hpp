#pragma once

#include <map>
#include <string>
#include <vector>

#include "chamber/complex.hpp"
#include "chamber/numbers.hpp"

namespace chamber {

enum class CoeffKind { rational, prime_field, integral };

struct Coefficient {
    CoeffKind kind = CoeffKind::rational;
    int p = 0;  // prime, for prime_field

    static Coefficient rational() { return {CoeffKind::rational, 0}; }
    static Coefficient prime(int p) { return {CoeffKind::prime_field, p}; }
    static Coefficient integral() { return {CoeffKind::integral, 0}; }

    std::string name() const;
    bool operator==(const Coefficient&) const = default;
};

struct HomologyBudget {
    long long max_faces = 2'000'000;
    long long max_snf_entries = 4'000'000;  // rows*cols per boundary matrix
};

// Reduced homology of a complex.  `reduced_betti` holds only the nonzero
// ranks (degree -1 appears exactly for the empty complex); for integral
// coefficients `invariant_factors[d]` lists the torsion coefficients of
// H~_d, each > 1, in divisibility order.  By universal coefficients these
// also determine the cohomology torsion (H^{d+1} carries the torsion of
// H_d), which is how the torsion audit reads them.
struct HomologyProfile {
    Coefficient coeff;
    std::map<int, long long> reduced_betti;
    std::map<int, std::vector<Int>> invariant_factors;

    long long betti(int degree) const {
        auto it = reduced_betti.find(degree);
        return it == reduced_betti.end() ? 0 : it->second;
    }
    bool torsion_free() const { return invariant_factors.empty(); }
    // Betti data only, padding missing degrees with zero; used to compare
    // complexes of different dimensions.
    bool same_betti(const HomologyProfile& other) const {
        return reduced_betti == other.reduced_betti;
    }
};

// Reduced homology with the augmented chain complex (canonical orientation:
// vertices of each face sorted by id, alternating-sign boundary).  Exact:
// fraction-free integer elimination over Q, mod-p elimination for prime
// fields (packed bit rows for p = 2), big-integer Smith normal form for Z.
// Throws budget_error when the face count or a matrix exceeds the budget.
HomologyProfile homology(const Complex& K, Coefficient coeff, const HomologyBudget& budget = {});

// Rank of a sparse integer matrix over Q, by fraction-free elimination.
// Exposed for tests; columns are (row index, value) lists.
long long rank_q(std::vector<std::vector<std::pair<int, Int>>> columns);

// Smith normal form invariant factors (absolute values, divisibility-
// ordered, including 1s) of a dense integer matrix.
std::vector<Int> smith_invariant_factors(std::vector<std::vector<Int>> m);

}  // namespace chamber
