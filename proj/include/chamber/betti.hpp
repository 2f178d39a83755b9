#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chamber/complex.hpp"
#include "chamber/homology.hpp"
#include "chamber/weyl.hpp"

namespace chamber {

// Betti numbers beta^0..beta^n of a real toric manifold, either from the
// subset summation or from a closed form; `per_s` carries the reduced
// Betti numbers of every K_S when requested.
struct BettiTable {
    int n = 0;
    std::string coefficient;
    std::vector<Int> beta;
    std::vector<std::pair<std::uint32_t, std::map<int, long long>>> per_s;

    bool operator==(const BettiTable& other) const { return beta == other.beta; }
};

enum class TorsionVerdict { torsion_free, only_2_torsion, has_odd_torsion };

struct TorsionFinding {
    std::uint32_t s_mask;
    int degree;
    Int factor;
};

struct TorsionReport {
    TorsionVerdict verdict = TorsionVerdict::torsion_free;
    // S with nontrivial invariant factors, by subset rank.
    std::vector<std::pair<std::uint32_t, std::map<int, std::vector<Int>>>> per_s;
    std::optional<TorsionFinding> odd_witness;

    std::string verdict_name() const;
};

// beta^i = sum over S of rank H~^{i-1}(K_S).  Every S subseteq [n] is
// evaluated, the empty set contributing rank 1 in degree -1 and hence
// beta^0 = 1.  The coefficient must be Q or an odd prime field; asking for
// characteristic 2 throws std::invalid_argument (the formula needs 2
// invertible).  Per-S complexes are the direct restrictions, so agreement
// with the closed forms is an independent check.
BettiTable betti_sum(const CharacteristicMap& cm, const Complex& k, Coefficient coeff,
                     bool with_per_s = false, int threads = 1,
                     const HomologyBudget& budget = {});

// beta^k = C(n, 2k) b_{2k} + C(n, 2k-1) b_{2k-1}
BettiTable betti_formula_B(int n);
// beta^k = C(n+1, 2k) a_{2k}
BettiTable betti_formula_A(int n);

// Integral homology of every K_S; odd-torsion-free iff every invariant
// factor is a power of 2.
TorsionReport torsion_audit(const CharacteristicMap& cm, const Complex& k, int threads = 1,
                            const HomologyBudget& budget = {});

// The h-vector of a polytopal sphere, read as the Z_2-Betti numbers of the
// associated real toric manifold (caller asserts sphericity).
std::vector<long long> z2_betti_via_h(const Complex& k);

}  // namespace chamber
