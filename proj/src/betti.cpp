#include "chamber/betti.hpp"

#include <stdexcept>

#include "chamber/parallel.hpp"
#include "chamber/snakes.hpp"

namespace chamber {

std::string TorsionReport::verdict_name() const {
    switch (verdict) {
        case TorsionVerdict::torsion_free: return "torsion_free";
        case TorsionVerdict::only_2_torsion: return "only_2_torsion";
        case TorsionVerdict::has_odd_torsion: return "has_odd_torsion";
    }
    return "?";
}

namespace {

std::vector<HomologyProfile> per_subset_homology(const CharacteristicMap& cm, const Complex& k,
                                                 Coefficient coeff, int threads,
                                                 const HomologyBudget& budget) {
    if (cm.rows < 0 || cm.rows > 30) throw std::invalid_argument("row count out of range");
    if (static_cast<int>(cm.column_labels.size()) != k.vertex_count())
        throw std::invalid_argument("characteristic map does not match the complex");
    int subsets = 1 << cm.rows;
    std::vector<HomologyProfile> profiles(static_cast<size_t>(subsets));
    parallel_for(subsets, threads, [&](int mask) {
        Complex ks = k.full_subcomplex(cm.support_S(static_cast<std::uint32_t>(mask)));
        profiles[static_cast<size_t>(mask)] = homology(ks, coeff, budget);
    });
    return profiles;
}

}  // namespace

BettiTable betti_sum(const CharacteristicMap& cm, const Complex& k, Coefficient coeff,
                     bool with_per_s, int threads, const HomologyBudget& budget) {
    if (coeff.kind == CoeffKind::integral)
        throw std::invalid_argument("betti_sum needs a field coefficient");
    if (coeff.kind == CoeffKind::prime_field && coeff.p == 2)
        throw std::invalid_argument("betti_sum requires 2 invertible; F2 is not admissible");
    int n = cm.rows;
    auto profiles = per_subset_homology(cm, k, coeff, threads, budget);

    BettiTable out;
    out.n = n;
    out.coefficient = coeff.name();
    out.beta.assign(static_cast<size_t>(n) + 1, 0);
    for (int mask = 0; mask < (1 << n); ++mask) {
        const auto& profile = profiles[static_cast<size_t>(mask)];
        for (const auto& [degree, rank] : profile.reduced_betti) {
            int i = degree + 1;
            if (i >= 0 && i <= n) out.beta[static_cast<size_t>(i)] += rank;
        }
        if (with_per_s)
            out.per_s.emplace_back(static_cast<std::uint32_t>(mask), profile.reduced_betti);
    }
    return out;
}

BettiTable betti_formula_B(int n) {
    if (n < 1) throw std::invalid_argument("betti_formula_B requires n >= 1");
    std::vector<Int> b = snake_counts_series(SnakeFamily::B, n);
    BettiTable out;
    out.n = n;
    out.coefficient = "Q";
    for (int i = 0; i <= n; ++i) {
        Int value = 0;
        if (2 * i <= n) value += binomial(n, 2 * i) * b[static_cast<size_t>(2 * i)];
        if (2 * i - 1 >= 0 && 2 * i - 1 <= n)
            value += binomial(n, 2 * i - 1) * b[static_cast<size_t>(2 * i - 1)];
        out.beta.push_back(value);
    }
    return out;
}

BettiTable betti_formula_A(int n) {
    if (n < 1) throw std::invalid_argument("betti_formula_A requires n >= 1");
    std::vector<Int> a = snake_counts_series(SnakeFamily::A, n + 1);
    BettiTable out;
    out.n = n;
    out.coefficient = "Q";
    for (int i = 0; i <= n; ++i) {
        Int value = 0;
        if (2 * i <= n + 1) value += binomial(n + 1, 2 * i) * a[static_cast<size_t>(2 * i)];
        out.beta.push_back(value);
    }
    return out;
}

TorsionReport torsion_audit(const CharacteristicMap& cm, const Complex& k, int threads,
                            const HomologyBudget& budget) {
    auto profiles = per_subset_homology(cm, k, Coefficient::integral(), threads, budget);
    TorsionReport report;
    bool any_torsion = false;
    for (int mask = 0; mask < (1 << cm.rows); ++mask) {
        const auto& profile = profiles[static_cast<size_t>(mask)];
        if (profile.invariant_factors.empty()) continue;
        any_torsion = true;
        report.per_s.emplace_back(static_cast<std::uint32_t>(mask), profile.invariant_factors);
        for (const auto& [degree, factors] : profile.invariant_factors)
            for (const auto& f : factors) {
                Int odd_part = f;
                while (odd_part % 2 == 0) odd_part /= 2;
                if (odd_part > 1 && !report.odd_witness)
                    report.odd_witness =
                        TorsionFinding{static_cast<std::uint32_t>(mask), degree, f};
            }
    }
    report.verdict = report.odd_witness ? TorsionVerdict::has_odd_torsion
                     : any_torsion      ? TorsionVerdict::only_2_torsion
                                        : TorsionVerdict::torsion_free;
    return report;
}

std::vector<long long> z2_betti_via_h(const Complex& k) {
    return k.f_vector().h;
}

}  // namespace chamber
