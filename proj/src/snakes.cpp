#include "chamber/snakes.hpp"

#include <functional>
#include <stdexcept>

#include "chamber/series.hpp"

namespace chamber {

namespace {

// Shared backtracking core.  Positions are filled left to right; the
// comparison against the previous entry alternates, which prunes the
// n! * 2^n search space hard enough for n = 8 in seconds.  `sink` receives
// each completed suffix; candidates are tried in increasing numeric order,
// so completed sequences arrive in lexicographic order.

void extend_a(int n, std::vector<int>& seq, std::vector<bool>& used,
              const std::function<void(const std::vector<int>&)>& sink) {
    int pos = static_cast<int>(seq.size());
    if (pos == n + 1) {
        sink(seq);
        return;
    }
    bool ascent = (pos % 2 == 1);  // x_{pos-1} < x_pos on odd positions
    int prev = seq.back();
    for (int v = 0; v <= n; ++v) {
        if (used[static_cast<size_t>(v)]) continue;
        if (ascent ? (v <= prev) : (v >= prev)) continue;
        used[static_cast<size_t>(v)] = true;
        seq.push_back(v);
        extend_a(n, seq, used, sink);
        seq.pop_back();
        used[static_cast<size_t>(v)] = false;
    }
}

void extend_b(int n, std::vector<int>& seq, std::vector<bool>& used_abs,
              const std::function<void(const std::vector<int>&)>& sink) {
    int pos = static_cast<int>(seq.size());  // next index is pos+1 (1-based)
    if (pos == n) {
        sink(seq);
        return;
    }
    // x_1 > 0 is the pattern's leading "0 <"; afterwards the comparison
    // alternates: descent into even positions, ascent into odd ones.
    bool ascent = (pos % 2 == 0);
    for (int v = -n; v <= n; ++v) {
        if (v == 0) continue;
        int a = v < 0 ? -v : v;
        if (used_abs[static_cast<size_t>(a)]) continue;
        if (pos == 0) {
            if (v <= 0) continue;
        } else {
            int prev = seq.back();
            if (ascent ? (v <= prev) : (v >= prev)) continue;
        }
        used_abs[static_cast<size_t>(a)] = true;
        seq.push_back(v);
        extend_b(n, seq, used_abs, sink);
        seq.pop_back();
        used_abs[static_cast<size_t>(a)] = false;
    }
}

void for_each_snake(SnakeFamily family, int n,
                    const std::function<void(const std::vector<int>&)>& sink) {
    if (n < 0) throw std::invalid_argument("snake enumeration requires n >= 0");
    if (family == SnakeFamily::A) {
        std::vector<int> seq{0};
        std::vector<bool> used(static_cast<size_t>(n) + 1, false);
        used[0] = true;
        extend_a(n, seq, used, sink);
    } else {
        if (n == 0) {
            sink({});  // the empty sequence, b_0 = 1
            return;
        }
        std::vector<int> seq;
        std::vector<bool> used_abs(static_cast<size_t>(n) + 1, false);
        extend_b(n, seq, used_abs, sink);
    }
}

constexpr int kEnumBoundA = 9;
constexpr int kEnumBoundB = 8;

}  // namespace

int snake_enumeration_bound(SnakeFamily family) {
    return family == SnakeFamily::A ? kEnumBoundA : kEnumBoundB;
}

std::vector<SnakeSequence> enumerate_snakes(SnakeFamily family, int n) {
    std::vector<SnakeSequence> out;
    for_each_snake(family, n, [&](const std::vector<int>& seq) {
        out.push_back(SnakeSequence{family, n, seq});
    });
    return out;
}

Int snake_count(SnakeFamily family, int n) {
    if (n < 0) throw std::invalid_argument("snake count requires n >= 0");
    if (n <= snake_enumeration_bound(family)) {
        long long count = 0;
        for_each_snake(family, n, [&](const std::vector<int>&) { ++count; });
        return count;
    }
    return snake_counts_series(family, n).back();
}

std::vector<Int> snake_counts_series(SnakeFamily family, int max_n) {
    if (max_n < 0) throw std::invalid_argument("series count requires max_n >= 0");
    PowerSeries cos = PowerSeries::cos_x(max_n);
    PowerSeries sin = PowerSeries::sin_x(max_n);
    PowerSeries egf = family == SnakeFamily::A
                          ? (PowerSeries::constant(1, max_n) + sin) * cos.reciprocal()
                          : (cos - sin).reciprocal();
    std::vector<Int> counts = egf.egf_integer_coeffs();
    for (size_t k = 0; k < counts.size(); ++k) {
        if (counts[k] < 0)
            throw std::runtime_error("negative snake count at n = " + std::to_string(k));
    }
    return counts;
}

}  // namespace chamber
