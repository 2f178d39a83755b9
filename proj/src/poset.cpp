#include "chamber/poset.hpp"

#include <algorithm>
#include <stdexcept>

#include "chamber/series.hpp"

namespace chamber {

Poset Poset::from_less_pairs(std::vector<std::string> labels,
                             const std::vector<std::pair<int, int>>& less) {
    Poset p;
    size_t n = labels.size();
    p.labels_ = std::move(labels);
    p.closure_.assign(n, boost::dynamic_bitset<>(n));
    for (auto [x, y] : less) {
        if (x < 0 || y < 0 || x >= static_cast<int>(n) || y >= static_cast<int>(n))
            throw std::invalid_argument("poset relation index out of range");
        if (x == y) throw std::invalid_argument("poset relation must be irreflexive");
        p.closure_[static_cast<size_t>(x)].set(static_cast<size_t>(y));
    }
    // Warshall closure on bitset rows.
    for (size_t k = 0; k < n; ++k)
        for (size_t x = 0; x < n; ++x)
            if (p.closure_[x][k]) p.closure_[x] |= p.closure_[k];
    for (size_t x = 0; x < n; ++x) {
        if (p.closure_[x][x]) throw std::invalid_argument("poset relation contains a cycle");
        for (size_t y = 0; y < n; ++y)
            if (p.closure_[x][y] && p.closure_[y][x])
                throw std::invalid_argument("poset relation is not antisymmetric");
    }
    return p;
}

int Poset::index_of(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return -1;
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    int n = size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!less(x, y)) continue;
            bool covering = true;
            for (int z = 0; z < n && covering; ++z)
                if (less(x, z) && less(z, y)) covering = false;
            if (covering) out.emplace_back(x, y);
        }
    return out;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int y = 0; y < size(); ++y) {
        bool minimal = true;
        for (int x = 0; x < size() && minimal; ++x)
            if (less(x, y)) minimal = false;
        if (minimal) out.push_back(y);
    }
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x) {
        bool maximal = true;
        for (int y = 0; y < size() && maximal; ++y)
            if (less(x, y)) maximal = false;
        if (maximal) out.push_back(x);
    }
    return out;
}

Poset Poset::induced(const std::vector<int>& keep) const {
    Poset p;
    p.labels_.reserve(keep.size());
    for (int x : keep) p.labels_.push_back(labels_[static_cast<size_t>(x)]);
    p.closure_.assign(keep.size(), boost::dynamic_bitset<>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j)
            if (less(keep[i], keep[j])) p.closure_[i].set(j);
    return p;
}

Poset Poset::interval(int x, int y) const {
    if (!leq(x, y)) throw std::invalid_argument("interval: x is not below y");
    std::vector<int> keep;
    for (int z = 0; z < size(); ++z)
        if (leq(x, z) && leq(z, y)) keep.push_back(z);
    return induced(keep);
}

Poset Poset::open_interval(int x, int y) const {
    if (!leq(x, y)) throw std::invalid_argument("open_interval: x is not below y");
    std::vector<int> keep;
    for (int z = 0; z < size(); ++z)
        if (less(x, z) && less(z, y)) keep.push_back(z);
    return induced(keep);
}

Complex Poset::order_complex() const {
    // Maximal chains run from a minimal to a maximal element along covers.
    int n = size();
    std::vector<std::vector<int>> covers_of(static_cast<size_t>(n));
    for (auto [x, y] : covers()) covers_of[static_cast<size_t>(x)].push_back(y);
    std::vector<std::vector<int>> chains;
    std::vector<int> chain;
    auto dfs = [&](auto&& self, int x) -> void {
        chain.push_back(x);
        if (covers_of[static_cast<size_t>(x)].empty()) {
            chains.push_back(chain);
        } else {
            for (int y : covers_of[static_cast<size_t>(x)]) self(self, y);
        }
        chain.pop_back();
    };
    for (int x : minimal_elements()) dfs(dfs, x);
    return Complex::from_facet_ids(labels_, std::move(chains));
}

std::map<int, std::int64_t> Poset::mobius_from(int x) const {
    // Bottom-up over {z : z >= x} in a linear extension.
    std::vector<int> above;
    for (int z = 0; z < size(); ++z)
        if (leq(x, z)) above.push_back(z);
    std::sort(above.begin(), above.end(), [&](int a, int b) {
        if (less(a, b)) return true;
        if (less(b, a)) return false;
        return a < b;
    });
    std::map<int, std::int64_t> mu;
    for (int z : above) {
        if (z == x) {
            mu[z] = 1;
            continue;
        }
        std::int64_t acc = 0;
        for (int w : above)
            if (w == x || less(w, z)) acc += mu[w];
        mu[z] = -acc;
    }
    return mu;
}

std::int64_t Poset::mobius(int x, int y) const {
    if (!leq(x, y)) throw std::invalid_argument("mobius: x is not below y");
    // Restrict the sweep to the closed interval.
    std::vector<int> between;
    for (int z = 0; z < size(); ++z)
        if (leq(x, z) && leq(z, y)) between.push_back(z);
    std::sort(between.begin(), between.end(), [&](int a, int b) {
        if (less(a, b)) return true;
        if (less(b, a)) return false;
        return a < b;
    });
    std::map<int, std::int64_t> mu;
    for (int z : between) {
        if (z == x) {
            mu[z] = 1;
            continue;
        }
        std::int64_t acc = 0;
        for (int w : between)
            if (w == x || less(w, z)) acc += mu[w];  // the sum over x <= w < z
        mu[z] = -acc;
    }
    return mu[y];
}

std::vector<Int> mobius_sequence_series(int max_n) {
    if (max_n < 1) throw std::invalid_argument("mobius_sequence_series: max_n >= 1 required");
    // tan(2ix) = i tanh(2x) turns the paper's complex form into the real
    // series e^{-x} sech(2x); its EGF coefficients are -mu(empty, [+-n]).
    PowerSeries m = PowerSeries::exp_x(max_n, -1) * PowerSeries::cosh_x(max_n, 2).reciprocal();
    return m.egf_integer_coeffs();
}

}  // namespace chamber
