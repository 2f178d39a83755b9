#include "chamber/homology.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace chamber {

std::string Coefficient::name() const {
    switch (kind) {
        case CoeffKind::rational: return "Q";
        case CoeffKind::prime_field: return "F" + std::to_string(p);
        case CoeffKind::integral: return "Z";
    }
    return "?";
}

namespace {

struct VectorHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

using SparseColumn = std::vector<std::pair<int, Int>>;  // (row, value), rows ascending

// Boundary matrix of d-faces over (d-1)-faces, one sparse column per d-face.
std::vector<SparseColumn> boundary_columns(const std::vector<std::vector<int>>& lower,
                                           const std::vector<std::vector<int>>& upper) {
    std::unordered_map<std::vector<int>, int, VectorHash> index;
    index.reserve(lower.size() * 2);
    for (size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], static_cast<int>(i));
    std::vector<SparseColumn> cols;
    cols.reserve(upper.size());
    for (const auto& face : upper) {
        SparseColumn col;
        col.reserve(face.size());
        std::vector<int> sub(face.begin() + 1, face.end());
        for (size_t i = 0; i < face.size(); ++i) {
            // sub = face with position i removed
            if (i > 0) sub[i - 1] = face[i - 1];
            auto it = index.find(sub);
            if (it == index.end()) throw std::logic_error("boundary face missing");
            col.emplace_back(it->second, (i % 2 == 0) ? Int(1) : Int(-1));
        }
        std::sort(col.begin(), col.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        cols.push_back(std::move(col));
    }
    return cols;
}

void make_primitive(SparseColumn& col) {
    Int g = 0;
    for (const auto& [r, v] : col) {
        g = gcd(g, v);
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& [r, v] : col) v /= g;
}

// col_a -= (a_low/g) replaced by the integral cross combination killing the
// common lowest row:  col_a := (vb/g)*col_a - (va/g)*col_b.
SparseColumn combine_int(const SparseColumn& a, const SparseColumn& b, const Int& va,
                         const Int& vb) {
    Int g = gcd(va, vb);
    Int ca = vb / g, cb = va / g;
    SparseColumn out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.emplace_back(a[i].first, ca * a[i].second);
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -cb * b[j].second);
            ++j;
        } else {
            Int v = ca * a[i].second - cb * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    make_primitive(out);
    return out;
}

long long rank_q_impl(std::vector<SparseColumn> cols) {
    // Left-to-right column reduction on the lowest nonzero row index.
    std::unordered_map<int, int> low_owner;  // low row -> column index
    long long rank = 0;
    for (size_t j = 0; j < cols.size(); ++j) {
        SparseColumn& col = cols[j];
        make_primitive(col);
        while (!col.empty()) {
            int low = col.back().first;
            auto it = low_owner.find(low);
            if (it == low_owner.end()) break;
            const SparseColumn& piv = cols[static_cast<size_t>(it->second)];
            col = combine_int(col, piv, col.back().second, piv.back().second);
        }
        if (!col.empty()) {
            low_owner.emplace(col.back().first, static_cast<int>(j));
            ++rank;
        }
    }
    return rank;
}

long long modpow_inv(long long a, long long p) {
    // Fermat inverse; p prime, a != 0 mod p.
    long long e = p - 2, base = ((a % p) + p) % p, r = 1;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

long long rank_fp(const std::vector<SparseColumn>& int_cols, long long p) {
    using Col = std::vector<std::pair<int, long long>>;
    std::vector<Col> cols;
    cols.reserve(int_cols.size());
    for (const auto& c : int_cols) {
        Col col;
        for (const auto& [r, v] : c) {
            long long m = static_cast<long long>(v % p);
            m = ((m % p) + p) % p;
            if (m != 0) col.emplace_back(r, m);
        }
        cols.push_back(std::move(col));
    }
    std::unordered_map<int, int> low_owner;
    long long rank = 0;
    for (size_t j = 0; j < cols.size(); ++j) {
        Col& col = cols[j];
        while (!col.empty()) {
            int low = col.back().first;
            auto it = low_owner.find(low);
            if (it == low_owner.end()) break;
            const Col& piv = cols[static_cast<size_t>(it->second)];
            long long factor = col.back().second * modpow_inv(piv.back().second, p) % p;
            // col -= factor * piv
            Col out;
            out.reserve(col.size() + piv.size());
            size_t a = 0, b = 0;
            while (a < col.size() || b < piv.size()) {
                if (b == piv.size() || (a < col.size() && col[a].first < piv[b].first)) {
                    out.push_back(col[a++]);
                } else if (a == col.size() || piv[b].first < col[a].first) {
                    long long v = (p - factor * piv[b].second % p) % p;
                    if (v != 0) out.emplace_back(piv[b].first, v);
                    ++b;
                } else {
                    long long v = (col[a].second + p - factor * piv[b].second % p) % p;
                    if (v != 0) out.emplace_back(col[a].first, v);
                    ++a;
                    ++b;
                }
            }
            col = std::move(out);
        }
        if (!col.empty()) {
            low_owner.emplace(col.back().first, static_cast<int>(j));
            ++rank;
        }
    }
    return rank;
}

long long rank_f2(const std::vector<SparseColumn>& int_cols, int rows) {
    size_t words = static_cast<size_t>(rows + 63) / 64;
    std::vector<std::vector<uint64_t>> cols;
    cols.reserve(int_cols.size());
    for (const auto& c : int_cols) {
        std::vector<uint64_t> bits(words, 0);
        for (const auto& [r, v] : c)
            if (v % 2 != 0) bits[static_cast<size_t>(r) / 64] ^= 1ull << (r % 64);
        cols.push_back(std::move(bits));
    }
    auto low_of = [&](const std::vector<uint64_t>& bits) {
        for (size_t w = words; w-- > 0;)
            if (bits[w] != 0) return static_cast<int>(w * 64 + 63 - std::countl_zero(bits[w]));
        return -1;
    };
    std::unordered_map<int, int> low_owner;
    long long rank = 0;
    for (size_t j = 0; j < cols.size(); ++j) {
        int low = low_of(cols[j]);
        while (low >= 0) {
            auto it = low_owner.find(low);
            if (it == low_owner.end()) break;
            const auto& piv = cols[static_cast<size_t>(it->second)];
            for (size_t w = 0; w < words; ++w) cols[j][w] ^= piv[w];
            low = low_of(cols[j]);
        }
        if (low >= 0) {
            low_owner.emplace(low, static_cast<int>(j));
            ++rank;
        }
    }
    return rank;
}

}  // namespace

long long rank_q(std::vector<std::vector<std::pair<int, Int>>> columns) {
    return rank_q_impl(std::move(columns));
}

std::vector<Int> smith_invariant_factors(std::vector<std::vector<Int>> m) {
    size_t rows = m.size();
    size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<Int> diag;
    size_t top = 0;
    while (top < rows && top < cols) {
        // Minimal-absolute-value pivot in the remaining block.
        size_t pr = top, pc = top;
        Int best = 0;
        for (size_t i = top; i < rows; ++i)
            for (size_t j = top; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                Int a = abs(m[i][j]);
                if (best == 0 || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (best == 0) break;
        std::swap(m[top], m[pr]);
        for (size_t i = top; i < rows; ++i) std::swap(m[i][top], m[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = top + 1; i < rows; ++i) {
                if (m[i][top] == 0) continue;
                Int q = m[i][top] / m[top][top];
                if (q != 0)
                    for (size_t j = top; j < cols; ++j)
                        if (m[top][j] != 0) m[i][j] -= q * m[top][j];
                if (m[i][top] != 0) {  // remainder smaller than pivot: swap up
                    std::swap(m[top], m[i]);
                    clean = false;
                }
            }
            for (size_t j = top + 1; j < cols; ++j) {
                if (m[top][j] == 0) continue;
                Int q = m[top][j] / m[top][top];
                if (q != 0)
                    for (size_t i = top; i < rows; ++i)
                        if (m[i][top] != 0) m[i][j] -= q * m[i][top];
                if (m[top][j] != 0) {
                    for (size_t i = top; i < rows; ++i) std::swap(m[i][top], m[i][j]);
                    clean = false;
                }
            }
        }
        diag.push_back(abs(m[top][top]));
        ++top;
    }
    // Enforce the divisibility chain d_1 | d_2 | ...
    for (size_t i = 0; i < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j) {
            if (diag[j] % diag[i] == 0) continue;
            Int g = gcd(diag[i], diag[j]);
            diag[j] = diag[i] / g * diag[j];
            diag[i] = g;
        }
    std::sort(diag.begin(), diag.end());
    return diag;
}

HomologyProfile homology(const Complex& K, Coefficient coeff, const HomologyBudget& budget) {
    HomologyProfile out;
    out.coeff = coeff;
    if (K.is_empty()) {
        out.reduced_betti[-1] = 1;
        return out;
    }
    auto faces = K.faces_by_dim();
    long long total = 0;
    for (const auto& dim_faces : faces) total += static_cast<long long>(dim_faces.size());
    if (total > budget.max_faces)
        throw budget_error("homology: face count " + std::to_string(total) + " over budget");

    int dim = static_cast<int>(faces.size()) - 1;
    // ranks[d] = rank of the boundary map C_d -> C_{d-1}; ranks[0] is the
    // augmentation, rank 1 for any nonempty complex.
    std::vector<long long> ranks(static_cast<size_t>(dim) + 2, 0);
    ranks[0] = 1;

    for (int d = 1; d <= dim; ++d) {
        auto cols = boundary_columns(faces[static_cast<size_t>(d - 1)],
                                     faces[static_cast<size_t>(d)]);
        switch (coeff.kind) {
            case CoeffKind::rational:
                ranks[static_cast<size_t>(d)] = rank_q_impl(std::move(cols));
                break;
            case CoeffKind::prime_field:
                if (coeff.p < 2) throw std::invalid_argument("prime field needs p >= 2");
                ranks[static_cast<size_t>(d)] =
                    coeff.p == 2
                        ? rank_f2(cols, static_cast<int>(faces[static_cast<size_t>(d - 1)].size()))
                        : rank_fp(cols, coeff.p);
                break;
            case CoeffKind::integral: {
                size_t r = faces[static_cast<size_t>(d - 1)].size();
                size_t c = faces[static_cast<size_t>(d)].size();
                if (static_cast<long long>(r) * static_cast<long long>(c) >
                    budget.max_snf_entries)
                    throw budget_error("homology: SNF matrix over budget");
                std::vector<std::vector<Int>> dense(r, std::vector<Int>(c, 0));
                for (size_t j = 0; j < cols.size(); ++j)
                    for (const auto& [row, v] : cols[j]) dense[static_cast<size_t>(row)][j] = v;
                auto factors = smith_invariant_factors(std::move(dense));
                ranks[static_cast<size_t>(d)] = static_cast<long long>(factors.size());
                std::vector<Int> nontrivial;
                for (const auto& f : factors)
                    if (f > 1) nontrivial.push_back(f);
                if (!nontrivial.empty()) out.invariant_factors[d - 1] = std::move(nontrivial);
                break;
            }
        }
    }
    for (int d = 0; d <= dim; ++d) {
        long long b = static_cast<long long>(faces[static_cast<size_t>(d)].size()) -
                      ranks[static_cast<size_t>(d)] - ranks[static_cast<size_t>(d) + 1];
        if (b != 0) out.reduced_betti[d] = b;
    }
    return out;
}

}  // namespace chamber
