#include "chamber/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace chamber {

namespace {

// Keeps only inclusion-maximal sets.  Sets of equal size cannot contain one
// another, so each candidate is checked against the strictly larger kept
// ones only; a pure facet list passes through with no containment tests.
std::vector<std::vector<int>> maximal_sets(std::vector<std::vector<int>> sets) {
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::stable_sort(sets.begin(), sets.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<std::vector<int>> kept;
    size_t larger_end = 0;  // kept[0..larger_end) have size > current
    size_t current_size = sets.empty() ? 0 : sets.front().size() + 1;
    for (const auto& s : sets) {
        if (s.empty()) continue;
        if (s.size() < current_size) {
            larger_end = kept.size();
            current_size = s.size();
        }
        bool contained = false;
        for (size_t i = 0; i < larger_end && !contained; ++i)
            contained = std::includes(kept[i].begin(), kept[i].end(), s.begin(), s.end());
        if (!contained) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace

Complex Complex::from_facets(const std::vector<std::string>& labels,
                             const std::vector<std::vector<std::string>>& facet_list) {
    std::unordered_map<std::string, int> id;
    for (const auto& l : labels) {
        if (!id.emplace(l, static_cast<int>(id.size())).second)
            throw std::invalid_argument("duplicate vertex label: " + l);
    }
    std::vector<std::vector<int>> facets;
    facets.reserve(facet_list.size());
    for (const auto& f : facet_list) {
        std::vector<int> ids;
        ids.reserve(f.size());
        for (const auto& l : f) {
            auto it = id.find(l);
            if (it == id.end()) throw std::invalid_argument("unknown label in facet: " + l);
            ids.push_back(it->second);
        }
        facets.push_back(std::move(ids));
    }
    return from_facet_ids(labels, std::move(facets));
}

Complex Complex::from_facet_ids(const std::vector<std::string>& labels,
                                std::vector<std::vector<int>> facet_list) {
    for (auto& f : facet_list) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f) {
            if (v < 0 || v >= static_cast<int>(labels.size()))
                throw std::invalid_argument("facet vertex id out of range");
        }
    }
    Complex scratch;
    scratch.labels_ = labels;
    return scratch.rebuild(std::move(facet_list));
}

Complex Complex::rebuild(std::vector<std::vector<int>> faces) const {
    std::vector<std::vector<int>> facets = maximal_sets(std::move(faces));
    std::vector<int> new_id(labels_.size(), -1);
    Complex out;
    for (const auto& f : facets)
        for (int v : f)
            if (new_id[static_cast<size_t>(v)] < 0) new_id[static_cast<size_t>(v)] = 0;
    for (size_t v = 0; v < labels_.size(); ++v) {
        if (new_id[v] == 0) {
            new_id[v] = static_cast<int>(out.labels_.size());
            out.labels_.push_back(labels_[v]);
        }
    }
    for (auto& f : facets)
        for (int& v : f) v = new_id[static_cast<size_t>(v)];
    for (auto& f : facets) std::sort(f.begin(), f.end());
    std::sort(facets.begin(), facets.end());
    out.facets_ = std::move(facets);
    return out;
}

int Complex::vertex_id(const std::string& label) const {
    for (size_t v = 0; v < labels_.size(); ++v)
        if (labels_[v] == label) return static_cast<int>(v);
    return -1;
}

int Complex::dimension() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool Complex::is_pure() const {
    if (facets_.empty()) return true;
    size_t s = facets_.front().size();
    for (const auto& f : facets_)
        if (f.size() != s) return false;
    return true;
}

Complex Complex::full_subcomplex(const std::vector<int>& vertex_ids) const {
    std::vector<bool> keep(labels_.size(), false);
    for (int v : vertex_ids) {
        if (v < 0 || v >= vertex_count()) throw std::invalid_argument("vertex id out of range");
        keep[static_cast<size_t>(v)] = true;
    }
    std::vector<std::vector<int>> faces;
    faces.reserve(facets_.size());
    for (const auto& f : facets_) {
        std::vector<int> g;
        for (int v : f)
            if (keep[static_cast<size_t>(v)]) g.push_back(v);
        if (!g.empty()) faces.push_back(std::move(g));
    }
    return rebuild(std::move(faces));
}

Complex Complex::link(int v) const {
    if (v < 0 || v >= vertex_count()) throw std::invalid_argument("link: vertex not in complex");
    std::vector<std::vector<int>> faces;
    for (const auto& f : facets_) {
        if (!std::binary_search(f.begin(), f.end(), v)) continue;
        std::vector<int> g;
        for (int w : f)
            if (w != v) g.push_back(w);
        if (!g.empty()) faces.push_back(std::move(g));
    }
    return rebuild(std::move(faces));
}

Complex Complex::star(int v) const {
    if (v < 0 || v >= vertex_count()) throw std::invalid_argument("star: vertex not in complex");
    std::vector<std::vector<int>> faces;
    for (const auto& f : facets_)
        if (std::binary_search(f.begin(), f.end(), v)) faces.push_back(f);
    return rebuild(std::move(faces));
}

Complex Complex::delete_star(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("delete_star: vertex not in complex");
    // All faces of K not containing v; facets of the result need not be
    // facets of K, so generate from the punctured facets.
    std::vector<std::vector<int>> faces;
    for (const auto& f : facets_) {
        std::vector<int> g;
        for (int w : f)
            if (w != v) g.push_back(w);
        if (!g.empty()) faces.push_back(std::move(g));
    }
    return rebuild(std::move(faces));
}

std::optional<int> Complex::cone_apex() const {
    if (facets_.empty()) throw std::invalid_argument("cone_apex: empty complex");
    for (int v : facets_.front()) {
        bool in_all = true;
        for (const auto& f : facets_) {
            if (!std::binary_search(f.begin(), f.end(), v)) {
                in_all = false;
                break;
            }
        }
        if (in_all) return v;
    }
    return std::nullopt;
}

std::vector<std::vector<std::vector<int>>> Complex::faces_by_dim() const {
    int dim = dimension();
    std::vector<std::set<std::vector<int>>> seen(static_cast<size_t>(std::max(dim + 1, 0)));
    // Every face is a nonempty subset of some facet.
    for (const auto& f : facets_) {
        size_t m = f.size();
        for (size_t mask = 1; mask < (static_cast<size_t>(1) << m); ++mask) {
            std::vector<int> g;
            for (size_t i = 0; i < m; ++i)
                if (mask & (static_cast<size_t>(1) << i)) g.push_back(f[i]);
            seen[g.size() - 1].insert(std::move(g));
        }
    }
    std::vector<std::vector<std::vector<int>>> out(seen.size());
    for (size_t k = 0; k < seen.size(); ++k) out[k].assign(seen[k].begin(), seen[k].end());
    return out;
}

FVector Complex::f_vector() const {
    FVector fv;
    for (const auto& dim_faces : faces_by_dim())
        fv.f.push_back(static_cast<long long>(dim_faces.size()));
    // h_j = sum_i (-1)^{j-i} C(d-i, j-i) f_{i-1}, with d = dim+1, f_{-1} = 1.
    int d = static_cast<int>(fv.f.size());
    fv.h.assign(static_cast<size_t>(d) + 1, 0);
    auto binom = [](long long n, long long k) {
        if (k < 0 || k > n) return 0LL;
        long long r = 1;
        for (long long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    for (int j = 0; j <= d; ++j) {
        long long acc = 0;
        for (int i = 0; i <= j; ++i) {
            long long fi = (i == 0) ? 1 : fv.f[static_cast<size_t>(i - 1)];
            long long term = binom(d - i, j - i) * fi;
            acc += ((j - i) % 2 == 0) ? term : -term;
        }
        fv.h[static_cast<size_t>(j)] = acc;
    }
    return fv;
}

long long Complex::face_count() const {
    long long total = 0;
    for (const auto& dim_faces : faces_by_dim()) total += static_cast<long long>(dim_faces.size());
    return total;
}

long long Complex::euler_char_reduced() const {
    long long chi = -1;
    int k = 0;
    for (const auto& dim_faces : faces_by_dim()) {
        long long c = static_cast<long long>(dim_faces.size());
        chi += (k % 2 == 0) ? c : -c;
        ++k;
    }
    return chi;
}

int Complex::connected_components() const {
    int n = vertex_count();
    if (n == 0) return 0;
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const auto& f : facets_)
        for (size_t i = 1; i < f.size(); ++i) {
            int a = find(f[0]), b = find(f[i]);
            if (a != b) parent[static_cast<size_t>(a)] = b;
        }
    int components = 0;
    for (int v = 0; v < n; ++v)
        if (find(v) == v) ++components;
    return components;
}

}  // namespace chamber
