#include "chamber/weyl.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace chamber {

int prec_rank(int n, int v) {
    if (v == 0 || v > n || v < -n) throw std::invalid_argument("value outside [+-n]");
    return v > 0 ? v - 1 : n - v - 1;  // 1..n -> 0..n-1, -1..-n -> n..2n-1
}

SignedSet SignedSet::from_members(int n, std::vector<int> members) {
    if (n < 1) throw std::invalid_argument("SignedSet: n must be positive");
    SignedSet s;
    s.n = n;
    std::sort(members.begin(), members.end(),
              [n](int a, int b) { return prec_rank(n, a) < prec_rank(n, b); });
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int v : members) {
        int k = v > 0 ? v : -v;
        if (k < 1 || k > n) throw std::invalid_argument("SignedSet: member outside [+-n]");
        std::uint64_t pos_bit = 1ull << (2 * (k - 1));
        std::uint64_t neg_bit = pos_bit << 1;
        if (s.smask & (v > 0 ? neg_bit : pos_bit))
            throw std::invalid_argument("SignedSet: star condition violated at " + std::to_string(k));
        s.smask |= v > 0 ? pos_bit : neg_bit;
    }
    s.members = std::move(members);
    return s;
}

SignedSet SignedSet::parse(int n, const std::string& text) {
    std::vector<int> members;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        members.push_back(std::stoi(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return from_members(n, std::move(members));
}

bool SignedSet::contains(int v) const {
    int k = v > 0 ? v : -v;
    std::uint64_t bit = 1ull << (2 * (k - 1) + (v > 0 ? 0 : 1));
    return (smask & bit) != 0;
}

std::vector<int> SignedSet::pm() const {
    std::vector<int> out;
    for (int v : members) out.push_back(v > 0 ? v : -v);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint32_t SignedSet::pm_mask() const {
    std::uint32_t m = 0;
    for (int v : members) m |= 1u << ((v > 0 ? v : -v) - 1);
    return m;
}

std::string SignedSet::to_string() const {
    std::string out;
    for (size_t i = 0; i < members.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(members[i]);
    }
    return out;
}

bool canonical_less(const SignedSet& a, const SignedSet& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    int n = std::max(a.n, b.n);
    for (size_t i = 0; i < a.members.size(); ++i) {
        int ra = prec_rank(n, a.members[i]);
        int rb = prec_rank(n, b.members[i]);
        if (ra != rb) return ra < rb;
    }
    return false;
}

std::vector<int> CharacteristicMap::support_S(std::uint32_t s_mask) const {
    std::vector<int> out;
    for (size_t j = 0; j < mod2_columns.size(); ++j)
        if (std::popcount(mod2_columns[j] & s_mask) % 2 == 1) out.push_back(static_cast<int>(j));
    return out;
}

namespace {

void check_vertex_budget(int n, const WeylBudget& budget) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > budget.max_n_vertices)
        throw budget_error("n = " + std::to_string(n) + " exceeds the vertex budget");
}

std::vector<SignedSet> all_signed_sets(int n) {
    // One of {absent, +, -} per coordinate: 3^n - 1 nonempty sets.
    std::vector<SignedSet> out;
    std::vector<int> state(static_cast<size_t>(n), 0);
    while (true) {
        size_t i = 0;
        while (i < state.size() && state[i] == 2) state[i++] = 0;
        if (i == state.size()) break;
        ++state[i];
        std::vector<int> members;
        for (int k = 1; k <= n; ++k) {
            if (state[static_cast<size_t>(k - 1)] == 1) members.push_back(k);
            if (state[static_cast<size_t>(k - 1)] == 2) members.push_back(-k);
        }
        out.push_back(SignedSet::from_members(n, std::move(members)));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::unordered_map<std::uint64_t, int> smask_index(const std::vector<SignedSet>& sets) {
    std::unordered_map<std::uint64_t, int> index;
    index.reserve(sets.size() * 2);
    for (size_t i = 0; i < sets.size(); ++i) index.emplace(sets[i].smask, static_cast<int>(i));
    return index;
}

std::vector<std::string> labels_of(const std::vector<SignedSet>& sets) {
    std::vector<std::string> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(s.to_string());
    return out;
}

// Subsets of [n+1] for type A, canonically ordered by (size, lex).
std::vector<std::vector<int>> proper_subsets(int ground) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 1; mask + 1 < (1u << ground); ++mask) {
        std::vector<int> members;
        for (int k = 1; k <= ground; ++k)
            if (mask & (1u << (k - 1))) members.push_back(k);
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::string int_set_label(const std::vector<int>& members) {
    std::string out;
    for (size_t i = 0; i < members.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(members[i]);
    }
    return out;
}

std::uint32_t subset_mask_of(const std::vector<int>& s) {
    std::uint32_t m = 0;
    for (int v : s) m |= 1u << (v - 1);
    return m;
}

void check_subset_of_n(int n, const std::vector<int>& s) {
    for (int v : s)
        if (v < 1 || v > n) throw std::invalid_argument("S is not a subset of [n]");
    std::vector<int> copy = s;
    std::sort(copy.begin(), copy.end());
    if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
        throw std::invalid_argument("S has repeated elements");
}

}  // namespace

std::vector<SignedSet> vertices_B(int n, const WeylBudget& budget) {
    check_vertex_budget(n, budget);
    return all_signed_sets(n);
}

Complex complex_B(int n, const WeylBudget& budget) {
    check_vertex_budget(n, budget);
    if (n > budget.max_n_full_b)
        throw budget_error("full K_B face structure capped at n = " +
                           std::to_string(budget.max_n_full_b));
    std::vector<SignedSet> verts = all_signed_sets(n);
    auto index = smask_index(verts);
    // Facets are the maximal chains I_1 c ... c I_n; they correspond to
    // signed permutations: I_k = {mu_1 s(1), ..., mu_k s(k)}.
    std::vector<std::vector<int>> facets;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
            std::vector<int> chain;
            chain.reserve(static_cast<size_t>(n));
            std::uint64_t acc = 0;
            for (int k = 0; k < n; ++k) {
                int coord = perm[static_cast<size_t>(k)];
                bool neg = signs & (1u << k);
                acc |= 1ull << (2 * (coord - 1) + (neg ? 1 : 0));
                chain.push_back(index.at(acc));
            }
            facets.push_back(std::move(chain));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Complex::from_facet_ids(labels_of(verts), std::move(facets));
}

CharacteristicMap char_map_B(int n, const WeylBudget& budget) {
    check_vertex_budget(n, budget);
    std::vector<SignedSet> verts = all_signed_sets(n);
    CharacteristicMap cm;
    cm.rows = n;
    for (const auto& v : verts) {
        std::vector<int> col(static_cast<size_t>(n), 0);
        for (int m : v.members) {
            if (m > 0)
                col[static_cast<size_t>(m - 1)] = 1;   // +e_k for k in I n [n]
            else
                col[static_cast<size_t>(-m - 1)] = -1;  // -e_{-k} for k in I \ [n]
        }
        cm.column_labels.push_back(v.to_string());
        cm.int_columns.push_back(std::move(col));
        cm.mod2_columns.push_back(v.pm_mask());
    }
    return cm;
}

Complex complex_A(int n, const WeylBudget& budget) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > budget.max_n_full_a)
        throw budget_error("full K_A face structure capped at n = " +
                           std::to_string(budget.max_n_full_a));
    auto verts = proper_subsets(n + 1);
    std::unordered_map<std::uint32_t, int> index;
    for (size_t i = 0; i < verts.size(); ++i)
        index.emplace(subset_mask_of(verts[i]), static_cast<int>(i));
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (const auto& v : verts) labels.push_back(int_set_label(v));
    // Maximal chains add one element of [n+1] at a time, stopping one short.
    std::vector<std::vector<int>> facets;
    std::vector<int> perm(static_cast<size_t>(n) + 1);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::vector<int> chain;
        chain.reserve(static_cast<size_t>(n));
        std::uint32_t acc = 0;
        for (int k = 0; k < n; ++k) {
            acc |= 1u << (perm[static_cast<size_t>(k)] - 1);
            chain.push_back(index.at(acc));
        }
        facets.push_back(std::move(chain));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Complex::from_facet_ids(labels, std::move(facets));
}

CharacteristicMap char_map_A(int n, const WeylBudget& budget) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > budget.max_n_full_a)
        throw budget_error("char_map_A capped at n = " + std::to_string(budget.max_n_full_a));
    CharacteristicMap cm;
    cm.rows = n;
    for (const auto& v : proper_subsets(n + 1)) {
        bool has_last = std::find(v.begin(), v.end(), n + 1) != v.end();
        std::vector<int> col(static_cast<size_t>(n), 0);
        std::uint32_t bits = 0;
        if (!has_last) {
            for (int k : v) {
                col[static_cast<size_t>(k - 1)] = 1;
                bits |= 1u << (k - 1);
            }
        } else {
            // sum over I \ {n+1} minus the all-ones vector
            for (int k = 1; k <= n; ++k) col[static_cast<size_t>(k - 1)] = -1;
            for (int k : v)
                if (k <= n) col[static_cast<size_t>(k - 1)] = 0;
            for (int k = 1; k <= n; ++k)
                if (col[static_cast<size_t>(k - 1)] != 0) bits |= 1u << (k - 1);
        }
        cm.column_labels.push_back(int_set_label(v));
        cm.int_columns.push_back(std::move(col));
        cm.mod2_columns.push_back(bits);
    }
    return cm;
}

Complex odd_complex_B(int n, const WeylBudget& budget) {
    check_vertex_budget(n, budget);
    std::vector<SignedSet> odd;
    for (auto& s : all_signed_sets(n))
        if (s.size() % 2 == 1) odd.push_back(std::move(s));
    auto index = smask_index(odd);
    int top = n % 2 == 1 ? n : n - 1;
    // Maximal odd chains have the size profile 1, 3, ..., top; build them
    // by dropping two members at a time.
    std::vector<std::vector<int>> facets;
    std::vector<int> chain;
    auto descend = [&](auto&& self, const SignedSet& current) -> void {
        chain.push_back(index.at(current.smask));
        if (current.size() == 1) {
            facets.push_back(chain);
        } else {
            int sz = current.size();
            for (int i = 0; i < sz - 1; ++i)
                for (int j = i + 1; j < sz; ++j) {
                    std::vector<int> members;
                    for (int t = 0; t < sz; ++t)
                        if (t != i && t != j) members.push_back(current.members[static_cast<size_t>(t)]);
                    self(self, SignedSet::from_members(n, std::move(members)));
                }
        }
        chain.pop_back();
    };
    for (const auto& s : odd)
        if (s.size() == top) descend(descend, s);
    return Complex::from_facet_ids(labels_of(odd), std::move(facets));
}

Complex odd_complex_A(int r, const WeylBudget& budget) {
    if (r % 2 == 0) throw std::invalid_argument("odd_complex_A requires odd r");
    Complex k = complex_A(r, budget);
    CharacteristicMap cm = char_map_A(r, budget);
    std::uint32_t full = (1u << r) - 1;
    return k.full_subcomplex(cm.support_S(full));
}

Complex restriction_S(int n, const std::vector<int>& s, const WeylBudget& budget) {
    check_subset_of_n(n, s);
    Complex k = complex_B(n, budget);
    if (s.empty()) return Complex{};
    std::uint32_t s_mask = subset_mask_of(s);
    std::vector<int> keep;
    for (int v = 0; v < k.vertex_count(); ++v) {
        SignedSet ss = SignedSet::parse(n, k.label(v));
        if (std::popcount(ss.pm_mask() & s_mask) % 2 == 1) keep.push_back(v);
    }
    return k.full_subcomplex(keep);
}

ReduceResult reduce_S(int n, const std::vector<int>& s, const WeylBudget& budget) {
    check_subset_of_n(n, s);
    if (s.empty()) throw std::invalid_argument("reduce_S requires nonempty S");
    std::uint32_t s_mask = subset_mask_of(s);
    ReduceResult out;
    out.complex = restriction_S(n, s, budget);

    // Vertices with I^+- not inside S go, in increasing |I^+- n S| and
    // canonical order within ties, exactly as the induction runs.
    struct Doomed {
        SignedSet set;
        int overlap;
    };
    std::vector<Doomed> doomed;
    for (const auto& label : out.complex.vertex_labels()) {
        SignedSet ss = SignedSet::parse(n, label);
        std::uint32_t pm = ss.pm_mask();
        if ((pm & ~s_mask) != 0)
            doomed.push_back({std::move(ss), std::popcount(pm & s_mask)});
    }
    std::stable_sort(doomed.begin(), doomed.end(), [](const Doomed& a, const Doomed& b) {
        if (a.overlap != b.overlap) return a.overlap < b.overlap;
        return canonical_less(a.set, b.set);
    });

    for (const auto& d : doomed) {
        int v = out.complex.vertex_id(d.set.to_string());
        if (v < 0)
            throw std::runtime_error("reduce_S: vertex " + d.set.to_string() +
                                     " vanished before its deletion step");
        Complex link = out.complex.link(v);
        if (link.is_empty())
            throw std::runtime_error("reduce_S: link of " + d.set.to_string() + " is empty");
        std::optional<int> apex = link.cone_apex();
        if (!apex)
            throw std::runtime_error("reduce_S: link of " + d.set.to_string() +
                                     " is not certified a cone");
        out.log.push_back({d.set.to_string(), link.label(*apex), d.overlap});
        out.complex = out.complex.delete_star(v);
    }

    // The survivors must be exactly the odd sets supported inside S.
    std::vector<std::string> expected;
    for (const auto& ss : all_signed_sets(n))
        if (ss.size() % 2 == 1 && (ss.pm_mask() & ~s_mask) == 0)
            expected.push_back(ss.to_string());
    if (out.complex.vertex_labels() != expected)
        throw std::runtime_error("reduce_S: surviving vertex set is not {I : I^+- c S, |I| odd}");
    return out;
}

Relabeling canonical_iso_to_odd(const Complex& reduced, const std::vector<int>& s,
                                const WeylBudget& budget) {
    if (s.empty()) throw std::invalid_argument("canonical_iso_to_odd requires nonempty S");
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    int r = static_cast<int>(sorted.size());
    int parse_n = sorted.back();
    std::unordered_map<int, int> phi;  // order-preserving S -> [r]
    for (int i = 0; i < r; ++i) phi[sorted[static_cast<size_t>(i)]] = i + 1;

    Complex odd = odd_complex_B(r, budget);
    Relabeling rel;
    std::vector<int> to_odd(static_cast<size_t>(reduced.vertex_count()), -1);
    for (int v = 0; v < reduced.vertex_count(); ++v) {
        SignedSet ss = SignedSet::parse(parse_n, reduced.label(v));
        std::vector<int> mapped;
        for (int m : ss.members) {
            auto it = phi.find(m > 0 ? m : -m);
            if (it == phi.end())
                throw std::runtime_error("canonical_iso_to_odd: vertex not supported in S");
            mapped.push_back(m > 0 ? it->second : -it->second);
        }
        std::string target = SignedSet::from_members(r, std::move(mapped)).to_string();
        int w = odd.vertex_id(target);
        if (w < 0)
            throw std::runtime_error("canonical_iso_to_odd: image vertex " + target +
                                     " missing from the odd complex");
        to_odd[static_cast<size_t>(v)] = w;
        rel.vertex_map.emplace_back(reduced.label(v), target);
    }
    // Bijective on vertices and facet-preserving, both directions.
    if (reduced.vertex_count() != odd.vertex_count())
        throw std::runtime_error("canonical_iso_to_odd: vertex counts differ");
    std::vector<std::vector<int>> mapped_facets;
    for (const auto& f : reduced.facets()) {
        std::vector<int> g;
        for (int v : f) g.push_back(to_odd[static_cast<size_t>(v)]);
        std::sort(g.begin(), g.end());
        mapped_facets.push_back(std::move(g));
    }
    std::sort(mapped_facets.begin(), mapped_facets.end());
    if (mapped_facets != odd.facets())
        throw std::runtime_error("canonical_iso_to_odd: facet structure differs");
    return rel;
}

Poset odd_poset_B(int n, const WeylBudget& budget) {
    check_vertex_budget(n, budget);
    std::vector<SignedSet> odd;
    for (auto& s : all_signed_sets(n))
        if (s.size() % 2 == 1) odd.push_back(std::move(s));
    std::vector<std::pair<int, int>> less;
    for (size_t i = 0; i < odd.size(); ++i)
        for (size_t j = 0; j < odd.size(); ++j)
            if (i != j && odd[i].subset_of(odd[j]))
                less.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Poset::from_less_pairs(labels_of(odd), less);
}

BoundedPoset odd_poset_B_bounded(int n, const WeylBudget& budget) {
    check_vertex_budget(n, budget);
    std::vector<SignedSet> odd;
    for (auto& s : all_signed_sets(n))
        if (s.size() % 2 == 1) odd.push_back(std::move(s));
    std::vector<std::string> labels{"{}"};
    for (const auto& s : odd) labels.push_back(s.to_string());
    labels.push_back("[pm" + std::to_string(n) + "]");
    int bottom = 0;
    int top = static_cast<int>(labels.size()) - 1;
    std::vector<std::pair<int, int>> less;
    for (size_t i = 0; i < odd.size(); ++i) {
        less.emplace_back(bottom, static_cast<int>(i) + 1);
        less.emplace_back(static_cast<int>(i) + 1, top);
        for (size_t j = 0; j < odd.size(); ++j)
            if (i != j && odd[i].subset_of(odd[j]))
                less.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    }
    less.emplace_back(bottom, top);
    return {Poset::from_less_pairs(std::move(labels), less), bottom, top};
}

std::vector<SignedSet> c_odd_vertices(int n, const WeylBudget& budget) {
    check_vertex_budget(n, budget);
    std::vector<SignedSet> out;
    for (auto& s : all_signed_sets(n)) {
        int size = s.size();
        bool n_in_pm = (s.pm_mask() & (1u << (n - 1))) != 0;
        int negatives = 0, positives = 0;
        for (int m : s.members) (m > 0 ? positives : negatives) += 1;
        bool keep = false;
        if (!n_in_pm) {
            keep = size % 2 == 1;                                   // (1)
        } else if (size != n) {
            keep = (n - size) % 2 == 1;                             // (2)
        } else if (s.contains(n)) {
            keep = negatives % 2 == 0;                              // (3)
        } else if (s.contains(-n)) {
            keep = positives % 2 == 0;                              // (4)
        }
        if (keep) out.push_back(std::move(s));
    }
    return out;
}

BoundedPoset c_interval(int n, const WeylBudget& budget) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("c_interval requires even n >= 4");
    check_vertex_budget(n, budget);
    std::vector<int> base;
    for (int k = 4; k <= n; ++k) base.push_back(k);
    SignedSet bottom_set = SignedSet::from_members(n, base);
    std::vector<SignedSet> elements;
    for (auto& s : c_odd_vertices(n, budget))
        if (bottom_set.subset_of(s)) elements.push_back(std::move(s));
    std::sort(elements.begin(), elements.end(), canonical_less);

    std::vector<std::string> labels = labels_of(elements);
    labels.push_back("[pm" + std::to_string(n) + "]");
    int top = static_cast<int>(labels.size()) - 1;
    std::vector<std::pair<int, int>> less;
    for (size_t i = 0; i < elements.size(); ++i) {
        less.emplace_back(static_cast<int>(i), top);
        for (size_t j = 0; j < elements.size(); ++j)
            if (i != j && elements[i].subset_of(elements[j]))
                less.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    Poset p = Poset::from_less_pairs(std::move(labels), less);
    int bottom = p.index_of(bottom_set.to_string());
    if (bottom < 0) throw std::logic_error("c_interval: base element missing");
    return {std::move(p), bottom, top};
}

}  // namespace chamber
