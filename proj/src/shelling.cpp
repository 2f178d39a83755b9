#include "chamber/shelling.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "chamber/parallel.hpp"

namespace chamber {

namespace {

using Bitset = boost::dynamic_bitset<>;

std::vector<Bitset> facet_bitsets(const Complex& k, const FacetOrdering& ordering) {
    std::vector<Bitset> out;
    out.reserve(ordering.order.size());
    for (int f : ordering.order) {
        Bitset b(static_cast<size_t>(k.vertex_count()));
        for (int v : k.facets().at(static_cast<size_t>(f))) b.set(static_cast<size_t>(v));
        out.push_back(std::move(b));
    }
    return out;
}

void check_permutation(const Complex& k, const FacetOrdering& ordering) {
    std::vector<bool> seen(k.facets().size(), false);
    if (ordering.order.size() != k.facets().size())
        throw std::invalid_argument("ordering does not cover the facets exactly once");
    for (int f : ordering.order) {
        if (f < 0 || f >= k.facet_count() || seen[static_cast<size_t>(f)])
            throw std::invalid_argument("ordering is not a permutation of the facet ids");
        seen[static_cast<size_t>(f)] = true;
    }
}

// First position j < limit whose facet contains face (given as a bitset with
// its vertex list); -1 if none.  positions_of[v] lists, in order, the
// positions whose facet contains v.
int first_containing(const std::vector<Bitset>& facets,
                     const std::vector<std::vector<int>>& positions_of,
                     const std::vector<int>& face, const Bitset& face_bits, int limit) {
    if (face.empty()) return limit > 0 ? 0 : -1;  // the empty face is everywhere
    const std::vector<int>* shortest = &positions_of[static_cast<size_t>(face[0])];
    for (int v : face) {
        const auto& list = positions_of[static_cast<size_t>(v)];
        if (list.size() < shortest->size()) shortest = &list;
    }
    for (int j : *shortest) {
        if (j >= limit) break;
        if (face_bits.is_subset_of(facets[static_cast<size_t>(j)])) return j;
    }
    return -1;
}

// The codim sources of position k: vertices v of F_k with F_k \ {v}
// contained in an earlier facet, with the earliest such position.
std::vector<std::pair<int, int>> codim_sources_of(const Complex& k_complex,
                                                  const std::vector<Bitset>& facets,
                                                  const std::vector<std::vector<int>>& positions_of,
                                                  const FacetOrdering& ordering, int k) {
    std::vector<std::pair<int, int>> out;
    const auto& facet = k_complex.facets()[static_cast<size_t>(ordering.order[static_cast<size_t>(k)])];
    for (int v : facet) {
        std::vector<int> face;
        face.reserve(facet.size() - 1);
        for (int w : facet)
            if (w != v) face.push_back(w);
        Bitset bits = facets[static_cast<size_t>(k)];
        bits.reset(static_cast<size_t>(v));
        int j = first_containing(facets, positions_of, face, bits, k);
        if (j >= 0) out.emplace_back(v, j);
    }
    return out;
}

}  // namespace

int ShellingWitness::witness_for(const Complex& k_complex, const FacetOrdering& ordering,
                                 int i, int k) const {
    const auto& facet_i = k_complex.facets().at(static_cast<size_t>(ordering.order.at(static_cast<size_t>(i))));
    for (const auto& [v, j] : codim_sources.at(static_cast<size_t>(k)))
        if (!std::binary_search(facet_i.begin(), facet_i.end(), v)) return j;
    return -1;
}

std::vector<std::array<int, 3>> ShellingWitness::all_triples(const Complex& k_complex,
                                                             const FacetOrdering& ordering) const {
    std::vector<std::array<int, 3>> out;
    int t = static_cast<int>(ordering.order.size());
    for (int k = 1; k < t; ++k)
        for (int i = 0; i < k; ++i) out.push_back({i, k, witness_for(k_complex, ordering, i, k)});
    return out;
}

VerifyOutcome verify_shelling(const Complex& k_complex, const FacetOrdering& ordering,
                              int threads) {
    check_permutation(k_complex, ordering);
    int t = static_cast<int>(ordering.order.size());
    VerifyOutcome outcome;
    outcome.witness.codim_sources.resize(static_cast<size_t>(t));
    if (t <= 1) {
        outcome.accepted = true;
        return outcome;
    }
    auto facets = facet_bitsets(k_complex, ordering);
    std::vector<std::vector<int>> positions_of(static_cast<size_t>(k_complex.vertex_count()));
    for (int k = 0; k < t; ++k)
        for (int v : k_complex.facets()[static_cast<size_t>(ordering.order[static_cast<size_t>(k)])])
            positions_of[static_cast<size_t>(v)].push_back(k);

    std::vector<int> fail_i(static_cast<size_t>(t), -1);
    parallel_for(t, threads, [&](int k) {
        if (k == 0) return;
        auto sources = codim_sources_of(k_complex, facets, positions_of, ordering, k);
        for (int i = 0; i < k; ++i) {
            bool witnessed = false;
            const auto& facet_i = k_complex.facets()[static_cast<size_t>(ordering.order[static_cast<size_t>(i)])];
            for (const auto& [v, j] : sources) {
                if (!std::binary_search(facet_i.begin(), facet_i.end(), v)) {
                    witnessed = true;
                    break;
                }
            }
            if (!witnessed) {
                fail_i[static_cast<size_t>(k)] = i;
                return;
            }
        }
        outcome.witness.codim_sources[static_cast<size_t>(k)] = std::move(sources);
    });

    for (int k = 1; k < t; ++k) {
        if (fail_i[static_cast<size_t>(k)] >= 0) {
            outcome.accepted = false;
            outcome.failing = {fail_i[static_cast<size_t>(k)], k};
            outcome.witness.codim_sources.clear();
            return outcome;
        }
    }
    outcome.accepted = true;
    return outcome;
}

FacetOrdering lex_chain_ordering(int n, const WeylBudget& budget) {
    Complex odd = odd_complex_B(n, budget);
    // Each facet is a maximal chain; recover the chain sequence by sorting
    // its vertices by cardinality, then compare chains level by level under
    // the prec order on member sequences.
    std::vector<SignedSet> sets;
    sets.reserve(static_cast<size_t>(odd.vertex_count()));
    for (const auto& label : odd.vertex_labels()) sets.push_back(SignedSet::parse(n, label));

    struct Chain {
        int facet_id;
        std::vector<int> levels;  // vertex ids, ascending cardinality
    };
    std::vector<Chain> chains;
    chains.reserve(odd.facets().size());
    for (int f = 0; f < odd.facet_count(); ++f) {
        Chain c{f, odd.facets()[static_cast<size_t>(f)]};
        std::sort(c.levels.begin(), c.levels.end(), [&](int a, int b) {
            return sets[static_cast<size_t>(a)].size() < sets[static_cast<size_t>(b)].size();
        });
        chains.push_back(std::move(c));
    }
    auto level_less = [&](int a, int b) {
        const auto& sa = sets[static_cast<size_t>(a)];
        const auto& sb = sets[static_cast<size_t>(b)];
        for (size_t i = 0; i < sa.members.size() && i < sb.members.size(); ++i) {
            int ra = prec_rank(n, sa.members[i]);
            int rb = prec_rank(n, sb.members[i]);
            if (ra != rb) return ra < rb;
        }
        return sa.members.size() < sb.members.size();
    };
    std::sort(chains.begin(), chains.end(), [&](const Chain& x, const Chain& y) {
        for (size_t i = 0; i < x.levels.size(); ++i) {
            if (x.levels[i] == y.levels[i]) continue;
            return level_less(x.levels[i], y.levels[i]);
        }
        return false;
    });
    FacetOrdering out;
    out.order.reserve(chains.size());
    for (const auto& c : chains) out.order.push_back(c.facet_id);
    return out;
}

InduceResult induce_shelling(const Complex& k_complex, const FacetOrdering& shelling,
                             const std::vector<int>& filter_vertices, int threads) {
    VerifyOutcome check = verify_shelling(k_complex, shelling, threads);
    if (!check.accepted)
        throw std::invalid_argument("induce_shelling: the input ordering is not a shelling");

    InduceResult out;
    out.induced = k_complex.full_subcomplex(filter_vertices);
    std::vector<bool> keep(static_cast<size_t>(k_complex.vertex_count()), false);
    for (int v : filter_vertices) keep[static_cast<size_t>(v)] = true;

    // Map filtered faces into the induced complex's ids.
    std::vector<int> new_id(static_cast<size_t>(k_complex.vertex_count()), -1);
    for (int v = 0; v < k_complex.vertex_count(); ++v) {
        if (!keep[static_cast<size_t>(v)]) continue;
        new_id[static_cast<size_t>(v)] = out.induced.vertex_id(k_complex.label(v));
    }
    std::vector<std::vector<int>> filtered;  // per input position, induced ids
    filtered.reserve(shelling.order.size());
    for (int f : shelling.order) {
        std::vector<int> g;
        for (int v : k_complex.facets()[static_cast<size_t>(f)])
            if (new_id[static_cast<size_t>(v)] >= 0) g.push_back(new_id[static_cast<size_t>(v)]);
        std::sort(g.begin(), g.end());
        filtered.push_back(std::move(g));
    }

    std::vector<bool> used(out.induced.facets().size(), false);
    for (size_t m = 0; m < filtered.size(); ++m) {
        const auto& face = filtered[m];
        auto it = std::lower_bound(out.induced.facets().begin(), out.induced.facets().end(), face);
        bool is_facet = it != out.induced.facets().end() && *it == face;
        if (face.empty() || !is_facet) {
            out.dropped.push_back(static_cast<int>(m));
            continue;
        }
        int id = static_cast<int>(it - out.induced.facets().begin());
        if (used[static_cast<size_t>(id)]) {  // not first appearance
            out.dropped.push_back(static_cast<int>(m));
            continue;
        }
        used[static_cast<size_t>(id)] = true;
        out.ordering.order.push_back(id);
        // d_m: first input position whose facet contains this face
        int d = -1;
        for (size_t l = 0; l <= m; ++l) {
            if (std::includes(filtered[l].begin(), filtered[l].end(), face.begin(), face.end())) {
                d = static_cast<int>(l);
                break;
            }
        }
        out.first_container.push_back(d);
    }
    if (out.ordering.order.size() != out.induced.facets().size())
        throw std::runtime_error("induce_shelling: filtered facets miss part of the induced complex");
    return out;
}

SearchResult search_shelling(const Complex& k_complex, long long node_budget) {
    SearchResult result;
    int t = k_complex.facet_count();
    if (t == 0) {
        result.status = SearchStatus::found;
        return result;
    }
    std::vector<Bitset> facets;
    for (const auto& f : k_complex.facets()) {
        Bitset b(static_cast<size_t>(k_complex.vertex_count()));
        for (int v : f) b.set(static_cast<size_t>(v));
        facets.push_back(std::move(b));
    }
    std::vector<int> prefix;
    std::vector<bool> used(static_cast<size_t>(t), false);
    long long nodes = 0;
    bool over_budget = false;

    // The incremental Lemma-2.3 test for appending facet f to the prefix.
    auto admissible = [&](int f) {
        if (prefix.empty()) return true;
        const auto& facet = k_complex.facets()[static_cast<size_t>(f)];
        std::vector<int> sources;
        for (int v : facet) {
            Bitset bits = facets[static_cast<size_t>(f)];
            bits.reset(static_cast<size_t>(v));
            for (int p : prefix) {
                if (bits.is_subset_of(facets[static_cast<size_t>(p)])) {
                    sources.push_back(v);
                    break;
                }
            }
        }
        if (sources.empty()) return false;
        for (int p : prefix) {
            bool witnessed = false;
            for (int v : sources) {
                if (!facets[static_cast<size_t>(p)][static_cast<size_t>(v)]) {
                    witnessed = true;
                    break;
                }
            }
            if (!witnessed) return false;
        }
        return true;
    };

    auto dfs = [&](auto&& self) -> bool {
        if (static_cast<int>(prefix.size()) == t) return true;
        for (int f = 0; f < t; ++f) {
            if (used[static_cast<size_t>(f)]) continue;
            if (++nodes > node_budget) {
                over_budget = true;
                return false;
            }
            if (!admissible(f)) continue;
            used[static_cast<size_t>(f)] = true;
            prefix.push_back(f);
            if (self(self)) return true;
            prefix.pop_back();
            used[static_cast<size_t>(f)] = false;
            if (over_budget) return false;
        }
        return false;
    };

    bool found = dfs(dfs);
    result.nodes = nodes;
    if (found) {
        result.status = SearchStatus::found;
        result.ordering.order = prefix;
    } else {
        result.status = over_budget ? SearchStatus::exhausted : SearchStatus::none_exists;
    }
    return result;
}

std::string NonshellableCertificate::description() const {
    return "pure of dimension " + std::to_string(dimension) + " with " +
           std::to_string(components) + " connected components; not shellable";
}

std::optional<NonshellableCertificate> nonshellable_certificate(const Complex& k_complex) {
    if (!k_complex.is_pure()) return std::nullopt;
    int dim = k_complex.dimension();
    if (dim < 1) return std::nullopt;
    int comps = k_complex.connected_components();
    if (comps < 2) return std::nullopt;
    return NonshellableCertificate{dim, comps};
}

}  // namespace chamber
