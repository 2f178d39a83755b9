#include <algorithm>
#include <numeric>

#include <catch2/catch_amalgamated.hpp>

#include "chamber/homology.hpp"
#include "chamber/shelling.hpp"

using namespace chamber;

namespace {

FacetOrdering identity_ordering(const Complex& k) {
    FacetOrdering o;
    o.order.resize(static_cast<size_t>(k.facet_count()));
    std::iota(o.order.begin(), o.order.end(), 0);
    return o;
}

// Two vertex-disjoint edges of K_B^odd(3) moved to the front.
FacetOrdering disjoint_edges_first(const Complex& odd3) {
    int e1 = -1, e2 = -1;
    for (int f = 0; f < odd3.facet_count() && e2 < 0; ++f) {
        if (e1 < 0) {
            e1 = 0;
            continue;
        }
        const auto& a = odd3.facets()[static_cast<size_t>(e1)];
        const auto& b = odd3.facets()[static_cast<size_t>(f)];
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (common.empty()) e2 = f;
    }
    REQUIRE(e2 >= 0);
    FacetOrdering o;
    o.order.push_back(e1);
    o.order.push_back(e2);
    for (int f = 0; f < odd3.facet_count(); ++f)
        if (f != e1 && f != e2) o.order.push_back(f);
    return o;
}

}  // namespace

TEST_CASE("isolated vertices shell in any order", "[shelling]") {
    Complex odd2 = odd_complex_B(2);
    REQUIRE(odd2.facet_count() == 4);
    FacetOrdering o = identity_ordering(odd2);
    std::reverse(o.order.begin(), o.order.end());
    CHECK(verify_shelling(odd2, o).accepted);
}

TEST_CASE("disjoint edges first is rejected at k = 2", "[shelling]") {
    Complex odd3 = odd_complex_B(3);
    VerifyOutcome outcome = verify_shelling(odd3, disjoint_edges_first(odd3));
    CHECK_FALSE(outcome.accepted);
    CHECK(outcome.failing == std::make_pair(0, 1));  // 0-based (i, k)
}

TEST_CASE("orderings must be permutations", "[shelling]") {
    Complex odd2 = odd_complex_B(2);
    FacetOrdering bad;
    bad.order = {0, 0, 1, 2};
    CHECK_THROWS_AS(verify_shelling(odd2, bad), std::invalid_argument);
}

TEST_CASE("lexicographic shelling order", "[shelling]") {
    // n = 2: the four singletons in prec order
    Complex odd2 = odd_complex_B(2);
    FacetOrdering lex2 = lex_chain_ordering(2);
    std::vector<std::string> first;
    for (int f : lex2.order)
        first.push_back(odd2.label(odd2.facets()[static_cast<size_t>(f)][0]));
    CHECK(first == std::vector<std::string>{"1", "2", "-1", "-2"});
    CHECK(verify_shelling(odd2, lex2).accepted);

    Complex odd3 = odd_complex_B(3);
    FacetOrdering lex3 = lex_chain_ordering(3);
    REQUIRE(lex3.order.size() == 24);
    // first facet is the chain {1} c {1,2,3}
    const auto& facet = odd3.facets()[static_cast<size_t>(lex3.order[0])];
    std::vector<std::string> labels;
    for (int v : facet) labels.push_back(odd3.label(v));
    std::sort(labels.begin(), labels.end());
    CHECK(labels == std::vector<std::string>{"1", "1,2,3"});

    VerifyOutcome outcome = verify_shelling(odd3, lex3);
    CHECK(outcome.accepted);

    // prefix closure: any prefix of an accepted shelling still verifies on
    // the complex generated by its facets
    for (size_t len : {1u, 5u, 12u}) {
        std::vector<std::vector<int>> prefix_facets;
        for (size_t i = 0; i < len; ++i)
            prefix_facets.push_back(odd3.facets()[static_cast<size_t>(lex3.order[i])]);
        std::vector<std::vector<std::string>> by_label;
        for (auto& f : prefix_facets) {
            std::vector<std::string> lf;
            for (int v : f) lf.push_back(odd3.label(v));
            by_label.push_back(lf);
        }
        Complex prefix = Complex::from_facets(odd3.vertex_labels(), by_label);
        // facet ids change; rebuild the order by matching label sets
        FacetOrdering order;
        for (auto& lf : by_label) {
            std::vector<int> ids;
            for (auto& l : lf) ids.push_back(prefix.vertex_id(l));
            std::sort(ids.begin(), ids.end());
            auto it = std::lower_bound(prefix.facets().begin(), prefix.facets().end(), ids);
            order.order.push_back(static_cast<int>(it - prefix.facets().begin()));
        }
        CAPTURE(len);
        CHECK(verify_shelling(prefix, order).accepted);
    }
}

TEST_CASE("lex shelling for n = 4 and 5", "[shelling]") {
    for (int n : {4, 5}) {
        CAPTURE(n);
        CHECK(verify_shelling(odd_complex_B(n), lex_chain_ordering(n), 2).accepted);
    }
}

TEST_CASE("accepted shellings give a top-degree wedge", "[shelling]") {
    for (int n : {3, 4}) {
        Complex odd = odd_complex_B(n);
        REQUIRE(verify_shelling(odd, lex_chain_ordering(n)).accepted);
        auto h = homology(odd, Coefficient::rational());
        int top = odd.dimension();
        long long chi = odd.euler_char_reduced();
        CAPTURE(n);
        CHECK(h.betti(top) == (chi < 0 ? -chi : chi));
        for (int d = 0; d < top; ++d) CHECK(h.betti(d) == 0);
    }
}

TEST_CASE("witness data certifies the Lemma 2.3 condition", "[shelling]") {
    Complex odd3 = odd_complex_B(3);
    FacetOrdering lex3 = lex_chain_ordering(3);
    VerifyOutcome outcome = verify_shelling(odd3, lex3);
    REQUIRE(outcome.accepted);
    auto facet_at = [&](int pos) {
        return odd3.facets()[static_cast<size_t>(lex3.order[static_cast<size_t>(pos)])];
    };
    for (int k = 1; k < 24; ++k) {
        for (int i = 0; i < k; ++i) {
            int j = outcome.witness.witness_for(odd3, lex3, i, k);
            REQUIRE(j >= 0);
            REQUIRE(j < k);
            const auto& fi = facet_at(i);
            const auto& fj = facet_at(j);
            const auto& fk = facet_at(k);
            std::vector<int> ik, jk;
            std::set_intersection(fi.begin(), fi.end(), fk.begin(), fk.end(),
                                  std::back_inserter(ik));
            std::set_intersection(fj.begin(), fj.end(), fk.begin(), fk.end(),
                                  std::back_inserter(jk));
            CHECK(std::includes(jk.begin(), jk.end(), ik.begin(), ik.end()));
            CHECK(jk.size() == fk.size() - 1);
        }
    }
}

TEST_CASE("inducing with the full vertex set is the identity", "[shelling]") {
    Complex oct = complex_B(2);
    SearchResult found = search_shelling(oct);
    REQUIRE(found.status == SearchStatus::found);
    std::vector<int> all;
    for (int v = 0; v < oct.vertex_count(); ++v) all.push_back(v);
    InduceResult res = induce_shelling(oct, found.ordering, all);
    CHECK(res.induced == oct);
    CHECK(res.ordering.order == found.ordering.order);
    CHECK(res.dropped.empty());
}

TEST_CASE("inducing the tetrahedron boundary onto three vertices", "[shelling]") {
    Complex sphere = Complex::from_facets(
        {"a", "b", "c", "v"},
        {{"a", "b", "c"}, {"a", "b", "v"}, {"a", "c", "v"}, {"b", "c", "v"}});
    SearchResult found = search_shelling(sphere);
    REQUIRE(found.status == SearchStatus::found);
    std::vector<int> keep;
    for (const std::string& l : {"a", "b", "c"}) keep.push_back(sphere.vertex_id(l));
    InduceResult res = induce_shelling(sphere, found.ordering, keep);
    CHECK(res.induced.facet_count() == 1);           // the solid triangle
    CHECK(res.ordering.order.size() == 1);
    CHECK(verify_shelling(res.induced, res.ordering).accepted);
}

TEST_CASE("inducing the octagon shelling onto the odd vertices", "[shelling]") {
    Complex oct = complex_B(2);
    SearchResult found = search_shelling(oct);
    REQUIRE(found.status == SearchStatus::found);
    std::vector<int> odd_ids;
    for (int v = 0; v < oct.vertex_count(); ++v)
        if (SignedSet::parse(2, oct.label(v)).size() % 2 == 1) odd_ids.push_back(v);
    InduceResult res = induce_shelling(oct, found.ordering, odd_ids);
    CHECK(res.induced == odd_complex_B(2));
    CHECK(res.ordering.order.size() == 4);
    CHECK(verify_shelling(res.induced, res.ordering).accepted);
    // the d_m log is monotone in the input positions
    CHECK(std::is_sorted(res.first_container.begin(), res.first_container.end()));
}

TEST_CASE("induce rejects non-shellings", "[shelling]") {
    Complex odd3 = odd_complex_B(3);
    std::vector<int> all;
    for (int v = 0; v < odd3.vertex_count(); ++v) all.push_back(v);
    CHECK_THROWS_AS(induce_shelling(odd3, disjoint_edges_first(odd3), all),
                    std::invalid_argument);
}

TEST_CASE("search finds polygon shellings", "[shelling]") {
    SearchResult res = search_shelling(complex_B(2));
    REQUIRE(res.status == SearchStatus::found);
    CHECK(verify_shelling(complex_B(2), res.ordering).accepted);
}

TEST_CASE("search proves two disjoint edges unshellable", "[shelling]") {
    Complex k = Complex::from_facets({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    SearchResult res = search_shelling(k);
    CHECK(res.status == SearchStatus::none_exists);
}

TEST_CASE("budget exhaustion is reported distinctly", "[shelling]") {
    SearchResult res = search_shelling(complex_B(2), 2);
    CHECK(res.status == SearchStatus::exhausted);
}

TEST_CASE("certificates", "[shelling]") {
    BoundedPoset interval = c_interval(4);
    Complex oc = interval.poset.open_interval(interval.bottom, interval.top).order_complex();
    auto certificate = nonshellable_certificate(oc);
    REQUIRE(certificate.has_value());
    CHECK(certificate->dimension == 1);
    CHECK(certificate->components == 4);

    CHECK_FALSE(nonshellable_certificate(complex_B(2)).has_value());
    CHECK_FALSE(nonshellable_certificate(odd_complex_B(2)).has_value());

    // search and the certificate agree
    SearchResult res = search_shelling(oc);
    CHECK(res.status == SearchStatus::none_exists);
}
