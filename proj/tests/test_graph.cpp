#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hopfchrom/graph.hpp"
#include "hopfchrom/graph_alg.hpp"

using namespace hopfchrom;

namespace {

// Independent graph6 encoder used as the parsing oracle: packs the column-major
// upper triangle straight from an edge list.
std::string encode_graph6_reference(int n, const std::vector<std::pair<int, int>>& edges) {
    std::string out(1, (char)(n + 63));
    long long bits = (long long)n * (n - 1) / 2;
    std::vector<int> sextets((size_t)((bits + 5) / 6), 0);
    auto bit_index = [&](int i, int j) {  // i < j
        return (long long)j * (j - 1) / 2 + i;
    };
    for (auto [i, j] : edges) {
        if (i > j) std::swap(i, j);
        long long t = bit_index(i, j);
        sextets[t / 6] |= 1 << (5 - t % 6);
    }
    for (int s : sextets) out.push_back((char)(s + 63));
    return out;
}

}  // namespace

TEST_CASE("graph6 parsing") {
    Graph a = parse_graph6("A?");
    CHECK(a.vertex_count() == 2);
    CHECK(a.edge_count() == 0);
    Graph b = parse_graph6("A_");
    CHECK(b.vertex_count() == 2);
    CHECK(b.edges() == std::vector<std::pair<int, int>>{{0, 1}});

    // The butterfly through an independently written encoder.
    std::string g6 = encode_graph6_reference(5, Graph::butterfly().edges());
    Graph c = parse_graph6(g6);
    CHECK(c == Graph::butterfly());
    CHECK(c.edge_count() == 6);

    CHECK(parse_graph6("?").vertex_count() == 0);
    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    CHECK_THROWS_AS(parse_graph6("A"), parse_error);          // truncated
    CHECK_THROWS_AS(parse_graph6("A_x"), parse_error);        // trailing data
    CHECK_THROWS_AS(parse_graph6("A\x01"), parse_error);      // invalid byte
    CHECK_THROWS_AS(parse_graph6("}???????"), parse_error);   // 62 vertices > cap
}

TEST_CASE("graph6 round trip on all graphs up to 5 vertices") {
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : all_graphs_up_to_iso(n)) {
            std::string enc = write_graph6(g);
            CHECK(encode_graph6_reference(n, g.edges()) == enc);
            CHECK(parse_graph6(enc) == g);
        }
}

TEST_CASE("disjoint union") {
    Graph k1 = Graph::empty_graph(1);
    CHECK(disjoint_union(k1, k1) == Graph::empty_graph(2));
    Graph k2 = Graph::complete(2);
    CHECK(disjoint_union(k2, k2) == Graph(4, {{0, 1}, {2, 3}}));
    CHECK(disjoint_union(Graph::butterfly(), Graph::empty_graph(0)) == Graph::butterfly());
}

TEST_CASE("induced subgraph") {
    Graph b = Graph::butterfly();  // 1-2 is an edge
    CHECK(induced_subgraph(b, {1, 2}) == Graph::complete(2));
    CHECK(induced_subgraph(b, {}) == Graph::empty_graph(0));
    CHECK(induced_subgraph(Graph::complete(3), {0, 1}) == Graph::complete(2));
    CHECK_THROWS_AS(induced_subgraph(b, {7}), consistency_error);
    CHECK_THROWS_AS(induced_subgraph(b, {1, 1}), consistency_error);
}

TEST_CASE("connected components") {
    CHECK(connected_components(Graph::empty_graph(3)) ==
          std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(connected_components(Graph::butterfly()) ==
          std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
    CHECK(connected_components(Graph(4, {{0, 1}, {2, 3}})) ==
          std::vector<std::vector<int>>{{0, 1}, {2, 3}});
}

TEST_CASE("canonical form") {
    Graph b = Graph::butterfly();
    CanonicalWitness w = canonical_form(b);
    // Idempotent with identity witness.
    CanonicalWitness w2 = canonical_form(w.canonical);
    CHECK(w2.canonical == w.canonical);
    CHECK(w2.relabel.is_identity());
    // Witness validity.
    CHECK(relabel_graph(b, w.relabel) == w.canonical);
    // Swapping two wing vertices gives the same canonical graph.
    CHECK(canonical_form(relabel_graph(b, Perm::from_cycles("(0 4)", 5))).canonical ==
          w.canonical);
    // The two graphs with equal chromatic polynomials are not isomorphic:
    // brute-force check over all 120 bijections, then via canonical forms.
    Graph lam = Graph::kite_with_pendant();
    bool isomorphic = false;
    std::vector<int> img(5);
    std::iota(img.begin(), img.end(), 0);
    do {
        Perm p{std::vector<int>(img)};
        if (relabel_graph(b, p) == lam) isomorphic = true;
    } while (std::next_permutation(img.begin(), img.end()));
    CHECK_FALSE(isomorphic);
    CHECK_FALSE(canonical_form(lam).canonical == w.canonical);
    // Degree-zero graph.
    CanonicalWitness w0 = canonical_form(Graph::empty_graph(0));
    CHECK(w0.canonical == Graph::empty_graph(0));
    CHECK(w0.relabel.is_identity());
    CHECK_THROWS_AS(canonical_form(Graph::empty_graph(13)), resource_error);
}

TEST_CASE("canonical form is isomorphism-invariant on all graphs up to 6 vertices") {
    std::mt19937_64 rng(42);
    for (int n = 0; n <= 6; ++n) {
        for (const Graph& g : all_graphs_up_to_iso(n)) {
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 0);
            for (int t = 0; t < 3; ++t) {
                std::shuffle(img.begin(), img.end(), rng);
                Perm p{std::vector<int>(img)};
                CHECK(canonical_form(relabel_graph(g, p)).canonical == g);
            }
        }
    }
}

TEST_CASE("automorphism groups") {
    PermGroup aut_b = automorphism_group(Graph::butterfly());
    CHECK(aut_b.order() == 8);  // dihedral
    CHECK(automorphism_group(Graph::empty_graph(3)).order() == 6);
    CHECK(automorphism_group(Graph::kite_with_pendant()).order() == 2);

    // Every element maps edges to edges, exhaustively.
    Graph b = Graph::butterfly();
    for (const auto& p : aut_b.elements())
        for (auto [i, j] : b.edges()) CHECK(b.has_edge(p(i), p(j)));

    // |Aut| divides n!.
    long long fact = 120;
    CHECK(fact % aut_b.order() == 0);

    // Union contains the block image of the factor groups.
    Graph u = disjoint_union(Graph::complete(2), Graph::path(3));
    PermGroup aut_u = automorphism_group(u);
    PermGroup a1 = automorphism_group(Graph::complete(2));
    PermGroup a2 = automorphism_group(Graph::path(3));
    for (const auto& x : a1.elements())
        for (const auto& y : a2.elements()) CHECK(aut_u.contains(Perm::block(x, y)));

    CHECK_THROWS_AS(automorphism_group(Graph::empty_graph(5), 12, 10), resource_error);
}

TEST_CASE("automorphism search agrees with the full scan") {
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : all_graphs_up_to_iso(n))
            CHECK(automorphism_group(g).elements() ==
                  automorphism_group_bruteforce(g).elements());
    // Spot checks at n = 6 and 7.
    for (const Graph& g : {Graph::cycle(6), Graph::path(7), disjoint_union(
                               Graph::complete(3), Graph::complete(3))})
        CHECK(automorphism_group(g).elements() == automorphism_group_bruteforce(g).elements());
}

TEST_CASE("canonical form picks the lex-min graph6-order bitstring") {
    // Reference: minimum over all relabelings of the column-order bitstring
    // (the graph6 bit order), computed by full enumeration.
    auto bits = [](const Graph& x) {
        std::vector<int> v;
        for (int j = 1; j < x.vertex_count(); ++j)
            for (int i = 0; i < j; ++i) v.push_back(x.has_edge(i, j) ? 1 : 0);
        return v;
    };
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : all_graphs_up_to_iso(n)) {
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 0);
            Graph best = g;
            bool first = true;
            do {
                Graph h = relabel_graph(g, Perm{std::vector<int>(img)});
                if (first || bits(h) < bits(best)) best = h;
                first = false;
            } while (std::next_permutation(img.begin(), img.end()));
            CHECK(canonical_form(g).canonical == best);
        }
    }
}

TEST_CASE("butterfly automorphisms match the dihedral presentation") {
    // With centre 0 and triangles {0,1,2}, {0,3,4}: the 4-cycle r = (1 4 2 3)
    // on the wing vertices and the wing swap f = (1 3)(2 4) generate the
    // whole group, r has order 4, f order 2, and f r f = r^-1.
    Graph b = Graph::butterfly();
    Perm r = Perm::from_cycles("(1 4 2 3)", 5);
    Perm f = Perm::from_cycles("(1 3)(2 4)", 5);
    PermGroup aut = automorphism_group(b);
    CHECK(aut.contains(r));
    CHECK(aut.contains(f));
    CHECK(close_generators({r, f}, 5).elements() == aut.elements());
    CHECK(r.order() == 4);
    CHECK(f.order() == 2);
    CHECK(f.compose(r).compose(f) == r.inverse());
}
