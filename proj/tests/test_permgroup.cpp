#include <doctest.h>

#include <algorithm>
#include <random>

#include "hopfchrom/graph.hpp"
#include "hopfchrom/permgroup.hpp"

using namespace hopfchrom;

TEST_CASE("perm basics") {
    Perm p = Perm::from_cycles("(0 1 2)", 4);
    CHECK(p(0) == 1);
    CHECK(p(3) == 3);
    CHECK(p.order() == 3);
    CHECK(p.compose(p.inverse()).is_identity());
    CHECK(Perm::from_cycles("()").degree() == 0);
    CHECK(p.cycle_str() == "(0 1 2)");
    CHECK_THROWS_AS(Perm({0, 0, 1}), consistency_error);
}

TEST_CASE("close_generators") {
    CHECK(close_generators({Perm::from_cycles("(0 1)", 2)}, 2).order() == 2);
    CHECK(close_generators({}, 3).order() == 1);
    // 4-cycle plus a reflection generate the dihedral group of order 8.
    PermGroup d4 = close_generators(
        {Perm::from_cycles("(0 1 2 3)", 4), Perm::from_cycles("(0 2)", 4)}, 4);
    CHECK(d4.order() == 8);
    // The square of the 4-cycle is (0 2)(1 3), so that pair only gives C_4.
    PermGroup c4 = close_generators(
        {Perm::from_cycles("(0 1 2 3)", 4), Perm::from_cycles("(0 2)(1 3)", 4)}, 4);
    CHECK(c4.order() == 4);
    CHECK_THROWS_AS(close_generators({Perm::from_cycles("(0 1)", 5),
                                      Perm::from_cycles("(0 1 2 3 4)", 5)}, 5, 100),
                    resource_error);
}

TEST_CASE("set_stabilizer") {
    PermGroup s3 = PermGroup::symmetric(3);
    CHECK(set_stabilizer(s3, {0}).order() == 2);
    CHECK(set_stabilizer(s3, {}).order() == 6);
    // The butterfly centre is fixed by the whole automorphism group.
    Graph b = Graph::butterfly();
    PermGroup aut = automorphism_group(b);
    CHECK(set_stabilizer(aut, {0}).order() == aut.order());
}

TEST_CASE("orbits on subsets and colourings") {
    PermGroup s2 = PermGroup::symmetric(2);
    std::vector<std::vector<int>> subsets = {{}, {0}, {1}, {0, 1}};
    auto act = [](const Perm& p, const std::vector<int>& s) {
        std::vector<int> out;
        for (int v : s) out.push_back(p(v));
        std::sort(out.begin(), out.end());
        return out;
    };
    auto dec = orbit_decomposition(s2, subsets, act);
    CHECK(dec.orbits.size() == 3);

    // Trivial group: every point is its own orbit.
    PermGroup triv = PermGroup::trivial(2);
    auto dec2 = orbit_decomposition(triv, subsets, act);
    CHECK(dec2.orbits.size() == 4);

    // Aut(butterfly) has 3 orbits on the 12 proper 3-colourings.
    Graph b = Graph::butterfly();
    PermGroup aut = automorphism_group(b);
    std::vector<std::vector<int>> cols;
    std::vector<int> kappa(5, 0);
    for (int mask = 0; mask < 243; ++mask) {
        int m = mask;
        for (int v = 0; v < 5; ++v) { kappa[v] = m % 3; m /= 3; }
        bool proper = true;
        for (auto [i, j] : b.edges())
            if (kappa[i] == kappa[j]) proper = false;
        if (proper) cols.push_back(kappa);
    }
    CHECK(cols.size() == 12);
    auto cact = [](const Perm& p, const std::vector<int>& k) {
        std::vector<int> out(k.size());
        for (size_t v = 0; v < k.size(); ++v) out[p((int)v)] = k[v];
        return out;
    };
    auto cdec = orbit_decomposition(aut, cols, cact);
    CHECK(cdec.orbits.size() == 3);

    // Orbit-stabilizer on every representative.
    for (size_t o = 0; o < cdec.orbits.size(); ++o)
        CHECK((long long)cdec.orbits[o].size() * (long long)cdec.isotropy[o].size() ==
              aut.order());
}

TEST_CASE("orbit decomposition rejects non-closed actions") {
    PermGroup s2 = PermGroup::symmetric(2);
    std::vector<std::vector<int>> pts = {{0}};
    auto act = [](const Perm& p, const std::vector<int>& s) {
        return std::vector<int>{p(s[0])};
    };
    CHECK_THROWS_AS(orbit_decomposition(s2, pts, act), consistency_error);
}

TEST_CASE("conjugacy classes") {
    // D_4 (butterfly automorphisms) has five classes.
    GroupRef d4 = make_group_data(
        std::make_shared<PermGroup>(automorphism_group(Graph::butterfly())));
    CHECK(d4->classes.count() == 5);

    GroupRef triv = make_group_data(std::make_shared<PermGroup>(PermGroup::trivial(3)));
    CHECK(triv->classes.count() == 1);

    // S_3 classes in canonical order: sizes 1, 3, 2.
    GroupRef s3 = make_group_data(std::make_shared<PermGroup>(PermGroup::symmetric(3)));
    CHECK(s3->classes.sizes == std::vector<long long>{1, 3, 2});
    CHECK(s3->classes.rep_order == std::vector<int>{1, 2, 3});
    long long total = 0;
    for (auto s : s3->classes.sizes) total += s;
    CHECK(total == 6);

    // Determinism: shuffling the element list before construction changes nothing.
    auto elems = PermGroup::symmetric(4).elements();
    std::mt19937_64 rng(7);
    std::shuffle(elems.begin(), elems.end(), rng);
    GroupRef s4a = make_group_data(std::make_shared<PermGroup>(
        PermGroup::from_elements(4, elems)));
    GroupRef s4b = make_group_data(std::make_shared<PermGroup>(PermGroup::symmetric(4)));
    CHECK(s4a->classes.reps == s4b->classes.reps);
    CHECK(s4a->classes.sizes == s4b->classes.sizes);
}

TEST_CASE("young embedding") {
    CHECK(young_embedding(1, 1).image().order() == 1);
    CHECK(young_embedding(2, 1).image().order() == 2);
    PermGroup img = young_embedding(2, 2).image();
    CHECK(img.order() == 4);
    PermGroup stab = set_stabilizer(PermGroup::symmetric(4), {0, 1});
    CHECK(img.elements() == stab.elements());
    // Embedded elements land inside the image subgroup.
    Perm e = young_embedding(2, 2).embed(Perm::from_cycles("(0 1)", 2), Perm::identity(2));
    CHECK(img.contains(e));
    CHECK(e.cycle_str() == "(0 1)");
}

TEST_CASE("finite group validation") {
    // Z/3 as a table.
    std::vector<std::int32_t> z3{0, 1, 2, 1, 2, 0, 2, 0, 1};
    FiniteGroup g(3, z3);
    CHECK(g.id() == 0);
    CHECK(g.inv(1) == 2);
    CHECK(g.element_order(1) == 3);
    // A table without identity fails.
    std::vector<std::int32_t> bad{1, 1, 1, 1};
    CHECK_THROWS_AS(FiniteGroup(2, bad), consistency_error);
    // Table with identity 1: still a valid group (relabelled Z/2).
    FiniteGroup relabelled(2, {1, 0, 0, 1});
    CHECK(relabelled.id() == 1);
    // A non-associative magma fails.
    std::vector<std::int32_t> nonassoc{0, 1, 2, 1, 0, 0, 2, 0, 0};
    CHECK_THROWS_AS(FiniteGroup(3, nonassoc), consistency_error);
}
