#include <doctest.h>

#include <algorithm>
#include <set>

#include "hopfchrom/youngset.hpp"

using namespace hopfchrom;

namespace {

// Deliberately broken functor: collapses every subset to a single point, so
// the point maps are not injective.
struct BrokenYS final : YoungSet {
    std::string name() const override { return "broken"; }
    std::vector<YPoint> points(int n) const override {
        std::vector<YPoint> out;
        if (n >= 1) out.push_back({0});
        return out;
    }
    YPoint map_point(const Injection&, const YPoint& p) const override { return p; }
};

}  // namespace

TEST_CASE("builtin point counts") {
    CHECK(young_subsets(2)->points(4).size() == 6);
    CHECK(young_subsets(2)->points(1).empty());
    auto id = young_identity();
    for (int n = 0; n <= 5; ++n) CHECK(id->points(n).size() == (size_t)n);
    CHECK(young_tuples(2)->points(2).size() == 4);
    CHECK(young_tuples(2)->points(3).size() == 9);
    CHECK(young_nonempty_subsets()->points(4).size() == 15);
    CHECK(young_nontrivial_permutations()->points(3).size() == 5);
    CHECK(young_empty()->points(6).empty());
    // Combinators.
    CHECK(young_product(young_identity(), young_identity())->points(3).size() == 9);
    CHECK(young_coproduct(young_identity(), young_subsets(2))->points(3).size() == 3 + 3);
}

TEST_CASE("builtin selector strings") {
    CHECK(builtin_young_set("subsets:2")->name() == "subsets:2");
    CHECK(builtin_young_set("id")->name() == "id");
    CHECK(builtin_young_set("tuples:2")->name() == "tuples:2");
    CHECK(builtin_young_set("empty")->name() == "empty");
    CHECK(builtin_young_set("nonempty")->name() == "nonempty");
    CHECK(builtin_young_set("perms")->name() == "perms");
    CHECK_THROWS_AS(builtin_young_set("what"), parse_error);
    CHECK_THROWS_AS(builtin_young_set("subsets:x"), parse_error);
}

TEST_CASE("y_lambda") {
    auto y2 = young_subsets(2);
    // Bipartition {K, K^c} with |K| = 2 inside [5]: C(2,2) + C(3,2) = 4 points.
    CHECK(y_lambda(*y2, 5, {{0, 1}, {2, 3, 4}}).size() == 4);
    // Full block: everything.
    CHECK(y_lambda(*y2, 5, {{0, 1, 2, 3, 4}}).size() == 10);
    // Singleton blocks: no 2-subsets inside.
    CHECK(y_lambda(*y2, 5, {{0}, {1}, {2}, {3}, {4}}).empty());
    CHECK_THROWS_AS(y_lambda(*y2, 5, {{0, 1}, {1, 2}}), consistency_error);
}

TEST_CASE("axioms pass for the builtins") {
    for (const auto& y : {young_empty(), young_identity(), young_subsets(2),
                          young_nonempty_subsets(), young_tuples(2),
                          young_nontrivial_permutations()}) {
        AxiomReport r = verify_axioms(*y, 5);
        CHECK(r.all_pass());
    }
}

TEST_CASE("broken functor fails with a witness") {
    AxiomReport r = verify_axioms(BrokenYS{}, 4);
    CHECK_FALSE(r.all_pass());
    bool witnessed = false;
    for (const auto& c : r.checks)
        if (!c.pass && !c.witness.empty()) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("bijections act as bijections and transport subsets") {
    for (const auto& y : {young_identity(), young_subsets(2), young_tuples(2),
                          young_nontrivial_permutations()}) {
        for (int n = 1; n <= 4; ++n) {
            auto pts = y->points(n);
            // One representative bijection: the full cycle.
            std::vector<int> img(n);
            for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
            Injection w = Injection::from_perm(Perm(img));
            std::set<YPoint> image;
            for (const auto& p : pts) image.insert(y->map_point(w, p));
            CHECK(image.size() == pts.size());
            for (const auto& q : image)
                CHECK(std::binary_search(pts.begin(), pts.end(), q));
            // Y_(wK) = w . Y_K for a sample subset.
            std::vector<int> k{0};
            if (n >= 3) k.push_back(2);
            auto img_k = young_image(*y, k, n);
            std::vector<int> wk;
            for (int v : k) wk.push_back(img[v]);
            auto img_wk = young_image(*y, wk, n);
            std::vector<YPoint> transported;
            for (const auto& p : img_k) transported.push_back(y->map_point(w, p));
            std::sort(transported.begin(), transported.end());
            CHECK(transported == img_wk);
        }
    }
}
