#pragma once

#include <functional>
#include <map>
#include <vector>

#include "hopfchrom/group.hpp"
#include "hopfchrom/perm.hpp"

namespace hopfchrom {

// A fully enumerated permutation group. Elements are kept sorted by image
// array (the identity is lexicographically minimal, so it sits at index 0).
// No stabilizer chains: at desk scale the flat list makes character-table and
// induction sums direct loops over elements.
class PermGroup final : public Group {
public:
    // `elements` must already be closed under composition and inverse.
    static PermGroup from_elements(int degree, std::vector<Perm> elements);
    static PermGroup trivial(int degree);
    static PermGroup symmetric(int degree, long long order_cap = 1000000);

    long long order() const override { return (long long)elems_.size(); }
    int mul(int a, int b) const override { return index_of_checked(elems_[a].compose(elems_[b])); }
    int inv(int a) const override { return index_of_checked(elems_[a].inverse()); }
    int id() const override { return 0; }

    int degree() const { return degree_; }
    const Perm& element(int i) const { return elems_[i]; }
    const std::vector<Perm>& elements() const { return elems_; }
    int index_of(const Perm& p) const;  // -1 if absent
    bool contains(const Perm& p) const { return index_of(p) >= 0; }

private:
    int index_of_checked(const Perm& p) const;

    int degree_ = 0;
    std::vector<Perm> elems_;
};

// Orbit closure of a generating set; errors when the closure exceeds the cap.
PermGroup close_generators(const std::vector<Perm>& gens, int degree,
                           long long order_cap = 1000000);

// Subgroup of elements mapping U onto U.
PermGroup set_stabilizer(const PermGroup& g, const std::vector<int>& u);

// A small (greedy, not necessarily minimum) generating set.
std::vector<Perm> small_generating_set(const PermGroup& g);

// Generic orbit decomposition for an action on an explicit point list. The
// callback must restrict to a closed action on `points` (checked eagerly).
// Representatives are the minimal points in list order.
template <typename P>
struct OrbitDecomposition {
    std::vector<std::vector<int>> orbits;   // point positions, sorted
    std::vector<int> representative;        // position of minimal point per orbit
    std::vector<std::vector<int>> isotropy; // group element indices fixing the rep
    std::vector<int> orbit_of;              // point position -> orbit index
};

template <typename P, typename ActFn>
OrbitDecomposition<P> orbit_decomposition(const PermGroup& g, const std::vector<P>& points,
                                          ActFn act) {
    std::map<P, int> pos;
    for (size_t i = 0; i < points.size(); ++i) {
        if (!pos.emplace(points[i], (int)i).second)
            throw consistency_error("orbit decomposition: duplicate point in list");
    }
    OrbitDecomposition<P> out;
    out.orbit_of.assign(points.size(), -1);
    std::vector<std::vector<int>> images(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        images[i].resize(g.order());
        for (int e = 0; e < g.order(); ++e) {
            P q = act(g.element(e), points[i]);
            auto it = pos.find(q);
            if (it == pos.end())
                throw consistency_error("orbit decomposition: action leaves the point list");
            images[i][e] = it->second;
        }
    }
    for (size_t i = 0; i < points.size(); ++i) {
        if (out.orbit_of[i] >= 0) continue;
        int oi = (int)out.orbits.size();
        std::vector<int> orbit;
        std::vector<int> iso;
        for (int e = 0; e < g.order(); ++e) {
            int j = images[i][e];
            if (out.orbit_of[j] < 0) {
                out.orbit_of[j] = oi;
                orbit.push_back(j);
            }
            if (j == (int)i) iso.push_back(e);
        }
        std::sort(orbit.begin(), orbit.end());
        out.orbits.push_back(std::move(orbit));
        out.representative.push_back((int)i);
        out.isotropy.push_back(std::move(iso));
    }
    return out;
}

// The standard inclusion S_k x S_l -> S_(k+l); image is the setwise
// stabilizer of the block {0..k-1} intersected with blockwise permutations.
struct YoungEmbedding {
    int k = 0, l = 0;
    Perm embed(const Perm& a, const Perm& b) const { return Perm::block(a, b); }
    PermGroup image(long long order_cap = 1000000) const;
};

inline YoungEmbedding young_embedding(int k, int l) { return YoungEmbedding{k, l}; }

}  // namespace hopfchrom
