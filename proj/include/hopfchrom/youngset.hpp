#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfchrom/perm.hpp"

namespace hopfchrom {

// An injective map of finite sets [n] -> [m].
struct Injection {
    int n = 0, m = 0;
    std::vector<int> img;  // img[i] in [0, m), pairwise distinct

    static Injection identity(int n);
    static Injection from_perm(const Perm& p);
    // Order-preserving enumeration of a subset of [m].
    static Injection of_subset(const std::vector<int>& subset, int m);
    // i -> i + offset into [m].
    static Injection shift(int n, int offset, int m);
    Injection compose(const Injection& inner) const;  // this . inner
};

// Opaque point encoding: a canonical small integer vector with a total order.
using YPoint = std::vector<int>;

// A Young set: a functor on finite sets with injections, with Y_empty = empty
// and Y_K intersect Y_L = Y_(K intersect L). Behavior objects are stateless.
class YoungSet {
public:
    virtual ~YoungSet() = default;
    virtual std::string name() const = 0;
    // Canonically ordered (ascending) point list of Y_[n].
    virtual std::vector<YPoint> points(int n) const = 0;
    // Functorial action on a point of Y_[w.n], landing in Y_[w.m].
    virtual YPoint map_point(const Injection& w, const YPoint& p) const = 0;
};

using YoungSetPtr = std::shared_ptr<const YoungSet>;

// Builtins: "empty", "id", "subsets:r", "nonempty", "tuples:m", "perms";
// plus product/coproduct combinators.
YoungSetPtr builtin_young_set(const std::string& selector);
YoungSetPtr young_empty();
YoungSetPtr young_identity();
YoungSetPtr young_subsets(int r);
YoungSetPtr young_nonempty_subsets();
YoungSetPtr young_tuples(int m);
YoungSetPtr young_nontrivial_permutations();
YoungSetPtr young_product(YoungSetPtr a, YoungSetPtr b);
YoungSetPtr young_coproduct(YoungSetPtr a, YoungSetPtr b);

// Image of Y_K inside points(n) for a subset K of [n], as a sorted list.
std::vector<YPoint> young_image(const YoungSet& y, const std::vector<int>& subset, int n);

// Y_lambda = disjoint union of the block images; overlap violates the
// intersection axiom and aborts.
std::vector<YPoint> y_lambda(const YoungSet& y, int n, const std::vector<std::vector<int>>& blocks);

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::string witness;  // counterexample description on failure
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Functoriality (identity, composition), emptiness, and the intersection
// axiom, exhaustively up to n_max. Failures are data, not exceptions.
AxiomReport verify_axioms(const YoungSet& y, int n_max = 6);

}  // namespace hopfchrom
