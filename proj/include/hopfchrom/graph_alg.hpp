#pragma once

#include "hopfchrom/graph.hpp"
#include "hopfchrom/wreath_hopf.hpp"

namespace hopfchrom {

// All isomorphism-class representatives (canonical forms) on exactly n
// vertices, sorted; brute-force over edge masks, fine at sweep scale.
std::vector<Graph> all_graphs_up_to_iso(int n);

// Proper colourings with prescribed colour-class sizes.
struct ColouringSet {
    Graph graph;
    IntComposition alpha;
    std::vector<std::vector<int>> colourings;  // vertex -> colour in 1..len(alpha)
};

ColouringSet enumerate_colourings(const Graph& g, const IntComposition& alpha,
                                  int vertex_cap = 0);

enum class XMethod { wreath, direct };

struct FreeActionReport {
    bool action_free = false;        // (a) no proper colouring has nontrivial isotropy
    bool stanley_multiple = false;   // (b) X = |Aut| X_triv
    bool chromatic_multiple = false; // (c) chi = |Aut| chi_triv
    bool all_sym_multiples = false;  // (d) X_gamma = dim(gamma) X_triv for all gamma
    bool all_poly_multiples = false; // (e) chi_gamma = dim(gamma) chi_triv for all gamma
    bool consistent() const {
        return action_free == stanley_multiple && action_free == chromatic_multiple &&
               action_free == all_sym_multiples && action_free == all_poly_multiples;
    }
};

// The graph instance A = M_(subsets:2, Z2) with graph-native keys. One shared
// instance per algebra object; canonical graphs and canonical functions are
// cross-checked against each other on every interning.
class GraphAlgebra {
public:
    explicit GraphAlgebra(Caps caps = global_caps());

    const HopfInstance& instance() const { return inst_; }
    const Caps& caps() const { return caps_; }

    // Interns the isomorphism class; id doubles as the wreath-side f_id.
    int key_of(const Graph& g) const;
    const Graph& graph_of(int id) const;
    const GroupRef& aut_of(int id) const { return inst_.aut_of(id); }
    const CharacterTable& table_of(int id) const { return inst_.table_of(id); }

    SymFunc X_gamma(const Graph& g, int irrep, XMethod method = XMethod::wreath) const;
    // All irreps in one pass over the colouring/composition enumeration.
    std::vector<SymFunc> X_gamma_all(const Graph& g, XMethod method = XMethod::wreath) const;
    SymFunc X_chromatic(const Graph& g) const;
    IntPolynomial chi_poly(const Graph& g, int irrep, XMethod method = XMethod::wreath) const;
    IntPolynomial orbital_chromatic(const Graph& g) const;
    IntPolynomial chromatic_polynomial(const Graph& g) const;

    // Orbit count of Aut(g) on proper m-colourings by direct Burnside count.
    long long orbit_count_direct(const Graph& g, int m) const;

    FreeActionReport free_action_report(const Graph& g) const;

    // Hopf structure through the wreath instance.
    HopfElement element(const Graph& g, int irrep, long long coeff = 1) const;
    HopfElement product(const HopfElement& a, const HopfElement& b) const;
    TensorElement Delta(const HopfElement& a) const;
    TensorElement delta_small(const HopfElement& a) const;
    long long zeta(const HopfElement& a) const;
    HopfElement reg_embed_graph(const Graph& g) const;  // [Gamma] -> reg_(Aut Gamma)

private:
    SymFunc X_gamma_direct(int id, int irrep) const;

    Caps caps_;
    HopfInstance inst_;
    mutable std::mutex graph_mu_;
    mutable std::map<int, Graph> graphs_;
};

}  // namespace hopfchrom
