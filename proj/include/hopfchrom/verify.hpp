#pragma once

#include <string>
#include <vector>

#include "hopfchrom/graph_alg.hpp"
#include "hopfchrom/oracle.hpp"

namespace hopfchrom {

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<VerifyCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Young-set axioms for every builtin, n <= n_max.
SuiteReport suite_youngsets(int n_max = 6);

// Hopf axioms on the graph instance: associativity, commutativity,
// coassociativity of Delta and delta, counit laws, cocommutativity of Delta,
// and Delta(ab) = Delta(a)Delta(b); exhaustive at total degree <= exhaustive
// plus `random_pairs` pseudorandom pairs at total degree exhaustive+1.
SuiteReport suite_hopf(const GraphAlgebra& alg, int exhaustive = 4, int random_pairs = 50);

// PSH self-adjointness <ab, c> = <a (x) b, delta c> for all basis triples
// with deg c <= max_degree.
SuiteReport suite_psh(const GraphAlgebra& alg, int max_degree = 4);

// Psi is an algebra morphism; zeta is its (1,0,0,...) specialization.
SuiteReport suite_psi(const GraphAlgebra& alg, int sampled_pairs = 50, int zeta_degree = 4);

// Clifford oracle on the pinned instances: bijection, product and coproduct
// compatibility, pind/pres adjointness.
SuiteReport suite_clifford();

// All of the above in order.
std::vector<SuiteReport> run_suites(const std::string& which, const GraphAlgebra& alg);

}  // namespace hopfchrom
