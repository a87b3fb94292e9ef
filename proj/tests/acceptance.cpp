// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Every check is exact; runtimes per criterion are printed for budgeting.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "hopfchrom/graph_alg.hpp"
#include "hopfchrom/verify.hpp"

using namespace hopfchrom;

namespace {

struct Criterion {
    int number;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

std::vector<Criterion> results;

template <typename Fn>
void run_criterion(int number, const std::string& title, Fn body) {
    Criterion c{number, title};
    auto t0 = std::chrono::steady_clock::now();
    try {
        std::string detail = body();
        c.pass = true;
        c.detail = detail;
    } catch (const std::exception& err) {
        c.pass = false;
        c.detail = err.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back(c);
    std::cout << (c.pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << title
              << "  [" << c.detail << "]  (" << c.seconds << " s)\n"
              << std::flush;
}

void require(bool cond, const std::string& what) {
    if (!cond) throw consistency_error(what);
}

SymFunc m(const IntPartition& p, long long c = 1) { return SymFunc::monomial(p, c); }

const GraphAlgebra& alg() {
    static GraphAlgebra a;
    return a;
}

void check_suite(const SuiteReport& report) {
    for (const auto& c : report.checks)
        require(c.pass, report.suite + ": " + c.name + " -- " + c.detail);
}

}  // namespace

int main() {
    // 1. Butterfly exact reproduction.
    run_criterion(1, "butterfly character table and refined symmetric functions", [] {
        Graph b = Graph::butterfly();
        int id = alg().key_of(b);
        const CharacterTable& t = alg().table_of(id);
        require(t.count() == 5, "table must have five rows");
        require(t.degrees == std::vector<long long>{1, 1, 1, 1, 2}, "degrees 1,1,1,1,2");

        // Identify the D_4 classes by invariants (order, size, fixed points)
        // and compare every row with the displayed table.
        const auto* pg = dynamic_cast<const PermGroup*>(alg().aut_of(id)->group.get());
        const auto& cls = alg().aut_of(id)->classes;
        int pos_id = -1, pos_r = -1, pos_r2 = -1, pos_f = -1, pos_rf = -1;
        for (int c = 0; c < 5; ++c) {
            const Perm& rep = pg->element(cls.reps[c]);
            int fixed = 0;
            for (int v = 0; v < 5; ++v)
                if (rep(v) == v) ++fixed;
            if (cls.rep_order[c] == 1) pos_id = c;
            else if (cls.rep_order[c] == 4) pos_r = c;
            else if (cls.sizes[c] == 1) pos_r2 = c;
            else if (fixed == 3) pos_rf = c;
            else pos_f = c;
        }
        require(pos_id >= 0 && pos_r >= 0 && pos_r2 >= 0 && pos_f >= 0 && pos_rf >= 0,
                "five D_4 class types identified");
        std::vector<std::array<long long, 5>> expected = {
            {1, 1, 1, 1, 1}, {1, -1, 1, -1, 1}, {1, -1, 1, 1, -1},
            {1, 1, 1, -1, -1}, {2, 0, -2, 0, 0}};
        std::vector<bool> used(5, false);
        for (const auto& row : expected) {
            bool found = false;
            for (int r = 0; r < 5 && !found; ++r) {
                if (used[r]) continue;
                if (t.rows[r].values[pos_id].as_integer() == row[0] &&
                    t.rows[r].values[pos_r].as_integer() == row[1] &&
                    t.rows[r].values[pos_r2].as_integer() == row[2] &&
                    t.rows[r].values[pos_f].as_integer() == row[3] &&
                    t.rows[r].values[pos_rf].as_integer() == row[4]) {
                    used[r] = found = true;
                }
            }
            require(found, "a displayed D_4 row is missing from the computed table");
        }

        SymFunc low = m({2, 1, 1, 1}, 3) + m({1, 1, 1, 1, 1}, 15);
        SymFunc with221 = m({2, 2, 1}) + low;
        SymFunc rho = m({2, 2, 1}) + m({2, 1, 1, 1}, 6) + m({1, 1, 1, 1, 1}, 30);
        int n_with = 0, n_low = 0;
        for (XMethod method : {XMethod::wreath, XMethod::direct}) {
            auto xs = alg().X_gamma_all(b, method);
            for (int r = 0; r < 5; ++r) {
                if (t.degrees[r] == 2) require(xs[r] == rho, "X_(Gamma,rho) mismatch");
                else if (xs[r] == with221) ++n_with;
                else require(xs[r] == low, "degree-1 row is neither displayed value");
            }
        }
        n_low = 8 - n_with;
        require(n_with == 4 && n_low == 4, "triv/chi_2 and chi_1/chi_3 pairing (both methods)");
        require(alg().X_gamma(b, 0, XMethod::wreath) == with221, "X_(Gamma,triv)");
        require(alg().X_chromatic(b) ==
                    m({2, 2, 1}, 4) + m({2, 1, 1, 1}, 24) + m({1, 1, 1, 1, 1}, 120),
                "Stanley X_Gamma");
        return std::string("table + 5 displayed identities, both methods");
    });

    // 2. Intro counts.
    run_criterion(2, "orbital values 3 and 6 at m = 3; equal chromatic polynomials", [] {
        Graph b = Graph::butterfly(), lam = Graph::kite_with_pendant();
        require(alg().orbital_chromatic(b).eval_integer(3) == 3, "butterfly orbital at 3");
        require(alg().orbital_chromatic(lam).eval_integer(3) == 6, "kite+pendant orbital at 3");
        require(alg().chromatic_polynomial(b) == alg().chromatic_polynomial(lam),
                "chi_Gamma == chi_Lambda");
        return std::string("3 and 6; chi polynomials equal");
    });

    // 3. Decomposition identity sweep.
    run_criterion(3, "X_Gamma = sum of deg(gamma) X_(Gamma,gamma), all graphs on <= 6 vertices",
                  [] {
        long long graphs = 0;
        for (int n = 0; n <= 6; ++n)
            for (const Graph& g : all_graphs_up_to_iso(n)) {
                const CharacterTable& t = alg().table_of(alg().key_of(g));
                auto xs = alg().X_gamma_all(g, XMethod::direct);
                SymFunc total;
                for (int r = 0; r < t.count(); ++r) total += xs[r].scaled(t.degrees[r]);
                require(total == alg().X_chromatic(g), "decomposition fails on " + g.str());
                ++graphs;
            }
        return std::to_string(graphs) + " isomorphism classes";
    });

    // 4. Schur correspondence on edgeless graphs.
    run_criterion(4, "X_(Kbar_n, gamma_lambda) = s_lambda for all lambda |- n <= 5", [] {
        long long checked = 0;
        for (int n = 0; n <= 5; ++n) {
            int id = alg().key_of(Graph::empty_graph(n));
            GroupRef sn = alg().aut_of(id);
            const CharacterTable& t = alg().table_of(id);
            auto xs = alg().X_gamma_all(Graph::empty_graph(n), XMethod::wreath);
            for (const auto& [lambda, row] : symmetric_group_partition_rows(sn, t)) {
                require(xs[row] == schur(lambda), "Schur mismatch at n=" + std::to_string(n));
                ++checked;
            }
        }
        return std::to_string(checked) + " partitions, SSYT-enumerated Schur oracle";
    });

    // 5. Complete graphs.
    run_criterion(5, "X_(K_n) = n! m_(1^n) and X_(K_n,gamma) = deg(gamma) m_(1^n), n <= 5", [] {
        for (int n = 1; n <= 5; ++n) {
            long long fact = 1;
            for (int i = 2; i <= n; ++i) fact *= i;
            IntPartition ones(n, 1);
            require(alg().X_chromatic(Graph::complete(n)) == m(ones, fact), "X_(K_n)");
            const CharacterTable& t = alg().table_of(alg().key_of(Graph::complete(n)));
            auto xs = alg().X_gamma_all(Graph::complete(n), XMethod::direct);
            for (int r = 0; r < t.count(); ++r)
                require(xs[r] == m(ones, t.degrees[r]), "X_(K_n, gamma)");
        }
        return std::string("n = 1..5, all irreps");
    });

    // 6. Hopf axiom suite.
    run_criterion(6, "Hopf axioms on the graph instance (exhaustive <= 4 plus degree-5 samples)",
                  [] {
        SuiteReport r = suite_hopf(alg(), 4, 50);
        check_suite(r);
        return std::to_string(r.checks.size()) + " axiom families";
    });

    // 7. PSH self-adjointness.
    run_criterion(7, "<ab, c> = <a (x) b, delta c> for all basis triples with deg c <= 4", [] {
        SuiteReport r = suite_psh(alg(), 4);
        check_suite(r);
        return r.checks[0].name;
    });

    // 8. Psi homomorphism and zeta specialization.
    run_criterion(8, "Psi(ab) = Psi(a)Psi(b) on 50 pairs; zeta = Psi(.)(1,0,...) at deg <= 4",
                  [] {
        SuiteReport r = suite_psi(alg(), 50, 4);
        check_suite(r);
        return std::to_string(r.checks.size()) + " checks";
    });

    // 9. Clifford oracle.
    run_criterion(9, "Clifford oracle: bijections, products, both coproducts (pinned instances)",
                  [] {
        SuiteReport r = suite_clifford();
        long long adjoint = 0, others = 0;
        for (const auto& c : r.checks) {
            require(c.pass, "clifford: " + c.name + " -- " + c.detail);
            (c.name.find("adjointness") != std::string::npos ? adjoint : others) += 1;
        }
        return std::to_string(others) + " structural checks";
    });

    // 10. pind/pres adjointness (part of the pinned-instance runs, split out
    // so the criterion reports independently).
    run_criterion(10, "pind/pres two-sided adjointness; pres = res for Y = id", [] {
        OracleContext graphs(young_subsets(2), AbelianGroup::cyclic(2), 3);
        OracleContext idz2(young_identity(), AbelianGroup::cyclic(2), 3);
        OracleContext idz3(young_identity(), AbelianGroup::cyclic(3), 2);
        OracleContext empt(young_empty(), AbelianGroup::cyclic(2), 4);
        long long checks = 0;
        for (const OracleContext* ctx : {&graphs, &idz2, &idz3, &empt})
            for (int n = 0; n <= ctx->n_max(); ++n)
                for (const auto& c : verify_pind_pres(*ctx, n)) {
                    require(c.pass, c.name + " -- " + c.detail);
                    ++checks;
                }
        return std::to_string(checks) + " split/instance combinations";
    });

    // 11. Free-action equivalence.
    run_criterion(11, "free-action conditions (a)-(e) agree on every graph with <= 5 vertices",
                  [] {
        long long graphs = 0;
        for (int n = 0; n <= 5; ++n)
            for (const Graph& g : all_graphs_up_to_iso(n)) {
                FreeActionReport r = alg().free_action_report(g);  // consistency asserted inside
                require(r.consistent(), "conditions disagree on " + g.str());
                ++graphs;
            }
        require(alg().free_action_report(Graph::complete(4)).action_free, "K_n must be free");
        require(alg().free_action_report(Graph::complete(5)).action_free, "K_n must be free");
        require(!alg().free_action_report(Graph::butterfly()).action_free,
                "butterfly must not be free");
        return std::to_string(graphs) + " graphs, five conditions each";
    });

    // 12. Burnside consistency.
    run_criterion(12, "X_(Gamma,triv)(1^m) equals the direct orbit count, m <= 4, n <= 6", [] {
        long long checked = 0;
        for (int n = 0; n <= 6; ++n)
            for (const Graph& g : all_graphs_up_to_iso(n)) {
                SymFunc xt = alg().X_gamma(g, 0, XMethod::direct);
                for (int mm = 0; mm <= 4; ++mm) {
                    require(specialize_ones(xt, mm) == alg().orbit_count_direct(g, mm),
                            "Burnside mismatch on " + g.str());
                    ++checked;
                }
            }
        return std::to_string(checked) + " (graph, m) pairs";
    });

    // 13. Young-set axioms.
    run_criterion(13, "young-set functoriality, emptiness, intersection axioms (n <= 6)", [] {
        SuiteReport r = suite_youngsets(6);
        check_suite(r);
        return std::to_string(r.checks.size()) + " axiom checks";
    });

    int failed = 0;
    double total = 0;
    for (const auto& c : results) {
        if (!c.pass) ++failed;
        total += c.seconds;
    }
    std::cout << "----\n"
              << (failed == 0 ? "ALL 13 CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAIL")
              << " (total " << total << " s)\n";
    return failed == 0 ? 0 : 1;
}
