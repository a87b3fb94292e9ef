#include "hopfchrom/verify.hpp"

#include <algorithm>
#include <random>

namespace hopfchrom {

namespace {

VerifyCheck make_check(const std::string& name, bool pass, const std::string& detail) {
    return VerifyCheck{name, pass, detail};
}

using Triple = std::tuple<MBasisKey, MBasisKey, MBasisKey>;
using TripleTensor = std::map<Triple, long long>;

TripleTensor delta_left(const HopfInstance& inst, const TensorElement& t, bool small_delta) {
    TripleTensor out;
    for (const auto& [pair, c] : t) {
        TensorElement inner = small_delta ? coproduct_delta(inst, {{pair.first, 1}})
                                          : coproduct_Delta(inst, {{pair.first, 1}});
        for (const auto& [kk, cc] : inner) {
            out[{kk.first, kk.second, pair.second}] += c * cc;
            if (out[{kk.first, kk.second, pair.second}] == 0)
                out.erase({kk.first, kk.second, pair.second});
        }
    }
    return out;
}

TripleTensor delta_right(const HopfInstance& inst, const TensorElement& t, bool small_delta) {
    TripleTensor out;
    for (const auto& [pair, c] : t) {
        TensorElement inner = small_delta ? coproduct_delta(inst, {{pair.second, 1}})
                                          : coproduct_Delta(inst, {{pair.second, 1}});
        for (const auto& [kk, cc] : inner) {
            out[{pair.first, kk.first, kk.second}] += c * cc;
            if (out[{pair.first, kk.first, kk.second}] == 0)
                out.erase({pair.first, kk.first, kk.second});
        }
    }
    return out;
}

// Collect basis keys of the graph instance by degree, once.
std::vector<std::vector<MBasisKey>> keys_by_degree(const GraphAlgebra& alg, int max_degree) {
    std::vector<std::vector<MBasisKey>> keys(max_degree + 1);
    for (int d = 0; d <= max_degree; ++d) keys[d] = alg.instance().all_basis_keys(d);
    return keys;
}

}  // namespace

SuiteReport suite_youngsets(int n_max) {
    SuiteReport report;
    report.suite = "youngsets";
    std::vector<YoungSetPtr> builtins = {
        young_empty(),       young_identity(),     young_subsets(2),
        young_subsets(3),    young_nonempty_subsets(), young_tuples(2),
        young_nontrivial_permutations(),
        young_product(young_identity(), young_subsets(2)),
        young_coproduct(young_identity(), young_subsets(2)),
    };
    for (const auto& y : builtins) {
        AxiomReport ar = verify_axioms(*y, n_max);
        for (const auto& c : ar.checks)
            report.checks.push_back(make_check(y->name() + ": " + c.axiom, c.pass, c.witness));
    }
    return report;
}

SuiteReport suite_hopf(const GraphAlgebra& alg, int exhaustive, int random_pairs) {
    SuiteReport report;
    report.suite = "hopf";
    const HopfInstance& inst = alg.instance();
    auto keys = keys_by_degree(alg, exhaustive + 1);

    // Pairs with total degree <= exhaustive, plus sampled pairs one degree up.
    std::vector<std::pair<MBasisKey, MBasisKey>> pairs;
    for (int da = 0; da <= exhaustive; ++da)
        for (int db = 0; da + db <= exhaustive; ++db)
            for (const auto& a : keys[da])
                for (const auto& b : keys[db]) pairs.emplace_back(a, b);
    std::mt19937_64 rng(0xc0ffeeULL);
    std::vector<std::pair<MBasisKey, MBasisKey>> extra;
    {
        std::vector<std::pair<MBasisKey, MBasisKey>> pool;
        for (int da = 0; da <= exhaustive + 1; ++da) {
            int db = exhaustive + 1 - da;
            if (db < 0 || db > exhaustive + 1) continue;
            for (const auto& a : keys[da])
                for (const auto& b : keys[db]) pool.emplace_back(a, b);
        }
        std::shuffle(pool.begin(), pool.end(), rng);
        for (int i = 0; i < random_pairs && i < (int)pool.size(); ++i) extra.push_back(pool[i]);
    }

    bool comm_ok = true, compat_ok = true;
    std::string comm_detail, compat_detail;
    auto test_pair = [&](const MBasisKey& a, const MBasisKey& b) {
        HopfElement ab = hopf_product(inst, {{a, 1}}, {{b, 1}});
        HopfElement ba = hopf_product(inst, {{b, 1}}, {{a, 1}});
        if (!(ab == ba)) {
            comm_ok = false;
            comm_detail = key_str(inst, a) + " vs " + key_str(inst, b);
        }
        TensorElement lhs = coproduct_Delta(inst, ab);
        TensorElement rhs = tensor_product_elements(inst, coproduct_Delta(inst, {{a, 1}}),
                                                    coproduct_Delta(inst, {{b, 1}}));
        if (!(lhs == rhs)) {
            compat_ok = false;
            compat_detail = key_str(inst, a) + " * " + key_str(inst, b);
        }
    };
    for (const auto& [a, b] : pairs) test_pair(a, b);
    for (const auto& [a, b] : extra) test_pair(a, b);
    report.checks.push_back(make_check(
        "commutativity (" + std::to_string(pairs.size() + extra.size()) + " pairs)", comm_ok,
        comm_detail));
    report.checks.push_back(make_check(
        "Delta(ab) = Delta(a)Delta(b) (" + std::to_string(pairs.size() + extra.size()) +
            " pairs)",
        compat_ok, compat_detail));

    // Associativity over triples.
    bool assoc_ok = true;
    std::string assoc_detail;
    long long assoc_count = 0;
    for (int da = 0; da <= exhaustive; ++da)
        for (int db = 0; da + db <= exhaustive; ++db)
            for (int dc = 0; da + db + dc <= exhaustive; ++dc)
                for (const auto& a : keys[da])
                    for (const auto& b : keys[db])
                        for (const auto& c : keys[dc]) {
                            HopfElement lhs = hopf_product(
                                inst, hopf_product(inst, {{a, 1}}, {{b, 1}}), {{c, 1}});
                            HopfElement rhs = hopf_product(
                                inst, {{a, 1}}, hopf_product(inst, {{b, 1}}, {{c, 1}}));
                            ++assoc_count;
                            if (!(lhs == rhs)) {
                                assoc_ok = false;
                                assoc_detail = key_str(inst, a) + ", " + key_str(inst, b) +
                                               ", " + key_str(inst, c);
                            }
                        }
    report.checks.push_back(make_check(
        "associativity (" + std::to_string(assoc_count) + " triples)", assoc_ok, assoc_detail));

    // Per-key coproduct laws, both coproducts.
    bool coassoc_ok = true, counit_ok = true, cocomm_ok = true, grading_ok = true;
    std::string coassoc_detail, counit_detail, cocomm_detail, grading_detail;
    MBasisKey unit = unit_key(inst);
    for (int d = 0; d <= exhaustive; ++d)
        for (const auto& k : keys[d]) {
            for (bool small_delta : {false, true}) {
                TensorElement cop = small_delta ? coproduct_delta(inst, {{k, 1}})
                                                : coproduct_Delta(inst, {{k, 1}});
                if (!(delta_left(inst, cop, small_delta) ==
                      delta_right(inst, cop, small_delta))) {
                    coassoc_ok = false;
                    coassoc_detail = (small_delta ? "delta at " : "Delta at ") + key_str(inst, k);
                }
                HopfElement left, right;
                for (const auto& [pair, c] : cop) {
                    if (pair.first == unit) left[pair.second] += c;
                    if (pair.second == unit) right[pair.first] += c;
                }
                std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
                std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
                HopfElement self{{k, 1}};
                if (!(left == self) || !(right == self)) {
                    counit_ok = false;
                    counit_detail = (small_delta ? "delta at " : "Delta at ") + key_str(inst, k);
                }
                for (const auto& [pair, c] : cop) {
                    int dl = inst.function_of(pair.first.f_id).n;
                    int dr = inst.function_of(pair.second.f_id).n;
                    if (dl + dr != d) {
                        grading_ok = false;
                        grading_detail = key_str(inst, k);
                    }
                    (void)c;
                }
            }
            TensorElement cop = coproduct_Delta(inst, {{k, 1}});
            if (!(flip(cop) == cop)) {
                cocomm_ok = false;
                cocomm_detail = key_str(inst, k);
            }
        }
    report.checks.push_back(make_check("coassociativity (Delta and delta)", coassoc_ok,
                                       coassoc_detail));
    report.checks.push_back(make_check("counit laws (both sides, both coproducts)", counit_ok,
                                       counit_detail));
    report.checks.push_back(make_check("cocommutativity of Delta", cocomm_ok, cocomm_detail));
    report.checks.push_back(make_check("coproducts split the grading", grading_ok,
                                       grading_detail));

    // Orbit-representative independence of the coproducts (the formula picks
    // representatives; the result must not depend on the choice).
    bool rep_ok = true;
    std::string rep_detail;
    for (int d = 0; d <= std::min(exhaustive, 4); ++d)
        for (const auto& k : keys[d]) {
            if (!(coproduct_Delta(inst, {{k, 1}}) == coproduct_Delta(inst, {{k, 1}}, true)) ||
                !(coproduct_delta(inst, {{k, 1}}) == coproduct_delta(inst, {{k, 1}}, true))) {
                rep_ok = false;
                rep_detail = key_str(inst, k);
            }
        }
    report.checks.push_back(
        make_check("coproduct independence of orbit representatives", rep_ok, rep_detail));
    return report;
}

SuiteReport suite_psh(const GraphAlgebra& alg, int max_degree) {
    SuiteReport report;
    report.suite = "psh";
    const HopfInstance& inst = alg.instance();
    auto keys = keys_by_degree(alg, max_degree);

    bool ok = true;
    std::string detail;
    long long count = 0;
    for (int s = 0; s <= max_degree; ++s) {
        std::map<MBasisKey, TensorElement> deltas;
        for (const auto& c : keys[s]) deltas.emplace(c, coproduct_delta(inst, {{c, 1}}));
        for (int da = 0; da <= s; ++da) {
            int db = s - da;
            for (const auto& a : keys[da])
                for (const auto& b : keys[db]) {
                    HopfElement prod = hopf_product(inst, {{a, 1}}, {{b, 1}});
                    for (const auto& c : keys[s]) {
                        long long lhs = 0;
                        auto it = prod.find(c);
                        if (it != prod.end()) lhs = it->second;
                        long long rhs = 0;
                        auto jt = deltas[c].find({a, b});
                        if (jt != deltas[c].end()) rhs = jt->second;
                        ++count;
                        if (lhs != rhs) {
                            ok = false;
                            detail = "<" + key_str(inst, a) + " * " + key_str(inst, b) + ", " +
                                     key_str(inst, c) + ">";
                        }
                    }
                }
        }
    }
    report.checks.push_back(make_check(
        "self-adjointness <ab,c> = <a(x)b, delta c> (" + std::to_string(count) + " triples)", ok,
        detail));
    return report;
}

SuiteReport suite_psi(const GraphAlgebra& alg, int sampled_pairs, int zeta_degree) {
    SuiteReport report;
    report.suite = "psi";
    const HopfInstance& inst = alg.instance();
    auto keys = keys_by_degree(alg, 4);

    std::mt19937_64 rng(0xfeedULL);
    std::vector<std::pair<MBasisKey, MBasisKey>> pool;
    for (int da = 0; da <= 4; ++da)
        for (int db = 0; da + db <= 5 && db <= 4; ++db)
            for (const auto& a : keys[da])
                for (const auto& b : keys[db]) pool.emplace_back(a, b);
    std::shuffle(pool.begin(), pool.end(), rng);

    bool hom_ok = true;
    std::string hom_detail;
    int tested = 0;
    for (const auto& [a, b] : pool) {
        if (tested >= sampled_pairs) break;
        ++tested;
        SymFunc lhs = psi(inst, hopf_product(inst, {{a, 1}}, {{b, 1}}));
        SymFunc rhs = multiply(psi_key(inst, a), psi_key(inst, b));
        if (!(lhs == rhs)) {
            hom_ok = false;
            hom_detail = key_str(inst, a) + " * " + key_str(inst, b);
        }
    }
    report.checks.push_back(make_check(
        "Psi(ab) = Psi(a)Psi(b) (" + std::to_string(tested) + " sampled pairs)", hom_ok,
        hom_detail));

    bool zeta_ok = true;
    std::string zeta_detail;
    long long zcount = 0;
    for (int d = 0; d <= zeta_degree; ++d)
        for (const auto& k : keys[d]) {
            ++zcount;
            if (specialize_ones(psi_key(inst, k), 1) != zeta_M(inst, {{k, 1}})) {
                zeta_ok = false;
                zeta_detail = key_str(inst, k);
            }
        }
    report.checks.push_back(make_check(
        "zeta(x) = Psi(x)(1,0,0,...) (" + std::to_string(zcount) + " keys)", zeta_ok,
        zeta_detail));

    // The B-side diagram: psi(reg_embed(F)) = psi_B(F).
    bool reg_ok = true;
    std::string reg_detail;
    for (int d = 0; d <= zeta_degree; ++d)
        for (int id : inst.all_canonical_ids(d)) {
            if (!(psi(inst, reg_embed_key(inst, id)) == psi_B_key(inst, id))) {
                reg_ok = false;
                reg_detail = "degree " + std::to_string(d);
            }
        }
    report.checks.push_back(make_check("Psi o reg = Psi_B", reg_ok, reg_detail));
    return report;
}

SuiteReport suite_clifford() {
    SuiteReport report;
    report.suite = "clifford";
    struct Pinned {
        YoungSetPtr y;
        AbelianGroup h;
        int n_max;
    };
    std::vector<Pinned> pinned = {
        {young_subsets(2), AbelianGroup::cyclic(2), 3},
        {young_identity(), AbelianGroup::cyclic(2), 3},
        {young_identity(), AbelianGroup::cyclic(3), 2},
        {young_empty(), AbelianGroup::cyclic(2), 4},
    };
    for (const auto& pin : pinned) {
        std::string tag = "[young=" + pin.y->name() + ",H=" + pin.h.str() + "] ";
        try {
            OracleContext ctx(pin.y, pin.h, pin.n_max);
            for (const auto& c : verify_clifford_bijection(ctx))
                report.checks.push_back(make_check(tag + c.name, c.pass, c.detail));
            for (int n = 0; n <= pin.n_max; ++n)
                for (const auto& c : verify_clifford_product(ctx, n))
                    report.checks.push_back(make_check(tag + c.name, c.pass, c.detail));
            for (int n = 0; n <= pin.n_max; ++n)
                for (const auto& c : verify_coproduct_clifford(ctx, n))
                    report.checks.push_back(make_check(tag + c.name, c.pass, c.detail));
            for (const auto& c : verify_pind_pres(ctx, pin.n_max))
                report.checks.push_back(make_check(tag + c.name, c.pass, c.detail));
        } catch (const hopf_error& err) {
            report.checks.push_back(make_check(tag + "construction", false, err.what()));
        }
    }
    return report;
}

std::vector<SuiteReport> run_suites(const std::string& which, const GraphAlgebra& alg) {
    std::vector<SuiteReport> out;
    auto want = [&](const std::string& name) { return which == "all" || which == name; };
    if (want("youngsets")) out.push_back(suite_youngsets());
    if (want("hopf")) out.push_back(suite_hopf(alg));
    if (want("psh")) out.push_back(suite_psh(alg));
    if (want("psi")) out.push_back(suite_psi(alg));
    if (want("clifford") || which == "oracle") out.push_back(suite_clifford());
    if (out.empty())
        throw parse_error("unknown verify suite '" + which +
                          "' (expected hopf|psh|psi|clifford|youngsets|all)");
    return out;
}

}  // namespace hopfchrom
