#pragma once

#include "hopfchrom/wreath_hopf.hpp"

namespace hopfchrom {

// The wreath product S_n x| Map(Y_n, H) as an explicit multiplication-table
// group. Elements are encoded as s * |H|^#points + f, with s an index into
// the sorted S_n element list and f the base-|H| digit string of the function
// (point i is digit i). Ground truth for the Clifford constructions.
class WreathGroup {
public:
    WreathGroup(const HopfInstance& inst, int n, long long oracle_cap = 0);

    int degree() const { return n_; }
    long long order() const { return data_->group->order(); }
    const GroupRef& data() const { return data_; }
    const PermGroup& sn() const { return sn_; }
    const std::vector<YPoint>& points() const { return points_; }
    long long base_order() const { return base_order_; }

    int perm_part(int e) const { return (int)(e / base_order_); }
    long long func_part(int e) const { return e % base_order_; }
    int func_digit(long long f, int point_idx) const;
    int encode(int perm_idx, const std::vector<int>& digits) const;

    // Element-index lists for the standard subgroups attached to a weak
    // partition (empty blocks are dropped before use).
    std::vector<int> base_elements() const;                // sigma = id
    std::vector<int> g_lambda(std::vector<std::vector<int>> blocks) const;
    std::vector<int> p_lambda(std::vector<std::vector<int>> blocks) const;
    std::vector<int> u_lambda(std::vector<std::vector<int>> blocks) const;

    // pi_F evaluated on the function part of an element (abelian H: the
    // product of the point characters at the function's values).
    Cyclotomic pi_F_value(const FunctionF& f, long long func_index) const;

    // Point indices of the image of Y_K for a sorted subset K of [n].
    std::vector<int> image_points(const std::vector<int>& subset) const;
    // Index-by-index target of the smaller group's point list under the
    // order-preserving injection K -> [n].
    std::vector<int> point_embedding(const std::vector<int>& subset,
                                     const WreathGroup& small) const;

private:
    const HopfInstance& inst_;
    int n_;
    PermGroup sn_;
    std::vector<YPoint> points_;
    long long base_order_;
    GroupRef data_;
    std::vector<std::vector<int>> point_map_;  // [perm idx][point idx] -> point idx
    std::vector<std::vector<int>> h_add_;      // |H| x |H| addition table
};

// Shared state for one pinned oracle instance: the Hopf-side algebra plus the
// wreath groups G_0..G_nmax.
class OracleContext {
public:
    OracleContext(YoungSetPtr y, const AbelianGroup& h, int n_max, Caps caps = global_caps());

    const HopfInstance& hopf() const { return *hopf_; }
    const WreathGroup& wreath(int degree) const { return *wreath_.at(degree); }
    int n_max() const { return (int)wreath_.size() - 1; }

    // Phi_F(gamma) = ind from (Aut F) x| Map(Y_n, H) of gamma x| pi_F; the
    // result is asserted to have norm one.
    ClassFunction clifford_phi(const MBasisKey& key) const;
    ClassFunction phi_of_element(const HopfElement& a, int degree) const;

    // pind for the bipartition {K, K^c}: inflate chi_K (x) chi_L across U and
    // induce up to G_n. The input characters live on wreath(|K|), wreath(|K^c|).
    ClassFunction pind_character(const ClassFunction& chi_k, const ClassFunction& chi_l,
                                 const std::vector<int>& k_subset) const;
    // pres: the U-fixed-vector projection, as a class function on
    // wreath(|K|) x wreath(|K^c|).
    ClassFunction pres_character(const ClassFunction& chi, const std::vector<int>& k_subset) const;
    // Plain restriction along G_K x G_K^c <= G_n, same codomain as pres.
    ClassFunction res_character(const ClassFunction& chi, const std::vector<int>& k_subset) const;

    GroupRef product_data(int k, int l) const;  // wreath(k) x wreath(l), cached

    // Degree of the oracle wreath group a class function lives on.
    int degree_of(const ClassFunction& chi) const;

private:
    std::shared_ptr<HopfInstance> hopf_;
    std::vector<std::shared_ptr<WreathGroup>> wreath_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, GroupRef> products_;
};

struct OracleCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Clifford bijection (norm-1, distinctness, count) at each degree <= n_max.
std::vector<OracleCheck> verify_clifford_bijection(const OracleContext& ctx);
// Phi(a . b) = pind(Phi a (x) Phi b) for all basis pairs with |K|+|L| = n.
std::vector<OracleCheck> verify_clifford_product(const OracleContext& ctx, int n);
// Delta/delta on the R side (res/pres of Phi) versus (Phi x Phi) of the
// M-side coproducts, per subset-size orbit.
std::vector<OracleCheck> verify_coproduct_clifford(const OracleContext& ctx, int n);
// Two-sided adjointness of pind/pres on pseudorandom characters, and
// pres == res when Y = id.
std::vector<OracleCheck> verify_pind_pres(const OracleContext& ctx, int n, int samples = 6);

}  // namespace hopfchrom
