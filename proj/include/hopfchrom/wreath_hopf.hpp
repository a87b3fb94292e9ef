#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hopfchrom/characters.hpp"
#include "hopfchrom/symfunc.hpp"
#include "hopfchrom/youngset.hpp"

namespace hopfchrom {

// A finite abelian group by invariant factors; elements and characters are
// both indexed by mixed-radix tuples, paired through roots of unity.
struct AbelianGroup {
    std::vector<int> factors;  // each >= 2; empty = trivial group

    static AbelianGroup trivial() { return {}; }
    static AbelianGroup cyclic(int d);
    static AbelianGroup parse(const std::string& text);  // "1", "Z2", "Z2xZ4"

    long long order() const;
    std::vector<int> decode(int x) const;
    int encode(const std::vector<int>& tuple) const;
    // <chi, elem> = prod_i zeta_(d_i)^(chi_i * elem_i); bimultiplicative.
    Cyclotomic pairing(int chi, int elem) const;
    std::string str() const;
};

// A labelling of the points of Y_[n] by nontrivial irreducible H-characters;
// points mapped to the trivial character are omitted.
struct FunctionF {
    int n = 0;
    std::map<YPoint, int> labels;  // label in 1..|H|-1

    bool empty_support() const { return labels.empty(); }
    friend bool operator==(const FunctionF& a, const FunctionF& b) {
        return a.n == b.n && a.labels == b.labels;
    }
};

struct MBasisKey {
    int f_id = 0;   // interned canonical F
    int irrep = 0;  // row of character_table(Aut F)
    friend auto operator<=>(const MBasisKey&, const MBasisKey&) = default;
};

using HopfElement = std::map<MBasisKey, long long>;
using TensorElement = std::map<std::pair<MBasisKey, MBasisKey>, long long>;
using BElement = std::map<int, long long>;  // f_id -> coefficient
using BTensorElement = std::map<std::pair<int, int>, long long>;

// One Y/H pair with its interning tables. The intern table is the only shared
// mutable structure; inserts are mutex-guarded (same key -> same id).
class HopfInstance {
public:
    HopfInstance(YoungSetPtr y, AbelianGroup h, Caps caps = global_caps());

    const YoungSet& young() const { return *Y_; }
    const YoungSetPtr& young_ptr() const { return Y_; }
    const AbelianGroup& H() const { return H_; }
    const Caps& caps() const { return caps_; }
    std::string selector() const;  // "young=subsets:2,H=Z2"

    // Validates points and label range.
    FunctionF make_function(int n, std::map<YPoint, int> labels) const;
    // The dense label vector over points(n); lexicographic minimum over the
    // S_n-orbit defines the canonical representative.
    std::vector<int> label_vector(const FunctionF& f) const;

    // (interned id of the canonical representative, witness w with w.F canonical)
    std::pair<int, Perm> canonicalize(const FunctionF& f) const;
    int intern_degree_zero() const;  // the empty function, unit of everything

    const FunctionF& function_of(int f_id) const;
    const GroupRef& aut_of(int f_id) const;          // Aut F as a permutation group
    const CharacterTable& table_of(int f_id) const;  // character_table(Aut F)
    const ProductTable& product_of(int fa, int fb) const;  // Aut Fa x Aut Fb, cached

    // Every F of the given degree, one id per S_n-orbit, sorted. Requires
    // |H|^|points(n)| enumerable; used by verification and the oracle.
    std::vector<int> all_canonical_ids(int degree) const;
    std::vector<MBasisKey> all_basis_keys(int degree) const;

private:
    int intern_canonical(const FunctionF& canonical) const;

    YoungSetPtr Y_;
    AbelianGroup H_;
    Caps caps_;

    struct CanonEntry {
        FunctionF f;
        GroupRef aut;
    };
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, std::vector<int>>, int> intern_;  // (degree, labels)
    mutable std::vector<std::shared_ptr<const CanonEntry>> entries_;
    mutable std::map<std::pair<int, int>, std::shared_ptr<const ProductTable>> products_;
    mutable std::map<std::pair<int, std::vector<int>>, std::pair<int, Perm>> canon_cache_;
};

// --- structural helpers ----------------------------------------------------

PermGroup aut_F(const HopfInstance& inst, const FunctionF& f);
FunctionF apply_perm(const HopfInstance& inst, const Perm& w, const FunctionF& f);
FunctionF restrict_to_subset(const HopfInstance& inst, const FunctionF& f,
                             const std::vector<int>& subset);
FunctionF union_F(const HopfInstance& inst, const FunctionF& a, const FunctionF& b);

// supp F not contained in Y_K + Y_K^c for every proper nonempty K (degree-0
// empty function is by definition not primitive).
bool is_primitive(const HopfInstance& inst, const FunctionF& f);

// --- the Hopf algebra M ----------------------------------------------------

MBasisKey unit_key(const HopfInstance& inst);
HopfElement hopf_unit(const HopfInstance& inst);
long long counit(const HopfInstance& inst, const HopfElement& a);

HopfElement hopf_product(const HopfInstance& inst, const HopfElement& a, const HopfElement& b);
// Orbit-summed coproducts; delta keeps only subsets K with supp F inside
// Y_K + Y_K^c. `lex_max_reps` switches the orbit representative choice and is
// used to verify representative-independence.
TensorElement coproduct_Delta(const HopfInstance& inst, const HopfElement& a,
                              bool lex_max_reps = false);
TensorElement coproduct_delta(const HopfInstance& inst, const HopfElement& a,
                              bool lex_max_reps = false);

long long zeta_M(const HopfInstance& inst, const HopfElement& a);
SymFunc psi_key(const HopfInstance& inst, const MBasisKey& key);
SymFunc psi(const HopfInstance& inst, const HopfElement& a);
// One pass over compositions serving every irrep of Aut F at once.
std::vector<SymFunc> psi_all_irreps(const HopfInstance& inst, int f_id);

// --- the basic subalgebra B ------------------------------------------------

BElement b_unit(const HopfInstance& inst);
BElement b_product(const HopfInstance& inst, const BElement& a, const BElement& b);
BTensorElement b_coproduct_Delta(const HopfInstance& inst, const BElement& a);
BTensorElement b_coproduct_delta(const HopfInstance& inst, const BElement& a);
long long zeta_B(const HopfInstance& inst, const BElement& a);
SymFunc psi_B_key(const HopfInstance& inst, int f_id);
SymFunc psi_B(const HopfInstance& inst, const BElement& a);

// pi_F -> regular representation of Aut F, an algebra embedding B -> M.
HopfElement reg_embed_key(const HopfInstance& inst, int f_id);
HopfElement reg_embed(const HopfInstance& inst, const BElement& a);

// --- misc ------------------------------------------------------------------

// Inner product making the canonical basis orthonormal.
long long basis_inner(const HopfElement& a, const HopfElement& b);
long long tensor_inner(const TensorElement& a, const TensorElement& b);
TensorElement tensor_product_elements(const HopfInstance& inst, const TensorElement& a,
                                      const TensorElement& b);
TensorElement flip(const TensorElement& a);

std::string key_str(const HopfInstance& inst, const MBasisKey& key);
std::string element_str(const HopfInstance& inst, const HopfElement& a);

}  // namespace hopfchrom
