#pragma once

#include <functional>
#include <vector>

#include "hopfchrom/cyclotomic.hpp"
#include "hopfchrom/group.hpp"
#include "hopfchrom/permgroup.hpp"

namespace hopfchrom {

// An exact class function: one cyclotomic value per conjugacy class, in the
// group's canonical class order. Functions never compare values across
// distinct GroupData instances.
struct ClassFunction {
    GroupRef G;
    std::vector<Cyclotomic> values;

    const Cyclotomic& at_class(int c) const { return values[c]; }
    const Cyclotomic& at_element(int e) const { return values[G->classes.class_of[e]]; }

    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    ClassFunction scaled(const Rational& r) const;
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.G.get() == b.G.get() && a.values == b.values;
    }
};

ClassFunction trivial_character(const GroupRef& g);
ClassFunction regular_character(const GroupRef& g);

// Injective homomorphism sub -> big given by an element-index map.
struct Embedding {
    GroupRef sub, big;
    std::vector<int> image;     // sub index -> big index
    std::vector<int> preimage;  // big index -> sub index, or -1
};

Embedding make_embedding(GroupRef sub, GroupRef big, std::vector<int> image);
// Inclusion of one permutation group in another (same degree, subset).
Embedding perm_inclusion(const GroupRef& sub, const GroupRef& big);

// <a, b> = (1/|G|) sum over classes |C| a(C) conj(b(C)).
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

ClassFunction induce(const ClassFunction& chi, const Embedding& e);
ClassFunction restrict_along(const ClassFunction& chi, const Embedding& e);

// Value at class C = number of points fixed by a class representative;
// act(element index, point index) -> point index.
ClassFunction permutation_character(const GroupRef& g, int npoints,
                                    const std::function<int(int, int)>& act);

// dim of the fixed space of the subgroup spanned by `subgroup_elements`
// (element indices in chi's group): (1/|U|) sum chi(u). Validated integer.
long long fixed_dim(const ClassFunction& chi, const std::vector<int>& subgroup_elements);

// The full irreducible character table, canonically ordered: trivial first,
// then by (degree, value vector) under the cyclotomic total order.
struct CharacterTable {
    GroupRef G;
    std::vector<ClassFunction> rows;
    std::vector<long long> degrees;

    int count() const { return (int)rows.size(); }
    int trivial_index() const { return 0; }
    // Index of the row equal to chi; -1 if chi is not irreducible here.
    int find_row(const ClassFunction& chi) const;
};

// Dixon-Schneider over F_p with exact cyclotomic lifting; results are cached
// per GroupData instance (thread-safe insert-or-get).
const CharacterTable& character_table(const GroupRef& g, long long order_cap = 1000000);

// chi = sum mult_i . irr_i with every mult_i a nonnegative integer; anything
// else is "not a character" and aborts.
std::vector<long long> decompose(const ClassFunction& chi, const CharacterTable& table);

ClassFunction recompose(const CharacterTable& table, const std::vector<long long>& mults);

// Table of a direct product: classes are class pairs, rows are outer tensor
// products, canonical order re-derived. row_pairs[r] records which (i, j)
// tensor product landed at row r.
struct ProductTable {
    GroupRef G;  // ProductGroup data
    CharacterTable table;
    std::vector<std::pair<int, int>> row_pairs;
    std::pair<int, int> pair_of_row(int r) const { return row_pairs[r]; }
    int row_of_pair(int i, int j) const;
};

ProductTable product_table(const GroupRef& a, const GroupRef& b, long long order_cap = 1000000);

// Row index of the S_n irreducible attached to each integer partition of n,
// identified by peeling Young-subgroup permutation characters in dominance
// order (Kostka triangularity).
std::vector<std::pair<std::vector<int>, int>> symmetric_group_partition_rows(
    const GroupRef& sn, const CharacterTable& table);

}  // namespace hopfchrom
