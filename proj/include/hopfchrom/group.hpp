#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hopfchrom/errors.hpp"

namespace hopfchrom {

// Minimal group interface over element indices 0..order-1. Everything in the
// character-theory layer (classes, tables, induction) is written against it.
class Group {
public:
    virtual ~Group() = default;
    virtual long long order() const = 0;
    virtual int mul(int a, int b) const = 0;
    virtual int inv(int a) const = 0;
    virtual int id() const = 0;

    int element_order(int a) const;
    int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
};

// Conjugacy classes in canonical order: by element order, then class size,
// then minimal element index. Canonical class order fixes irrep labels
// downstream, so determinism is the requirement here, not iso-invariance.
struct ConjClasses {
    std::vector<int> reps;              // minimal element index per class
    std::vector<long long> sizes;
    std::vector<int> class_of;          // element index -> class index
    std::vector<std::vector<int>> members;
    std::vector<int> rep_order;         // element order of each class
    std::vector<int> inverse_class;     // class of rep^-1

    int count() const { return (int)reps.size(); }
};

ConjClasses compute_conjugacy_classes(const Group& g, long long order_cap);

// Immutable bundle of a group and its class data; shared by reference so that
// class functions can compare "same group" by pointer identity.
struct GroupData {
    std::shared_ptr<const Group> group;
    ConjClasses classes;
};
using GroupRef = std::shared_ptr<const GroupData>;

GroupRef make_group_data(std::shared_ptr<const Group> g,
                         long long order_cap = 1000000);

// A finite group given by its multiplication table.
class FiniteGroup final : public Group {
public:
    FiniteGroup(long long order, std::vector<std::int32_t> table,
                std::vector<std::string> labels = {});

    long long order() const override { return order_; }
    int mul(int a, int b) const override { return table_[(size_t)a * order_ + b]; }
    int inv(int a) const override { return inv_[a]; }
    int id() const override { return id_; }
    const std::string& label(int a) const;

private:
    void validate();

    long long order_;
    std::vector<std::int32_t> table_;
    std::vector<int> inv_;
    int id_ = -1;
    std::vector<std::string> labels_;
};

// Direct product; element index is a * |B| + b.
class ProductGroup final : public Group {
public:
    ProductGroup(std::shared_ptr<const Group> a, std::shared_ptr<const Group> b)
        : a_(std::move(a)), b_(std::move(b)), ob_(b_->order()) {}

    long long order() const override { return a_->order() * ob_; }
    int mul(int x, int y) const override {
        return (int)(a_->mul(x / ob_, y / ob_) * ob_ + b_->mul(x % ob_, y % ob_));
    }
    int inv(int x) const override { return (int)(a_->inv(x / ob_) * ob_ + b_->inv(x % ob_)); }
    int id() const override { return (int)(a_->id() * ob_ + b_->id()); }

    int pair(int a, int b) const { return (int)(a * ob_ + b); }
    int left(int x) const { return (int)(x / ob_); }
    int right(int x) const { return (int)(x % ob_); }
    const Group& left_group() const { return *a_; }
    const Group& right_group() const { return *b_; }

private:
    std::shared_ptr<const Group> a_, b_;
    long long ob_;
};

// Product group data with classes derived as class pairs (then canonically
// re-sorted), avoiding a quadratic conjugation scan.
GroupRef make_product_group_data(const GroupRef& a, const GroupRef& b);

}  // namespace hopfchrom
