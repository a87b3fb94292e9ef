#pragma once

#include <string>
#include <vector>

#include "hopfchrom/errors.hpp"

namespace hopfchrom {

// A permutation of 0..n-1 stored as its image array.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);

    static Perm identity(int n);
    // Cycle notation, e.g. "(0 1 2)(3 4)" or "()" for the identity; vertices
    // not mentioned are fixed. Degree is max mentioned + 1 unless overridden.
    static Perm from_cycles(const std::string& text, int degree = -1);

    int degree() const { return (int)img_.size(); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    Perm compose(const Perm& other) const;  // (a.compose(b))(i) = a(b(i))
    Perm inverse() const;
    int order() const;

    // Acts on blocks: this moves 0..k-1, shifted copy of `right` moves k..k+l-1.
    static Perm block(const Perm& left, const Perm& right);

    std::string cycle_str() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

private:
    std::vector<int> img_;
};

}  // namespace hopfchrom
