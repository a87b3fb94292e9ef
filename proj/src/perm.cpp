#include "hopfchrom/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hopfchrom {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= (int)img_.size() || seen[v])
            throw consistency_error("permutation image array is not a bijection");
        seen[v] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    Perm p;
    p.img_ = std::move(img);
    return p;
}

bool Perm::is_identity() const {
    for (int i = 0; i < (int)img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm Perm::compose(const Perm& other) const {
    if (degree() != other.degree()) throw consistency_error("composing permutations of different degree");
    std::vector<int> img(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) img[i] = img_[other.img_[i]];
    Perm p;
    p.img_ = std::move(img);
    return p;
}

Perm Perm::inverse() const {
    std::vector<int> img(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) img[img_[i]] = (int)i;
    Perm p;
    p.img_ = std::move(img);
    return p;
}

int Perm::order() const {
    int ord = 1;
    std::vector<bool> seen(img_.size(), false);
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = img_[j]) { seen[j] = true; ++len; }
        ord = (int)std::lcm(ord, len);
    }
    return ord;
}

Perm Perm::block(const Perm& left, const Perm& right) {
    int k = left.degree();
    std::vector<int> img(k + right.degree());
    for (int i = 0; i < k; ++i) img[i] = left(i);
    for (int i = 0; i < right.degree(); ++i) img[k + i] = k + right(i);
    Perm p;
    p.img_ = std::move(img);
    return p;
}

Perm Perm::from_cycles(const std::string& text, int degree) {
    std::vector<std::vector<int>> cycles;
    size_t pos = 0;
    int max_seen = -1;
    while (pos < text.size()) {
        if (std::isspace((unsigned char)text[pos]) || text[pos] == ',') { ++pos; continue; }
        if (text[pos] != '(') throw parse_error("cycle notation: expected '(' at offset " + std::to_string(pos));
        ++pos;
        std::vector<int> cyc;
        while (pos < text.size() && text[pos] != ')') {
            if (std::isspace((unsigned char)text[pos]) || text[pos] == ',') { ++pos; continue; }
            if (!std::isdigit((unsigned char)text[pos]))
                throw parse_error("cycle notation: expected digit at offset " + std::to_string(pos));
            int v = 0;
            while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
                v = v * 10 + (text[pos++] - '0');
            cyc.push_back(v);
            max_seen = std::max(max_seen, v);
        }
        if (pos == text.size()) throw parse_error("cycle notation: unterminated cycle");
        ++pos;
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
    }
    int n = degree >= 0 ? degree : max_seen + 1;
    if (max_seen >= n) throw parse_error("cycle notation: point exceeds degree");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (const auto& cyc : cycles)
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            img[from] = to;
        }
    return Perm(std::move(img));
}

std::string Perm::cycle_str() const {
    std::ostringstream out;
    std::vector<bool> seen(img_.size(), false);
    bool any = false;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == (int)i) { seen[i] = true; continue; }
        any = true;
        out << '(';
        bool first = true;
        for (size_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            if (!first) out << ' ';
            first = false;
            out << j;
        }
        out << ')';
    }
    return any ? out.str() : "()";
}

}  // namespace hopfchrom
