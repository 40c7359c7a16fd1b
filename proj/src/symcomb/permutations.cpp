#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "schober/symcomb.hpp"

namespace schober {

Permutation::Permutation(std::vector<int> images) : w_(std::move(images)) {
    std::vector<bool> seen(w_.size(), false);
    for (int x : w_) {
        if (x < 0 || x >= static_cast<int>(w_.size()) || seen[x]) throw std::invalid_argument("not a permutation");
        seen[x] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    return Permutation(w);
}

Permutation Permutation::simple(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("simple reflection index");
    auto w = identity(n);
    std::swap(w.w_[i - 1], w.w_[i]);
    return w;
}

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
    auto w = identity(n);
    for (int i : word) w = w * simple(n, i);
    return w;
}

int Permutation::length() const {
    int l = 0;
    for (size_t i = 0; i < w_.size(); ++i)
        for (size_t j = i + 1; j < w_.size(); ++j) l += w_[i] > w_[j];
    return l;
}

Permutation Permutation::inverse() const {
    std::vector<int> v(w_.size());
    for (size_t i = 0; i < w_.size(); ++i) v[w_[i]] = static_cast<int>(i);
    return Permutation(v);
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.n() != v.n()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> r(u.n());
    for (int i = 0; i < u.n(); ++i) r[i] = u.w_[v.w_[i]];
    return Permutation(r);
}

bool Permutation::right_descent(int i) const { return w_[i - 1] > w_[i]; }

bool Permutation::left_descent(int i) const {
    // s_i w shorter iff i+1 appears before i in one-line notation
    auto a = std::find(w_.begin(), w_.end(), i - 1), b = std::find(w_.begin(), w_.end(), i);
    return b < a;
}

std::string Permutation::str() const {
    std::string s;
    for (int x : w_) s += std::to_string(x + 1) + (w_.size() >= 10 ? " " : "");
    return s;
}

Permutation longest_element(const Composition& c) {
    std::vector<int> w;
    int off = 0;
    for (int p : c.parts) {
        for (int j = p - 1; j >= 0; --j) w.push_back(off + j);
        off += p;
    }
    return Permutation(w);
}

std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> word;
    Permutation cur = w;
    while (cur.length() > 0) {
        for (int i = 1; i < cur.n(); ++i)
            if (cur.left_descent(i)) {
                word.push_back(i);
                cur = Permutation::simple(cur.n(), i) * cur;
                break;
            }
    }
    return word;
}

std::vector<std::vector<int>> all_reduced_words(const Permutation& w, size_t cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    auto rec = [&](auto&& self, const Permutation& cur) -> void {
        if (cur.length() == 0) {
            if (out.size() >= cap) throw std::length_error("reduced-word enumeration cap exceeded");
            out.push_back(prefix);
            return;
        }
        for (int i = 1; i < cur.n(); ++i)
            if (cur.left_descent(i)) {
                prefix.push_back(i);
                self(self, Permutation::simple(cur.n(), i) * cur);
                prefix.pop_back();
            }
    };
    rec(rec, w);
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    std::vector<Permutation> out;
    do out.emplace_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace schober
