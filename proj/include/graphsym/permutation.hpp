#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace graphsym {

/// Bijection on vertex ids 0..n-1, stored as its image array.
struct Permutation {
    std::vector<int> image;

    Permutation() = default;
    explicit Permutation(std::vector<int> img) : image(std::move(img)) {}

    static Permutation identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    int size() const { return static_cast<int>(image.size()); }
    int operator()(int v) const { return image[v]; }

    bool is_identity() const {
        for (int v = 0; v < size(); ++v)
            if (image[v] != v) return false;
        return true;
    }

    bool is_bijection() const {
        const int n = size();
        std::vector<bool> seen(n, false);
        for (int v : image) {
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = true;
        }
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(image.size());
        for (int v = 0; v < size(); ++v) inv[image[v]] = v;
        return Permutation(std::move(inv));
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.image == b.image;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.image < b.image;
    }
};

// (a compose b)(v) = a(b(v)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("compose: size mismatch");
    std::vector<int> img(a.size());
    for (int v = 0; v < b.size(); ++v) img[v] = a(b(v));
    return Permutation(std::move(img));
}

}  // namespace graphsym
