#include "gqa/permutation.hpp"

#include <random>
#include <stdexcept>

namespace gqa {

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
    const int n = static_cast<int>(map_.size());
    if (n < 2) {
        throw std::invalid_argument("Permutation: size must be at least 2");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : map_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
            throw std::invalid_argument("Permutation: map is not a bijection of {1,...,n}");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 2) throw std::invalid_argument("Permutation::identity: n must be at least 2");
    std::vector<int> m(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) m[static_cast<std::size_t>(k - 1)] = k;
    return Permutation(std::move(m));
}

Permutation Permutation::reversal(int n) {
    if (n < 2) throw std::invalid_argument("Permutation::reversal: n must be at least 2");
    std::vector<int> m(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) m[static_cast<std::size_t>(k - 1)] = n - k + 1;
    return Permutation(std::move(m));
}

Permutation Permutation::random(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("Permutation::random: n must be at least 2");
    std::vector<int> m(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) m[static_cast<std::size_t>(k - 1)] = k;
    std::mt19937_64 eng(seed);
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(eng() % static_cast<std::uint64_t>(i + 1));
        std::swap(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)]);
    }
    return Permutation(std::move(m));
}

int Permutation::operator()(int k) const {
    if (k < 1 || k > size()) {
        throw std::out_of_range("Permutation: index out of range");
    }
    return map_[static_cast<std::size_t>(k - 1)];
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(map_.size());
    for (int k = 1; k <= size(); ++k) {
        inv[static_cast<std::size_t>(map_[static_cast<std::size_t>(k - 1)] - 1)] = k;
    }
    return Permutation(std::move(inv));
}

std::string Permutation::str() const {
    std::string s;
    for (int k = 1; k <= size(); ++k) {
        if (k > 1) s += ' ';
        s += std::to_string((*this)(k));
    }
    return s;
}

}  // namespace gqa
