#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gqa {

/// A bijection of {1,...,n}. All indices in the public interface are 1-based.
class Permutation {
public:
    explicit Permutation(std::vector<int> map);

    static Permutation identity(int n);
    /// The classical balanced case, sigma(k) = n-k+1.
    static Permutation reversal(int n);
    /// Seeded Fisher-Yates shuffle; deterministic for a given (n, seed).
    static Permutation random(int n, std::uint64_t seed);

    int size() const { return static_cast<int>(map_.size()); }

    /// sigma(k), 1-based.
    int operator()(int k) const;

    Permutation inverse() const;

    const std::vector<int>& map() const { return map_; }

    bool operator==(const Permutation& other) const = default;

    /// Space-separated images, e.g. "2 1".
    std::string str() const;

private:
    std::vector<int> map_;
};

}  // namespace gqa
