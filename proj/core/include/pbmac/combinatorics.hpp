#pragma once

/*
 * combinatorics.hpp
 * -----------------
 * Weak compositions, permutations and the orders connecting them.
 *
 * Permutations act on compositions by permuting entries: (sigma a) places
 * the part a_i at position sigma(i).  Products are read left to right, so
 * (sigma tau)(j) = tau(sigma(j)); in particular sigma * s_i exchanges the
 * values i and i+1 in sigma's one-line notation.
 */

#include <vector>

namespace pbmac {

using Composition = std::vector<int>;

// Parts sorted weakly decreasing.
Composition rev_sort(Composition a);

bool is_partition(const Composition& a);

// All weak compositions of `sum` into `parts` parts, lexicographically
// increasing.
std::vector<Composition> compositions_of(int sum, int parts);

// All partitions of `sum` with at most `max_parts` parts, zero-padded to
// length `max_parts`, lexicographically decreasing.
std::vector<Composition> partitions_of(int sum, int max_parts);

// Distinct rearrangements of the parts of `a`, lexicographically increasing.
std::vector<Composition> rearrangements_of(const Composition& a);

// Dominance order on partitions of equal weight (weak).
bool dominates(const Composition& lam, const Composition& mu);

// Strict Bruhat order on compositions of the same weight and length,
// generated by the exchanges
//   (i)  i < j, a_i < a_j:      a > s_ij(a)
//   (ii) i < j, a_i > a_j + 1:  a > a + e_j - e_i applied to the swapped pair,
// and computed as a breadth-first closure.  Throws on length/sum mismatch.
bool bruhat_greater(const Composition& alpha, const Composition& beta);

// Every composition strictly below alpha in Bruhat order.
std::vector<Composition> bruhat_lower_set(const Composition& alpha);

class Permutation {
public:
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    static Permutation longest(int n);  // (n, n-1, ..., 1)

    int n() const { return static_cast<int>(w_.size()); }
    const std::vector<int>& one_line() const { return w_; }
    int operator()(int i) const { return w_[i - 1]; }

    Permutation inverse() const;
    int length() const;  // inversion count
    bool is_identity() const;

    // Right product with the simple transposition s_i: exchanges the values
    // i and i+1 wherever they sit in the one-line notation.
    Permutation times_s(int i) const;

    // Left-to-right product: (this * tau)(j) = tau(this(j)).
    Permutation then(const Permutation& tau) const;

    // One-line notation reversed; equals omega_0 * this in the product above.
    Permutation reversed() const;

    // Values complemented, j -> n+1 - this(j); the other omega_0 product.
    Permutation complement() const;

    Composition act(const Composition& a) const;

    // Canonical reduced word i_1..i_l with *this = s_{i_1} * ... * s_{i_l}
    // (letters applied first to last under the product convention above).
    std::vector<int> reduced_word() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.w_ < b.w_; }

private:
    std::vector<int> w_;
};

std::vector<Permutation> all_permutations(int n);

// The minimal-length permutation sigma with sigma(lambda) == target, for
// lambda weakly decreasing; equal parts keep their relative order.  Throws
// if target is not a rearrangement of lambda.
Permutation shortest_permutation(const Composition& lambda, const Composition& target);

// Adjacent-transposition letters k_1..k_l turning lambda into target by
// swapping strictly unequal neighbours; the word is a reduced word for
// shortest_permutation(lambda, target).
std::vector<int> sorting_word(const Composition& lambda, const Composition& target);

}  // namespace pbmac
