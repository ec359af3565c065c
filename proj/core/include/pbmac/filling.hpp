#pragma once

/*
 * filling.hpp
 * -----------
 * Augmented diagrams and their fillings, English notation.
 *
 * A diagram of shape alpha has boxes (row, col) with 1 <= col <= alpha_row,
 * augmented with a basement column col = 0 holding a permutation read top to
 * bottom.  All statistics below (arm, leg, descents, maj, triples, inv,
 * coinv, attacking pairs) are taken on the augmented diagram: basement boxes
 * take part in attacking pairs and may serve as the a- or c-box of a triple,
 * and row lengths for triple comparisons are the alpha_row values, basement
 * excluded.
 */

#include <vector>

#include "pbmac/combinatorics.hpp"
#include "pbmac/x_poly.hpp"

namespace pbmac {

struct Cell {
    int row = 0;  // 1..n
    int col = 0;  // 0 is the basement column
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

class AugmentedFilling {
public:
    AugmentedFilling(Composition shape, Permutation basement,
                     std::vector<std::vector<int>> rows);

    int n() const { return basement_.n(); }
    const Composition& shape() const { return shape_; }
    const Permutation& basement() const { return basement_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    // Entry of a box; the basement box (r, 0) holds basement(r).
    int entry(const Cell& u) const;
    bool in_diagram(const Cell& u) const;

    friend bool operator==(const AugmentedFilling&, const AugmentedFilling&) = default;

private:
    Composition shape_;
    Permutation basement_;
    std::vector<std::vector<int>> rows_;
};

// Boxes strictly to the right of u in its row.
int leg(const Composition& shape, const Cell& u);

// Cardinality of
//   {(r', c) : r < r', alpha_{r'} <= alpha_r} u {(r', c-1) : r' < r, alpha_{r'} < alpha_r}
// with membership taken in the augmented diagram, so the basement column
// counts in the second set when c = 1.  Defined for non-basement boxes.
int arm(const Composition& shape, const Cell& u);

// Non-basement boxes whose left neighbour holds a strictly smaller entry.
std::vector<Cell> descents(const AugmentedFilling& f);

int maj(const AugmentedFilling& f);

enum class TripleKind { A, B };

struct Triple {
    TripleKind kind;
    Cell a, b, c;
    bool is_inversion;
};

// All type A and type B triples of the augmented diagram, each classified by
// the orientation of its entries (ties broken by the fixed box precedence
// b, c, a from smallest to largest).
std::vector<Triple> classify_triples(const AugmentedFilling& f);

int inv(const AugmentedFilling& f);
int coinv(const AugmentedFilling& f);

bool is_non_attacking(const AugmentedFilling& f);

// All non-attacking fillings with entries in {1..n}, enumerated column by
// column left to right, top to bottom within a column, in lexicographic
// order of the entries along that fill order.
std::vector<AugmentedFilling> enumerate_naf(const Composition& shape,
                                            const Permutation& basement);

// Exponent of x_k = number of non-basement boxes holding k.
Monomial weight(const AugmentedFilling& f);

}  // namespace pbmac
