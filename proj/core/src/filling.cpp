#include "pbmac/filling.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <future>
#include <stdexcept>
#include <string>

namespace pbmac {

AugmentedFilling::AugmentedFilling(Composition shape, Permutation basement,
                                   std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), basement_(std::move(basement)), rows_(std::move(rows)) {
    const int nn = basement_.n();
    if (static_cast<int>(shape_.size()) != nn)
        throw std::invalid_argument("shape/basement length mismatch");
    if (static_cast<int>(rows_.size()) != nn)
        throw std::invalid_argument("row count mismatch");
    for (int r = 0; r < nn; ++r) {
        if (shape_[r] < 0) throw std::invalid_argument("negative part");
        if (static_cast<int>(rows_[r].size()) != shape_[r])
            throw std::invalid_argument("row length mismatch");
        for (int e : rows_[r])
            if (e < 1 || e > nn) throw std::invalid_argument("entry out of range");
    }
}

int AugmentedFilling::entry(const Cell& u) const {
    if (!in_diagram(u)) throw std::out_of_range("cell outside diagram");
    return u.col == 0 ? basement_(u.row) : rows_[u.row - 1][u.col - 1];
}

bool AugmentedFilling::in_diagram(const Cell& u) const {
    return u.row >= 1 && u.row <= n() && u.col >= 0 && u.col <= shape_[u.row - 1];
}

int leg(const Composition& shape, const Cell& u) {
    if (u.row < 1 || u.row > static_cast<int>(shape.size()) || u.col < 0 ||
        u.col > shape[u.row - 1])
        throw std::out_of_range("cell outside diagram");
    return shape[u.row - 1] - u.col;
}

int arm(const Composition& shape, const Cell& u) {
    const int n = static_cast<int>(shape.size());
    if (u.row < 1 || u.row > n || u.col < 1 || u.col > shape[u.row - 1])
        throw std::out_of_range("cell outside diagram");
    const int len = shape[u.row - 1];
    int count = 0;
    for (int r = u.row + 1; r <= n; ++r)
        if (shape[r - 1] >= u.col && shape[r - 1] <= len) ++count;
    for (int r = 1; r < u.row; ++r)
        if (shape[r - 1] >= u.col - 1 && shape[r - 1] < len) ++count;
    return count;
}

std::vector<Cell> descents(const AugmentedFilling& f) {
    std::vector<Cell> out;
    for (int r = 1; r <= f.n(); ++r) {
        for (int c = 1; c <= f.shape()[r - 1]; ++c) {
            if (f.entry({r, c - 1}) < f.entry({r, c})) out.push_back({r, c});
        }
    }
    return out;
}

int maj(const AugmentedFilling& f) {
    int m = 0;
    for (const Cell& u : descents(f)) m += leg(f.shape(), u) + 1;
    return m;
}

namespace {

// Tie-break precedence: when entries agree, b < c < a.
enum BoxTag { TagB = 0, TagC = 1, TagA = 2 };

bool triple_is_inversion(int ea, int eb, int ec) {
    struct Item {
        int entry;
        BoxTag tag;
    };
    std::array<Item, 3> items = {{{eb, TagB}, {ec, TagC}, {ea, TagA}}};
    std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
        if (x.entry != y.entry) return x.entry < y.entry;
        return x.tag < y.tag;
    });
    // Inversion = the increasing reading is a rotation of (a, c, b).
    const std::array<BoxTag, 3> seq = {items[0].tag, items[1].tag, items[2].tag};
    return seq == std::array<BoxTag, 3>{TagA, TagC, TagB} ||
           seq == std::array<BoxTag, 3>{TagC, TagB, TagA} ||
           seq == std::array<BoxTag, 3>{TagB, TagA, TagC};
}

}  // namespace

std::vector<Triple> classify_triples(const AugmentedFilling& f) {
    std::vector<Triple> out;
    const Composition& shape = f.shape();
    const int n = f.n();
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= shape[r - 1]; ++c) {
            const Cell a{r, c - 1}, b{r, c};
            // Type A: c-box below b in b's column, its row no longer than row r.
            for (int r2 = r + 1; r2 <= n; ++r2) {
                if (shape[r2 - 1] >= c && shape[r - 1] >= shape[r2 - 1]) {
                    const Cell cc{r2, c};
                    out.push_back({TripleKind::A, a, b, cc,
                                   triple_is_inversion(f.entry(a), f.entry(b), f.entry(cc))});
                }
            }
            // Type B: c-box above a in a's column, its row strictly shorter.
            for (int r2 = 1; r2 < r; ++r2) {
                if (shape[r2 - 1] >= c - 1 && shape[r - 1] > shape[r2 - 1]) {
                    const Cell cc{r2, c - 1};
                    out.push_back({TripleKind::B, a, b, cc,
                                   triple_is_inversion(f.entry(a), f.entry(b), f.entry(cc))});
                }
            }
        }
    }
    return out;
}

int inv(const AugmentedFilling& f) {
    int k = 0;
    for (const Triple& t : classify_triples(f)) k += t.is_inversion ? 1 : 0;
    return k;
}

int coinv(const AugmentedFilling& f) {
    int k = 0;
    for (const Triple& t : classify_triples(f)) k += t.is_inversion ? 0 : 1;
    return k;
}

namespace {

bool cells_attack(const Cell& u, const Cell& v) {
    if (u.col == v.col) return u.row != v.row;
    if (u.col + 1 == v.col) return v.row > u.row;  // right box strictly below
    if (v.col + 1 == u.col) return u.row > v.row;
    return false;
}

}  // namespace

bool is_non_attacking(const AugmentedFilling& f) {
    std::vector<Cell> cells;
    for (int r = 1; r <= f.n(); ++r)
        for (int c = 0; c <= f.shape()[r - 1]; ++c) cells.push_back({r, c});
    for (size_t i = 0; i < cells.size(); ++i)
        for (size_t j = i + 1; j < cells.size(); ++j)
            if (f.entry(cells[i]) == f.entry(cells[j]) && cells_attack(cells[i], cells[j]))
                return false;
    return true;
}

namespace {

struct NafSearch {
    const Composition& shape;
    const Permutation& basement;
    std::vector<Cell> order;                  // column-major fill order
    std::vector<std::vector<int>> entries;    // entries[r-1][c-1], 0 = empty

    explicit NafSearch(const Composition& s, const Permutation& b) : shape(s), basement(b) {
        const int n = b.n();
        int maxcol = 0;
        for (int v : s) maxcol = std::max(maxcol, v);
        for (int c = 1; c <= maxcol; ++c)
            for (int r = 1; r <= n; ++r)
                if (s[r - 1] >= c) order.push_back({r, c});
        entries.resize(n);
        for (int r = 1; r <= n; ++r) entries[r - 1].assign(s[r - 1], 0);
    }

    int at(int r, int c) const { return c == 0 ? basement(r) : entries[r - 1][c - 1]; }

    // Check the new value against every already-placed or basement box that
    // attacks (r, c); later boxes re-check the pair from their side.
    bool placeable(const Cell& u, int v) const {
        const int n = basement.n();
        for (int r2 = 1; r2 <= n; ++r2) {
            if (r2 != u.row && shape[r2 - 1] >= u.col && r2 < u.row && at(r2, u.col) == v)
                return false;
        }
        for (int r2 = 1; r2 < u.row; ++r2) {
            if (shape[r2 - 1] >= u.col - 1 && at(r2, u.col - 1) == v) return false;
        }
        return true;
    }

    void run(size_t pos, std::vector<AugmentedFilling>& out) {
        if (pos == order.size()) {
            out.emplace_back(shape, basement, entries);
            return;
        }
        const Cell u = order[pos];
        for (int v = 1; v <= basement.n(); ++v) {
            if (!placeable(u, v)) continue;
            entries[u.row - 1][u.col - 1] = v;
            run(pos + 1, out);
            entries[u.row - 1][u.col - 1] = 0;
        }
    }
};

int max_threads_from_env() {
    const char* s = std::getenv("PBMAC_MAX_THREADS");
    if (!s) return 1;
    int v = std::atoi(s);
    return v < 1 ? 1 : v;
}

}  // namespace

std::vector<AugmentedFilling> enumerate_naf(const Composition& shape,
                                            const Permutation& basement) {
    if (shape.size() != static_cast<size_t>(basement.n()))
        throw std::invalid_argument("shape/basement length mismatch");
    for (int v : shape)
        if (v < 0) throw std::invalid_argument("negative part");

    NafSearch search(shape, basement);
    std::vector<AugmentedFilling> out;
    if (search.order.empty()) {
        search.run(0, out);
        return out;
    }

    const int threads = max_threads_from_env();
    if (threads <= 1 || search.order.size() < 6) {
        search.run(0, out);
        return out;
    }

    // Split on the first box's entry; results merged in entry order keep the
    // sequence identical to the serial one.
    std::vector<std::future<std::vector<AugmentedFilling>>> parts;
    for (int v = 1; v <= basement.n(); ++v) {
        parts.push_back(std::async(std::launch::async, [&, v]() {
            NafSearch local(shape, basement);
            std::vector<AugmentedFilling> got;
            const Cell u = local.order[0];
            if (local.placeable(u, v)) {
                local.entries[u.row - 1][u.col - 1] = v;
                local.run(1, got);
            }
            return got;
        }));
    }
    for (auto& p : parts) {
        auto got = p.get();
        out.insert(out.end(), got.begin(), got.end());
    }
    return out;
}

Monomial weight(const AugmentedFilling& f) {
    Monomial w(f.n(), 0);
    for (const auto& row : f.rows())
        for (int e : row) ++w[e - 1];
    return w;
}

}  // namespace pbmac
