#include "pbmac/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace pbmac {

Composition rev_sort(Composition a) {
    std::sort(a.begin(), a.end(), std::greater<int>());
    return a;
}

bool is_partition(const Composition& a) {
    for (size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] < a[i + 1]) return false;
    return a.empty() || a.back() >= 0;
}

std::vector<Composition> compositions_of(int sum, int parts) {
    std::vector<Composition> out;
    if (parts <= 0 || sum < 0) return out;
    Composition cur(parts, 0);
    // Lexicographic recursion, first part slowest.
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == parts - 1) {
            cur[pos] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, sum);
    return out;
}

std::vector<Composition> partitions_of(int sum, int max_parts) {
    std::vector<Composition> out;
    Composition cur;
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            Composition padded = cur;
            padded.resize(max_parts, 0);
            out.push_back(std::move(padded));
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int v = std::min(rest, max_part); v >= 1; --v) {
            cur.push_back(v);
            self(self, rest - v, v);
            cur.pop_back();
        }
    };
    if (max_parts >= 0 && sum >= 0) rec(rec, sum, sum == 0 ? 1 : sum);
    return out;
}

std::vector<Composition> rearrangements_of(const Composition& a) {
    Composition cur = a;
    std::sort(cur.begin(), cur.end());
    std::vector<Composition> out;
    do {
        out.push_back(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));
    return out;
}

bool dominates(const Composition& lam, const Composition& mu) {
    const size_t n = std::max(lam.size(), mu.size());
    int pl = 0, pm = 0;
    for (size_t i = 0; i < n; ++i) {
        pl += i < lam.size() ? lam[i] : 0;
        pm += i < mu.size() ? mu[i] : 0;
        if (pl < pm) return false;
    }
    return pl == pm;
}

std::vector<Composition> bruhat_lower_set(const Composition& alpha) {
    std::set<Composition> seen;
    std::queue<Composition> work;
    const int n = static_cast<int>(alpha.size());
    auto push = [&](Composition c) {
        if (seen.insert(c).second) work.push(std::move(c));
    };
    // Seed with the immediate successors of alpha, then close.
    auto expand = [&](const Composition& d) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (d[i] < d[j]) {
                    Composition c = d;
                    std::swap(c[i], c[j]);
                    push(std::move(c));
                } else if (d[i] > d[j] + 1) {
                    Composition c = d;
                    c[i] = d[j] + 1;
                    c[j] = d[i] - 1;
                    push(std::move(c));
                }
            }
        }
    };
    expand(alpha);
    while (!work.empty()) {
        Composition d = std::move(work.front());
        work.pop();
        expand(d);
    }
    return {seen.begin(), seen.end()};
}

bool bruhat_greater(const Composition& alpha, const Composition& beta) {
    if (alpha.size() != beta.size())
        throw std::invalid_argument("bruhat: length mismatch");
    if (std::accumulate(alpha.begin(), alpha.end(), 0) !=
        std::accumulate(beta.begin(), beta.end(), 0))
        throw std::invalid_argument("bruhat: weight mismatch");
    if (alpha == beta) return false;
    for (const Composition& c : bruhat_lower_set(alpha))
        if (c == beta) return true;
    return false;
}

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    const int n = static_cast<int>(w_.size());
    if (n == 0) throw std::invalid_argument("not a permutation");
    std::vector<bool> used(n, false);
    for (int v : w_) {
        if (v < 1 || v > n || used[v - 1]) throw std::invalid_argument("not a permutation");
        used[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(w_.size());
    for (size_t i = 0; i < w_.size(); ++i) w[w_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(w));
}

int Permutation::length() const {
    int inv = 0;
    for (size_t i = 0; i < w_.size(); ++i)
        for (size_t j = i + 1; j < w_.size(); ++j)
            if (w_[i] > w_[j]) ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

Permutation Permutation::times_s(int i) const {
    if (i < 1 || i >= n()) throw std::out_of_range("simple transposition index out of range");
    std::vector<int> w = w_;
    for (auto& v : w) {
        if (v == i) v = i + 1;
        else if (v == i + 1) v = i;
    }
    return Permutation(std::move(w));
}

Permutation Permutation::then(const Permutation& tau) const {
    if (tau.n() != n()) throw std::invalid_argument("arity mismatch");
    std::vector<int> w(w_.size());
    for (size_t j = 0; j < w_.size(); ++j) w[j] = tau.w_[w_[j] - 1];
    return Permutation(std::move(w));
}

Permutation Permutation::reversed() const {
    std::vector<int> w(w_.rbegin(), w_.rend());
    return Permutation(std::move(w));
}

Permutation Permutation::complement() const {
    std::vector<int> w(w_.size());
    for (size_t j = 0; j < w_.size(); ++j) w[j] = n() + 1 - w_[j];
    return Permutation(std::move(w));
}

Composition Permutation::act(const Composition& a) const {
    if (a.size() != w_.size()) throw std::invalid_argument("arity mismatch");
    Composition r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[w_[i] - 1] = a[i];
    return r;
}

std::vector<int> Permutation::reduced_word() const {
    std::vector<int> rev;
    Permutation cur = *this;
    while (!cur.is_identity()) {
        Permutation inv = cur.inverse();
        int k = -1;
        for (int i = 1; i < cur.n(); ++i) {
            if (inv(i + 1) < inv(i)) {
                k = i;
                break;
            }
        }
        rev.push_back(k);
        cur = cur.times_s(k);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        out.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

Permutation shortest_permutation(const Composition& lambda, const Composition& target) {
    if (rev_sort(lambda) != rev_sort(target))
        throw std::invalid_argument("target is not a rearrangement");
    std::map<int, std::queue<int>> slots;
    for (size_t j = 0; j < target.size(); ++j) slots[target[j]].push(static_cast<int>(j) + 1);
    std::vector<int> w(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i) {
        auto& q = slots[lambda[i]];
        w[i] = q.front();
        q.pop();
    }
    return Permutation(std::move(w));
}

std::vector<int> sorting_word(const Composition& lambda, const Composition& target) {
    if (rev_sort(lambda) != lambda)
        throw std::invalid_argument("lambda must be weakly decreasing");
    if (rev_sort(target) != lambda)
        throw std::invalid_argument("target is not a rearrangement");
    std::vector<int> rev;
    Composition d = target;
    const int n = static_cast<int>(d.size());
    while (d != lambda) {
        for (int k = 0; k + 1 < n; ++k) {
            if (d[k] < d[k + 1]) {
                rev.push_back(k + 1);
                std::swap(d[k], d[k + 1]);
                break;
            }
        }
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

}  // namespace pbmac
