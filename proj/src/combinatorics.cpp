#include "polyext/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "polyext/errors.hpp"

namespace polyext {

namespace {

void enumerate_surjections(int n, int k, Surjection& prefix, unsigned seen_mask,
                           std::vector<Surjection>& out) {
    int pos = static_cast<int>(prefix.size());
    int missing = k - __builtin_popcount(seen_mask);
    if (pos == n) {
        if (missing == 0) out.push_back(prefix);
        return;
    }
    // prune: the positions left must still be able to cover the unseen values
    if (missing > n - pos) return;
    for (int v = 1; v <= k; ++v) {
        prefix.push_back(v);
        enumerate_surjections(n, k, prefix, seen_mask | (1u << (v - 1)), out);
        prefix.pop_back();
    }
}

}  // namespace

const std::vector<Surjection>& surjections(int n, int k) {
    if (n < 0 || k < 0) throw InvalidParameter("surjections: negative arguments");
    static std::map<std::pair<int, int>, std::vector<Surjection>> memo;
    static std::mutex memo_mutex;
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
    std::vector<Surjection> out;
    if (k == 0) {
        if (n == 0) out.push_back({});  // the empty map is onto the empty set
    } else if (k <= n) {
        Surjection prefix;
        prefix.reserve(static_cast<std::size_t>(n));
        enumerate_surjections(n, k, prefix, 0u, out);
    }
    return memo.emplace(std::make_pair(n, k), std::move(out)).first->second;
}

Surjection merge_values(const Surjection& a, int i) {
    int k = a.empty() ? 0 : *std::max_element(a.begin(), a.end());
    if (i < 1 || i >= k)
        throw InvalidParameter("merge_values: position " + std::to_string(i) +
                               " outside 1.." + std::to_string(k - 1));
    Surjection out(a.size());
    for (std::size_t t = 0; t < a.size(); ++t)
        out[t] = a[t] > i ? a[t] - 1 : a[t];
    return out;
}

std::vector<Composition> compositions(int n, int m) {
    std::vector<Composition> out;
    if (m < 0 || n < 0) throw InvalidParameter("compositions: negative arguments");
    if (m == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    Composition cur(static_cast<std::size_t>(m), 1);
    // recursive descent, lexicographic
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == m - 1) {
            if (remaining >= 1) {
                cur[static_cast<std::size_t>(pos)] = remaining;
                out.push_back(cur);
            }
            return;
        }
        for (int v = 1; v <= remaining - (m - pos - 1); ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

std::vector<Partition> partitions_into(int n, int m) {
    std::vector<Partition> out;
    if (m < 0 || n < 0) throw InvalidParameter("partitions_into: negative arguments");
    if (m == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    Partition cur;
    auto rec = [&](auto&& self, int remaining, int parts_left, int max_part) -> void {
        if (parts_left == 0) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        for (int v = std::min(max_part, remaining - (parts_left - 1)); v >= 1; --v) {
            cur.push_back(v);
            self(self, remaining - v, parts_left - 1, v);
            cur.pop_back();
        }
    };
    rec(rec, n, m, n);
    return out;
}

Int binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Int stirling2(int n, int k) {
    if (n < 0 || k < 0) return 0;
    if (n == 0 && k == 0) return 1;
    if (n == 0 || k == 0 || k > n) return 0;
    std::vector<Int> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;  // S(0,0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                Int(j) * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j) - 1];
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(k)];
}

Int bell(int n) {
    Int total = 0;
    for (int k = 0; k <= n; ++k) total += stirling2(n, k);
    return total;
}

Int count_surjections(int n, int k) {
    Int f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f * stirling2(n, k);
}

Int count_compositions(int n, int m) {
    if (n == 0 && m == 0) return 1;
    return binomial(n - 1, m - 1);
}

Int count_partitions_into(int n, int m) {
    if (m < 0 || n < 0) return 0;
    if (m == 0) return n == 0 ? 1 : 0;
    // p(n, m): partitions of n into exactly m parts;
    // p(n, m) = p(n-1, m-1) + p(n-m, m)
    std::vector<std::vector<Int>> p(static_cast<std::size_t>(n) + 1,
                                    std::vector<Int>(static_cast<std::size_t>(m) + 1, 0));
    p[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) {
            p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                p[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1];
            if (i >= j)
                p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    p[static_cast<std::size_t>(i - j)][static_cast<std::size_t>(j)];
        }
    return p[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

Int count_partitions(int n) {
    Int total = 0;
    for (int m = 0; m <= n; ++m) total += count_partitions_into(n, m);
    return total;
}

}  // namespace polyext
