#pragma once

#include <vector>

#include "nilorb/blockdata.hpp"
#include "nilorb/decomposition.hpp"
#include "nilorb/eolp.hpp"
#include "nilorb/sampling.hpp"

namespace nilorb::testing {

inline std::vector<std::vector<int>> all_compositions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int b = 1; b <= rest; ++b) {
            cur.push_back(b);
            self(self, rest - b);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

inline BlockData random_blocks(int n, Rng& rng) {
    std::vector<int> b;
    int rest = n;
    while (rest > 0) {
        int v = int(rng.uniform(1, rest));
        b.push_back(v);
        rest -= v;
    }
    return BlockData(b);
}

inline std::vector<IndecLabel> all_labels(int p) {
    std::vector<IndecLabel> ls;
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j) ls.push_back(IndecLabel::U(i, j));
    for (int i = 1; i <= p; ++i) ls.push_back(IndecLabel::V(i));
    return ls;
}

// Independent pattern count: a full odometer over arrow tables bounded
// entrywise, filtered by the capacity sums. No pruning, no shared code with
// enumerate_eolps.
inline long long brute_force_pattern_count(const BlockData& blocks) {
    int p = blocks.p();
    std::vector<int> cap(p * p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            cap[i * p + j] = (i == j) ? blocks.block(i + 1) / 2
                                      : std::min(blocks.block(i + 1), blocks.block(j + 1));
    std::vector<int> t(p * p, 0);
    long long count = 0;
    for (;;) {
        bool ok = true;
        for (int v = 1; v <= p && ok; ++v) {
            int load = 0;
            for (int u = 1; u <= p; ++u) load += t[(v - 1) * p + (u - 1)] + t[(u - 1) * p + (v - 1)];
            if (load > blocks.block(v)) ok = false;
        }
        if (ok) ++count;
        int pos = p * p - 1;
        while (pos >= 0 && t[pos] == cap[pos]) t[pos--] = 0;
        if (pos < 0) break;
        ++t[pos];
    }
    return count;
}

// Oriented partial matchings: sum over k of n! / (k! (n-2k)!).
inline long long borel_pattern_count(int n) {
    auto fact = [](int m) {
        long long f = 1;
        for (int i = 2; i <= m; ++i) f *= i;
        return f;
    };
    long long total = 0;
    for (int k = 0; 2 * k <= n; ++k) total += fact(n) / (fact(k) * fact(n - 2 * k));
    return total;
}

}  // namespace nilorb::testing
