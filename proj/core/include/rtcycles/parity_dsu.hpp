#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rtcycles/graph.hpp"

namespace rtc {

// Incremental bipartiteness: union-find with edge parities and an undo log
// (union by size, no path compression, so rollback is exact). add_edge
// returns false, without modifying anything, iff the edge would close an odd
// cycle.
class ParityDSU {
public:
    explicit ParityDSU(int n)
        : parent_(static_cast<size_t>(n)), size_(static_cast<size_t>(n), 1),
          parity_(static_cast<size_t>(n), 0) {
        for (int v = 0; v < n; ++v) parent_[static_cast<size_t>(v)] = v;
    }

    // (root, parity of v relative to its root)
    std::pair<int, int> find(int v) const {
        int p = 0;
        while (parent_[static_cast<size_t>(v)] != v) {
            p ^= parity_[static_cast<size_t>(v)];
            v = parent_[static_cast<size_t>(v)];
        }
        return {v, p};
    }

    bool would_conflict(int u, int v) const {
        auto [ru, pu] = find(u);
        auto [rv, pv] = find(v);
        return ru == rv && pu == pv;
    }

    bool add_edge(int u, int v) {
        auto [ru, pu] = find(u);
        auto [rv, pv] = find(v);
        if (ru == rv) return pu != pv;
        if (size_[static_cast<size_t>(ru)] < size_[static_cast<size_t>(rv)]) {
            std::swap(ru, rv);
            std::swap(pu, pv);
        }
        parent_[static_cast<size_t>(rv)] = ru;
        parity_[static_cast<size_t>(rv)] = static_cast<uint8_t>(pu ^ pv ^ 1);
        size_[static_cast<size_t>(ru)] += size_[static_cast<size_t>(rv)];
        log_.push_back(rv);
        return true;
    }

    size_t mark() const { return log_.size(); }

    void rollback(size_t mark) {
        while (log_.size() > mark) {
            int child = log_.back();
            log_.pop_back();
            size_[static_cast<size_t>(parent_[static_cast<size_t>(child)])] -=
                size_[static_cast<size_t>(child)];
            parent_[static_cast<size_t>(child)] = child;
            parity_[static_cast<size_t>(child)] = 0;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<uint8_t> parity_;
    std::vector<int> log_;
};

}  // namespace rtc
