#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kpn/coeff.hpp"
#include "kpn/errors.hpp"

namespace kpn {

// Sparse integer matrix: no stored zeros, indices within bounds.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::unordered_map<uint64_t, long long> entries;  // key = row << 32 | col

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : rows(r), cols(c) {
        if (r < 0 || c < 0) throw ValidationError("negative matrix dimension");
    }

    static uint64_t key(int r, int c) {
        return (static_cast<uint64_t>(static_cast<uint32_t>(r)) << 32) |
               static_cast<uint32_t>(c);
    }

    void check_bounds(int r, int c) const {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw ValidationError("matrix index out of bounds");
    }

    long long get(int r, int c) const {
        check_bounds(r, c);
        auto it = entries.find(key(r, c));
        return it == entries.end() ? 0 : it->second;
    }

    void set(int r, int c, long long v) {
        check_bounds(r, c);
        if (v == 0)
            entries.erase(key(r, c));
        else
            entries[key(r, c)] = v;
    }

    void add(int r, int c, long long v) {
        check_bounds(r, c);
        if (v == 0) return;
        auto [it, inserted] = entries.try_emplace(key(r, c), v);
        if (!inserted) {
            it->second = checked_add(it->second, v);
            if (it->second == 0) entries.erase(it);
        }
    }

    size_t nnz() const { return entries.size(); }
    bool is_zero() const { return entries.empty(); }

    bool operator==(const SparseIntMatrix& o) const {
        return rows == o.rows && cols == o.cols && entries == o.entries;
    }

    SparseIntMatrix transposed() const {
        SparseIntMatrix t(cols, rows);
        for (const auto& [k, v] : entries)
            t.entries.emplace(key(static_cast<int>(k & 0xffffffffu), static_cast<int>(k >> 32)), v);
        return t;
    }

    // this * rhs
    SparseIntMatrix multiply(const SparseIntMatrix& rhs) const {
        if (cols != rhs.rows) throw ValidationError("matrix product dimension mismatch");
        // column view of rhs
        std::vector<std::vector<std::pair<int, long long>>> rcols(rhs.cols);
        for (const auto& [k, v] : rhs.entries)
            rcols[static_cast<int>(k & 0xffffffffu)].emplace_back(static_cast<int>(k >> 32), v);
        // column view of this, indexed by the contraction index
        std::vector<std::vector<std::pair<int, long long>>> lcols(cols);
        for (const auto& [k, v] : entries)
            lcols[static_cast<int>(k & 0xffffffffu)].emplace_back(static_cast<int>(k >> 32), v);
        SparseIntMatrix out(rows, rhs.cols);
        for (int j = 0; j < rhs.cols; ++j) {
            if (rcols[j].empty()) continue;
            std::unordered_map<int, long long> acc;
            for (const auto& [mid, v2] : rcols[j])
                for (const auto& [r, v1] : lcols[mid]) {
                    long long& slot = acc[r];
                    slot = checked_add(slot, checked_mul(v1, v2));
                }
            for (const auto& [r, v] : acc)
                if (v != 0) out.entries.emplace(key(r, j), v);
        }
        return out;
    }

    // columns()[j] = sorted (row, value) pairs of column j
    std::vector<std::vector<std::pair<int, long long>>> column_lists() const {
        std::vector<std::vector<std::pair<int, long long>>> out(cols);
        for (const auto& [k, v] : entries)
            out[static_cast<int>(k & 0xffffffffu)].emplace_back(static_cast<int>(k >> 32), v);
        for (auto& c : out) std::sort(c.begin(), c.end());
        return out;
    }

    // matrix * vector
    std::vector<long long> apply(const std::vector<long long>& x) const {
        if (static_cast<int>(x.size()) != cols) throw ValidationError("apply: size mismatch");
        std::vector<long long> y(rows, 0);
        for (const auto& [k, v] : entries) {
            int r = static_cast<int>(k >> 32), c = static_cast<int>(k & 0xffffffffu);
            y[r] = checked_add(y[r], checked_mul(v, x[c]));
        }
        return y;
    }
};

}  // namespace kpn
