#include "kpn/cube.hpp"

#include "kpn/errors.hpp"

namespace kpn {

namespace {

uint16_t insert_bit(uint16_t mask, int pos0, int bit) {
    uint16_t low = mask & ((1u << pos0) - 1);
    uint16_t high = mask >> pos0;
    return static_cast<uint16_t>(low | (bit << pos0) | (high << (pos0 + 1)));
}

uint16_t remove_bit(uint16_t mask, int pos0) {
    uint16_t low = mask & ((1u << pos0) - 1);
    uint16_t high = mask >> (pos0 + 1);
    return static_cast<uint16_t>(low | (high << pos0));
}

}  // namespace

CubeCell CubeCell::insert_fixed(int i, int eps) const {
    return {insert_bit(free_mask, i - 1, 0), insert_bit(ones_mask, i - 1, eps)};
}

CubeCell CubeCell::insert_free(int i) const {
    return {insert_bit(free_mask, i - 1, 1), insert_bit(ones_mask, i - 1, 0)};
}

CubeCell CubeCell::remove_letter(int i) const {
    return {remove_bit(free_mask, i - 1), remove_bit(ones_mask, i - 1)};
}

std::vector<uint8_t> CubeCell::letters(int p) const {
    std::vector<uint8_t> out(p);
    for (int i = 1; i <= p; ++i) out[i - 1] = is_free(i) ? 2 : (is_one(i) ? 1 : 0);
    return out;
}

std::vector<std::pair<CubeCell, int>> cell_faces(const CubeCell& c) {
    std::vector<std::pair<CubeCell, int>> out;
    int j = 0;
    for (int i = 1; i <= 16; ++i) {
        if (!c.is_free(i)) continue;
        ++j;  // j-th Free letter
        int sign = (j % 2) ? -1 : 1;
        CubeCell f0 = c;
        f0.free_mask &= ~(1u << (i - 1));
        CubeCell f1 = f0;
        f1.ones_mask |= (1u << (i - 1));
        out.emplace_back(f0, sign);
        out.emplace_back(f1, -sign);
    }
    return out;
}

CellTable::CellTable(int p, int k) : p_(p) {
    if (p < 0 || p > 15) throw BadCell("cube dimension out of supported range");
    if (k < 0 || k > p) return;  // empty
    for (uint32_t free = 0; free < (1u << p); ++free) {
        if (__builtin_popcount(free) != k) continue;
        uint32_t rest = ~free & ((1u << p) - 1);
        // iterate subsets of rest in increasing order
        uint32_t ones = 0;
        while (true) {
            CubeCell c{static_cast<uint16_t>(free), static_cast<uint16_t>(ones)};
            index_.emplace(c.code(), static_cast<int>(cells_.size()));
            cells_.push_back(c);
            if (ones == rest) break;
            ones = (ones - rest) & rest;  // next subset
        }
    }
}

int CellTable::index(const CubeCell& c) const {
    auto it = index_.find(c.code());
    return it == index_.end() ? -1 : it->second;
}

SparseIntMatrix coboundary_matrix(int p, int k) {
    if (k < 0 || k >= p) throw ValidationError("coboundary_matrix requires 0 <= k < p");
    CellTable src(p, k), dst(p, k + 1);
    SparseIntMatrix m(dst.size(), src.size());
    for (int r = 0; r < dst.size(); ++r)
        for (const auto& [f, sign] : cell_faces(dst.cell(r))) {
            int c = src.index(f);
            m.add(r, c, sign);
        }
    return m;
}

int psi_vertex(const std::vector<int>& corner) {
    int count = 0;
    for (int x : corner) {
        if (x != 0 && x != 1) throw BadCell("corner entries must be 0/1");
        if (x == 1)
            ++count;
        else
            break;
    }
    return count;
}

std::vector<int> cube_image_simplex(const CubeCell& c, int p) {
    std::vector<int> verts;
    int d = c.dim();
    std::vector<int> free_pos;
    for (int i = 1; i <= p; ++i)
        if (c.is_free(i)) free_pos.push_back(i);
    for (uint32_t a = 0; a < (1u << d); ++a) {
        // corner: fixed letters as given, free letter j set to bit j of a
        int lead = 0;
        for (int i = 1; i <= p; ++i) {
            int bit;
            if (c.is_free(i)) {
                int j = static_cast<int>(std::lower_bound(free_pos.begin(), free_pos.end(), i) -
                                         free_pos.begin());
                bit = (a >> j) & 1;
            } else {
                bit = c.is_one(i) ? 1 : 0;
            }
            if (bit == 1)
                ++lead;
            else
                break;
        }
        verts.push_back(lead);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

}  // namespace kpn
