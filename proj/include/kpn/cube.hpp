#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "kpn/sparse.hpp"

namespace kpn {

// A cell of the standard cube I^p: a length-p word over {Fix0, Fix1, Free},
// packed as two bitmasks. Bit i-1 describes letter i (directions are 1-based).
// dim = popcount(free_mask). Supports p <= 15.
struct CubeCell {
    uint16_t free_mask = 0;
    uint16_t ones_mask = 0;  // disjoint from free_mask

    bool operator==(const CubeCell& o) const {
        return free_mask == o.free_mask && ones_mask == o.ones_mask;
    }
    bool operator<(const CubeCell& o) const {
        return code() < o.code();
    }
    uint32_t code() const { return (static_cast<uint32_t>(free_mask) << 16) | ones_mask; }
    static CubeCell from_code(uint32_t c) {
        return {static_cast<uint16_t>(c >> 16), static_cast<uint16_t>(c & 0xffffu)};
    }

    int dim() const { return __builtin_popcount(free_mask); }
    bool is_free(int i) const { return (free_mask >> (i - 1)) & 1; }
    bool is_one(int i) const { return (ones_mask >> (i - 1)) & 1; }

    // whole cube of I^p
    static CubeCell top(int p) { return {static_cast<uint16_t>((1u << p) - 1), 0}; }

    // insert a fixed letter (value eps) at direction i, shifting letters >= i up
    CubeCell insert_fixed(int i, int eps) const;
    // insert a free letter at direction i
    CubeCell insert_free(int i) const;
    // remove letter at direction i, shifting letters > i down
    CubeCell remove_letter(int i) const;

    std::vector<uint8_t> letters(int p) const;  // 0, 1, 2=Free; for diagnostics
};

// Signed list of facets: the j-th Free letter (1-based, left to right) set to
// Fix0 carries sign (-1)^j, set to Fix1 carries -(-1)^j.
std::vector<std::pair<CubeCell, int>> cell_faces(const CubeCell& c);

// All cells of I^p of dimension k, in a fixed deterministic order.
class CellTable {
  public:
    CellTable(int p, int k);
    int p() const { return p_; }
    int size() const { return static_cast<int>(cells_.size()); }
    const CubeCell& cell(int i) const { return cells_[i]; }
    int index(const CubeCell& c) const;  // -1 if not a k-cell of I^p

  private:
    int p_;
    std::vector<CubeCell> cells_;
    std::unordered_map<uint32_t, int> index_;
};

// Cellular coboundary of I^p in degree k: matrix from k-cells to (k+1)-cells,
// entry (C, c) = sign of c in cell_faces(C).
SparseIntMatrix coboundary_matrix(int p, int k);

// Vertex of the standard simplex hit by a cube corner under the collapse map
// I^m -> Delta_m: the number of leading ones.
int psi_vertex(const std::vector<int>& corner);

// The face of Delta_p spanned by the images of the corners of c (sorted,
// deduplicated vertex indices). c maps onto a nondegenerate dim(c)-simplex
// iff the result has dim(c)+1 elements.
std::vector<int> cube_image_simplex(const CubeCell& c, int p);

}  // namespace kpn
