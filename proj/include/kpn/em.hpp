#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kpn/coeff.hpp"
#include "kpn/cube.hpp"
#include "kpn/smith.hpp"

namespace kpn {

using CubeId = uint32_t;

// A p-cube of L(pi,n): an n-cocycle on I^p. Values are kept canonical:
// sorted by cell code, nonzero, normalized into the group.
struct EmCubeData {
    uint8_t p = 0;
    std::vector<std::pair<uint32_t, long long>> values;  // (cell code, value)

    bool operator==(const EmCubeData& o) const { return p == o.p && values == o.values; }
    std::string key() const;
};

// Owner of all cubes of one complex L(pi,n): hash-consed storage, cubical
// operators, enumeration for finite pi, and the normalized chain complex.
//
// The *_raw operators are pure and safe to call concurrently; intern/lookup
// serialize through the store (lookup of existing cubes is read-only).
class EmContext {
  public:
    EmContext(CoeffGroup pi, int n, size_t cap = 1000000);

    const CoeffGroup& pi() const { return pi_; }
    int n() const { return n_; }
    size_t cap() const { return cap_; }
    void set_cap(size_t c) { cap_ = c; }
    void set_parallel(bool on) { parallel_ = on; }
    bool parallel() const { return parallel_; }

    // ---- pure cube operators ----
    EmCubeData canonicalize(uint8_t p, std::vector<std::pair<uint32_t, long long>> raw) const;
    void validate(const EmCubeData& d) const;  // BadCell / NotACocycle
    EmCubeData face_raw(const EmCubeData& t, int i, int eps) const;
    EmCubeData degeneracy_raw(const EmCubeData& t, int i) const;
    EmCubeData product_raw(const EmCubeData& a, const EmCubeData& b) const;
    bool is_degenerate_raw(const EmCubeData& t) const;
    std::optional<std::pair<int, EmCubeData>> degenerate_as_raw(const EmCubeData& t) const;
    EmCubeData zero_cube_raw(int p) const { return EmCubeData{static_cast<uint8_t>(p), {}}; }

    // ---- store ----
    CubeId intern(const EmCubeData& d);                     // trusted input
    std::optional<CubeId> lookup(const EmCubeData& d) const;  // read-only
    const EmCubeData& cube(CubeId id) const { return cubes_[id]; }
    CubeId make_cube(int p, const std::vector<std::pair<CubeCell, long long>>& values);
    CubeId zero_cube(int p) { return intern(zero_cube_raw(p)); }
    CubeId unit() { return zero_cube(0); }

    // ---- id-level operators (memoized) ----
    CubeId face(CubeId id, int i, int eps);
    CubeId degeneracy(CubeId id, int i);
    CubeId product(CubeId a, CubeId b);
    bool is_degenerate(CubeId id);
    std::optional<std::pair<int, CubeId>> degenerate_as(CubeId id);

    // ---- enumeration and the normalized chain complex (finite pi) ----
    // All q-cubes, each once, deterministic order. Serial reference path goes
    // through kernel_enumeration_mod_m; the parallel path blocks the kernel
    // coordinates across threads. Both produce identical lists.
    const std::vector<CubeId>& all_cubes(int q);
    const std::vector<CubeId>& basis(int q);  // nondegenerate q-cubes
    int basis_index(CubeId id) const;         // -1 when not a basis cube
    long long normalized_rank(int q) { return static_cast<long long>(basis(q).size()); }
    std::vector<long long> normalized_ranks(int up_to);
    const SparseIntMatrix& boundary_matrix(int q);  // normalized d: C_q -> C_{q-1}
    std::vector<HomologyGroup> homology(int max_deg, HomCoeff coeff);

  private:
    void require_finite(const char* what) const;
    std::vector<EmCubeData> enumerate_raw(int q) const;  // deterministic, parallel-aware

    CoeffGroup pi_;
    int n_;
    size_t cap_;
    bool parallel_ = true;

    std::vector<EmCubeData> cubes_;
    std::unordered_map<std::string, CubeId> ids_;

    std::unordered_map<uint64_t, CubeId> face_cache_;     // id<<8 | i<<1 | eps
    std::unordered_map<uint64_t, CubeId> degen_cache_;    // id<<8 | i
    std::unordered_map<uint64_t, CubeId> product_cache_;  // a<<32 | b
    std::unordered_map<CubeId, int> degenerate_flag_;     // -1 no, else direction

    std::unordered_map<int, std::vector<CubeId>> all_by_dim_;
    std::unordered_map<int, std::vector<CubeId>> basis_by_dim_;
    std::unordered_map<CubeId, int> basis_index_;
    std::unordered_map<int, SparseIntMatrix> boundary_;
};

int hardware_threads();

}  // namespace kpn
