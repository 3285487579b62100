#pragma once

#include <optional>
#include <vector>

#include "kpn/coeff.hpp"
#include "kpn/sparse.hpp"

namespace kpn {

struct SmithResult {
    std::vector<long long> factors;  // positive, d_1 | d_2 | ... | d_r
    int rank = 0;
};

// Diagonalize by unimodular row/column operations; returns invariant factors and rank.
SmithResult smith_normal_form(const SparseIntMatrix& M);

// Dense variant tracking both transforms: D = U * M * V with U, V unimodular.
// Intended for small systems (solves, kernel enumeration).
struct SmithTransforms {
    std::vector<long long> factors;
    int rank = 0;
    std::vector<std::vector<long long>> U;  // rows x rows
    std::vector<std::vector<long long>> V;  // cols x cols
};
SmithTransforms smith_with_transforms(const SparseIntMatrix& M);

struct HomologyGroup {
    int degree = 0;
    long long betti = 0;
    std::vector<long long> torsion;  // invariant factors >= 2, each dividing the next

    bool operator==(const HomologyGroup& o) const {
        return degree == o.degree && betti == o.betti && torsion == o.torsion;
    }
    std::string to_string() const;
};

// H = ker d_m / im d_mplus1 where d_m: C_m -> C_{m-1} and d_mplus1: C_{m+1} -> C_m.
// Throws CompositionNonzero unless d_m * d_mplus1 == 0.
HomologyGroup homology_from_boundaries(const SparseIntMatrix& d_m,
                                       const SparseIntMatrix& d_mplus1, HomCoeff coeff,
                                       int degree = 0);

// All vectors v (entries in [0,m)) with M v == 0 mod m, each exactly once.
// Throws SizeLimitExceeded when the kernel has more than cap elements.
std::vector<std::vector<long long>> kernel_enumeration_mod_m(const SparseIntMatrix& M,
                                                             long long m, size_t cap);

// Number of solutions of M v == 0 mod m without materializing them.
long long kernel_count_mod_m(const SparseIntMatrix& M, long long m);

int rank_mod_p(const SparseIntMatrix& M, long long p);

// Solve A x = b exactly over Z (nullopt when no integral solution exists).
std::optional<std::vector<long long>> solve_integer(const SparseIntMatrix& A,
                                                    const std::vector<long long>& b);

// Solve A x == b (mod m); returned entries lie in [0, m).
std::optional<std::vector<long long>> solve_mod_m(const SparseIntMatrix& A,
                                                  const std::vector<long long>& b, long long m);

// Reusable test "x lies in the integral column span of A" (A fixed, many x).
class IntegerImageMembership {
  public:
    explicit IntegerImageMembership(const SparseIntMatrix& A);
    bool contains(const std::vector<long long>& x) const;

  private:
    int rows_;
    std::vector<std::vector<long long>> U_;  // row transform: D = U A V
    std::vector<long long> diag_;            // nonzero diagonal of D (length = rank)
    std::vector<int> diag_row_;              // row index (after transform) of each diagonal entry
};

// Same test modulo a prime p.
class ModpImageMembership {
  public:
    ModpImageMembership(const SparseIntMatrix& A, long long p);
    bool contains(const std::vector<long long>& x) const;

  private:
    long long p_;
    int rows_ = 0;
    // reduced pivot columns: pivot_row -> dense column (pivot normalized to 1)
    std::vector<std::vector<long long>> pivots_;
    std::vector<int> pivot_row_;
};

// Integer kernel basis of A (columns spanning ker A over Z), via SNF transforms.
// Dense; for small matrices.
std::vector<std::vector<long long>> integer_kernel_basis(const SparseIntMatrix& A);

}  // namespace kpn
