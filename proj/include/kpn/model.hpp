#pragma once

#include <tuple>
#include <unordered_map>
#include <vector>

#include "kpn/algebra.hpp"
#include "kpn/base.hpp"
#include "kpn/em.hpp"
#include "kpn/smith.hpp"

namespace kpn {

// Generator of the twisted cubical complex K x_z L(pi,n): a pair of a
// p-simplex of the base and a nondegenerate q-cube of the fiber complex.
struct TwistedGen {
    int p = 0;
    int sigma = 0;
    CubeId tau = 0;
    bool operator==(const TwistedGen& o) const {
        return p == o.p && sigma == o.sigma && tau == o.tau;
    }
};

struct ModelOptions {
    int max_degree = 3;
    HomCoeff coeff = HomCoeff::integers();
    bool corrupt_sign = false;  // negative control: flips one twisted-face sign
    bool parallel = true;
};

// The model complex: basis per total degree and the boundary matrices of the
// cubical face structure. Bases depend only on (K, pi, n); the differential
// carries the twist by z.
class TwistedComplex {
  public:
    TwistedComplex(const BaseComplex* K, EmContext* L, BaseCochain z, ModelOptions opt);

    const BaseComplex* base() const { return K_; }
    EmContext* fiber() const { return L_; }
    const BaseCochain& cocycle() const { return z_; }
    HomCoeff coeff() const { return opt_.coeff; }
    int max_degree() const { return opt_.max_degree; }

    const std::vector<TwistedGen>& basis(int m) const { return basis_[m]; }
    int index_of(int m, int p, int sigma, CubeId tau) const;
    const SparseIntMatrix& boundary(int m) const { return d_[m]; }

    // single cubical face of a generator, before normalization (the cube part
    // may come out degenerate; cochain evaluation treats those as zero)
    struct RawFace {
        int p;
        int sigma;
        EmCubeData tau;
    };
    RawFace face(int m, const TwistedGen& g, int dir, int eps) const;
    RawFace face_raw_pair(int p, int sigma, const EmCubeData& tau, int dir, int eps) const;

    // boundary of degree m rebuilt through the module action of the twisting
    // element: d_Y + a . (-); must match boundary(m) entrywise
    SparseIntMatrix cap_boundary(int m, const AlgebraElement& a) const;

    // matrix of y -> y + u.y on degree m (square)
    SparseIntMatrix phi_matrix(const AlgebraElement& u, int m) const;

    std::vector<HomologyGroup> homology(int max_deg) const;

    CubeId kappa_of(int r, int sigma) const { return kappa_[r][sigma]; }

  private:
    void build();

    const BaseComplex* K_;
    EmContext* L_;
    BaseCochain z_;
    ModelOptions opt_;
    std::vector<std::vector<CubeId>> kappa_;  // [dim r >= 1][simplex id]
    std::vector<std::vector<TwistedGen>> basis_;
    std::vector<std::unordered_map<uint64_t, int>> index_;
    std::vector<SparseIntMatrix> d_;
};

TwistedComplex build_model(const BaseComplex& K, const BaseCochain& z, EmContext& L,
                           ModelOptions opt);

std::vector<HomologyGroup> model_homology(const BaseComplex& K, const BaseCochain& z,
                                          EmContext& L, int max_deg, HomCoeff coeff);

// Normalized cochain of the model with values in the ring Lambda (Z or Z/m).
struct ModelCochain {
    int degree = 0;
    CoeffGroup ring;
    std::map<int, long long> values;  // basis index -> value

    long long value(int i) const {
        auto it = values.find(i);
        return it == values.end() ? 0 : it->second;
    }
    void set(int i, long long v) {
        v = ring.normalize(v);
        if (v == 0)
            values.erase(i);
        else
            values[i] = v;
    }
    void add(int i, long long v) { set(i, ring.add(value(i), v)); }
    bool is_zero() const { return values.empty(); }
    bool operator==(const ModelCochain& o) const {
        return degree == o.degree && ring == o.ring && values == o.values;
    }
};

ModelCochain cochain_unit(const TwistedComplex& Y, CoeffGroup ring);

// Serre cup product over the front-0 / back-1 face decompositions.
ModelCochain cup_product(const TwistedComplex& Y, const ModelCochain& x, const ModelCochain& y);

// adjoint of the twisted boundary
ModelCochain model_coboundary(const TwistedComplex& Y, const ModelCochain& x);

ModelCochain model_cochain_add(const ModelCochain& a, const ModelCochain& b);
ModelCochain model_cochain_sub(const ModelCochain& a, const ModelCochain& b);
ModelCochain model_cochain_scaled(const ModelCochain& a, long long k);

// The induced automorphism of H_m(Y_z; F_p) under y -> (1 + u(c, z)) y for an
// n-cocycle c, as a square matrix in a homology basis chosen internally (the
// basis depends only on (Y, m, p), so matrices of different cocycles compose).
std::vector<std::vector<long long>> homology_action_matrix(const TwistedComplex& Y,
                                                           const BaseCochain& c, int m,
                                                           long long p);

}  // namespace kpn
