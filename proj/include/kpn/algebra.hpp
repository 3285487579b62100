#pragma once

#include <map>
#include <utility>
#include <vector>

#include "kpn/base.hpp"
#include "kpn/em.hpp"

namespace kpn {

// integer combination of nondegenerate cubes
using CubeChain = std::map<CubeId, long long>;

// Element of the bigraded algebra A^{*,-*}(K, pi, n) = C^*(K, C_*(L(pi,n))):
// per bidegree (s,-t), a map from s-simplices of K to chains of t-cubes.
// Degenerate cubes are dropped on insertion (normalized coefficients).
//
// Sign conventions, fixed once and pinned by the identity tests:
//   d_A x = (-1)^(s+t) (x o del) - d_L x
//   (x.y)(sigma^{s+s'}) = (-1)^(t(s'+t')) x(front_s) o y(back_s')
// Under these the twisting cochain a(z) built from kappa satisfies
// d_A a = a.a exactly, and the module action in twisted_model reproduces
// the cubical boundary of K x_z L.
class AlgebraElement {
  public:
    AlgebraElement() = default;
    AlgebraElement(const BaseComplex* K, EmContext* L) : K_(K), L_(L) {}
    static AlgebraElement unit(const BaseComplex* K, EmContext* L);

    const BaseComplex* base() const { return K_; }
    EmContext* fiber() const { return L_; }

    bool is_zero() const { return comp_.empty(); }
    bool operator==(const AlgebraElement& o) const { return comp_ == o.comp_; }

    void add_term(int s, int t, int simplex, CubeId cube, long long coeff);
    void add_chain(int s, int t, int simplex, const CubeChain& ch, long long scale = 1);
    const CubeChain* chain_at(int s, int t, int simplex) const;
    std::vector<std::pair<int, int>> bidegrees() const;

    AlgebraElement plus(const AlgebraElement& o) const;
    AlgebraElement minus(const AlgebraElement& o) const;
    AlgebraElement scaled(long long k) const;
    AlgebraElement product(const AlgebraElement& o) const;
    AlgebraElement differential() const;

    // pullback along a vertex map f : S -> K (collapsed simplices give zero)
    AlgebraElement pullback_along(const BaseComplex* S, const std::vector<int>& f) const;

    // evaluate one component on an integral chain of the base
    CubeChain component_on_chain(int s, int t, const BaseChain& ch) const;

    // total degree when homogeneous, nullopt otherwise; zero element reports 0
    std::optional<int> homogeneous_degree() const;

    // flat listing (s, t, simplex, cube, coeff) of all stored terms
    std::vector<std::tuple<int, int, int, CubeId, long long>> terms() const;
    // copy with every coefficient reduced into [0, m)
    AlgebraElement coefficients_mod(long long m) const;

  private:
    const BaseComplex* K_ = nullptr;
    EmContext* L_ = nullptr;
    // (s, t) -> simplex id -> cube chain; all three levels sparse and nonzero
    std::map<std::pair<int, int>, std::map<int, CubeChain>> comp_;
};

// The m-cube kappa_z(sigma) attached to an (m+1)-simplex sigma (vertex list),
// built by the corner pattern rule; always an n-cocycle when z is a cocycle.
EmCubeData kappa_raw(const BaseComplex& K, const BaseCochain& z, const std::vector<int>& sigma,
                     EmContext& L);
CubeId kappa(const BaseComplex& K, const BaseCochain& z, const std::vector<int>& sigma,
             EmContext& L);

// The twisting cochain a(z): components (m+1, -m) carrying [kappa_z(sigma)].
// Requires z an (n+1)-cocycle with values in pi.
AlgebraElement twisting_cochain(const BaseComplex& K, const BaseCochain& z, EmContext& L);

// Read off the base cochain under alpha([g]) = g from the lowest component
// with cube degree n. For the zero element returns the zero (n+1)-cochain.
BaseCochain beta(const AlgebraElement& a);

// Inverse of 1 + p with p of positive filtration (geometric series; terminates
// because powers of p raise the base degree).
AlgebraElement unipotent_inverse(const AlgebraElement& g);

// (1+p) o a = (1+p)^{-1} a (1+p) + (1+p)^{-1} d(1+p)
AlgebraElement gauge_transform(const AlgebraElement& a, const AlgebraElement& g);

// u = w1^*(a(z_P)) for a cocycle z_P on the prism K x I
AlgebraElement u_from_prism_cocycle(const BaseComplex& K, const Prism& P, const BaseCochain& zP,
                                    EmContext& L);

// u(c, z) via the prism cocycle Pr^* z + delta(c embedded on the bottom)
AlgebraElement u_element(const BaseComplex& K, const BaseCochain& c, const BaseCochain& z,
                         EmContext& L);

// v = w2^*(a(z2)) for a cocycle z2 on K x Delta^2
AlgebraElement v_element(const BaseComplex& K, const Prism2& P2, const BaseCochain& z2,
                         EmContext& L);

}  // namespace kpn
