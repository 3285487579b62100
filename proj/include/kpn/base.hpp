#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kpn/coeff.hpp"
#include "kpn/smith.hpp"

namespace kpn {

// vertex list with entry j removed
std::vector<int> simplex_face(const std::vector<int>& s, int j);

// Finite ordered simplicial complex: strictly increasing vertex tuples,
// closed under faces. Immutable after construction.
class BaseComplex {
  public:
    BaseComplex() = default;
    // closes the given simplices under faces; vertex entries must be < vertices
    static BaseComplex from_simplices(int vertices, const std::vector<std::vector<int>>& simps);

    int vertex_count() const { return nverts_; }
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    int count(int d) const {
        return (d < 0 || d > dim()) ? 0 : static_cast<int>(by_dim_[d].size());
    }
    const std::vector<int>& simplex(int d, int id) const { return by_dim_[d][id]; }
    int index(const std::vector<int>& s) const;  // -1 when absent
    bool contains(const std::vector<int>& s) const { return index(s) >= 0; }

  private:
    int nverts_ = 0;
    std::vector<std::vector<std::vector<int>>> by_dim_;
    std::map<std::vector<int>, int> idx_;
};

// Cochain of degree k with values in pi; keys are simplex ids of that degree,
// values nonzero and normalized.
struct BaseCochain {
    int degree = 0;
    CoeffGroup group;
    std::map<int, long long> values;

    BaseCochain() = default;
    BaseCochain(int deg, CoeffGroup g) : degree(deg), group(g) {}

    long long value(int id) const {
        auto it = values.find(id);
        return it == values.end() ? 0 : it->second;
    }
    void set(int id, long long v) {
        v = group.normalize(v);
        if (v == 0)
            values.erase(id);
        else
            values[id] = v;
    }
    void add(int id, long long v) { set(id, group.add(value(id), v)); }
    bool is_zero() const { return values.empty(); }
    bool operator==(const BaseCochain& o) const {
        return degree == o.degree && group == o.group && values == o.values;
    }
};

BaseCochain cochain_add(const BaseCochain& a, const BaseCochain& b);
BaseCochain cochain_sub(const BaseCochain& a, const BaseCochain& b);

// Integral simplicial chain (test and prism-operator carrier).
struct BaseChain {
    int degree = 0;
    std::map<int, long long> coeffs;

    void add(int id, long long v) {
        if (v == 0) return;
        coeffs[id] += v;
        if (coeffs[id] == 0) coeffs.erase(id);
    }
    bool operator==(const BaseChain& o) const {
        return degree == o.degree && coeffs == o.coeffs;
    }
};

BaseChain chain_boundary(const BaseComplex& K, const BaseChain& ch);
long long evaluate(const CoeffGroup& g, const BaseCochain& c, const BaseChain& ch);

// (delta c)(sigma) = sum_j (-1)^j c(sigma_j)
BaseCochain coboundary(const BaseComplex& K, const BaseCochain& c);
bool is_cocycle(const BaseComplex& K, const BaseCochain& c);

// witness b with delta b = c1 - c2, solved exactly (Z via Smith form, Z/m via
// the lifted system); nullopt when the classes differ
std::optional<BaseCochain> cohomologous(const BaseComplex& K, const BaseCochain& c1,
                                        const BaseCochain& c2);

// Pullback of z along the vertex map f : S -> T. A simplex whose image fails
// to be strictly increasing is collapsed and contributes zero.
BaseCochain pullback(const BaseComplex& S, const std::vector<int>& f, const BaseComplex& T,
                     const BaseCochain& z);

// Cochain of T supported on the f-image of S (f injective, order preserving).
BaseCochain embed_cochain(const BaseComplex& S, const std::vector<int>& f, const BaseComplex& T,
                          const BaseCochain& c);

// K x I, triangulated by the monotone-path (shuffle) simplices
// (b_0..b_i b'_i..b'_m). Vertex (v, level) has id level * N + v.
struct Prism {
    BaseComplex complex;
    int base_vertices = 0;
    std::vector<int> bottom;      // i_0 : K -> K x I
    std::vector<int> top;         // i_1 : K -> K x I
    std::vector<int> projection;  // K x I -> K (vertexwise)
};
Prism make_prism(const BaseComplex& K);

// K x Delta^2 with the same shuffle triangulation.
struct Prism2 {
    BaseComplex complex;
    int base_vertices = 0;
    std::vector<int> at_vertex0, at_vertex1, at_vertex2;  // K -> K x Delta^2
    std::vector<int> on_edge01, on_edge12, on_edge02;     // K x I -> K x Delta^2
    std::vector<int> projection;                          // K x Delta^2 -> K
};
Prism2 make_prism2(const BaseComplex& K);

// Prism chain over an m-simplex: sum_i (-1)^i (b_0..b_i b'_i..b'_m).
// Satisfies d w1 + w1 d = i1 - i0 at chain level.
BaseChain w1_chain(const Prism& P, const std::vector<int>& sigma);

// Shuffle chain triangulating sigma x Delta^2:
// sum_{i<=j} (-1)^(i+j) (level-0 up to i, level-1 i..j, level-2 j..m).
// Satisfies d w2 - w2 d = (i01 + i12 - i02) w1.
BaseChain w2_chain(const Prism2& P, const std::vector<int>& sigma);

// small standard complexes
BaseComplex point_complex();
BaseComplex full_simplex(int n);
BaseComplex boundary_of_simplex(int n);

}  // namespace kpn
