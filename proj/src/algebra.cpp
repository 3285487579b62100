#include "kpn/algebra.hpp"

#include <algorithm>

#include "kpn/errors.hpp"

namespace kpn {

AlgebraElement AlgebraElement::unit(const BaseComplex* K, EmContext* L) {
    AlgebraElement e(K, L);
    CubeId one = L->unit();
    for (int v = 0; v < K->count(0); ++v) e.add_term(0, 0, v, one, 1);
    return e;
}

void AlgebraElement::add_term(int s, int t, int simplex, CubeId cube, long long coeff) {
    if (coeff == 0) return;
    if (L_->is_degenerate(cube)) return;
    auto& bys = comp_[{s, t}];
    auto& slot = bys[simplex];
    auto [it, inserted] = slot.try_emplace(cube, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) slot.erase(it);
    }
    if (slot.empty()) bys.erase(simplex);
    if (bys.empty()) comp_.erase({s, t});
}

void AlgebraElement::add_chain(int s, int t, int simplex, const CubeChain& ch, long long scale) {
    for (auto [c, k] : ch) add_term(s, t, simplex, c, checked_mul(k, scale));
}

const CubeChain* AlgebraElement::chain_at(int s, int t, int simplex) const {
    auto it = comp_.find({s, t});
    if (it == comp_.end()) return nullptr;
    auto jt = it->second.find(simplex);
    return jt == it->second.end() ? nullptr : &jt->second;
}

std::vector<std::pair<int, int>> AlgebraElement::bidegrees() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [st, bys] : comp_) out.push_back(st);
    return out;
}

AlgebraElement AlgebraElement::plus(const AlgebraElement& o) const {
    AlgebraElement out = *this;
    for (const auto& [st, bys] : o.comp_)
        for (const auto& [sig, ch] : bys) out.add_chain(st.first, st.second, sig, ch);
    return out;
}

AlgebraElement AlgebraElement::minus(const AlgebraElement& o) const {
    AlgebraElement out = *this;
    for (const auto& [st, bys] : o.comp_)
        for (const auto& [sig, ch] : bys) out.add_chain(st.first, st.second, sig, ch, -1);
    return out;
}

AlgebraElement AlgebraElement::scaled(long long k) const {
    AlgebraElement out(K_, L_);
    if (k == 0) return out;
    for (const auto& [st, bys] : comp_)
        for (const auto& [sig, ch] : bys) out.add_chain(st.first, st.second, sig, ch, k);
    return out;
}

AlgebraElement AlgebraElement::product(const AlgebraElement& o) const {
    if (K_ != o.K_ || L_ != o.L_) throw ValidationError("algebra product: context mismatch");
    AlgebraElement out(K_, L_);
    for (const auto& [st, bys] : comp_) {
        auto [s, t] = st;
        for (const auto& [st2, bys2] : o.comp_) {
            auto [s2, t2] = st2;
            int S = s + s2;
            if (S > K_->dim()) continue;
            int sign = ((t * (s2 + t2)) % 2) ? -1 : 1;
            for (int sig = 0; sig < K_->count(S); ++sig) {
                const auto& verts = K_->simplex(S, sig);
                std::vector<int> front(verts.begin(), verts.begin() + s + 1);
                std::vector<int> back(verts.begin() + s, verts.end());
                auto it1 = bys.find(K_->index(front));
                if (it1 == bys.end()) continue;
                auto it2 = bys2.find(K_->index(back));
                if (it2 == bys2.end()) continue;
                for (auto [c1, k1] : it1->second)
                    for (auto [c2, k2] : it2->second)
                        out.add_term(S, t + t2, sig, L_->product(c1, c2),
                                     checked_mul(sign, checked_mul(k1, k2)));
            }
        }
    }
    return out;
}

AlgebraElement AlgebraElement::differential() const {
    AlgebraElement out(K_, L_);
    for (const auto& [st, bys] : comp_) {
        auto [s, t] = st;
        int dsign = ((s + t) % 2) ? -1 : 1;
        // simplicial part: (-1)^(s+t) (x o del) in bidegree (s+1, t)
        if (s + 1 <= K_->dim()) {
            for (int sig = 0; sig < K_->count(s + 1); ++sig) {
                const auto& verts = K_->simplex(s + 1, sig);
                for (size_t j = 0; j < verts.size(); ++j) {
                    auto it = bys.find(K_->index(simplex_face(verts, static_cast<int>(j))));
                    if (it == bys.end()) continue;
                    out.add_chain(s + 1, t, sig, it->second, (j % 2) ? -dsign : dsign);
                }
            }
        }
        // fiber part: -d_L x in bidegree (s, t-1)
        if (t >= 1) {
            for (const auto& [sig, ch] : bys)
                for (auto [c, k] : ch)
                    for (int i = 1; i <= t; ++i) {
                        int isign = (i % 2) ? -1 : 1;
                        for (int eps = 0; eps <= 1; ++eps) {
                            CubeId f = L_->face(c, i, eps);
                            long long w = checked_mul(k, (eps == 0) ? isign : -isign);
                            out.add_term(s, t - 1, sig, f, -w);
                        }
                    }
        }
    }
    return out;
}

AlgebraElement AlgebraElement::pullback_along(const BaseComplex* S,
                                              const std::vector<int>& f) const {
    AlgebraElement out(S, L_);
    for (const auto& [st, bys] : comp_) {
        auto [s, t] = st;
        if (s > S->dim()) continue;
        for (int sig = 0; sig < S->count(s); ++sig) {
            const auto& verts = S->simplex(s, sig);
            std::vector<int> img(verts.size());
            bool inc = true;
            for (size_t i = 0; i < verts.size(); ++i) {
                img[i] = f[verts[i]];
                if (i > 0 && img[i] <= img[i - 1]) inc = false;
            }
            if (!inc) continue;
            auto it = bys.find(K_->index(img));
            if (it != bys.end()) out.add_chain(s, t, sig, it->second);
        }
    }
    return out;
}

CubeChain AlgebraElement::component_on_chain(int s, int t, const BaseChain& ch) const {
    if (ch.degree != s) throw ValidationError("component_on_chain: degree mismatch");
    CubeChain out;
    for (auto [sig, k] : ch.coeffs) {
        const CubeChain* c = chain_at(s, t, sig);
        if (!c) continue;
        for (auto [cube, v] : *c) {
            long long nv = checked_add(out.count(cube) ? out[cube] : 0, checked_mul(k, v));
            if (nv == 0)
                out.erase(cube);
            else
                out[cube] = nv;
        }
    }
    return out;
}

std::vector<std::tuple<int, int, int, CubeId, long long>> AlgebraElement::terms() const {
    std::vector<std::tuple<int, int, int, CubeId, long long>> out;
    for (const auto& [st, bys] : comp_)
        for (const auto& [sig, ch] : bys)
            for (auto [c, k] : ch) out.emplace_back(st.first, st.second, sig, c, k);
    return out;
}

AlgebraElement AlgebraElement::coefficients_mod(long long m) const {
    AlgebraElement out(K_, L_);
    for (const auto& [st, bys] : comp_)
        for (const auto& [sig, ch] : bys)
            for (auto [c, k] : ch) out.add_term(st.first, st.second, sig, c, ((k % m) + m) % m);
    return out;
}

std::optional<int> AlgebraElement::homogeneous_degree() const {
    if (comp_.empty()) return 0;
    int deg = comp_.begin()->first.first - comp_.begin()->first.second;
    for (const auto& [st, bys] : comp_)
        if (st.first - st.second != deg) return std::nullopt;
    return deg;
}

EmCubeData kappa_raw(const BaseComplex& K, const BaseCochain& z, const std::vector<int>& sigma,
                     EmContext& L) {
    int n = L.n();
    int m = static_cast<int>(sigma.size()) - 2;
    if (m < 0) throw ValidationError("kappa needs a simplex of dimension >= 1");
    if (z.degree != n + 1) throw ValidationError("kappa: cocycle degree must be n+1");
    if (m < n) return L.zero_cube_raw(m);

    std::vector<std::pair<uint32_t, long long>> raw;
    CellTable cells(m, n);
    for (int ci = 0; ci < cells.size(); ++ci) {
        CubeCell u = cells.cell(ci);
        // view u inside I^{m+1} as a cell of the wall x_1 = 0
        CubeCell w = u.insert_fixed(1, 0);
        int first_free = 0, last_free = 0;
        for (int i = 1; i <= m + 1; ++i)
            if (w.is_free(i)) {
                if (!first_free) first_free = i;
                last_free = i;
            }
        // matching pattern: every fixed letter strictly inside the free block is 1
        bool match = true;
        for (int i = first_free + 1; i < last_free && match; ++i)
            if (!w.is_free(i) && !w.is_one(i)) match = false;
        if (!match) continue;
        // rightmost zero among the letters before the free block (the wall
        // letter at position 1 not included)
        int j = 0;
        for (int i = 2; i < first_free; ++i)
            if (!w.is_one(i)) j = i;
        CubeCell lifted = w;
        if (j == 0) {
            lifted.free_mask |= 1u;  // all leading letters are 1: free the wall letter
        } else {
            lifted.free_mask |= 1u << (j - 1);
            lifted.ones_mask = static_cast<uint16_t>(lifted.ones_mask & ~(1u << (j - 1)));
            for (int i = 1; i < j; ++i)  // everything left of the new free letter becomes 1
                lifted.ones_mask |= 1u << (i - 1);
        }
        auto img = cube_image_simplex(lifted, m + 1);
        if (static_cast<int>(img.size()) != n + 2)
            throw ValidationError("kappa: lifted cube not carried onto an (n+1)-simplex");
        std::vector<int> face(img.size());
        for (size_t a = 0; a < img.size(); ++a) face[a] = sigma[img[a]];
        int fid = K.index(face);
        if (fid < 0) throw ValidationError("kappa: face not in complex");
        long long val = z.value(fid);
        if (val != 0) raw.emplace_back(u.code(), val);
    }
    EmCubeData d = L.canonicalize(static_cast<uint8_t>(m), std::move(raw));
    L.validate(d);  // a cocycle whenever z is one
    return d;
}

CubeId kappa(const BaseComplex& K, const BaseCochain& z, const std::vector<int>& sigma,
             EmContext& L) {
    return L.intern(kappa_raw(K, z, sigma, L));
}

AlgebraElement twisting_cochain(const BaseComplex& K, const BaseCochain& z, EmContext& L) {
    if (!(z.group == L.pi())) throw ValidationError("twisting_cochain: coefficient mismatch");
    if (!is_cocycle(K, z)) throw NotACocycle("twisting_cochain requires a cocycle");
    AlgebraElement a(&K, &L);
    for (int s = 2; s <= K.dim(); ++s)
        for (int sig = 0; sig < K.count(s); ++sig)
            a.add_term(s, s - 1, sig, kappa(K, z, K.simplex(s, sig), L), 1);
    return a;
}

BaseCochain beta(const AlgebraElement& a) {
    EmContext* L = a.fiber();
    const BaseComplex* K = a.base();
    int n = L->n();
    if (a.is_zero()) return BaseCochain(n + 1, L->pi());
    int s_low = -1;
    for (auto [s, t] : a.bidegrees())
        if (t == n && (s_low < 0 || s < s_low)) s_low = s;
    if (s_low < 0) throw MissingComponent("beta: no component with cube degree n");
    BaseCochain out(s_low, L->pi());
    CubeCell top = CubeCell::top(n);
    for (int sig = 0; sig < K->count(s_low); ++sig) {
        const CubeChain* ch = a.chain_at(s_low, n, sig);
        if (!ch) continue;
        long long acc = 0;
        for (auto [c, k] : *ch) {
            const EmCubeData& d = L->cube(c);
            for (auto [code, v] : d.values)
                if (code == top.code()) acc = L->pi().add(acc, L->pi().scale(k, v));
        }
        out.set(sig, acc);
    }
    return out;
}

AlgebraElement unipotent_inverse(const AlgebraElement& g) {
    const BaseComplex* K = g.base();
    EmContext* L = g.fiber();
    AlgebraElement one = AlgebraElement::unit(K, L);
    AlgebraElement r = one.minus(g);  // -p, raises the base degree
    AlgebraElement acc = one;
    AlgebraElement term = r;
    for (int k = 0; k <= K->dim() + 1 && !term.is_zero(); ++k) {
        acc = acc.plus(term);
        term = term.product(r);
    }
    if (!term.is_zero()) throw ValidationError("unipotent_inverse: series did not terminate");
    return acc;
}

AlgebraElement gauge_transform(const AlgebraElement& a, const AlgebraElement& g) {
    AlgebraElement ginv = unipotent_inverse(g);
    return ginv.product(a).product(g).plus(ginv.product(g.differential()));
}

AlgebraElement u_from_prism_cocycle(const BaseComplex& K, const Prism& P, const BaseCochain& zP,
                                    EmContext& L) {
    AlgebraElement aP = twisting_cochain(P.complex, zP, L);
    AlgebraElement u(&K, &L);
    for (int m = 0; m <= K.dim(); ++m)
        for (int sig = 0; sig < K.count(m); ++sig) {
            CubeChain ch = aP.component_on_chain(m + 1, m, w1_chain(P, K.simplex(m, sig)));
            u.add_chain(m, m, sig, ch);
        }
    return u;
}

AlgebraElement u_element(const BaseComplex& K, const BaseCochain& c, const BaseCochain& z,
                         EmContext& L) {
    if (c.degree != L.n()) throw ValidationError("u_element: cochain degree must be n");
    Prism P = make_prism(K);
    // c sits on the top copy, so the bottom restriction is z and the top one
    // is z + delta c; gauging a(z) by 1 + u then lands on a(z + delta c)
    BaseCochain zP = cochain_add(pullback(P.complex, P.projection, K, z),
                                 coboundary(P.complex, embed_cochain(K, P.top, P.complex, c)));
    return u_from_prism_cocycle(K, P, zP, L);
}

AlgebraElement v_element(const BaseComplex& K, const Prism2& P2, const BaseCochain& z2,
                         EmContext& L) {
    AlgebraElement a2 = twisting_cochain(P2.complex, z2, L);
    AlgebraElement v(&K, &L);
    for (int m = 0; m <= K.dim(); ++m)
        for (int sig = 0; sig < K.count(m); ++sig) {
            CubeChain ch = a2.component_on_chain(m + 2, m + 1, w2_chain(P2, K.simplex(m, sig)));
            v.add_chain(m, m + 1, sig, ch);
        }
    return v;
}

}  // namespace kpn
