#include "kpn/base.hpp"

#include <algorithm>
#include <set>

#include "kpn/errors.hpp"

namespace kpn {

std::vector<int> simplex_face(const std::vector<int>& s, int j) {
    std::vector<int> out;
    out.reserve(s.size() - 1);
    for (size_t i = 0; i < s.size(); ++i)
        if (static_cast<int>(i) != j) out.push_back(s[i]);
    return out;
}

BaseComplex BaseComplex::from_simplices(int vertices,
                                        const std::vector<std::vector<int>>& simps) {
    BaseComplex K;
    K.nverts_ = vertices;
    std::set<std::vector<int>> all;
    std::vector<std::vector<int>> stack;
    for (const auto& s : simps) {
        if (s.empty()) throw FormatError("empty simplex");
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= vertices)
                throw FormatError("vertex out of range in simplex");
            if (i + 1 < s.size() && s[i] >= s[i + 1])
                throw FormatError("simplex vertices must be strictly increasing");
        }
        if (all.insert(s).second) stack.push_back(s);
    }
    while (!stack.empty()) {
        auto s = stack.back();
        stack.pop_back();
        if (s.size() == 1) continue;
        for (size_t j = 0; j < s.size(); ++j) {
            auto f = simplex_face(s, static_cast<int>(j));
            if (all.insert(f).second) stack.push_back(f);
        }
    }
    int maxd = -1;
    for (const auto& s : all) maxd = std::max(maxd, static_cast<int>(s.size()) - 1);
    K.by_dim_.resize(maxd + 1);
    for (const auto& s : all) K.by_dim_[s.size() - 1].push_back(s);
    for (auto& lst : K.by_dim_) std::sort(lst.begin(), lst.end());
    for (int d = 0; d <= maxd; ++d)
        for (size_t i = 0; i < K.by_dim_[d].size(); ++i)
            K.idx_[K.by_dim_[d][i]] = static_cast<int>(i);
    return K;
}

int BaseComplex::index(const std::vector<int>& s) const {
    auto it = idx_.find(s);
    return it == idx_.end() ? -1 : it->second;
}

BaseCochain cochain_add(const BaseCochain& a, const BaseCochain& b) {
    if (a.degree != b.degree || !(a.group == b.group))
        throw ValidationError("cochain sum: degree or group mismatch");
    BaseCochain out = a;
    for (auto [id, v] : b.values) out.add(id, v);
    return out;
}

BaseCochain cochain_sub(const BaseCochain& a, const BaseCochain& b) {
    if (a.degree != b.degree || !(a.group == b.group))
        throw ValidationError("cochain difference: degree or group mismatch");
    BaseCochain out = a;
    for (auto [id, v] : b.values) out.add(id, a.group.neg(v));
    return out;
}

BaseChain chain_boundary(const BaseComplex& K, const BaseChain& ch) {
    BaseChain out;
    out.degree = ch.degree - 1;
    for (auto [id, c] : ch.coeffs) {
        const auto& s = K.simplex(ch.degree, id);
        for (size_t j = 0; j < s.size(); ++j) {
            int f = K.index(simplex_face(s, static_cast<int>(j)));
            out.add(f, (j % 2) ? -c : c);
        }
    }
    return out;
}

long long evaluate(const CoeffGroup& g, const BaseCochain& c, const BaseChain& ch) {
    if (c.degree != ch.degree) throw ValidationError("evaluate: degree mismatch");
    long long acc = 0;
    for (auto [id, k] : ch.coeffs) acc = g.add(acc, g.scale(k, c.value(id)));
    return acc;
}

BaseCochain coboundary(const BaseComplex& K, const BaseCochain& c) {
    BaseCochain out(c.degree + 1, c.group);
    for (int id = 0; id < K.count(out.degree); ++id) {
        const auto& s = K.simplex(out.degree, id);
        long long acc = 0;
        for (size_t j = 0; j < s.size(); ++j) {
            int f = K.index(simplex_face(s, static_cast<int>(j)));
            long long v = c.value(f);
            acc = c.group.add(acc, (j % 2) ? c.group.neg(v) : v);
        }
        out.set(id, acc);
    }
    return out;
}

bool is_cocycle(const BaseComplex& K, const BaseCochain& c) {
    return coboundary(K, c).is_zero();
}

std::optional<BaseCochain> cohomologous(const BaseComplex& K, const BaseCochain& c1,
                                        const BaseCochain& c2) {
    if (c1.degree != c2.degree || !(c1.group == c2.group))
        throw ValidationError("cohomologous: degree or group mismatch");
    BaseCochain diff = cochain_sub(c1, c2);
    int k = c1.degree;
    if (k == 0) {
        if (diff.is_zero()) return BaseCochain(-1, c1.group);
        return std::nullopt;
    }
    // delta : C^{k-1} -> C^k as a matrix, then one exact solve
    int rows = K.count(k), cols = K.count(k - 1);
    SparseIntMatrix A(rows, cols);
    for (int id = 0; id < rows; ++id) {
        const auto& s = K.simplex(k, id);
        for (size_t j = 0; j < s.size(); ++j)
            A.add(id, K.index(simplex_face(s, static_cast<int>(j))), (j % 2) ? -1 : 1);
    }
    std::vector<long long> b(rows, 0);
    for (auto [id, v] : diff.values) b[id] = v;
    std::optional<std::vector<long long>> x = c1.group.is_modular()
                                                  ? solve_mod_m(A, b, c1.group.modulus)
                                                  : solve_integer(A, b);
    if (!x) return std::nullopt;
    BaseCochain w(k - 1, c1.group);
    for (int j = 0; j < cols; ++j) w.set(j, (*x)[j]);
    return w;
}

BaseCochain pullback(const BaseComplex& S, const std::vector<int>& f, const BaseComplex& T,
                     const BaseCochain& z) {
    BaseCochain out(z.degree, z.group);
    for (int id = 0; id < S.count(z.degree); ++id) {
        const auto& s = S.simplex(z.degree, id);
        std::vector<int> img(s.size());
        bool increasing = true;
        for (size_t i = 0; i < s.size(); ++i) {
            img[i] = f[s[i]];
            if (i > 0 && img[i] <= img[i - 1]) increasing = false;
        }
        if (!increasing) continue;  // collapsed simplex
        int tid = T.index(img);
        if (tid >= 0) out.set(id, z.value(tid));
    }
    return out;
}

BaseCochain embed_cochain(const BaseComplex& S, const std::vector<int>& f, const BaseComplex& T,
                          const BaseCochain& c) {
    BaseCochain out(c.degree, c.group);
    for (auto [id, v] : c.values) {
        const auto& s = S.simplex(c.degree, id);
        std::vector<int> img(s.size());
        for (size_t i = 0; i < s.size(); ++i) img[i] = f[s[i]];
        int tid = T.index(img);
        if (tid < 0) throw ValidationError("embed_cochain: image simplex missing");
        out.set(tid, v);
    }
    return out;
}

Prism make_prism(const BaseComplex& K) {
    Prism P;
    int n = K.vertex_count();
    P.base_vertices = n;
    std::vector<std::vector<int>> tops;
    for (int d = 0; d <= K.dim(); ++d)
        for (int id = 0; id < K.count(d); ++id) {
            const auto& s = K.simplex(d, id);
            int m = static_cast<int>(s.size()) - 1;
            for (int i = 0; i <= m; ++i) {
                std::vector<int> t;
                for (int a = 0; a <= i; ++a) t.push_back(s[a]);
                for (int a = i; a <= m; ++a) t.push_back(n + s[a]);
                tops.push_back(t);
            }
        }
    P.complex = BaseComplex::from_simplices(2 * n, tops);
    P.bottom.resize(n);
    P.top.resize(n);
    P.projection.resize(2 * n);
    for (int v = 0; v < n; ++v) {
        P.bottom[v] = v;
        P.top[v] = n + v;
        P.projection[v] = v;
        P.projection[n + v] = v;
    }
    return P;
}

Prism2 make_prism2(const BaseComplex& K) {
    Prism2 P;
    int n = K.vertex_count();
    P.base_vertices = n;
    std::vector<std::vector<int>> tops;
    for (int d = 0; d <= K.dim(); ++d)
        for (int id = 0; id < K.count(d); ++id) {
            const auto& s = K.simplex(d, id);
            int m = static_cast<int>(s.size()) - 1;
            for (int i = 0; i <= m; ++i)
                for (int j = i; j <= m; ++j) {
                    std::vector<int> t;
                    for (int a = 0; a <= i; ++a) t.push_back(s[a]);
                    for (int a = i; a <= j; ++a) t.push_back(n + s[a]);
                    for (int a = j; a <= m; ++a) t.push_back(2 * n + s[a]);
                    tops.push_back(t);
                }
        }
    P.complex = BaseComplex::from_simplices(3 * n, tops);
    P.at_vertex0.resize(n);
    P.at_vertex1.resize(n);
    P.at_vertex2.resize(n);
    P.on_edge01.resize(2 * n);
    P.on_edge12.resize(2 * n);
    P.on_edge02.resize(2 * n);
    P.projection.resize(3 * n);
    for (int v = 0; v < n; ++v) {
        P.at_vertex0[v] = v;
        P.at_vertex1[v] = n + v;
        P.at_vertex2[v] = 2 * n + v;
        P.on_edge01[v] = v;
        P.on_edge01[n + v] = n + v;
        P.on_edge12[v] = n + v;
        P.on_edge12[n + v] = 2 * n + v;
        P.on_edge02[v] = v;
        P.on_edge02[n + v] = 2 * n + v;
        P.projection[v] = v;
        P.projection[n + v] = v;
        P.projection[2 * n + v] = v;
    }
    return P;
}

BaseChain w1_chain(const Prism& P, const std::vector<int>& sigma) {
    int m = static_cast<int>(sigma.size()) - 1;
    int n = P.base_vertices;
    BaseChain out;
    out.degree = m + 1;
    for (int i = 0; i <= m; ++i) {
        std::vector<int> t;
        for (int a = 0; a <= i; ++a) t.push_back(sigma[a]);
        for (int a = i; a <= m; ++a) t.push_back(n + sigma[a]);
        int id = P.complex.index(t);
        if (id < 0) throw ValidationError("w1_chain: prism simplex missing");
        out.add(id, (i % 2) ? -1 : 1);
    }
    return out;
}

BaseChain w2_chain(const Prism2& P, const std::vector<int>& sigma) {
    int m = static_cast<int>(sigma.size()) - 1;
    int n = P.base_vertices;
    BaseChain out;
    out.degree = m + 2;
    for (int i = 0; i <= m; ++i)
        for (int j = i; j <= m; ++j) {
            std::vector<int> t;
            for (int a = 0; a <= i; ++a) t.push_back(sigma[a]);
            for (int a = i; a <= j; ++a) t.push_back(n + sigma[a]);
            for (int a = j; a <= m; ++a) t.push_back(2 * n + sigma[a]);
            int id = P.complex.index(t);
            if (id < 0) throw ValidationError("w2_chain: prism simplex missing");
            out.add(id, ((i + j) % 2) ? -1 : 1);
        }
    return out;
}

BaseComplex point_complex() { return BaseComplex::from_simplices(1, {{0}}); }

BaseComplex full_simplex(int n) {
    std::vector<int> top(n + 1);
    for (int i = 0; i <= n; ++i) top[i] = i;
    return BaseComplex::from_simplices(n + 1, {top});
}

BaseComplex boundary_of_simplex(int n) {
    std::vector<std::vector<int>> faces;
    for (int j = 0; j <= n; ++j) {
        std::vector<int> f;
        for (int i = 0; i <= n; ++i)
            if (i != j) f.push_back(i);
        faces.push_back(f);
    }
    return BaseComplex::from_simplices(n + 1, faces);
}

}  // namespace kpn
