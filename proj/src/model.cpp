#include "kpn/model.hpp"

#include <algorithm>

#include "kpn/errors.hpp"

namespace kpn {

namespace {
uint64_t gen_key(int p, int sigma, CubeId tau) {
    return (static_cast<uint64_t>(p) << 56) | (static_cast<uint64_t>(sigma) << 32) | tau;
}
}  // namespace

TwistedComplex::TwistedComplex(const BaseComplex* K, EmContext* L, BaseCochain z,
                               ModelOptions opt)
    : K_(K), L_(L), z_(std::move(z)), opt_(opt) {
    if (z_.degree != L_->n() + 1)
        throw ValidationError("model cocycle degree must be n+1");
    if (!(z_.group == L_->pi()))
        throw ValidationError("model cocycle coefficients must match pi");
    if (!is_cocycle(*K_, z_)) throw NotACocycle("model requires a cocycle on the base");
    build();
}

void TwistedComplex::build() {
    int D = opt_.max_degree;
    // kappa for every simplex of positive dimension
    kappa_.resize(K_->dim() + 1);
    for (int r = 1; r <= K_->dim(); ++r) {
        kappa_[r].resize(K_->count(r));
        for (int sig = 0; sig < K_->count(r); ++sig)
            kappa_[r][sig] = kappa(*K_, z_, K_->simplex(r, sig), *L_);
    }
    // bases: all pairs (sigma^p, tau^q), tau nondegenerate, p + q = m
    basis_.resize(D + 1);
    index_.resize(D + 1);
    for (int q = 0; q <= D; ++q) L_->all_cubes(q);  // enumerate up front
    for (int m = 0; m <= D; ++m) {
        for (int p = 0; p <= std::min(m, K_->dim()); ++p) {
            const auto& cubes = L_->basis(m - p);
            for (int sig = 0; sig < K_->count(p); ++sig)
                for (CubeId t : cubes) {
                    index_[m].emplace(gen_key(p, sig, t), static_cast<int>(basis_[m].size()));
                    basis_[m].push_back({p, sig, t});
                }
        }
    }
    // boundary matrices
    d_.resize(D + 1);
    d_[0] = SparseIntMatrix(0, static_cast<int>(basis_[0].size()));
    for (int m = 1; m <= D; ++m) {
        int ncols = static_cast<int>(basis_[m].size());
        SparseIntMatrix mat(static_cast<int>(basis_[m - 1].size()), ncols);
        std::vector<std::vector<std::pair<int, long long>>> cols(ncols);
        int nthreads = opt_.parallel ? hardware_threads() : 1;
        (void)nthreads;
#pragma omp parallel for schedule(dynamic, 32) num_threads(nthreads) if (nthreads > 1)
        for (int j = 0; j < ncols; ++j) {
            const TwistedGen& g = basis_[m][j];
            std::map<int, long long> acc;
            for (int dir = 1; dir <= m; ++dir) {
                int dsign = (dir % 2) ? -1 : 1;
                for (int eps = 0; eps <= 1; ++eps) {
                    RawFace f = face(m, g, dir, eps);
                    if (L_->is_degenerate_raw(f.tau)) continue;
                    auto id = L_->lookup(f.tau);
                    if (!id) throw ValidationError("model face cube not enumerated");
                    int row = index_of(m - 1, f.p, f.sigma, *id);
                    if (row < 0) throw ValidationError("model face not in basis");
                    long long s = (eps == 0) ? dsign : -dsign;
                    if (opt_.corrupt_sign && eps == 0 && dir == 1 && g.p >= 2) s = -s;
                    acc[row] += s;
                }
            }
            for (auto [r, v] : acc)
                if (v != 0) cols[j].emplace_back(r, v);
        }
        for (int j = 0; j < ncols; ++j)
            for (auto [r, v] : cols[j]) mat.set(r, j, v);
        d_[m] = std::move(mat);
    }
}

int TwistedComplex::index_of(int m, int p, int sigma, CubeId tau) const {
    if (m < 0 || m > opt_.max_degree) return -1;
    auto it = index_[m].find(gen_key(p, sigma, tau));
    return it == index_[m].end() ? -1 : it->second;
}

TwistedComplex::RawFace TwistedComplex::face(int m, const TwistedGen& g, int dir,
                                             int eps) const {
    (void)m;
    return face_raw_pair(g.p, g.sigma, L_->cube(g.tau), dir, eps);
}

TwistedComplex::RawFace TwistedComplex::face_raw_pair(int p, int sigma, const EmCubeData& tau,
                                                      int dir, int eps) const {
    int q = tau.p;
    if (dir < 1 || dir > p + q) throw ValidationError("face direction out of range");
    if (dir > p) return {p, sigma, L_->face_raw(tau, dir - p, eps)};
    const auto& verts = K_->simplex(p, sigma);
    if (eps == 1) {
        // base face dropping vertex dir-1
        return {p - 1, K_->index(simplex_face(verts, dir - 1)), tau};
    }
    // twisted face: front (dir-1)-face paired with kappa(back face) o tau
    std::vector<int> front(verts.begin(), verts.begin() + dir);
    std::vector<int> back(verts.begin() + dir - 1, verts.end());
    CubeId k = kappa_[static_cast<int>(back.size()) - 1][K_->index(back)];
    EmCubeData prod = L_->product_raw(L_->cube(k), tau);
    return {dir - 1, K_->index(front), std::move(prod)};
}

SparseIntMatrix TwistedComplex::cap_boundary(int m, const AlgebraElement& a) const {
    int ncols = static_cast<int>(basis_[m].size());
    SparseIntMatrix mat(static_cast<int>(basis_[m - 1].size()), ncols);
    for (int j = 0; j < ncols; ++j) {
        const TwistedGen& g = basis_[m][j];
        const auto& verts = K_->simplex(g.p, g.sigma);
        std::map<int, long long> acc;
        auto put = [&](int p2, int sig2, CubeId t2, long long v) {
            int row = index_of(m - 1, p2, sig2, t2);
            if (row < 0) throw ValidationError("cap face not in basis");
            acc[row] += v;
        };
        // tensor differential: del sigma (x) tau
        if (g.p >= 1)
            for (size_t jj = 0; jj < verts.size(); ++jj) {
                int fid = K_->index(simplex_face(verts, static_cast<int>(jj)));
                put(g.p - 1, fid, g.tau, (jj % 2) ? -1 : 1);
            }
        // (-1)^p sigma (x) d tau
        int q = m - g.p;
        int psign = (g.p % 2) ? -1 : 1;
        for (int i = 1; i <= q; ++i) {
            int isign = (i % 2) ? -1 : 1;
            for (int eps = 0; eps <= 1; ++eps) {
                CubeId f = L_->face(g.tau, i, eps);
                if (L_->is_degenerate(f)) continue;
                put(g.p, g.sigma, f, psign * ((eps == 0) ? isign : -isign));
            }
        }
        // module action of the twisting element
        for (auto [s, t] : a.bidegrees()) {
            if (s > g.p || t != s - 1) continue;
            std::vector<int> front(verts.begin(), verts.begin() + (g.p - s) + 1);
            std::vector<int> back(verts.begin() + (g.p - s), verts.end());
            const CubeChain* ch = a.chain_at(s, t, K_->index(back));
            if (!ch) continue;
            int sign = (((s + t) * (g.p + s + 1)) % 2) ? -1 : 1;
            for (auto [c, w] : *ch) {
                EmCubeData prod = L_->product_raw(L_->cube(c), L_->cube(g.tau));
                if (L_->is_degenerate_raw(prod)) continue;
                auto id = L_->lookup(prod);
                if (!id) throw ValidationError("cap product cube not enumerated");
                put(g.p - s, K_->index(front), *id, sign * w);
            }
        }
        for (auto [r, v] : acc)
            if (v != 0) mat.set(r, j, v);
    }
    return mat;
}

SparseIntMatrix TwistedComplex::phi_matrix(const AlgebraElement& u, int m) const {
    int n = static_cast<int>(basis_[m].size());
    SparseIntMatrix mat(n, n);
    for (int j = 0; j < n; ++j) {
        const TwistedGen& g = basis_[m][j];
        mat.add(j, j, 1);
        const auto& verts = K_->simplex(g.p, g.sigma);
        for (auto [s, t] : u.bidegrees()) {
            if (s > g.p || t != s) continue;  // degree-0 action stays in degree m
            std::vector<int> front(verts.begin(), verts.begin() + (g.p - s) + 1);
            std::vector<int> back(verts.begin() + (g.p - s), verts.end());
            const CubeChain* ch = u.chain_at(s, t, K_->index(back));
            if (!ch) continue;
            int sign = (((s + t) * (g.p + s + 1)) % 2) ? -1 : 1;
            for (auto [c, w] : *ch) {
                EmCubeData prod = L_->product_raw(L_->cube(c), L_->cube(g.tau));
                if (L_->is_degenerate_raw(prod)) continue;
                auto id = L_->lookup(prod);
                if (!id) throw ValidationError("phi product cube not enumerated");
                int row = index_of(m, g.p - s, K_->index(front), *id);
                if (row < 0) throw ValidationError("phi target not in basis");
                mat.add(row, j, sign * w);
            }
        }
    }
    return mat;
}

std::vector<HomologyGroup> TwistedComplex::homology(int max_deg) const {
    if (max_deg + 1 > opt_.max_degree)
        throw ValidationError("homology needs the complex built one degree higher");
    std::vector<HomologyGroup> out;
    for (int m = 0; m <= max_deg; ++m)
        out.push_back(homology_from_boundaries(d_[m], d_[m + 1], opt_.coeff, m));
    return out;
}

TwistedComplex build_model(const BaseComplex& K, const BaseCochain& z, EmContext& L,
                           ModelOptions opt) {
    return TwistedComplex(&K, &L, z, opt);
}

std::vector<HomologyGroup> model_homology(const BaseComplex& K, const BaseCochain& z,
                                          EmContext& L, int max_deg, HomCoeff coeff) {
    ModelOptions opt;
    opt.max_degree = max_deg + 1;
    opt.coeff = coeff;
    opt.parallel = L.parallel();
    TwistedComplex Y(&K, &L, z, opt);
    return Y.homology(max_deg);
}

ModelCochain cochain_unit(const TwistedComplex& Y, CoeffGroup ring) {
    ModelCochain one;
    one.degree = 0;
    one.ring = ring;
    for (size_t i = 0; i < Y.basis(0).size(); ++i) one.set(static_cast<int>(i), 1);
    return one;
}

namespace {

// shuffle parity of the decomposition: pairs (h, k) with h > k
int cup_sign_exponent(const std::vector<int>& H, const std::vector<int>& K) {
    int inv = 0;
    for (int h : H)
        for (int k : K)
            if (h > k) ++inv;
    return inv;
}

}  // namespace

ModelCochain cup_product(const TwistedComplex& Y, const ModelCochain& x, const ModelCochain& y) {
    if (!(x.ring == y.ring)) throw ValidationError("cup product: ring mismatch");
    int s = x.degree, t = y.degree;
    ModelCochain out;
    out.degree = s + t;
    out.ring = x.ring;
    if (s + t > Y.max_degree()) throw ValidationError("cup product beyond built degrees");
    EmContext* L = Y.fiber();
    const auto& gens = Y.basis(s + t);
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        const TwistedGen& g = gens[gi];
        int N = s + t;
        std::vector<int> H(s);
        for (int i = 0; i < s; ++i) H[i] = i + 1;
        long long total = 0;
        while (true) {
            std::vector<int> Kset;
            {
                std::vector<char> inH(N + 1, 0);
                for (int h : H) inH[h] = 1;
                for (int d = 1; d <= N; ++d)
                    if (!inH[d]) Kset.push_back(d);
            }
            // x evaluated on the 0-face in the K directions, largest first
            long long xv = 0, yv = 0;
            {
                int p = g.p, sig = g.sigma;
                EmCubeData tau = L->cube(g.tau);
                for (auto it = Kset.rbegin(); it != Kset.rend(); ++it) {
                    auto f = Y.face_raw_pair(p, sig, tau, *it, 0);
                    p = f.p;
                    sig = f.sigma;
                    tau = std::move(f.tau);
                }
                if (!L->is_degenerate_raw(tau)) {
                    auto id = L->lookup(tau);
                    if (id) {
                        int idx = Y.index_of(s, p, sig, *id);
                        if (idx >= 0) xv = x.value(idx);
                    }
                }
            }
            if (xv != 0) {
                int p = g.p, sig = g.sigma;
                EmCubeData tau = L->cube(g.tau);
                for (auto it = H.rbegin(); it != H.rend(); ++it) {
                    auto f = Y.face_raw_pair(p, sig, tau, *it, 1);
                    p = f.p;
                    sig = f.sigma;
                    tau = std::move(f.tau);
                }
                if (!L->is_degenerate_raw(tau)) {
                    auto id = L->lookup(tau);
                    if (id) {
                        int idx = Y.index_of(t, p, sig, *id);
                        if (idx >= 0) yv = y.value(idx);
                    }
                }
                if (yv != 0) {
                    long long term = out.ring.scale(xv, yv);
                    if (cup_sign_exponent(H, Kset) % 2) term = out.ring.neg(term);
                    total = out.ring.add(total, term);
                }
            }
            // next subset of size s
            int i = s - 1;
            while (i >= 0 && H[i] == N - (s - 1 - i)) --i;
            if (i < 0) break;
            ++H[i];
            for (int l = i + 1; l < s; ++l) H[l] = H[l - 1] + 1;
        }
        out.set(static_cast<int>(gi), total);
    }
    return out;
}

ModelCochain model_coboundary(const TwistedComplex& Y, const ModelCochain& x) {
    ModelCochain out;
    out.degree = x.degree + 1;
    out.ring = x.ring;
    if (out.degree > Y.max_degree()) throw ValidationError("coboundary beyond built degrees");
    const SparseIntMatrix& d = Y.boundary(out.degree);
    for (const auto& [k, v] : d.entries) {
        int row = static_cast<int>(k >> 32), col = static_cast<int>(k & 0xffffffffu);
        long long xv = x.value(row);
        if (xv) out.add(col, out.ring.scale(v, xv));
    }
    return out;
}

ModelCochain model_cochain_add(const ModelCochain& a, const ModelCochain& b) {
    ModelCochain out = a;
    for (auto [i, v] : b.values) out.add(i, v);
    return out;
}

ModelCochain model_cochain_sub(const ModelCochain& a, const ModelCochain& b) {
    ModelCochain out = a;
    for (auto [i, v] : b.values) out.add(i, a.ring.neg(v));
    return out;
}

ModelCochain model_cochain_scaled(const ModelCochain& a, long long k) {
    ModelCochain out;
    out.degree = a.degree;
    out.ring = a.ring;
    for (auto [i, v] : a.values) out.set(i, a.ring.scale(k, v));
    return out;
}

namespace {

// column echelon store over F_p; each column carries homology coordinates so
// that reducing a cycle to zero accumulates its class in the chosen basis
struct ModpReducer {
    long long p;
    int n;
    std::vector<std::vector<long long>> cols;
    std::vector<int> pivot;
    std::vector<std::map<int, long long>> tag;

    explicit ModpReducer(long long p_, int n_) : p(p_), n(n_) {}

    static long long inv_mod(long long a, long long p) {
        long long r = 1, b = ((a % p) + p) % p, e = p - 2;
        while (e) {
            if (e & 1) r = (r * b) % p;
            b = (b * b) % p;
            e >>= 1;
        }
        return r;
    }

    // reduce v in place; returns the accumulated homology coordinates
    std::map<int, long long> reduce(std::vector<long long>& v) const {
        std::map<int, long long> acc;
        for (size_t k = 0; k < cols.size(); ++k) {
            long long f = ((v[pivot[k]] % p) + p) % p;
            if (!f) continue;
            for (int r = 0; r < n; ++r)
                if (cols[k][r]) v[r] = ((v[r] - f * cols[k][r]) % p + p) % p;
            for (auto [h, w] : tag[k]) {
                acc[h] = ((acc[h] + f * w) % p + p) % p;
                if (!acc[h]) acc.erase(h);
            }
        }
        return acc;
    }

    // insert v (already reduced) with the given tag; returns false if zero
    bool insert(std::vector<long long> v, std::map<int, long long> t) {
        int pv = -1;
        for (int r = 0; r < n; ++r)
            if (v[r] % p) {
                pv = r;
                break;
            }
        if (pv < 0) return false;
        long long inv = inv_mod(v[pv], p);
        for (auto& x : v) x = (x * inv) % p;
        for (auto& [h, w] : t) w = (w * inv) % p;
        cols.push_back(std::move(v));
        pivot.push_back(pv);
        tag.push_back(std::move(t));
        return true;
    }
};

std::vector<std::vector<long long>> nullspace_mod_p(const SparseIntMatrix& M, long long p) {
    // column reduction of M with an identity audit trail
    int rows = M.rows, cols = M.cols;
    auto cl = M.column_lists();
    std::vector<std::vector<long long>> work(cols, std::vector<long long>(rows, 0));
    std::vector<std::vector<long long>> audit(cols, std::vector<long long>(cols, 0));
    for (int j = 0; j < cols; ++j) {
        audit[j][j] = 1;
        for (auto [r, v] : cl[j]) work[j][r] = ((v % p) + p) % p;
    }
    std::vector<std::vector<long long>> out;
    std::vector<std::pair<int, int>> echelon;  // (pivot row, column index)
    for (int j = 0; j < cols; ++j) {
        for (auto [pr, k] : echelon) {
            long long f = work[j][pr] % p;
            if (!f) continue;
            for (int r = 0; r < rows; ++r)
                if (work[k][r]) work[j][r] = ((work[j][r] - f * work[k][r]) % p + p) % p;
            for (int r = 0; r < cols; ++r)
                if (audit[k][r]) audit[j][r] = ((audit[j][r] - f * audit[k][r]) % p + p) % p;
        }
        int pr = -1;
        for (int r = 0; r < rows; ++r)
            if (work[j][r]) {
                pr = r;
                break;
            }
        if (pr < 0) {
            out.push_back(audit[j]);
            continue;
        }
        long long inv = ModpReducer::inv_mod(work[j][pr], p);
        for (auto& x : work[j]) x = (x * inv) % p;
        for (auto& x : audit[j]) x = (x * inv) % p;
        echelon.emplace_back(pr, j);
    }
    return out;
}

}  // namespace

std::vector<std::vector<long long>> homology_action_matrix(const TwistedComplex& Y,
                                                           const BaseCochain& c, int m,
                                                           long long p) {
    if (!is_cocycle(*Y.base(), c))
        throw NotACocycle("homology action needs an n-cocycle on the base");
    AlgebraElement u = u_element(*Y.base(), c, Y.cocycle(), *Y.fiber());
    SparseIntMatrix phi = Y.phi_matrix(u, m);
    int n = static_cast<int>(Y.basis(m).size());
    // homology basis: echelon of the boundary image, extended by cycles
    ModpReducer red(p, n);
    auto dcols = Y.boundary(m + 1).column_lists();
    for (const auto& col : dcols) {
        if (col.empty()) continue;
        std::vector<long long> v(n, 0);
        for (auto [r, val] : col) v[r] = ((val % p) + p) % p;
        red.reduce(v);
        red.insert(std::move(v), {});
    }
    auto cycles = nullspace_mod_p(Y.boundary(m), p);
    std::vector<std::vector<long long>> hbasis;
    for (auto& v : cycles) {
        std::vector<long long> w = v;
        red.reduce(w);
        int h = static_cast<int>(hbasis.size());
        if (red.insert(w, {{h, 1}})) hbasis.push_back(v);
    }
    int dim = static_cast<int>(hbasis.size());
    std::vector<std::vector<long long>> A(dim, std::vector<long long>(dim, 0));
    for (int j = 0; j < dim; ++j) {
        auto img = phi.apply(hbasis[j]);
        for (auto& x : img) x = ((x % p) + p) % p;
        auto coords = red.reduce(img);
        for (int r = 0; r < n; ++r)
            if (img[r] % p) throw ValidationError("phi image is not a cycle");
        for (auto [h, w] : coords) A[h][j] = w;
    }
    return A;
}

}  // namespace kpn
