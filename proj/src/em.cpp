#include "kpn/em.hpp"

#include <algorithm>
#include <climits>
#include <cstring>
#include <numeric>

#include "kpn/errors.hpp"

#ifdef KPN_HAVE_OPENMP
#include <omp.h>
#endif

namespace kpn {

int hardware_threads() {
#ifdef KPN_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::string EmCubeData::key() const {
    std::string s;
    s.reserve(1 + values.size() * 12);
    s.push_back(static_cast<char>(p));
    for (const auto& [c, v] : values) {
        s.append(reinterpret_cast<const char*>(&c), 4);
        s.append(reinterpret_cast<const char*>(&v), 8);
    }
    return s;
}

EmContext::EmContext(CoeffGroup pi, int n, size_t cap) : pi_(pi), n_(n), cap_(cap) {
    if (n < 1) throw ValidationError("L(pi,n) requires n >= 1");
}

void EmContext::require_finite(const char* what) const {
    if (!pi_.is_modular())
        throw UnsupportedEnumeration(std::string(what) + " requires finite coefficients");
}

EmCubeData EmContext::canonicalize(uint8_t p, std::vector<std::pair<uint32_t, long long>> raw) const {
    std::sort(raw.begin(), raw.end());
    EmCubeData d;
    d.p = p;
    for (size_t i = 0; i < raw.size();) {
        long long acc = 0;
        uint32_t code = raw[i].first;
        while (i < raw.size() && raw[i].first == code) {
            acc = pi_.add(acc, raw[i].second);
            ++i;
        }
        if (pi_.normalize(acc) != 0) d.values.emplace_back(code, pi_.normalize(acc));
    }
    return d;
}

void EmContext::validate(const EmCubeData& d) const {
    int p = d.p;
    if (p > 15) throw BadCell("cube dimension out of supported range");
    uint32_t full = (1u << p) - 1;
    for (const auto& [code, v] : d.values) {
        CubeCell c = CubeCell::from_code(code);
        if ((c.free_mask & ~full) || (c.ones_mask & ~full) || (c.free_mask & c.ones_mask))
            throw BadCell("value key is not a cell of I^p");
        if (c.dim() != n_) throw BadCell("value key is not an n-cell");
        if (pi_.normalize(v) != v || v == 0) throw BadCell("value not canonical");
    }
    if (n_ + 1 > p) return;  // no (n+1)-cells: cocycle condition vacuous
    auto value_of = [&](uint32_t code) -> long long {
        auto it = std::lower_bound(d.values.begin(), d.values.end(),
                                   std::make_pair(code, LLONG_MIN));
        return (it != d.values.end() && it->first == code) ? it->second : 0;
    };
    CellTable up(p, n_ + 1);
    for (int i = 0; i < up.size(); ++i) {
        long long s = 0;
        for (const auto& [f, sign] : cell_faces(up.cell(i)))
            s = pi_.add(s, pi_.scale(sign, value_of(f.code())));
        if (pi_.normalize(s) != 0) throw NotACocycle("cellular coboundary nonzero");
    }
}

EmCubeData EmContext::face_raw(const EmCubeData& t, int i, int eps) const {
    if (i < 1 || i > t.p) throw ValidationError("face direction out of range");
    std::vector<std::pair<uint32_t, long long>> raw;
    for (const auto& [code, v] : t.values) {
        CubeCell c = CubeCell::from_code(code);
        if (c.is_free(i)) continue;                  // cell not inside the hyperplane
        if ((c.is_one(i) ? 1 : 0) != eps) continue;  // wrong side
        raw.emplace_back(c.remove_letter(i).code(), v);
    }
    return canonicalize(static_cast<uint8_t>(t.p - 1), std::move(raw));
}

EmCubeData EmContext::degeneracy_raw(const EmCubeData& t, int i) const {
    if (i < 1 || i > t.p + 1) throw ValidationError("degeneracy direction out of range");
    std::vector<std::pair<uint32_t, long long>> raw;
    raw.reserve(t.values.size() * 2);
    for (const auto& [code, v] : t.values) {
        CubeCell c = CubeCell::from_code(code);
        raw.emplace_back(c.insert_fixed(i, 0).code(), v);
        raw.emplace_back(c.insert_fixed(i, 1).code(), v);
    }
    return canonicalize(static_cast<uint8_t>(t.p + 1), std::move(raw));
}

EmCubeData EmContext::product_raw(const EmCubeData& a, const EmCubeData& b) const {
    int pa = a.p, pb = b.p;
    if (pa + pb > 15) throw BadCell("product dimension out of supported range");
    std::vector<std::pair<uint32_t, long long>> raw;
    raw.reserve((a.values.size() << pb) + (b.values.size() << pa));
    // pullback along the projection to the first pa coordinates: free letters stay
    // in the low block, the high block runs over all fixed assignments
    for (const auto& [code, v] : a.values) {
        CubeCell c = CubeCell::from_code(code);
        for (uint32_t hi = 0; hi < (1u << pb); ++hi) {
            CubeCell e{c.free_mask, static_cast<uint16_t>(c.ones_mask | (hi << pa))};
            raw.emplace_back(e.code(), v);
        }
    }
    // pullback along the projection to the last pb coordinates
    for (const auto& [code, v] : b.values) {
        CubeCell c = CubeCell::from_code(code);
        for (uint32_t lo = 0; lo < (1u << pa); ++lo) {
            CubeCell e{static_cast<uint16_t>(c.free_mask << pa),
                       static_cast<uint16_t>((c.ones_mask << pa) | lo)};
            raw.emplace_back(e.code(), v);
        }
    }
    return canonicalize(static_cast<uint8_t>(pa + pb), std::move(raw));
}

bool EmContext::is_degenerate_raw(const EmCubeData& t) const {
    return degenerate_as_raw(t).has_value();
}

std::optional<std::pair<int, EmCubeData>> EmContext::degenerate_as_raw(const EmCubeData& t) const {
    auto value_of = [&](uint32_t code) -> long long {
        auto it = std::lower_bound(t.values.begin(), t.values.end(),
                                   std::make_pair(code, LLONG_MIN));
        return (it != t.values.end() && it->first == code) ? it->second : 0;
    };
    for (int i = 1; i <= t.p; ++i) {
        bool constant = true;
        for (const auto& [code, v] : t.values) {
            CubeCell c = CubeCell::from_code(code);
            if (c.is_free(i)) {
                constant = false;  // nonzero value on a cell free in direction i
                break;
            }
            CubeCell partner = c;
            partner.ones_mask = static_cast<uint16_t>(partner.ones_mask ^ (1u << (i - 1)));
            if (value_of(partner.code()) != v) {
                constant = false;
                break;
            }
        }
        if (!constant) continue;
        std::vector<std::pair<uint32_t, long long>> raw;
        for (const auto& [code, v] : t.values) {
            CubeCell c = CubeCell::from_code(code);
            if (c.is_one(i)) continue;  // keep the eps = 0 side once
            raw.emplace_back(c.remove_letter(i).code(), v);
        }
        return std::make_pair(i, canonicalize(static_cast<uint8_t>(t.p - 1), std::move(raw)));
    }
    return std::nullopt;
}

CubeId EmContext::intern(const EmCubeData& d) {
    auto [it, inserted] = ids_.try_emplace(d.key(), static_cast<CubeId>(cubes_.size()));
    if (inserted) cubes_.push_back(d);
    return it->second;
}

std::optional<CubeId> EmContext::lookup(const EmCubeData& d) const {
    auto it = ids_.find(d.key());
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

CubeId EmContext::make_cube(int p, const std::vector<std::pair<CubeCell, long long>>& values) {
    if (p < 0 || p > 15) throw BadCell("cube dimension out of supported range");
    std::vector<std::pair<uint32_t, long long>> raw;
    raw.reserve(values.size());
    for (const auto& [c, v] : values) raw.emplace_back(c.code(), v);
    EmCubeData d = canonicalize(static_cast<uint8_t>(p), std::move(raw));
    validate(d);
    return intern(d);
}

CubeId EmContext::face(CubeId id, int i, int eps) {
    uint64_t k = (static_cast<uint64_t>(id) << 8) | (static_cast<uint64_t>(i) << 1) |
                 static_cast<uint64_t>(eps);
    auto it = face_cache_.find(k);
    if (it != face_cache_.end()) return it->second;
    CubeId r = intern(face_raw(cube(id), i, eps));
    face_cache_.emplace(k, r);
    return r;
}

CubeId EmContext::degeneracy(CubeId id, int i) {
    uint64_t k = (static_cast<uint64_t>(id) << 8) | static_cast<uint64_t>(i);
    auto it = degen_cache_.find(k);
    if (it != degen_cache_.end()) return it->second;
    CubeId r = intern(degeneracy_raw(cube(id), i));
    degen_cache_.emplace(k, r);
    return r;
}

CubeId EmContext::product(CubeId a, CubeId b) {
    uint64_t k = (static_cast<uint64_t>(a) << 32) | b;
    auto it = product_cache_.find(k);
    if (it != product_cache_.end()) return it->second;
    CubeId r = intern(product_raw(cube(a), cube(b)));
    product_cache_.emplace(k, r);
    return r;
}

bool EmContext::is_degenerate(CubeId id) {
    auto it = degenerate_flag_.find(id);
    if (it != degenerate_flag_.end()) return it->second >= 0;
    auto d = degenerate_as_raw(cube(id));
    degenerate_flag_.emplace(id, d ? d->first : -1);
    return d.has_value();
}

std::optional<std::pair<int, CubeId>> EmContext::degenerate_as(CubeId id) {
    auto d = degenerate_as_raw(cube(id));
    if (!d) return std::nullopt;
    return std::make_pair(d->first, intern(d->second));
}

std::vector<EmCubeData> EmContext::enumerate_raw(int q) const {
    // q-cubes are the kernel vectors of the cellular coboundary on n-cells of I^q
    long long m = pi_.modulus;
    if (q < n_) return {zero_cube_raw(q)};
    SparseIntMatrix delta =
        (n_ < q) ? coboundary_matrix(q, n_) : SparseIntMatrix(0, CellTable(q, n_).size());
    CellTable cells(q, n_);
    long long total = kernel_count_mod_m(delta, m);
    if (total > static_cast<long long>(cap_))
        throw SizeLimitExceeded("dimension " + std::to_string(q) + " has " +
                                std::to_string(total) + " cubes (cap " + std::to_string(cap_) +
                                ")");
    auto to_cube = [&](const std::vector<long long>& vec) {
        std::vector<std::pair<uint32_t, long long>> raw;
        for (int i = 0; i < cells.size(); ++i)
            if (vec[i] % m != 0) raw.emplace_back(cells.cell(i).code(), vec[i]);
        return canonicalize(static_cast<uint8_t>(q), std::move(raw));
    };

    std::vector<EmCubeData> out(static_cast<size_t>(total));
    int nthreads = parallel_ ? hardware_threads() : 1;
    if (nthreads <= 1) {
        // serial reference: the literal composition through kernel_enumeration_mod_m
        auto vecs = kernel_enumeration_mod_m(delta, m, cap_);
        for (size_t i = 0; i < vecs.size(); ++i) out[i] = to_cube(vecs[i]);
        return out;
    }
    (void)nthreads;
    // parallel path: same mixed-radix walk, blocked by kernel coordinates
    SmithTransforms s = smith_with_transforms(delta);
    int ncols = delta.cols;
    std::vector<long long> radix(ncols), step(ncols);
    for (int i = 0; i < ncols; ++i) {
        if (i < s.rank) {
            long long g = std::gcd(s.factors[i], m);
            radix[i] = g;
            step[i] = m / g;
        } else {
            radix[i] = m;
            step[i] = 1;
        }
    }
#pragma omp parallel num_threads(nthreads)
    {
        std::vector<long long> v(ncols);
#pragma omp for schedule(static)
        for (long long idx = 0; idx < total; ++idx) {
            long long rem = idx;
            std::fill(v.begin(), v.end(), 0);
            for (int i = 0; i < ncols; ++i) {
                long long digit = rem % radix[i];
                rem /= radix[i];
                long long wi = digit * step[i];
                if (wi == 0) continue;
                for (int r = 0; r < ncols; ++r)
                    if (s.V[r][i] != 0) v[r] = (v[r] + checked_mul(s.V[r][i] % m, wi)) % m;
            }
            for (auto& x : v) x = (x % m + m) % m;
            out[idx] = to_cube(v);
        }
    }
    return out;
}

const std::vector<CubeId>& EmContext::all_cubes(int q) {
    auto it = all_by_dim_.find(q);
    if (it != all_by_dim_.end()) return it->second;
    require_finite("cube enumeration");
    std::vector<EmCubeData> data = enumerate_raw(q);
    // classification is pure; interning stays sequential in enumeration order
    std::vector<char> degen(data.size());
    long long count = static_cast<long long>(data.size());
    int nthreads = parallel_ ? hardware_threads() : 1;
    (void)nthreads;
#pragma omp parallel for schedule(static) num_threads(nthreads) if (nthreads > 1)
    for (long long i = 0; i < count; ++i) degen[i] = is_degenerate_raw(data[i]);
    std::vector<CubeId>& all = all_by_dim_[q];
    std::vector<CubeId>& bas = basis_by_dim_[q];
    all.reserve(data.size());
    for (size_t i = 0; i < data.size(); ++i) {
        CubeId id = intern(data[i]);
        all.push_back(id);
        degenerate_flag_.emplace(id, degen[i] ? 0 : -1);
        if (!degen[i]) {
            basis_index_.emplace(id, static_cast<int>(bas.size()));
            bas.push_back(id);
        }
    }
    return all;
}

const std::vector<CubeId>& EmContext::basis(int q) {
    all_cubes(q);
    return basis_by_dim_[q];
}

int EmContext::basis_index(CubeId id) const {
    auto it = basis_index_.find(id);
    return it == basis_index_.end() ? -1 : it->second;
}

std::vector<long long> EmContext::normalized_ranks(int up_to) {
    std::vector<long long> out;
    for (int q = 0; q <= up_to; ++q) out.push_back(normalized_rank(q));
    return out;
}

const SparseIntMatrix& EmContext::boundary_matrix(int q) {
    auto it = boundary_.find(q);
    if (it != boundary_.end()) return it->second;
    const auto& src = basis(q);
    int nrows = (q >= 1) ? static_cast<int>(basis(q - 1).size()) : 0;
    SparseIntMatrix m(nrows, static_cast<int>(src.size()));
    if (q >= 1) {
        int ncols = static_cast<int>(src.size());
        std::vector<std::vector<std::pair<int, long long>>> colents(ncols);
        int nthreads = parallel_ ? hardware_threads() : 1;
        (void)nthreads;
#pragma omp parallel for schedule(dynamic, 64) num_threads(nthreads) if (nthreads > 1)
        for (int j = 0; j < ncols; ++j) {
            const EmCubeData& t = cube(src[j]);
            std::unordered_map<int, long long> acc;
            for (int i = 1; i <= q; ++i) {
                int sgn = (i % 2) ? -1 : 1;
                for (int eps = 0; eps <= 1; ++eps) {
                    EmCubeData f = face_raw(t, i, eps);
                    if (is_degenerate_raw(f)) continue;
                    auto fid = lookup(f);
                    if (!fid) throw ValidationError("face of enumerated cube not interned");
                    int row = basis_index(*fid);
                    acc[row] += (eps == 0) ? sgn : -sgn;
                }
            }
            for (auto [r, v] : acc)
                if (v != 0) colents[j].emplace_back(r, v);
        }
        for (int j = 0; j < ncols; ++j)
            for (auto [r, v] : colents[j]) m.set(r, j, v);
    }
    return boundary_.emplace(q, std::move(m)).first->second;
}

std::vector<HomologyGroup> EmContext::homology(int max_deg, HomCoeff coeff) {
    require_finite("homology of L(pi,n)");
    std::vector<HomologyGroup> out;
    for (int q = 0; q <= max_deg; ++q)
        out.push_back(homology_from_boundaries(boundary_matrix(q), boundary_matrix(q + 1), coeff, q));
    return out;
}

}  // namespace kpn
