#include "kpn/smith.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "kpn/errors.hpp"

namespace kpn {

namespace {

long long llgcd(long long a, long long b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// quotient minimizing |a - q*p|
long long nearest_quotient(long long a, long long p) {
    long long q = a / p;
    long long r = a - checked_mul(q, p);
    if (std::llabs(r) * 2 > std::llabs(p)) q += (r > 0) == (p > 0) ? 1 : -1;
    return q;
}

void divisibility_fixup(std::vector<long long>& d) {
    for (auto& v : d) v = std::llabs(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < d.size(); ++i)
            for (size_t j = i + 1; j < d.size(); ++j) {
                if (d[i] == 1) break;
                if (d[j] % d[i] != 0 || d[i] > d[j]) {
                    long long g = llgcd(d[i], d[j]);
                    long long l = checked_mul(d[i] / g, d[j]);
                    if (g != d[i] || l != d[j]) {
                        d[i] = g;
                        d[j] = l;
                        changed = true;
                    }
                }
            }
    }
    std::sort(d.begin(), d.end());
}

// Sparse elimination over Z with column-major storage. Optionally tracks the
// row transform U (dense, rows x rows) so that image-membership questions can
// be answered later; auto-transposing for speed is only done when U is not needed.
struct SparseEliminator {
    int rows, cols;
    // col[j] = sorted (row, value), zero values never stored
    std::vector<std::vector<std::pair<int, long long>>> col;
    std::vector<char> row_done, col_done;
    std::vector<int> row_cnt;  // entries per active row
    std::vector<long long> diag;
    std::vector<int> diag_row;
    bool track_u = false;
    std::vector<std::vector<long long>> U;

    SparseEliminator(const SparseIntMatrix& m, bool transpose, bool with_u)
        : rows(transpose ? m.cols : m.rows),
          cols(transpose ? m.rows : m.cols),
          col(cols),
          row_done(rows, 0),
          col_done(cols, 0),
          row_cnt(rows, 0),
          track_u(with_u) {
        for (const auto& [k, v] : m.entries) {
            int r = static_cast<int>(k >> 32), c = static_cast<int>(k & 0xffffffffu);
            if (transpose) std::swap(r, c);
            col[c].emplace_back(r, v);
            ++row_cnt[r];
        }
        for (auto& c : col) std::sort(c.begin(), c.end());
        if (track_u) {
            U.assign(rows, std::vector<long long>(rows, 0));
            for (int i = 0; i < rows; ++i) U[i][i] = 1;
        }
    }

    long long get(int c, int r) const {
        const auto& v = col[c];
        auto it = std::lower_bound(v.begin(), v.end(), std::make_pair(r, LLONG_MIN));
        return (it != v.end() && it->first == r) ? it->second : 0;
    }

    void set_entry(int c, int r, long long val) {
        auto& v = col[c];
        auto it = std::lower_bound(v.begin(), v.end(), std::make_pair(r, LLONG_MIN));
        bool present = it != v.end() && it->first == r;
        if (val == 0) {
            if (present) {
                v.erase(it);
                --row_cnt[r];
            }
        } else if (present) {
            it->second = val;
        } else {
            v.insert(it, {r, val});
            ++row_cnt[r];
        }
    }

    // col[j] -= q * col[k]
    void col_axpy(int j, int k, long long q) {
        if (q == 0) return;
        const auto& src = col[k];
        auto& dst = col[j];
        std::vector<std::pair<int, long long>> out;
        out.reserve(dst.size() + src.size());
        size_t a = 0, b = 0;
        while (a < dst.size() || b < src.size()) {
            if (b == src.size() || (a < dst.size() && dst[a].first < src[b].first)) {
                out.push_back(dst[a++]);
            } else if (a == dst.size() || src[b].first < dst[a].first) {
                long long nv = checked_mul(-q, src[b].second);
                if (nv != 0) {
                    out.emplace_back(src[b].first, nv);
                    ++row_cnt[src[b].first];
                }
                ++b;
            } else {
                long long nv = checked_sub(dst[a].second, checked_mul(q, src[b].second));
                if (nv != 0)
                    out.emplace_back(dst[a].first, nv);
                else
                    --row_cnt[dst[a].first];
                ++a;
                ++b;
            }
        }
        dst.swap(out);
    }

    // row[i] -= q * row[k] applied to U only (the matrix part is done manually
    // in the isolated-pivot situation where row k has a single entry)
    void u_row_axpy(int i, int k, long long q) {
        if (!track_u || q == 0) return;
        for (int c = 0; c < rows; ++c)
            if (U[k][c] != 0) U[i][c] = checked_sub(U[i][c], checked_mul(q, U[k][c]));
    }

    // Find a pivot among active entries: prefer |v| == 1, then low Markowitz cost.
    bool select_pivot(int& pr, int& pc) {
        long long best_score = -1;
        long long best_abs = 0;
        pr = -1;
        pc = -1;
        for (int j = 0; j < cols; ++j) {
            if (col_done[j]) continue;
            long long cn = 0;
            for (const auto& [r, v] : col[j])
                if (!row_done[r]) ++cn;
            if (cn == 0) continue;
            for (const auto& [r, v] : col[j]) {
                if (row_done[r]) continue;
                long long a = std::llabs(v);
                long long score = (cn - 1) * (row_cnt[r] - 1);
                bool better;
                if (pr < 0)
                    better = true;
                else if ((a == 1) != (best_abs == 1))
                    better = (a == 1);
                else if (score != best_score)
                    better = score < best_score;
                else
                    better = a < best_abs;
                if (better) {
                    pr = r;
                    pc = j;
                    best_score = score;
                    best_abs = a;
                    if (a == 1 && score == 0) return true;
                }
            }
        }
        return pr >= 0;
    }

    void run() {
        int pr, pc;
        while (select_pivot(pr, pc)) {
            while (true) {
                long long piv = get(pc, pr);
                // clear pivot row by column operations
                int next_c = -1;
                long long next_abs = 0;
                for (int j = 0; j < cols; ++j) {
                    if (j == pc || col_done[j]) continue;
                    long long v = get(j, pr);
                    if (v == 0) continue;
                    long long q = nearest_quotient(v, piv);
                    col_axpy(j, pc, q);
                    long long rem = get(j, pr);
                    if (rem != 0 && (next_c < 0 || std::llabs(rem) < next_abs)) {
                        next_c = j;
                        next_abs = std::llabs(rem);
                    }
                }
                if (next_c >= 0) {
                    pc = next_c;
                    continue;
                }
                // pivot row now has support {pc}; clear pivot column by row ops,
                // each touching only column pc
                int next_r = -1;
                next_abs = 0;
                for (const auto& [r, v] : std::vector<std::pair<int, long long>>(col[pc].begin(),
                                                                                 col[pc].end())) {
                    if (r == pr || row_done[r]) continue;
                    long long q = nearest_quotient(v, piv);
                    set_entry(pc, r, checked_sub(v, checked_mul(q, piv)));
                    u_row_axpy(r, pr, q);
                    long long rem = get(pc, r);
                    if (rem != 0 && (next_r < 0 || std::llabs(rem) < next_abs)) {
                        next_r = r;
                        next_abs = std::llabs(rem);
                    }
                }
                if (next_r < 0) break;
                pr = next_r;  // smaller pivot surfaced; its row may be dirty again
            }
            diag.push_back(get(pc, pr));
            diag_row.push_back(pr);
            row_done[pr] = 1;
            col_done[pc] = 1;
        }
    }
};

}  // namespace

SmithResult smith_normal_form(const SparseIntMatrix& M) {
    SmithResult out;
    if (M.entries.empty()) return out;
    SparseEliminator e(M, /*transpose=*/M.cols > M.rows, /*with_u=*/false);
    e.run();
    out.factors = e.diag;
    divisibility_fixup(out.factors);
    out.rank = static_cast<int>(out.factors.size());
    return out;
}

namespace {

struct DenseSmith {
    int rows, cols;
    std::vector<std::vector<long long>> A, U, V;

    explicit DenseSmith(const SparseIntMatrix& m) : rows(m.rows), cols(m.cols) {
        A.assign(rows, std::vector<long long>(cols, 0));
        for (const auto& [k, v] : m.entries)
            A[static_cast<int>(k >> 32)][static_cast<int>(k & 0xffffffffu)] = v;
        U.assign(rows, std::vector<long long>(rows, 0));
        V.assign(cols, std::vector<long long>(cols, 0));
        for (int i = 0; i < rows; ++i) U[i][i] = 1;
        for (int j = 0; j < cols; ++j) V[j][j] = 1;
    }

    void row_swap(int i, int k) {
        if (i == k) return;
        A[i].swap(A[k]);
        U[i].swap(U[k]);
    }
    void col_swap(int j, int k) {
        if (j == k) return;
        for (auto& r : A) std::swap(r[j], r[k]);
        for (auto& r : V) std::swap(r[j], r[k]);
    }
    void row_axpy(int i, int k, long long q) {  // row i -= q * row k
        if (q == 0) return;
        for (int j = 0; j < cols; ++j)
            if (A[k][j]) A[i][j] = checked_sub(A[i][j], checked_mul(q, A[k][j]));
        for (int j = 0; j < rows; ++j)
            if (U[k][j]) U[i][j] = checked_sub(U[i][j], checked_mul(q, U[k][j]));
    }
    void col_axpy(int j, int k, long long q) {  // col j -= q * col k
        if (q == 0) return;
        for (int i = 0; i < rows; ++i)
            if (A[i][k]) A[i][j] = checked_sub(A[i][j], checked_mul(q, A[i][k]));
        for (int i = 0; i < cols; ++i)
            if (V[i][k]) V[i][j] = checked_sub(V[i][j], checked_mul(q, V[i][k]));
    }
    void row_negate(int i) {
        for (auto& v : A[i]) v = checked_sub(0, v);
        for (auto& v : U[i]) v = checked_sub(0, v);
    }

    int run() {
        int t = 0;
        int step = std::min(rows, cols);
        while (t < step) {
            // find pivot in submatrix [t..)
            int pr = -1, pc = -1;
            long long best = 0;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j)
                    if (A[i][j] != 0 && (pr < 0 || std::llabs(A[i][j]) < best)) {
                        pr = i;
                        pc = j;
                        best = std::llabs(A[i][j]);
                    }
            if (pr < 0) break;
            row_swap(t, pr);
            col_swap(t, pc);
            bool clean = false;
            while (!clean) {
                clean = true;
                for (int i = t + 1; i < rows; ++i) {
                    if (A[i][t] == 0) continue;
                    long long q = nearest_quotient(A[i][t], A[t][t]);
                    row_axpy(i, t, q);
                    if (A[i][t] != 0) {
                        row_swap(t, i);
                        clean = false;
                    }
                }
                for (int j = t + 1; j < cols; ++j) {
                    if (A[t][j] == 0) continue;
                    long long q = nearest_quotient(A[t][j], A[t][t]);
                    col_axpy(j, t, q);
                    if (A[t][j] != 0) {
                        col_swap(t, j);
                        clean = false;
                    }
                }
            }
            // divisibility: fold any entry the pivot does not divide into its row
            bool retry = false;
            for (int i = t + 1; i < rows && !retry; ++i)
                for (int j = t + 1; j < cols && !retry; ++j)
                    if (A[i][j] % A[t][t] != 0) {
                        row_axpy(t, i, -1);  // row t += row i
                        retry = true;
                    }
            if (retry) continue;
            if (A[t][t] < 0) row_negate(t);
            ++t;
        }
        return t;
    }
};

}  // namespace

SmithTransforms smith_with_transforms(const SparseIntMatrix& M) {
    DenseSmith d(M);
    int r = 0;
    // count nonzero diagonal after run
    r = d.run();
    SmithTransforms out;
    out.rank = 0;
    for (int i = 0; i < r; ++i)
        if (d.A[i][i] != 0) {
            out.factors.push_back(d.A[i][i]);
            ++out.rank;
        }
    out.U = std::move(d.U);
    out.V = std::move(d.V);
    return out;
}

std::string HomologyGroup::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (long long i = 0; i < betti; ++i) {
        if (!first) os << " + ";
        os << "Z";
        first = false;
    }
    for (long long t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

HomologyGroup homology_from_boundaries(const SparseIntMatrix& d_m,
                                       const SparseIntMatrix& d_mplus1, HomCoeff coeff,
                                       int degree) {
    if (d_m.cols != d_mplus1.rows)
        throw ValidationError("homology_from_boundaries: chain group size mismatch");
    if (!d_m.multiply(d_mplus1).is_zero())
        throw CompositionNonzero("d_m * d_mplus1 != 0");
    HomologyGroup h;
    h.degree = degree;
    if (coeff.is_field()) {
        h.betti = d_m.cols - rank_mod_p(d_m, coeff.p) - rank_mod_p(d_mplus1, coeff.p);
        return h;
    }
    SmithResult a = smith_normal_form(d_m);
    SmithResult b = smith_normal_form(d_mplus1);
    h.betti = d_m.cols - a.rank - b.rank;
    for (long long f : b.factors)
        if (f > 1) h.torsion.push_back(f);
    return h;
}

int rank_mod_p(const SparseIntMatrix& M, long long p) {
    if (p < 2) throw ValidationError("rank_mod_p: p must be >= 2");
    // streaming column reduction; only pivot columns are kept densely
    std::vector<std::vector<long long>> pivots;  // dense columns, length rows
    std::vector<int> pivot_row;
    auto cols = M.column_lists();
    std::vector<long long> work(M.rows);
    for (const auto& c : cols) {
        if (c.empty()) continue;
        std::fill(work.begin(), work.end(), 0);
        bool nonzero = false;
        for (auto [r, v] : c) {
            long long w = v % p;
            if (w < 0) w += p;
            work[r] = w;
            nonzero |= w != 0;
        }
        if (!nonzero) continue;
        for (size_t k = 0; k < pivots.size(); ++k) {
            long long f = work[pivot_row[k]] % p;
            if (f == 0) continue;
            const auto& pv = pivots[k];
            for (int r = 0; r < M.rows; ++r)
                if (pv[r]) work[r] = ((work[r] - f * pv[r]) % p + p) % p;
        }
        int pr = -1;
        for (int r = 0; r < M.rows; ++r)
            if (work[r]) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        // normalize pivot to 1
        long long inv = 1, a = work[pr] % p;
        // Fermat inverse (p prime)
        long long e = p - 2, base = a;
        while (e) {
            if (e & 1) inv = (inv * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        for (auto& v : work) v = (v * inv) % p;
        pivots.push_back(work);
        pivot_row.push_back(pr);
    }
    return static_cast<int>(pivots.size());
}

long long kernel_count_mod_m(const SparseIntMatrix& M, long long m) {
    if (m < 2) throw ValidationError("kernel_count_mod_m: m must be >= 2");
    SmithResult s = smith_normal_form(M);
    long long count = 1;
    for (long long d : s.factors) count = checked_mul(count, llgcd(d, m));
    for (int i = s.rank; i < M.cols; ++i) count = checked_mul(count, m);
    return count;
}

std::vector<std::vector<long long>> kernel_enumeration_mod_m(const SparseIntMatrix& M,
                                                             long long m, size_t cap) {
    if (m < 2) throw ValidationError("kernel_enumeration_mod_m: m must be >= 2");
    SmithTransforms s = smith_with_transforms(M);
    // D = U M V, so M v == 0 (mod m) iff D w == 0 with v = V w.
    // Coordinate i <= rank: d_i w_i == 0 (mod m): w_i in (m/g_i) * {0..g_i-1}, g_i = gcd(d_i, m).
    // Coordinates beyond the rank are free mod m.
    int n = M.cols;
    std::vector<long long> radix(n), step(n);
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        if (i < s.rank) {
            long long g = llgcd(s.factors[i], m);
            radix[i] = g;
            step[i] = m / g;
        } else {
            radix[i] = m;
            step[i] = 1;
        }
        total = checked_mul(total, radix[i]);
        if (static_cast<unsigned long long>(total) > cap)
            throw SizeLimitExceeded("kernel has more than " + std::to_string(cap) + " elements");
    }
    std::vector<std::vector<long long>> out;
    out.reserve(static_cast<size_t>(total));
    std::vector<long long> w(n, 0), digit(n, 0);
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<long long> v(n, 0);
        for (int i = 0; i < n; ++i) {
            if (w[i] == 0) continue;
            for (int r = 0; r < n; ++r) {
                if (s.V[r][i] == 0) continue;
                v[r] = (v[r] + checked_mul(s.V[r][i] % m, w[i])) % m;
            }
        }
        for (auto& x : v) x = (x % m + m) % m;
        out.push_back(std::move(v));
        // increment mixed-radix counter
        for (int i = 0; i < n; ++i) {
            if (++digit[i] < radix[i]) {
                w[i] = digit[i] * step[i];
                break;
            }
            digit[i] = 0;
            w[i] = 0;
        }
    }
    return out;
}

std::optional<std::vector<long long>> solve_integer(const SparseIntMatrix& A,
                                                    const std::vector<long long>& b) {
    if (static_cast<int>(b.size()) != A.rows) throw ValidationError("solve_integer: size mismatch");
    SmithTransforms s = smith_with_transforms(A);
    std::vector<long long> ub(A.rows, 0);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.rows; ++j)
            if (s.U[i][j] && b[j]) ub[i] = checked_add(ub[i], checked_mul(s.U[i][j], b[j]));
    std::vector<long long> y(A.cols, 0);
    for (int i = 0; i < A.rows; ++i) {
        if (i < s.rank) {
            if (ub[i] % s.factors[i] != 0) return std::nullopt;
            if (i < A.cols) y[i] = ub[i] / s.factors[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<long long> x(A.cols, 0);
    for (int r = 0; r < A.cols; ++r)
        for (int j = 0; j < A.cols; ++j)
            if (s.V[r][j] && y[j]) x[r] = checked_add(x[r], checked_mul(s.V[r][j], y[j]));
    return x;
}

namespace {
long long modinv(long long a, long long m) {
    // extended Euclid; gcd(a, m) must be 1
    long long g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    while (a1) {
        long long q = g / a1;
        g -= q * a1;
        std::swap(g, a1);
        x -= q * x1;
        std::swap(x, x1);
    }
    return ((x % m) + m) % m;
}
}  // namespace

std::optional<std::vector<long long>> solve_mod_m(const SparseIntMatrix& A,
                                                  const std::vector<long long>& b, long long m) {
    if (m < 2) throw ValidationError("solve_mod_m: m must be >= 2");
    if (static_cast<int>(b.size()) != A.rows) throw ValidationError("solve_mod_m: size mismatch");
    SmithTransforms s = smith_with_transforms(A);
    std::vector<long long> ub(A.rows, 0);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.rows; ++j)
            if (s.U[i][j] && b[j]) ub[i] = (ub[i] + checked_mul(s.U[i][j] % m, b[j] % m)) % m;
        ub[i] = ((ub[i] % m) + m) % m;
    }
    std::vector<long long> y(A.cols, 0);
    for (int i = 0; i < A.rows; ++i) {
        if (i < s.rank && i < A.cols) {
            long long g = llgcd(s.factors[i], m);
            if (ub[i] % g != 0) return std::nullopt;
            // d y == ub (mod m) has solutions y = (ub/g) * inv(d/g) mod m/g
            long long mm = m / g;
            long long dv = (s.factors[i] / g) % mm;
            long long rhs = (ub[i] / g) % mm;
            y[i] = mm == 1 ? 0 : (rhs * modinv(dv, mm)) % mm;
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<long long> x(A.cols, 0);
    for (int r = 0; r < A.cols; ++r) {
        for (int j = 0; j < A.cols; ++j)
            if (s.V[r][j] && y[j]) x[r] = (x[r] + checked_mul(((s.V[r][j] % m) + m) % m, y[j])) % m;
        x[r] = ((x[r] % m) + m) % m;
    }
    return x;
}

IntegerImageMembership::IntegerImageMembership(const SparseIntMatrix& A) : rows_(A.rows) {
    SparseEliminator e(A, /*transpose=*/false, /*with_u=*/true);
    e.run();
    U_ = std::move(e.U);
    diag_ = e.diag;
    diag_row_ = e.diag_row;
}

bool IntegerImageMembership::contains(const std::vector<long long>& x) const {
    if (static_cast<int>(x.size()) != rows_) throw ValidationError("membership: size mismatch");
    std::vector<long long> ux(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rows_; ++j)
            if (U_[i][j] && x[j]) ux[i] = checked_add(ux[i], checked_mul(U_[i][j], x[j]));
    std::vector<char> pivot(rows_, 0);
    for (size_t k = 0; k < diag_.size(); ++k) {
        pivot[diag_row_[k]] = 1;
        if (ux[diag_row_[k]] % diag_[k] != 0) return false;
    }
    for (int i = 0; i < rows_; ++i)
        if (!pivot[i] && ux[i] != 0) return false;
    return true;
}

ModpImageMembership::ModpImageMembership(const SparseIntMatrix& A, long long p) : p_(p) {
    rows_ = A.rows;
    auto cols = A.column_lists();
    std::vector<long long> work(rows_);
    for (const auto& c : cols) {
        if (c.empty()) continue;
        std::fill(work.begin(), work.end(), 0);
        for (auto [r, v] : c) work[r] = ((v % p) + p) % p;
        for (size_t k = 0; k < pivots_.size(); ++k) {
            long long f = work[pivot_row_[k]] % p;
            if (!f) continue;
            for (int r = 0; r < rows_; ++r)
                if (pivots_[k][r]) work[r] = ((work[r] - f * pivots_[k][r]) % p + p) % p;
        }
        int pr = -1;
        for (int r = 0; r < rows_; ++r)
            if (work[r]) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        long long inv = modinv(work[pr], p);
        for (auto& v : work) v = (v * inv) % p;
        pivots_.push_back(work);
        pivot_row_.push_back(pr);
    }
}

bool ModpImageMembership::contains(const std::vector<long long>& x) const {
    std::vector<long long> work(rows_);
    for (int r = 0; r < rows_; ++r) work[r] = ((x[r] % p_) + p_) % p_;
    for (size_t k = 0; k < pivots_.size(); ++k) {
        long long f = work[pivot_row_[k]] % p_;
        if (!f) continue;
        for (int r = 0; r < rows_; ++r)
            if (pivots_[k][r]) work[r] = ((work[r] - f * pivots_[k][r]) % p_ + p_) % p_;
    }
    for (long long v : work)
        if (v) return false;
    return true;
}

std::vector<std::vector<long long>> integer_kernel_basis(const SparseIntMatrix& A) {
    SmithTransforms s = smith_with_transforms(A);
    // D = U A V: kernel spanned by columns of V beyond the rank
    std::vector<std::vector<long long>> out;
    for (int j = s.rank; j < A.cols; ++j) {
        std::vector<long long> v(A.cols);
        for (int r = 0; r < A.cols; ++r) v[r] = s.V[r][j];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace kpn
