// Determinants of matrices with entries a + b t, exactly.
//
// Small matrices use fraction-free Bareiss elimination over Z[t]. Larger ones
// are evaluated at m+1 points modulo enough 61-bit primes to exceed twice the
// Hadamard bound on the coefficients, interpolated, and lifted by CRT, which is
// exact as well.

#include "legcalc/topo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>

namespace legcalc {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Poly = std::vector<Int>; // ascending, exponents from 0

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

Poly exact_div(Poly a, const Poly& d) {
    if (a.empty()) return {};
    if (a.size() < d.size()) throw Error(ErrorCode::Internal, "inexact Bareiss division");
    Poly q(a.size() - d.size() + 1);
    const Int& lc = d.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        const Int& top = a[k + d.size() - 1];
        if (top == 0) continue;
        if (top % lc != 0) throw Error(ErrorCode::Internal, "inexact Bareiss division");
        Int c = top / lc;
        q[k] = c;
        for (std::size_t i = 0; i < d.size(); ++i) a[k + i] -= c * d[i];
    }
    trim(a);
    if (!a.empty()) throw Error(ErrorCode::Internal, "inexact Bareiss division");
    trim(q);
    return q;
}

LaurentPoly det_bareiss(const LinMatrix& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return LaurentPoly(1);
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
    for (int r = 0; r < n; ++r) {
        for (const auto& e : m[r]) {
            Poly& p = a[r][e.col];
            if (p.size() < 2) p.resize(2);
            p[0] += e.a;
            p[1] += e.b;
        }
        for (auto& p : a[r]) trim(p);
    }
    int sign = 1;
    Poly prev{Int(1)};
    for (int k = 0; k < n; ++k) {
        int piv = k;
        while (piv < n && a[piv][k].empty()) ++piv;
        if (piv == n) return {};
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = exact_div(sub(mul(a[i][j], a[k][k]), mul(a[i][k], a[k][j])), prev);
            a[i][k].clear();
        }
        prev = a[k][k];
    }
    Poly d = a[n - 1][n - 1];
    if (sign < 0)
        for (auto& c : d) c = -c;
    return LaurentPoly(0, std::move(d));
}

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 inverse(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (n % q == 0) return n == q;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> primes(std::size_t count) {
    static std::vector<u64> cache;
    u64 next = cache.empty() ? (1ULL << 61) - 1 : cache.back() - 2;
    while (cache.size() < count) {
        if (is_prime(next)) cache.push_back(next);
        next -= 2;
    }
    return {cache.begin(), cache.begin() + static_cast<long>(count)};
}

u64 reduce(long v, u64 p) {
    long long r = static_cast<long long>(v % static_cast<long long>(p));
    return r < 0 ? static_cast<u64>(r + static_cast<long long>(p)) : static_cast<u64>(r);
}

struct SparseRow {
    std::vector<int> col;
    std::vector<u64> val;
};

// Determinant mod p of the matrix evaluated at t = x, by sparse elimination
// with Markowitz-style pivots (shortest column, then shortest row).
u64 det_at(const LinMatrix& m, u64 x, u64 p) {
    int n = static_cast<int>(m.size());
    std::vector<SparseRow> rows(n);
    std::vector<int> colcnt(n, 0);
    std::vector<std::vector<int>> collist(n);
    for (int r = 0; r < n; ++r) {
        for (const auto& e : m[r]) {
            u64 v = (reduce(e.a, p) + mulmod(reduce(e.b, p), x, p)) % p;
            if (v == 0) continue;
            rows[r].col.push_back(e.col);
            rows[r].val.push_back(v);
            ++colcnt[e.col];
            collist[e.col].push_back(r);
        }
    }
    std::vector<char> active(n, 1), done(n, 0);
    std::vector<int> stamp(n, -1), rowcol(n, -1);
    u64 det = 1;
    auto find = [&](const SparseRow& row, int c) {
        auto it = std::lower_bound(row.col.begin(), row.col.end(), c);
        return (it != row.col.end() && *it == c) ? static_cast<int>(it - row.col.begin()) : -1;
    };
    SparseRow merged;
    for (int stepno = 0; stepno < n; ++stepno) {
        int c = -1;
        for (int k = 0; k < n; ++k) {
            if (done[k]) continue;
            if (colcnt[k] == 0) return 0;
            if (c < 0 || colcnt[k] < colcnt[c]) c = k;
        }
        int pr = -1;
        for (int r : collist[c]) {
            if (!active[r] || find(rows[r], c) < 0) continue;
            if (pr < 0 || rows[r].col.size() < rows[pr].col.size()) pr = r;
        }
        if (pr < 0) return 0;
        const SparseRow& prow = rows[pr];
        u64 pv = prow.val[find(prow, c)];
        det = mulmod(det, pv, p);
        rowcol[pr] = c;
        u64 inv = inverse(pv, p);
        active[pr] = 0;
        done[c] = 1;
        for (int k : prow.col) --colcnt[k];
        for (int r : collist[c]) {
            if (!active[r] || stamp[r] == stepno) continue;
            stamp[r] = stepno;
            SparseRow& row = rows[r];
            int at = find(row, c);
            if (at < 0) continue;
            u64 f = mulmod(row.val[at], inv, p);
            merged.col.clear();
            merged.val.clear();
            std::size_t i = 0, j = 0;
            while (i < row.col.size() || j < prow.col.size()) {
                if (j == prow.col.size() || (i < row.col.size() && row.col[i] < prow.col[j])) {
                    merged.col.push_back(row.col[i]);
                    merged.val.push_back(row.val[i]);
                    ++i;
                } else if (i == row.col.size() || prow.col[j] < row.col[i]) {
                    int k = prow.col[j];
                    u64 v = (p - mulmod(f, prow.val[j], p)) % p;
                    if (v != 0 && !done[k]) {
                        merged.col.push_back(k);
                        merged.val.push_back(v);
                        ++colcnt[k];
                        collist[k].push_back(r);
                    }
                    ++j;
                } else {
                    int k = row.col[i];
                    u64 v = (row.val[i] + p - mulmod(f, prow.val[j], p)) % p;
                    if (v != 0 && !done[k]) {
                        merged.col.push_back(k);
                        merged.val.push_back(v);
                    } else if (!done[k] || k == c) {
                        --colcnt[k];
                    }
                    ++i;
                    ++j;
                }
            }
            std::swap(row, merged);
        }
        collist[c].clear();
    }
    std::vector<char> seen(n, 0);
    int sign = 1;
    for (int r = 0; r < n; ++r) {
        if (seen[r]) continue;
        int len = 0;
        for (int k = r; !seen[k]; k = rowcol[k]) {
            seen[k] = 1;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign > 0 ? det : (p - det) % p;
}

// Coefficients (ascending) of the polynomial of degree < n through (x_i, y_i)
// with x_i = i + 1.
std::vector<u64> interpolate(std::vector<u64> y, u64 p) {
    std::size_t n = y.size();
    std::vector<u64> inv(n + 1, 1);
    for (std::size_t k = 1; k <= n; ++k) inv[k] = inverse(k, p);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) y[i] = mulmod((y[i] + p - y[i - 1]) % p, inv[j], p);
    std::vector<u64> poly{y[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        u64 xi = (i + 1) % p;
        std::vector<u64> next(poly.size() + 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = (next[k + 1] + poly[k]) % p;
            next[k] = (next[k] + p - mulmod(poly[k], xi, p)) % p;
        }
        next[0] = (next[0] + y[i]) % p;
        poly = std::move(next);
    }
    return poly;
}

double hadamard_bits(const LinMatrix& m) {
    double bits = 0;
    for (const auto& row : m) {
        double s = 0;
        for (const auto& e : row) {
            double w = std::fabs(static_cast<double>(e.a)) + std::fabs(static_cast<double>(e.b));
            s += w * w;
        }
        if (s > 0) bits += 0.5 * std::log2(s);
    }
    return bits;
}

LaurentPoly det_modular(const LinMatrix& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return LaurentPoly(1);
    double need = hadamard_bits(m) + 2.0;
    std::size_t k = static_cast<std::size_t>(std::ceil(need / 60.0)) + 1;
    std::vector<u64> ps = primes(k);
    std::vector<std::vector<u64>> residues(k);

    auto work = [&](std::size_t pi) {
        u64 p = ps[pi];
        std::vector<u64> y(n + 1);
        for (int i = 0; i <= n; ++i) y[i] = det_at(m, static_cast<u64>(i + 1), p);
        residues[pi] = interpolate(std::move(y), p);
    };
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    std::size_t nthreads = std::min<std::size_t>(hw, k);
    if (nthreads <= 1 || n < 64) {
        for (std::size_t pi = 0; pi < k; ++pi) work(pi);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < nthreads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t pi = t; pi < k; pi += nthreads) work(pi);
            });
        for (auto& th : pool) th.join();
    }

    Poly out(n + 1);
    for (int c = 0; c <= n; ++c) {
        Int acc = residues[0][c];
        Int mod = Int(ps[0]);
        for (std::size_t pi = 1; pi < k; ++pi) {
            u64 p = ps[pi];
            u64 cur = static_cast<u64>(acc % p);
            u64 mm = static_cast<u64>(mod % p);
            u64 t = mulmod((residues[pi][c] + p - cur) % p, inverse(mm, p), p);
            acc += mod * t;
            mod *= p;
        }
        if (acc > mod / 2) acc -= mod;
        out[c] = acc;
    }
    return LaurentPoly(0, std::move(out));
}

} // namespace

LaurentPoly determinant(const LinMatrix& m, DetMethod method) {
    LinMatrix clean(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        std::vector<LinEntry> row = m[r];
        std::sort(row.begin(), row.end(), [](const LinEntry& x, const LinEntry& y) { return x.col < y.col; });
        for (const auto& e : row) {
            if (e.col < 0 || e.col >= static_cast<int>(m.size()))
                throw Error(ErrorCode::Internal, "matrix entry outside a square matrix");
            if (!clean[r].empty() && clean[r].back().col == e.col) {
                clean[r].back().a += e.a;
                clean[r].back().b += e.b;
            } else {
                clean[r].push_back(e);
            }
        }
        std::erase_if(clean[r], [](const LinEntry& e) { return e.a == 0 && e.b == 0; });
    }
    if (method == DetMethod::Auto)
        method = static_cast<int>(m.size()) <= kBareissLimit ? DetMethod::Bareiss : DetMethod::Modular;
    return method == DetMethod::Bareiss ? det_bareiss(clean) : det_modular(clean);
}

} // namespace legcalc
