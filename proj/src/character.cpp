#include "flatmod/character.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "flatmod/errors.hpp"

namespace flatmod {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

long powmod(long b, long e, long p) {
    long r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

long invmod(long a, long p) { return powmod(((a % p) + p) % p, p - 2, p); }

using Vec = std::vector<long>;
using Dense = std::vector<Vec>;  // row-major

// columns of `basis` are independent; returns x with basis*x = v (mod p)
Vec solve_in_basis(const Dense& basis_cols, const Vec& v, long p) {
    std::size_t rows = basis_cols.empty() ? v.size() : basis_cols[0].size();
    std::size_t cols = basis_cols.size();
    Dense aug(rows, Vec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = basis_cols[j][i];
        aug[i][cols] = v[i];
    }
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && aug[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(aug[rank], aug[piv]);
        long inv = invmod(aug[rank][c], p);
        for (auto& x : aug[rank]) x = x * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || aug[i][c] == 0) continue;
            long f = aug[i][c];
            for (std::size_t j = 0; j <= cols; ++j)
                aug[i][j] = ((aug[i][j] - f * aug[rank][j]) % p + p) % p;
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t i = rank; i < rows; ++i)
        if (aug[i][cols] != 0)
            throw InternalInconsistency("class-sum eigenvector solve: inconsistent system");
    Vec x(cols, 0);
    for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = aug[i][cols];
    return x;
}

// kernel basis (columns) of square matrix m (mod p)
Dense kernel_mod_p(Dense m, long p) {
    std::size_t n = m.size();
    std::vector<long> pivot_of_col(n, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < n; ++c) {
        std::size_t piv = rank;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[rank], m[piv]);
        long inv = invmod(m[rank][c], p);
        for (auto& x : m[rank]) x = x * inv % p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            long f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
        }
        pivot_of_col[c] = static_cast<long>(rank);
        ++rank;
    }
    Dense ker;
    for (std::size_t c = 0; c < n; ++c) {
        if (pivot_of_col[c] != -1) continue;
        Vec v(n, 0);
        v[c] = 1;
        for (std::size_t cc = 0; cc < n; ++cc)
            if (pivot_of_col[cc] != -1)
                v[cc] = (p - m[static_cast<std::size_t>(pivot_of_col[cc])][c]) % p;
        ker.push_back(std::move(v));
    }
    return ker;
}

}  // namespace

CharacterTable::CharacterTable(const PointGroup& h) : h_(h), ring_(h.exponent()) {
    const std::size_t n = h.order();
    const long e = h.exponent();
    const auto& classes = h.conjugacy_classes();
    const std::size_t r = classes.size();
    for (const auto& c : classes) {
        reps_.push_back(c[0]);
        sizes_.push_back(c.size());
    }
    class_index_.resize(n);
    for (std::size_t g = 0; g < n; ++g) class_index_[g] = h.class_of(g);
    inv_class_.assign(r, 0);
    for (std::size_t k = 0; k < r; ++k) inv_class_[k] = class_index_[h.inverse(reps_[k])];

    // Dixon prime: smallest p = 1 (mod e) with p > 2*sqrt(|H|)
    long need = static_cast<long>(2.0 * std::sqrt(static_cast<double>(n))) + 1;
    for (long c = 1;; ++c) {
        long p = c * e + 1;
        if (p <= need || p < 3) continue;
        if (is_prime(p)) {
            prime_ = p;
            break;
        }
        if (p > 1000000) throw PrimeSearchFailed("no usable prime below 1000000");
    }
    const long p = prime_;

    // fixed primitive e-th root of unity in F_p
    long factors_pm1[16];
    int nf = 0;
    {
        long m = p - 1;
        for (long q = 2; q * q <= m; ++q)
            if (m % q == 0) {
                factors_pm1[nf++] = q;
                while (m % q == 0) m /= q;
            }
        if (m > 1) factors_pm1[nf++] = m;
    }
    long gen = 0;
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (int i = 0; i < nf && ok; ++i)
            if (powmod(g, (p - 1) / factors_pm1[i], p) == 1) ok = false;
        if (ok) {
            gen = g;
            break;
        }
    }
    const long w = powmod(gen, (p - 1) / e, p);  // order exactly e

    // class-sum matrices: (A_j)_{k,l} = #{ x in C_j : x^{-1} rep_l in C_k }
    std::vector<Dense> csum(r, Dense(r, Vec(r, 0)));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t x : classes[j]) {
            std::size_t xi = h.inverse(x);
            for (std::size_t l = 0; l < r; ++l) {
                std::size_t y = h.mul(xi, reps_[l]);
                csum[j][class_index_[y]][l] += 1;
            }
        }

    // sequential simultaneous eigenspace refinement
    std::vector<Dense> spaces;
    {
        Dense full;
        for (std::size_t i = 0; i < r; ++i) {
            Vec v(r, 0);
            v[i] = 1;
            full.push_back(std::move(v));
        }
        spaces.push_back(std::move(full));
    }
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<Dense> next;
        for (const Dense& s : spaces) {
            if (s.size() == 1) {
                next.push_back(s);
                continue;
            }
            // restriction T of csum[j] to the invariant subspace spanned by s
            std::size_t dim = s.size();
            Dense t(dim, Vec(dim, 0));  // row-major
            for (std::size_t c = 0; c < dim; ++c) {
                Vec img(r, 0);
                for (std::size_t row = 0; row < r; ++row) {
                    long acc = 0;
                    for (std::size_t col = 0; col < r; ++col)
                        acc = (acc + csum[j][row][col] * s[c][col]) % p;
                    img[row] = acc;
                }
                Vec coord = solve_in_basis(s, img, p);
                for (std::size_t row = 0; row < dim; ++row) t[row][c] = coord[row];
            }
            for (long lam = 0; lam < p; ++lam) {
                Dense shifted = t;
                for (std::size_t i = 0; i < dim; ++i) shifted[i][i] = ((shifted[i][i] - lam) % p + p) % p;
                Dense ker = kernel_mod_p(shifted, p);
                if (ker.empty()) continue;
                Dense sub;
                for (const Vec& kv : ker) {
                    Vec v(r, 0);
                    for (std::size_t c = 0; c < dim; ++c)
                        for (std::size_t row = 0; row < r; ++row)
                            v[row] = (v[row] + kv[c] * s[c][row]) % p;
                    sub.push_back(std::move(v));
                }
                next.push_back(std::move(sub));
            }
        }
        spaces = std::move(next);
    }
    if (spaces.size() != r)
        throw InternalInconsistency("class-sum eigenspaces failed to separate");

    // central characters, normalized at the identity class (class 0)
    Dense omega;
    for (Dense& s : spaces) {
        Vec v = s[0];
        if (v[0] == 0) throw InternalInconsistency("central character vanishes at identity");
        long inv = invmod(v[0], p);
        for (auto& x : v) x = x * inv % p;
        omega.push_back(std::move(v));
    }

    // degrees: d^2 = |H| / sum_k omega_k omega_{k'} / |C_k|
    std::vector<long> degmod(r);
    std::vector<Vec> chimod(r, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        long denom = 0;
        for (std::size_t k = 0; k < r; ++k)
            denom = (denom + omega[i][k] * omega[i][inv_class_[k]] % p * invmod(static_cast<long>(sizes_[k]), p)) % p;
        long d2 = static_cast<long>(n % p) * invmod(denom, p) % p;
        long d = 0;
        for (long cand = 1; 2 * cand < p; ++cand)
            if (cand * cand % p == d2) {
                d = cand;
                break;
            }
        if (d == 0) throw InternalInconsistency("degree recovery failed");
        degmod[i] = d;
        for (std::size_t k = 0; k < r; ++k)
            chimod[i][k] = d * omega[i][k] % p * invmod(static_cast<long>(sizes_[k]), p) % p;
    }

    // exact cyclotomic lift by eigenvalue-multiplicity counting
    std::vector<std::pair<Int, std::vector<CycRing::Elt>>> rows;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<CycRing::Elt> vals(r, ring_.zero());
        for (std::size_t k = 0; k < r; ++k) {
            long o = h.element_order(reps_[k]);
            long wo = powmod(w, e / o, p);  // order-o root matched to z^(e/o)
            long oinv = invmod(o, p);
            CycRing::Elt acc = ring_.zero();
            long total = 0;
            for (long s = 0; s < o; ++s) {
                long m = 0;
                for (long t = 0; t < o; ++t) {
                    std::size_t kt = class_index_[h.power(reps_[k], t)];
                    m = (m + chimod[i][kt] * powmod(wo, ((o - s) * t) % o, p)) % p;
                }
                m = m * oinv % p;
                if (m > degmod[i])
                    throw InternalInconsistency("eigenvalue multiplicity exceeds degree");
                total += m;
                if (m != 0)
                    acc = ring_.add(std::move(acc),
                                    ring_.scale(ring_.root_power(s * (e / o)), Int(m)));
            }
            if (total != degmod[i])
                throw InternalInconsistency("eigenvalue multiplicities do not sum to degree");
            vals[k] = std::move(acc);
        }
        rows.emplace_back(Int(degmod[i]), std::move(vals));
    }

    // canonical ordering: by degree, then lexicographic value vectors
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    for (auto& [d, vals] : rows) {
        degrees_.push_back(d);
        values_.push_back(std::move(vals));
    }

    // sanity: sum of squared degrees, orthogonality
    Int sq = 0;
    for (const Int& d : degrees_) sq += d * d;
    if (sq != Int(static_cast<long>(n)))
        throw InternalInconsistency("degree squares do not sum to the group order");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (inner(values_[i], values_[j]) != Int(i == j ? 1 : 0))
                throw InternalInconsistency("character rows fail orthogonality");

    // Frobenius-Schur indicators
    for (std::size_t i = 0; i < r; ++i) {
        CycRing::Elt acc = ring_.zero();
        for (std::size_t k = 0; k < r; ++k) {
            std::size_t k2 = power_class(k, 2);
            acc = ring_.add(std::move(acc),
                            ring_.scale(values_[i][k2], Int(static_cast<long>(sizes_[k]))));
        }
        Int v = ring_.rational_value(acc);
        if (v % Int(static_cast<long>(n)) != 0)
            throw InternalInconsistency("indicator sum not divisible by group order");
        Int ind = v / Int(static_cast<long>(n));
        if (ind < -1 || ind > 1) throw InternalInconsistency("indicator out of range");
        indicators_.push_back(static_cast<int>(to_long(ind)));
    }

    // Galois orbits under x -> x^k
    orbit_of_.assign(r, SIZE_MAX);
    for (std::size_t i = 0; i < r; ++i) {
        if (orbit_of_[i] != SIZE_MAX) continue;
        std::size_t id = orbits_.size();
        std::vector<std::size_t> orbit{i};
        orbit_of_[i] = id;
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (long k : ring_.units()) {
                std::size_t im = galois_permute(orbit[head], k);
                if (orbit_of_[im] == SIZE_MAX) {
                    orbit_of_[im] = id;
                    orbit.push_back(im);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        orbits_.push_back(std::move(orbit));
    }
}

std::size_t CharacterTable::power_class(std::size_t k, long m) const {
    return class_index_[h_.power(reps_[k], m)];
}

std::size_t CharacterTable::galois_permute(std::size_t i, long k) const {
    const std::size_t r = reps_.size();
    std::vector<CycRing::Elt> permuted(r);
    for (std::size_t c = 0; c < r; ++c) permuted[c] = values_[i][power_class(c, k)];
    for (std::size_t j = 0; j < r; ++j)
        if (values_[j] == permuted) return j;
    throw InternalInconsistency("Galois image of a character row is not in the table");
}

Int CharacterTable::inner(const std::vector<CycRing::Elt>& a,
                          const std::vector<CycRing::Elt>& b) const {
    CycRing::Elt acc = ring_.zero();
    for (std::size_t k = 0; k < reps_.size(); ++k) {
        CycRing::Elt term = ring_.mul(a[k], b[inv_class_[k]]);
        acc = ring_.add(std::move(acc), ring_.scale(std::move(term), Int(static_cast<long>(sizes_[k]))));
    }
    Int v = ring_.rational_value(acc);
    Int order(static_cast<long>(h_.order()));
    if (v % order != 0) throw InternalInconsistency("character inner product not integral");
    return v / order;
}

Int CharacterTable::natural_multiplicity(std::size_t i) const {
    std::vector<CycRing::Elt> nat(reps_.size());
    for (std::size_t k = 0; k < reps_.size(); ++k)
        nat[k] = ring_.integer(h_.element(reps_[k]).trace());
    return inner(nat, values_[i]);
}

}  // namespace flatmod
