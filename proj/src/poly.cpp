#include "flatmod/poly.hpp"

#include <algorithm>

namespace flatmod {

IntPoly IntPoly::x_power(int k) {
    std::vector<Int> c(k + 1);
    c[k] = 1;
    return IntPoly(std::move(c));
}

const Int& IntPoly::lc() const {
    if (c_.empty()) throw InternalInconsistency("lc of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < c_.size()) c[i] += c_[i];
        if (i < o.c_.size()) c[i] += o.c_[i];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<Int> c(c_);
    for (auto& x : c) x = -x;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> c(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::scaled(const Int& a) const {
    std::vector<Int> c(c_);
    for (auto& x : c) x *= a;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(c));
}

Int IntPoly::eval(const Int& x) const {
    Int r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + Rat(c_[i]);
    return r;
}

IntPoly IntPoly::dilate(const Int& a) const {
    std::vector<Int> c(c_);
    Int pw = 1;
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] *= pw;
        pw *= a;
    }
    return IntPoly(std::move(c));
}

Int IntPoly::content() const {
    Int g = 0;
    for (const Int& x : c_) g = gcd(g, x);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    if (lc() < 0) g = -g;
    std::vector<Int> c(c_);
    for (auto& x : c) x /= g;
    return IntPoly(std::move(c));
}

std::string IntPoly::display(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        Int a = coeff(i);
        if (a == 0) continue;
        if (!s.empty()) s += a > 0 ? " + " : " - ";
        else if (a < 0) s += "-";
        Int m = abs(a);
        if (m != 1 || i == 0) s += m.get_str();
        if (i > 0) {
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

IntPoly exact_div(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw InternalInconsistency("polynomial division by zero");
    std::vector<Int> rem(num.coeffs());
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) {
        if (num.is_zero()) return IntPoly();
        throw InternalInconsistency("exact_div: degree underflow");
    }
    std::vector<Int> q(dn - dd + 1);
    for (int i = dn - dd; i >= 0; --i) {
        Int top = rem[i + dd];
        if (top % den.lc() != 0) throw InternalInconsistency("exact_div: not divisible");
        Int f = top / den.lc();
        q[i] = f;
        if (f == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[i + j] -= f * den.coeff(j);
    }
    for (const Int& r : rem)
        if (r != 0) throw InternalInconsistency("exact_div: nonzero remainder");
    return IntPoly(std::move(q));
}

bool divides(const IntPoly& den, const IntPoly& num) {
    if (den.is_zero()) return num.is_zero();
    if (num.is_zero()) return true;
    if (num.degree() < den.degree()) return false;
    RatPoly r = rp_rem(to_rat_poly(num), to_rat_poly(den));
    return rp_degree(r) < 0;
}

RatPoly to_rat_poly(const IntPoly& p) {
    RatPoly r(p.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = Rat(p.coeffs()[i]);
    return r;
}

IntPoly clear_denominators(const RatPoly& p) {
    Int d = 1;
    for (const Rat& q : p) d = lcm(d, q.get_den());
    std::vector<Int> c(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        Rat q = p[i] * Rat(d);
        c[i] = q.get_num();
    }
    return IntPoly(std::move(c)).primitive_part();
}

int rp_degree(const RatPoly& p) {
    for (size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return static_cast<int>(i);
    return -1;
}

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
    int da = rp_degree(a), db = rp_degree(b);
    if (da < 0 || db < 0) return {};
    RatPoly c(da + db + 1);
    for (int i = 0; i <= da; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j <= db; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

RatPoly rp_rem(RatPoly a, const RatPoly& b) {
    int db = rp_degree(b);
    if (db < 0) throw InternalInconsistency("rp_rem: division by zero");
    const Rat blc = b[db];
    for (int i = rp_degree(a); i >= db; i = rp_degree(a)) {
        Rat f = a[i] / blc;
        for (int j = 0; j < db; ++j) a[i - db + j] -= f * b[j];
        a[i] = 0;
    }
    a.resize(static_cast<size_t>(std::max(rp_degree(a) + 1, 0)));
    return a;
}

Rat rp_eval(const RatPoly& p, const Rat& x) {
    Rat r = 0;
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

RatPoly rp_derivative(const RatPoly& p) {
    if (p.size() <= 1) return {};
    RatPoly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rat(static_cast<long>(i));
    return d;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    RatPoly x = to_rat_poly(a), y = to_rat_poly(b);
    while (rp_degree(y) >= 0) {
        RatPoly r = rp_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return clear_denominators(x);
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) return IntPoly();
    IntPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.primitive_part();
    return exact_div(p.primitive_part(), g.scaled(g.lc() < 0 ? -1 : 1)).primitive_part();
}

// ---------------------------------------------------------------- Sturm

namespace {

std::vector<RatPoly> sturm_chain(const RatPoly& p0, const RatPoly& p1) {
    std::vector<RatPoly> s{p0, p1};
    while (rp_degree(s.back()) >= 0) {
        RatPoly r = rp_rem(s[s.size() - 2], s.back());
        if (rp_degree(r) < 0) break;
        for (auto& c : r) c = -c;
        s.push_back(std::move(r));
    }
    return s;
}

int sign_at_pos_inf(const RatPoly& p) {
    int d = rp_degree(p);
    if (d < 0) return 0;
    return p[d] > 0 ? 1 : -1;
}

int sign_at_neg_inf(const RatPoly& p) {
    int d = rp_degree(p);
    if (d < 0) return 0;
    int s = p[d] > 0 ? 1 : -1;
    return d % 2 ? -s : s;
}

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

// Sturm–Tarski: V(-inf) - V(+inf) of the chain seeded with (m, m'·q) equals
// #{m(r)=0, q(r)>0} - #{m(r)=0, q(r)<0}.  m must be squarefree.
int tarski_query(const IntPoly& m, const IntPoly& q) {
    RatPoly p0 = to_rat_poly(m);
    RatPoly p1 = rp_mul(rp_derivative(p0), to_rat_poly(q));
    auto chain = sturm_chain(p0, p1);
    std::vector<int> lo, hi;
    for (const auto& c : chain) {
        lo.push_back(sign_at_neg_inf(c));
        hi.push_back(sign_at_pos_inf(c));
    }
    return variations(lo) - variations(hi);
}

}  // namespace

int count_real_roots(const IntPoly& p) {
    IntPoly sf = squarefree_part(p);
    if (sf.degree() <= 0) return 0;
    return tarski_query(sf, IntPoly({Int(1)}));
}

SignCounts sign_counts_at_roots(const IntPoly& m, const IntPoly& q) {
    IntPoly sf = squarefree_part(m);
    SignCounts out;
    if (sf.degree() <= 0) return out;
    int total = tarski_query(sf, IntPoly({Int(1)}));
    IntPoly g = poly_gcd(sf, q);
    out.zero = g.degree() >= 1 ? count_real_roots(g) : 0;
    int diff = tarski_query(sf, q);
    out.positive = (total - out.zero + diff) / 2;
    out.negative = (total - out.zero - diff) / 2;
    if (out.positive < 0 || out.negative < 0 ||
        out.positive + out.negative + out.zero != total)
        throw InternalInconsistency("inconsistent Sturm sign counts");
    return out;
}

// ------------------------------------------------- arithmetic mod p

namespace {

using PolyP = std::vector<long>;  // coeff[i] of x^i, values in [0, p)

long mod_norm(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

long mod_pow(long b, long e, long p) {
    long r = 1;
    b = mod_norm(b, p);
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

long mod_inv(long a, long p) { return mod_pow(mod_norm(a, p), p - 2, p); }

void pp_trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pp_deg(const PolyP& a) { return static_cast<int>(a.size()) - 1; }

PolyP pp_mul(const PolyP& a, const PolyP& b, long p) {
    if (a.empty() || b.empty()) return {};
    PolyP c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    pp_trim(c);
    return c;
}

PolyP pp_add(PolyP a, const PolyP& b, long p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
    pp_trim(a);
    return a;
}

PolyP pp_sub(PolyP a, const PolyP& b, long p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = mod_norm(a[i] - b[i], p);
    pp_trim(a);
    return a;
}

PolyP pp_rem(PolyP a, const PolyP& b, long p, PolyP* quot = nullptr) {
    int db = pp_deg(b);
    if (db < 0) throw InternalInconsistency("pp_rem: zero divisor");
    long inv = mod_inv(b[db], p);
    PolyP q(static_cast<size_t>(std::max(pp_deg(a) - db + 1, 0)), 0);
    for (int i = pp_deg(a); i >= db; i = pp_deg(a)) {
        long f = a[i] * inv % p;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j)
            a[i - db + j] = mod_norm(a[i - db + j] - f * b[j], p);
        pp_trim(a);
    }
    if (quot) *quot = q;
    return a;
}

PolyP pp_exact_div(const PolyP& a, const PolyP& b, long p) {
    PolyP q;
    PolyP r = pp_rem(a, b, p, &q);
    if (!r.empty()) throw InternalInconsistency("pp_exact_div: nonzero remainder");
    return q;
}

PolyP pp_gcd(PolyP a, PolyP b, long p) {
    while (!b.empty()) {
        PolyP r = pp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long inv = mod_inv(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

PolyP pp_powmod(PolyP base, Int e, const PolyP& f, long p) {
    PolyP r{1};
    base = pp_rem(std::move(base), f, p);
    while (e > 0) {
        if (fmod(e, 2) == 1) r = pp_rem(pp_mul(r, base, p), f, p);
        base = pp_rem(pp_mul(base, base, p), f, p);
        e = fdiv(e, 2);
    }
    return r;
}

std::vector<std::pair<PolyP, int>> pp_ddf(PolyP f, long p) {
    std::vector<std::pair<PolyP, int>> out;
    PolyP h{0, 1};  // x
    int d = 0;
    while (pp_deg(f) > 0) {
        ++d;
        if (2 * d > pp_deg(f)) {
            out.emplace_back(f, pp_deg(f));
            break;
        }
        h = pp_powmod(std::move(h), Int(p), f, p);
        PolyP g = pp_gcd(pp_sub(h, PolyP{0, 1}, p), f, p);
        if (pp_deg(g) > 0) {
            out.emplace_back(g, d);
            f = pp_exact_div(f, g, p);
            h = pp_rem(std::move(h), f, p);
        }
    }
    return out;
}

// Cantor–Zassenhaus split of a product of degree-d irreducibles.
void pp_edf(const PolyP& f, int d, long p, Rng& rng, std::vector<PolyP>& out) {
    if (pp_deg(f) == d) {
        out.push_back(f);
        return;
    }
    for (;;) {
        PolyP r(static_cast<size_t>(pp_deg(f)), 0);
        for (auto& c : r) c = rng.uniform(0, p - 1);
        pp_trim(r);
        if (pp_deg(r) < 1) continue;
        PolyP g = pp_gcd(r, f, p);
        if (pp_deg(g) <= 0 || pp_deg(g) == pp_deg(f)) {
            PolyP split;
            if (p == 2) {
                // trace map over F_{2^d}: r + r^2 + ... + r^(2^(d-1))
                PolyP t = r, acc = r;
                for (int i = 1; i < d; ++i) {
                    acc = pp_powmod(std::move(acc), Int(2), f, p);
                    t = pp_add(std::move(t), acc, p);
                }
                split = std::move(t);
            } else {
                Int e = 1;
                for (int i = 0; i < d; ++i) e *= p;
                e = (e - 1) / 2;
                split = pp_sub(pp_powmod(r, e, f, p), PolyP{1}, p);
            }
            g = pp_gcd(split, f, p);
        }
        if (pp_deg(g) > 0 && pp_deg(g) < pp_deg(f)) {
            pp_edf(g, d, p, rng, out);
            pp_edf(pp_exact_div(f, g, p), d, p, rng, out);
            return;
        }
    }
}

std::vector<PolyP> pp_factor_squarefree(const PolyP& f, long p, Rng& rng) {
    std::vector<PolyP> out;
    for (const auto& [part, d] : pp_ddf(f, p))
        pp_edf(part, d, p, rng, out);
    return out;
}

// --------------------------------------------- Hensel / Zassenhaus

Int sym_mod(const Int& a, const Int& m) {
    Int r = fmod(a, m);
    if (2 * r >= m) r -= m;
    return r;
}

IntPoly sym_mod_poly(const IntPoly& a, const Int& m) {
    std::vector<Int> c(a.coeffs());
    for (auto& x : c) x = sym_mod(x, m);
    return IntPoly(std::move(c));
}

IntPoly mod_poly(const IntPoly& a, const Int& m) {
    std::vector<Int> c(a.coeffs());
    for (auto& x : c) x = fmod(x, m);
    return IntPoly(std::move(c));
}

IntPoly from_pp(const PolyP& a) {
    std::vector<Int> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    return IntPoly(std::move(c));
}

PolyP to_pp(const IntPoly& a, long p) {
    PolyP c(a.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = to_long(fmod(a.coeffs()[i], p));
    pp_trim(c);
    return c;
}

// Quadratic Hensel: given monic f ≡ g·h (mod m) with s·g + t·h ≡ 1 (mod m),
// g, h monic, returns lifts mod m² preserving both congruences.
struct HenselPair {
    IntPoly g, h, s, t;
};

HenselPair hensel_step(const IntPoly& f, const HenselPair& in, const Int& m) {
    Int m2 = m * m;
    auto mulm = [&](const IntPoly& a, const IntPoly& b) { return sym_mod_poly(a * b, m2); };
    IntPoly e = sym_mod_poly(f - in.g * in.h, m2);
    // q, r: division of s·e by h (monic), all mod m²
    auto divmod_monic = [&](const IntPoly& num, const IntPoly& den) {
        std::vector<Int> rem(num.coeffs());
        int dn = num.degree(), dd = den.degree();
        std::vector<Int> q(static_cast<size_t>(std::max(dn - dd + 1, 0)));
        for (int i = dn - dd; i >= 0; --i) {
            Int fct = sym_mod(rem[static_cast<size_t>(i + dd)], m2);
            q[static_cast<size_t>(i)] = fct;
            if (fct == 0) continue;
            for (int j = 0; j <= dd; ++j)
                rem[static_cast<size_t>(i + j)] =
                    sym_mod(rem[static_cast<size_t>(i + j)] - fct * den.coeff(j), m2);
        }
        IntPoly rr(std::move(rem));
        return std::pair<IntPoly, IntPoly>(IntPoly(std::move(q)), sym_mod_poly(rr, m2));
    };
    auto [q, r] = divmod_monic(mulm(in.s, e), in.h);
    IntPoly g1 = sym_mod_poly(in.g + mulm(in.t, e) + mulm(q, in.g), m2);
    IntPoly h1 = sym_mod_poly(in.h + r, m2);
    // refresh Bezout: b = s·g1 + t·h1 - 1 mod m²
    IntPoly b = sym_mod_poly(mulm(in.s, g1) + mulm(in.t, h1) - IntPoly({Int(1)}), m2);
    auto [c, dres] = divmod_monic(mulm(in.s, b), h1);
    IntPoly s1 = sym_mod_poly(in.s - dres, m2);
    IntPoly t1 = sym_mod_poly(in.t - mulm(in.t, b) - mulm(c, g1), m2);
    return {g1, h1, s1, t1};
}

// Lift the full monic factor list from mod p to mod p^(2^iters) >= bound.
std::vector<IntPoly> hensel_lift_list(const IntPoly& f, std::vector<PolyP> fac, long p,
                                      const Int& bound, Int* modulus_out) {
    if (fac.size() == 1) {
        *modulus_out = 0;  // unused
        return {f};
    }
    // binary split: f = gh with g = product of first half
    size_t half = fac.size() / 2;
    PolyP gp{1}, hp{1};
    for (size_t i = 0; i < fac.size(); ++i) {
        if (i < half) gp = pp_mul(gp, fac[i], p);
        else hp = pp_mul(hp, fac[i], p);
    }
    // Bezout s·g + t·h = 1 mod p (g, h coprime, both monic)
    // extended Euclid over F_p
    PolyP r0 = gp, r1 = hp, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        PolyP q;
        PolyP r2 = pp_rem(r0, r1, p, &q);
        PolyP s2 = pp_sub(s0, pp_mul(q, s1, p), p);
        PolyP t2 = pp_sub(t0, pp_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (pp_deg(r0) != 0) throw InternalInconsistency("hensel: factors not coprime");
    long inv = mod_inv(r0[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    HenselPair pair{from_pp(gp), from_pp(hp), from_pp(s0), from_pp(t0)};
    pair.g = sym_mod_poly(pair.g, Int(p));
    pair.h = sym_mod_poly(pair.h, Int(p));
    pair.s = sym_mod_poly(pair.s, Int(p));
    pair.t = sym_mod_poly(pair.t, Int(p));
    Int m = p;
    while (m < bound) {
        pair = hensel_step(f, pair, m);
        m = m * m;
    }
    if (modulus_out) *modulus_out = m;
    // recurse on both halves with their lifted images
    std::vector<PolyP> gfac(fac.begin(), fac.begin() + static_cast<long>(half));
    std::vector<PolyP> hfac(fac.begin() + static_cast<long>(half), fac.end());
    Int sub_m;
    std::vector<IntPoly> out;
    for (auto& q : hensel_lift_list(pair.g, gfac, p, bound, &sub_m)) out.push_back(q);
    for (auto& q : hensel_lift_list(pair.h, hfac, p, bound, &sub_m)) out.push_back(q);
    return out;
}

Int sqrt_ceil(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r < n) r += 1;
    return r;
}

// Factor a monic squarefree integer polynomial.
std::vector<IntPoly> factor_monic_squarefree(const IntPoly& f, Rng& rng) {
    int d = f.degree();
    if (d == 1) return {f};
    // choose p keeping f squarefree mod p
    long p = 0;
    for (long cand = 2; cand < 2000; ++cand) {
        bool prime = cand >= 2;
        for (long q = 2; q * q <= cand; ++q)
            if (cand % q == 0) { prime = false; break; }
        if (!prime) continue;
        if (fmod(f.lc(), cand) == 0) continue;
        PolyP fp = to_pp(f, cand);
        if (pp_deg(fp) != d) continue;
        PolyP der = to_pp(f.derivative(), cand);
        if (pp_deg(pp_gcd(fp, der, cand)) == 0) {
            p = cand;
            break;
        }
    }
    if (p == 0) throw InternalInconsistency("no squarefree prime found for factorization");
    std::vector<PolyP> fac = pp_factor_squarefree(to_pp(f, p), p, rng);
    std::sort(fac.begin(), fac.end());
    if (fac.size() == 1) return {f};
    // Mignotte-style bound: any factor coefficient is at most 2^d * ||f||_2
    Int norm2 = 0;
    for (const Int& c : f.coeffs()) norm2 += c * c;
    Int bound = (Int(1) << d) * (sqrt_ceil(norm2) + 1);
    Int modulus;
    std::vector<IntPoly> lifted = hensel_lift_list(f, fac, p, 2 * bound + 1, &modulus);
    // subset recombination over the lifted factors
    std::vector<IntPoly> result;
    IntPoly rest = f;
    std::vector<bool> used(lifted.size(), false);
    size_t remaining = lifted.size();
    for (size_t take = 1; take <= remaining; ++take) {
        bool progress = true;
        while (progress && take <= remaining / 2 + (remaining % 2)) {
            progress = false;
            // enumerate index subsets of size `take` over unused factors
            std::vector<size_t> avail;
            for (size_t i = 0; i < lifted.size(); ++i)
                if (!used[i]) avail.push_back(i);
            if (take > avail.size()) break;
            std::vector<size_t> idx(take);
            for (size_t i = 0; i < take; ++i) idx[i] = i;
            for (;;) {
                IntPoly cand({Int(1)});
                for (size_t i : idx) cand = sym_mod_poly(cand * lifted[avail[i]], modulus);
                cand = sym_mod_poly(cand, modulus);
                if (divides(cand, rest)) {
                    result.push_back(cand);
                    rest = exact_div(rest, cand);
                    for (size_t i : idx) used[avail[i]] = true;
                    remaining -= take;
                    progress = true;
                    break;
                }
                // next combination
                size_t k = take;
                while (k > 0 && idx[k - 1] == avail.size() - take + (k - 1)) --k;
                if (k == 0) break;
                ++idx[k - 1];
                for (size_t i = k; i < take; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
    }
    if (rest.degree() > 0) result.push_back(rest);
    std::sort(result.begin(), result.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    return result;
}

}  // namespace

PolyFactorization factor_rational_poly(const IntPoly& p, std::uint64_t seed) {
    PolyFactorization out;
    out.unit = 0;
    if (p.is_zero()) return out;
    Rng rng(seed);
    Int content = p.content();
    if (p.lc() < 0) content = -content;
    out.unit = Rat(content);
    IntPoly work = p.primitive_part();
    if (work.degree() == 0) return out;
    // squarefree decomposition (Yun)
    std::vector<std::pair<IntPoly, int>> squarefree_parts;
    {
        IntPoly a = work;
        int mult = 1;
        IntPoly g = poly_gcd(a, a.derivative());
        if (g.degree() == 0) {
            squarefree_parts.emplace_back(a, 1);
        } else {
            IntPoly w = exact_div(a, g);
            while (w.degree() > 0) {
                IntPoly y = poly_gcd(w, g);
                IntPoly z = exact_div(w, y);
                if (z.degree() > 0) squarefree_parts.emplace_back(z, mult);
                ++mult;
                w = y;
                g = exact_div(g, y);
            }
            if (g.degree() > 0)
                throw InternalInconsistency("squarefree decomposition leftover");
        }
    }
    for (const auto& [sf, mult] : squarefree_parts) {
        // monicize: F(x) = lc^(d-1) f(x/lc) is monic with integer coefficients
        Int l = sf.lc();
        IntPoly monic;
        {
            int d = sf.degree();
            std::vector<Int> c(static_cast<size_t>(d) + 1);
            c[static_cast<size_t>(d)] = 1;
            Int pw = 1;  // l^(d-1-i)
            for (int i = d - 1; i >= 0; --i) {
                c[static_cast<size_t>(i)] = sf.coeff(i) * pw;
                pw *= l;
            }
            monic = IntPoly(std::move(c));
        }
        for (const IntPoly& fac : factor_monic_squarefree(monic, rng)) {
            IntPoly g = fac.dilate(l).primitive_part();
            out.factors.push_back({g, mult});
        }
    }
    // fix the unit so that the product matches exactly
    IntPoly prod({Int(1)});
    for (const auto& f : out.factors)
        for (int i = 0; i < f.multiplicity; ++i) prod = prod * f.factor;
    // p = unit * prod must hold with unit rational
    Rat unit = Rat(p.lc()) / Rat(prod.lc());
    out.unit = unit;
    if (p.scaled(unit.get_den()) != prod.scaled(unit.get_num()))
        throw InternalInconsistency("factorization product mismatch");
    std::sort(out.factors.begin(), out.factors.end(),
              [](const PolyFactor& a, const PolyFactor& b) {
                  if (a.factor.degree() != b.factor.degree())
                      return a.factor.degree() < b.factor.degree();
                  return a.factor.coeffs() < b.factor.coeffs();
              });
    return out;
}

bool is_irreducible(const IntPoly& p, std::uint64_t seed) {
    if (p.degree() <= 0) return false;
    auto f = factor_rational_poly(p, seed);
    return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

IntPoly cyclotomic_polynomial(int e) {
    if (e < 1) throw InternalInconsistency("cyclotomic index must be positive");
    // x^e - 1 divided by the product of lower cyclotomics
    std::vector<Int> c(static_cast<size_t>(e) + 1);
    c[0] = -1;
    c[static_cast<size_t>(e)] = 1;
    IntPoly num(std::move(c));
    for (int d = 1; d < e; ++d)
        if (e % d == 0) num = exact_div(num, cyclotomic_polynomial(d));
    return num;
}

}  // namespace flatmod
