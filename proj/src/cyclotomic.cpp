#include "flatmod/cyclotomic.hpp"

#include <algorithm>
#include <numeric>

namespace flatmod {

CycRing::CycRing(int e) : e_(e), phi_(cyclotomic_polynomial(e)) {
    deg_ = phi_.degree();
    // reductions of x^k for k = deg .. 2deg-2: x^deg = -(phi - x^deg), then shift
    Elt cur(static_cast<size_t>(deg_));
    for (int i = 0; i < deg_; ++i) cur[static_cast<size_t>(i)] = -phi_.coeff(i);
    xpow_.push_back(cur);
    for (int k = deg_ + 1; k <= 2 * deg_ - 2; ++k) {
        Elt next(static_cast<size_t>(deg_));
        // multiply cur by x, reduce the overflow term
        Int top = cur[static_cast<size_t>(deg_ - 1)];
        for (int i = deg_ - 1; i >= 1; --i) next[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
        next[0] = 0;
        if (top != 0)
            for (int i = 0; i < deg_; ++i) next[static_cast<size_t>(i)] += top * xpow_[0][static_cast<size_t>(i)];
        xpow_.push_back(next);
        cur = std::move(next);
    }
}

CycRing::Elt CycRing::integer(const Int& n) const {
    Elt a = zero();
    a[0] = n;
    return a;
}

CycRing::Elt CycRing::root_power(long k) const {
    long r = k % e_;
    if (r < 0) r += e_;
    if (r < deg_) {
        Elt a = zero();
        a[static_cast<size_t>(r)] = 1;
        return a;
    }
    // z^r with deg <= r < e: fold via repeated multiplication by the
    // precomputed overflow rows
    Elt a = zero();
    a[static_cast<size_t>(deg_ - 1)] = 1;
    long rem = r - (deg_ - 1);
    while (rem > 0) {
        // multiply a by z once
        Int top = a[static_cast<size_t>(deg_ - 1)];
        for (int i = deg_ - 1; i >= 1; --i) a[static_cast<size_t>(i)] = a[static_cast<size_t>(i - 1)];
        a[0] = 0;
        if (top != 0)
            for (int i = 0; i < deg_; ++i) a[static_cast<size_t>(i)] += top * xpow_[0][static_cast<size_t>(i)];
        --rem;
    }
    return a;
}

CycRing::Elt CycRing::add(Elt a, const Elt& b) const {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

CycRing::Elt CycRing::sub(Elt a, const Elt& b) const {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

CycRing::Elt CycRing::neg(Elt a) const {
    for (auto& x : a) x = -x;
    return a;
}

CycRing::Elt CycRing::mul(const Elt& a, const Elt& b) const {
    std::vector<Int> c(static_cast<size_t>(2 * deg_ - 1));
    for (int i = 0; i < deg_; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < deg_; ++j)
            c[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    }
    Elt r(c.begin(), c.begin() + deg_);
    for (int k = deg_; k <= 2 * deg_ - 2; ++k) {
        const Int& top = c[static_cast<size_t>(k)];
        if (top == 0) continue;
        const Elt& row = xpow_[static_cast<size_t>(k - deg_)];
        for (int i = 0; i < deg_; ++i) r[static_cast<size_t>(i)] += top * row[static_cast<size_t>(i)];
    }
    return r;
}

CycRing::Elt CycRing::scale(Elt a, const Int& s) const {
    for (auto& x : a) x *= s;
    return a;
}

CycRing::Elt CycRing::galois(const Elt& a, long k) const {
    long r = k % e_;
    if (r < 0) r += e_;
    if (std::gcd(r, static_cast<long>(e_)) != 1)
        throw InternalInconsistency("galois exponent not a unit");
    Elt out = zero();
    for (int i = 0; i < deg_; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        Elt term = scale(root_power(r * i), a[static_cast<size_t>(i)]);
        out = add(std::move(out), term);
    }
    return out;
}

bool CycRing::is_zero(const Elt& a) const {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

bool CycRing::is_rational(const Elt& a) const {
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

Int CycRing::rational_value(const Elt& a) const {
    if (!is_rational(a)) throw InternalInconsistency("cyclotomic element is not rational");
    return a[0];
}

std::vector<long> CycRing::units() const {
    if (e_ == 1) return {0};
    std::vector<long> u;
    for (long k = 1; k < e_; ++k)
        if (std::gcd(k, static_cast<long>(e_)) == 1) u.push_back(k);
    return u;
}

IntPoly CycRing::min_poly(const Elt& a) const {
    // distinct Galois conjugates = roots of the minimal polynomial
    std::vector<Elt> conj;
    for (long k : units()) {
        Elt im = e_ == 1 ? a : galois(a, k);
        if (std::find(conj.begin(), conj.end(), im) == conj.end()) conj.push_back(im);
    }
    // expand prod (t - v) with coefficients in the ring
    std::vector<Elt> coeffs{one()};
    for (const Elt& v : conj) {
        std::vector<Elt> next(coeffs.size() + 1, zero());
        for (size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] = add(next[i + 1], coeffs[i]);
            next[i] = sub(next[i], mul(coeffs[i], v));
        }
        coeffs = std::move(next);
    }
    std::vector<Int> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = rational_value(coeffs[i]);
    return IntPoly(std::move(c));
}

std::string CycRing::display(const Elt& a, const std::string& var) const {
    if (is_zero(a)) return "0";
    std::string s;
    for (int i = deg_ - 1; i >= 0; --i) {
        const Int& x = a[static_cast<size_t>(i)];
        if (x == 0) continue;
        if (!s.empty()) s += x > 0 ? " + " : " - ";
        else if (x < 0) s += "-";
        Int m = abs(x);
        if (m != 1 || i == 0) s += m.get_str();
        if (i > 0) {
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace flatmod
