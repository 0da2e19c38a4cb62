#pragma once

#include <string>
#include <vector>

#include "flatmod/poly.hpp"

namespace flatmod {

// Exact arithmetic in Z[x]/Phi_e(x), the ring of integers of the e-th
// cyclotomic field.  Elements are coefficient vectors of length phi(e) in the
// power basis 1, z, ..., z^(phi(e)-1) where z is a fixed primitive e-th root
// of unity.
class CycRing {
public:
    using Elt = std::vector<Int>;

    explicit CycRing(int e);

    int conductor() const { return e_; }
    int degree() const { return deg_; }
    const IntPoly& modulus() const { return phi_; }

    Elt zero() const { return Elt(static_cast<size_t>(deg_)); }
    Elt one() const { return integer(1); }
    Elt integer(const Int& n) const;
    Elt root_power(long k) const;  // z^k

    Elt add(Elt a, const Elt& b) const;
    Elt sub(Elt a, const Elt& b) const;
    Elt neg(Elt a) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt scale(Elt a, const Int& s) const;

    // Ring map z -> z^k; requires gcd(k, e) = 1 so it is a Galois element.
    Elt galois(const Elt& a, long k) const;

    bool is_zero(const Elt& a) const;
    bool is_rational(const Elt& a) const;
    Int rational_value(const Elt& a) const;  // throws unless is_rational

    std::vector<long> units() const;  // units mod e, ascending
    IntPoly min_poly(const Elt& a) const;
    std::string display(const Elt& a, const std::string& var = "z") const;

private:
    int e_, deg_;
    IntPoly phi_;
    std::vector<Elt> xpow_;  // x^(deg..2deg-2) reduced mod phi
};

}  // namespace flatmod
