#pragma once

#include <string>
#include <vector>

#include "flatmod/numeric.hpp"

namespace flatmod {

// Dense integer polynomial, coeff[i] belongs to x^i, no trailing zeros.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }
    static IntPoly x_power(int k);
    static IntPoly constant(const Int& a) { return IntPoly({a}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Int& lc() const;
    Int coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Int(0); }
    const std::vector<Int>& coeffs() const { return c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const = default;

    IntPoly scaled(const Int& a) const;
    IntPoly derivative() const;
    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    // substitute x -> a*x
    IntPoly dilate(const Int& a) const;

    Int content() const;  // gcd of coefficients, >= 0 (0 for zero poly)
    IntPoly primitive_part() const;

    std::string display(const std::string& var = "x") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

// Exact division; throws InternalInconsistency if the remainder is nonzero.
IntPoly exact_div(const IntPoly& num, const IntPoly& den);
bool divides(const IntPoly& den, const IntPoly& num);

// Rational polynomials: just enough for Euclidean division and Sturm chains.
using RatPoly = std::vector<Rat>;  // coeff[i] of x^i, trailing zeros allowed

RatPoly to_rat_poly(const IntPoly& p);
IntPoly clear_denominators(const RatPoly& p);  // primitive integer multiple
int rp_degree(const RatPoly& p);
RatPoly rp_mul(const RatPoly& a, const RatPoly& b);
RatPoly rp_rem(RatPoly a, const RatPoly& b);
Rat rp_eval(const RatPoly& p, const Rat& x);
RatPoly rp_derivative(const RatPoly& p);

// gcd of integer polynomials, primitive with positive leading coefficient.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);
// largest squarefree divisor (primitive, positive lc)
IntPoly squarefree_part(const IntPoly& p);

// Number of distinct real roots of p (squarefree not required).
int count_real_roots(const IntPoly& p);
// Sign counts of q over the real roots of m: (#q>0, #q=0, #q<0).
struct SignCounts {
    int positive = 0, zero = 0, negative = 0;
};
SignCounts sign_counts_at_roots(const IntPoly& m, const IntPoly& q);

struct PolyFactor {
    IntPoly factor;  // primitive, irreducible over Q, positive leading coeff
    int multiplicity;
};

struct PolyFactorization {
    Rat unit;  // input = unit * prod factor^multiplicity
    std::vector<PolyFactor> factors;
};

// Zassenhaus: squarefree split, factor mod p, Hensel lift past the Mignotte
// bound, subset recombination.  Deterministic for a fixed seed.
PolyFactorization factor_rational_poly(const IntPoly& p, std::uint64_t seed = 1);

bool is_irreducible(const IntPoly& p, std::uint64_t seed = 1);

IntPoly cyclotomic_polynomial(int e);

}  // namespace flatmod
