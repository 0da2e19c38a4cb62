#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

#include "flatmod/errors.hpp"

namespace flatmod {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Floor division and the matching non-negative remainder.
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int fmod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }
inline Rat abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

// Largest s with s^2 | n; returns (squarefree part, s).  n != 0.
// Trial division is plenty: inputs are norms of small lattice vectors.
inline std::pair<Int, Int> squarefree_decomposition(Int n) {
    if (n == 0) throw InternalInconsistency("squarefree_decomposition: zero input");
    Int sign = n < 0 ? -1 : 1;
    n = abs(n);
    Int core = 1, sq = 1;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) sq *= p;
        if (e % 2) core *= p;
    }
    core *= n;  // leftover prime
    return {sign * core, sq};
}

inline std::string to_string(const Int& a) { return a.get_str(); }

// Canonical rational rendering: no slash for integers.
inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p", "-p", "p/q".  Throws ParseError on malformed or zero-denominator input.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
            throw ParseError("bad rational literal '" + s + "'");
    }
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

// Fractional part in [0,1).
inline Rat frac(const Rat& q) {
    Rat f = q - Rat(fdiv(q.get_num(), q.get_den()));
    return f;
}

inline long to_long(const Int& a) {
    if (!a.fits_slong_p()) throw InternalInconsistency("integer too large for long");
    return a.get_si();
}

// All stochastic steps in the pipeline draw from this; same seed => same run.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    // uniform in [lo, hi] inclusive
    long uniform(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }
    std::uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace flatmod
