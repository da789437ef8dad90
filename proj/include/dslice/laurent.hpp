#pragma once

#include <map>
#include <optional>
#include <string>

#include "dslice/matrix.hpp"

namespace dslice {

/// Laurent polynomial over exact rationals, canonical form (no zero coefficients).
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(const Rat& c);
    static LaurentPoly constant(long c) { return constant(Rat(c)); }
    static LaurentPoly term(const Rat& coeff, long exp);
    static LaurentPoly variable() { return term(Rat(1), 1); }
    static LaurentPoly from_map(const std::map<long, Rat>& coeffs);

    bool is_zero() const { return c_.empty(); }
    long min_exp() const;  // throws ZeroPolynomial
    long max_exp() const;
    Rat coeff(long e) const;
    const std::map<long, Rat>& terms() const { return c_; }

    /// true iff a unit of Q[t^{±1}], i.e. a single nonzero term.
    bool is_unit() const { return c_.size() == 1; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(const Rat& c) const;
    LaurentPoly shifted(long k) const;     // * t^k
    LaurentPoly reversed() const;          // t -> t^{-1}
    LaurentPoly pow(unsigned long n) const;

    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

    Rat evaluate(const Rat& x) const;      // x != 0

    bool integer_coeffs() const;
    std::string str() const;               // e.g. "2t^2 - 5t + 2"

private:
    std::map<long, Rat> c_;
    void set(long e, const Rat& v);
    friend LaurentPoly laurent_from_terms(std::map<long, Rat>&& m);
};

/// Integer-coefficient cofactors with f1*p + f2*q = c (positive integer).
struct BezoutCertificate {
    LaurentPoly f1, f2;
    Int c;
};

/// det(V - t V^T), unit-normalized; throws InvalidSeifert if V - V^T is not unimodular.
LaurentPoly alexander_from_seifert(const IntMatrix& v);

/// Unit-equivalent representative with lowest exponent 0 and positive leading
/// coefficient. Throws ZeroPolynomial.
LaurentPoly normalize(const LaurentPoly& p);

struct GcdResult {
    LaurentPoly gcd;                        // monic, lowest exponent 0; 1 when coprime
    std::optional<BezoutCertificate> cert;  // present iff gcd is a unit
};

/// gcd over Q[t^{±1}] with a denominator-cleared Bezout certificate when coprime.
GcdResult gcd_bezout(const LaurentPoly& p, const LaurentPoly& q);

bool coprime(const LaurentPoly& p, const LaurentPoly& q);

/// n-th cyclotomic polynomial by the division formula.
LaurentPoly cyclotomic(unsigned long n);

/// Resultant of the two polynomials shifted to lowest exponent 0 (Sylvester determinant).
Rat resultant(const LaurentPoly& p, const LaurentPoly& q);

/// |res(normalize(alex), 1 + t + ... + t^{q-1})|; the order of H1 of the q-fold
/// branched cover. Throws InvalidAlexander unless alex(1) = ±1.
Int resultant_order(const LaurentPoly& alex, unsigned long q);

}  // namespace dslice
