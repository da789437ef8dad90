#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace dslice {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals in lowest terms with positive denominator (mpq canonical form).
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

// floor(r) as an integer
inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

// r - floor(r), canonical representative in [0,1)
inline Rat frac_part(const Rat& r) {
    Rat f = r - Rat(rat_floor(r));
    f.canonicalize();
    return f;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r);          // "a" or "a/b"
Rat rat_parse(const std::string& s);        // throws std::invalid_argument

using Element = std::vector<Int>;           // group element in SNF coordinates

}  // namespace dslice
