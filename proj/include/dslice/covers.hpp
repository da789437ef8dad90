#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "dslice/knot.hpp"
#include "dslice/linalg.hpp"
#include "dslice/matrix.hpp"

namespace dslice {

bool is_prime_power(unsigned long q);
std::vector<unsigned long> prime_powers_up_to(unsigned long bound);

/// Sign convention for the linking form: lambda = -L^{-1} (Minus, default) or +L^{-1}.
enum class FormSign { Minus, Plus };

/// Presentation of H1 of the q-fold branched cyclic cover from a Seifert matrix:
/// L is block tridiagonal of size 2g(q-1) with diagonal blocks V+V^T,
/// superdiagonal V^T, subdiagonal V; tau is the deck action on block coordinates.
/// Construction verifies: L symmetric, det L != 0, tau^q = I,
/// I + tau + ... + tau^{q-1} = 0, tau descends to coker(L), and tau preserves
/// -L^{-1} mod Z.
struct CoverPresentation {
    unsigned long q = 2;
    IntMatrix V;
    IntMatrix L;
    IntMatrix tau;
};

CoverPresentation build_presentation(const SeifertMatrix& v, unsigned long q);

/// Finite abelian group with a nonsingular Q/Z linking form and deck action.
/// Elements are coordinate vectors mod the cyclic factor orders.
class LinkedGroup {
public:
    /// Verifies: factors > 1; gram symmetric with entries in [0,1);
    /// gram*diag(factors) integral; denominator of det(gram) = group order;
    /// t preserves gram mod Z; t^q = id; 1 + t + ... + t^{q-1} = 0 on the group.
    static LinkedGroup from_parts(unsigned long q, std::vector<Int> factors,
                                  RatMatrix gram, IntMatrix t_action);
    static LinkedGroup trivial(unsigned long q);
    static LinkedGroup cyclic(unsigned long q, const Int& order, const Rat& self_link,
                              const Int& t_scalar);

    unsigned long q() const { return q_; }
    const std::vector<Int>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    Int order() const;
    const RatMatrix& gram() const { return gram_; }
    const IntMatrix& t_action() const { return t_; }

    Element zero() const { return Element(rank(), Int(0)); }
    Element reduce(Element x) const;
    Element add(const Element& a, const Element& b) const;
    Element negate(const Element& a) const;
    Element scale(const Int& k, const Element& a) const;
    Element t_apply(const Element& a) const;
    Rat link(const Element& a, const Element& b) const;  // in [0,1)

    /// Deterministic mixed-radix enumeration of all elements.
    void for_each_element(const std::function<void(const Element&)>& fn) const;

    bool same_structure(const LinkedGroup& o) const;

private:
    LinkedGroup() = default;
    unsigned long q_ = 2;
    std::vector<Int> factors_;
    RatMatrix gram_;
    IntMatrix t_;
};

/// Cokernel of L via SNF (unit factors dropped), gram = sign * L^{-1} transported
/// to SNF generators and reduced mod Z, deck action transported likewise.
/// Cross-checks group order against resultant_order of the Alexander polynomial.
LinkedGroup homology(const CoverPresentation& pres, FormSign sign = FormSign::Minus);

/// Orthogonal direct sum; factor lists concatenate (block coordinates).
LinkedGroup direct_sum(const LinkedGroup& a, const LinkedGroup& b);

}  // namespace dslice
