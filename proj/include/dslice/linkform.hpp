#pragma once

#include <vector>

#include "dslice/covers.hpp"

namespace dslice {

inline constexpr long kDefaultEnumCap = 65536;

/// Subgroup of a LinkedGroup, canonically represented by the Hermite-reduced
/// basis of the lattice L with D Z^k <= L <= Z^k (D = diag of factor orders).
struct Subgroup {
    IntMatrix basis;  // k x k upper triangular HNF
    Int order;

    bool operator==(const Subgroup& o) const { return basis == o.basis; }
};

/// All subgroups, each exactly once, sorted by (order, basis). Throws
/// GroupTooLarge when |H| exceeds cap.
std::vector<Subgroup> subgroups(const LinkedGroup& h, const Int& cap = Int(kDefaultEnumCap));

Subgroup trivial_subgroup(const LinkedGroup& h);
Subgroup full_subgroup(const LinkedGroup& h);
Subgroup subgroup_from_elements(const LinkedGroup& h, const std::vector<Element>& gens);

bool subgroup_contains(const LinkedGroup& h, const Subgroup& p, const Element& x);
std::vector<Element> subgroup_elements(const LinkedGroup& h, const Subgroup& p);
std::vector<Element> subgroup_generators(const LinkedGroup& h, const Subgroup& p);
bool subgroup_t_invariant(const LinkedGroup& h, const Subgroup& p);

/// Full annihilator of P under the linking form.
Subgroup orthogonal_complement(const LinkedGroup& h, const Subgroup& p);

/// Fast route: lambda vanishes on P x P and |P|^2 = |H|.
bool is_metabolizer(const LinkedGroup& h, const Subgroup& p);

std::vector<Subgroup> metabolizers(const LinkedGroup& h, bool lambda_invariant,
                                   const Int& cap = Int(kDefaultEnumCap));

struct MetabolizerPair {
    Subgroup g1, g2;
};

/// All unordered pairs of (Lambda-)metabolizers with G1 ∩ G2 = 0 and
/// |G1||G2| = |H| (hence H = G1 ⊕ G2).
std::vector<MetabolizerPair> metabolizer_pairs(const LinkedGroup& h, bool lambda_invariant,
                                               const Int& cap = Int(kDefaultEnumCap));

}  // namespace dslice
