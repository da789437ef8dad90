#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dslice/laurent.hpp"
#include "dslice/matrix.hpp"

namespace dslice {

/// Seifert matrix: square integer V with V - V^T unimodular.
struct SeifertMatrix {
    IntMatrix V;
    std::string name;

    explicit SeifertMatrix(IntMatrix v, std::string n = "");
};

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);
SeifertMatrix mirror(const SeifertMatrix& a);  // -V^T

/// Two-bridge knot with fraction p/q; the double branched cover is L(p,q).
/// p = 1 (with q = 0) is the degenerate unknot record.
struct TwoBridge {
    Int p, q;
    std::string name;

    TwoBridge(Int p_, Int q_, std::string n = "");  // throws BadFraction

    /// Genus-g Seifert matrix from the even continued fraction expansion of p/q'
    /// (q' = q if even, else q - p): upper bidiagonal with diagonal b_1..b_2g
    /// and superdiagonal 1, where p/q' = 2b_1 - 1/(2b_2 - 1/(...)).
    SeifertMatrix seifert() const;

    TwoBridge mirrored() const;  // (p, p - q)
};

/// One declared fact about a knot at a cover degree. q = 0 means "at some
/// prime power, unspecified" (the global form of the statement).
struct FactDeclaration {
    unsigned long q = 0;
    bool doubly_vanishing = false;
    std::string provenance;
};

/// Knot known only through declared data: its Alexander polynomial plus
/// imported facts, each carrying a provenance string.
struct FactRecord {
    std::string name;
    LaurentPoly alexander;
    std::vector<FactDeclaration> declarations;

    FactRecord(std::string n, LaurentPoly alex, std::vector<FactDeclaration> decls);
};

using KnotDesc = std::variant<SeifertMatrix, TwoBridge, FactRecord>;

std::string desc_name(const KnotDesc& d);
LaurentPoly alexander(const KnotDesc& d);

/// Connected-sum expression: sum of leaves with integer multiplicities.
/// Multiplicity n < 0 means |n| mirrored copies.
struct KnotTerm {
    KnotDesc desc;
    long multiplicity = 1;
};

struct KnotExpr {
    std::vector<KnotTerm> terms;
};

/// Normalized product of the leaf polynomials with multiplicity.
LaurentPoly alexander(const KnotExpr& e);

struct CoprimePair {
    std::size_t i = 0, j = 0;
    bool coprime = false;
    std::optional<BezoutCertificate> cert;  // set when coprime
    LaurentPoly common;                     // gcd, set when not coprime
};

struct CoprimalityMatrix {
    bool all_coprime = false;
    std::vector<CoprimePair> pairs;
};

/// Pairwise coprimality with Bezout witnesses; needs >= 2 polynomials.
CoprimalityMatrix pairwise_coprime(const std::vector<LaurentPoly>& polys);

}  // namespace dslice
