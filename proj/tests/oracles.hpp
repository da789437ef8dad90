// Test-side oracles, independent of the library implementation paths they check.
#pragma once

#include <random>
#include <set>
#include <vector>

#include "dslice/covers.hpp"
#include "dslice/matrix.hpp"

namespace oracles {

using dslice::Element;
using dslice::Int;
using dslice::IntMatrix;
using dslice::LinkedGroup;
using dslice::Rat;

// Determinant by cofactor expansion along the first row.
inline Int cofactor_det(const IntMatrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return Int(1);
    if (n == 1) return m(0, 0);
    Int out(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(i - 1, cc++) = m(i, c);
            }
        }
        Int term = m(0, j) * cofactor_det(minor);
        if (j % 2 == 0)
            out += term;
        else
            out -= term;
    }
    return out;
}

// Random V with V - V^T equal to the standard symplectic matrix, hence unimodular.
inline IntMatrix random_seifert(std::mt19937_64& rng, std::size_t genus) {
    std::size_t n = 2 * genus;
    std::uniform_int_distribution<int> dist(-2, 2);
    IntMatrix j(n, n);
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        j(k, k + 1) = 1;
        j(k + 1, k) = -1;
    }
    IntMatrix v(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) v(r, c) = dist(rng);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < r; ++c) v(r, c) = v(c, r) - j(c, r);
    return v;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int span) {
    std::uniform_int_distribution<int> dist(-span, span);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

// Brute-force subgroup list: closures of all 1- and 2-element generating sets.
// Valid for groups of rank <= 2 (every subgroup of Z/a + Z/b needs <= 2 generators).
inline std::vector<std::set<Element>> brute_subgroups_rank2(const LinkedGroup& h) {
    std::vector<Element> elems;
    h.for_each_element([&](const Element& e) { elems.push_back(e); });
    auto closure = [&](std::vector<Element> gens) {
        std::set<Element> seen{h.zero()};
        std::vector<Element> frontier{h.zero()};
        while (!frontier.empty()) {
            Element cur = frontier.back();
            frontier.pop_back();
            for (const Element& g : gens) {
                Element nxt = h.add(cur, g);
                if (seen.insert(nxt).second) frontier.push_back(nxt);
            }
        }
        return seen;
    };
    std::set<std::set<Element>> out;
    for (const Element& a : elems) {
        out.insert(closure({a}));
        for (const Element& b : elems) out.insert(closure({a, b}));
    }
    return {out.begin(), out.end()};
}

// Independent reimplementation of the lens-space correction term recursion.
inline Rat lens_d_oracle(long p, long q, long i) {
    if (p == 1) return Rat(0);
    long num = 2 * i + 1 - p - q;
    Rat val(num * num - p * q, 4 * p * q);
    val.canonicalize();
    long pm = p % q;
    long im = i % q;
    return val - lens_d_oracle(q, pm, im);
}

}  // namespace oracles
