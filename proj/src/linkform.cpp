#include "dslice/linkform.hpp"

#include <algorithm>
#include <set>

#include "dslice/linalg.hpp"

namespace dslice {

namespace {

std::vector<Int> divisors_ascending(const Int& n) {
    std::vector<Int> small, large;
    for (Int d(1); d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

// Upper-triangular inverse, exact.
RatMatrix upper_inverse(const IntMatrix& h) {
    const std::size_t k = h.rows();
    RatMatrix inv(k, k);
    for (std::size_t j = k; j-- > 0;) {
        inv(j, j) = Rat(1) / Rat(h(j, j));
        for (std::size_t i = j; i-- > 0;) {
            Rat s(0);
            for (std::size_t l = i + 1; l <= j; ++l) s += Rat(h(i, l)) * inv(l, j);
            inv(i, j) = -s / Rat(h(i, i));
        }
    }
    return inv;
}

// Condition for the lattice rows(h) to contain diag(factors): factors_i * row_i(h^{-1}) integral.
// Checked on the leading (j+1)x(j+1) block during enumeration for pruning.
bool block_admissible(const IntMatrix& h, const std::vector<Int>& factors, std::size_t upto) {
    IntMatrix blk = h.block(0, 0, upto + 1, upto + 1);
    RatMatrix inv = upper_inverse(blk);
    for (std::size_t i = 0; i <= upto; ++i)
        for (std::size_t j = 0; j <= upto; ++j)
            if (!is_integral(Rat(Rat(factors[i]) * inv(i, j)))) return false;
    return true;
}

void enumerate_hnf(const LinkedGroup& g, IntMatrix& h, std::size_t col,
                   std::vector<Subgroup>& out) {
    const std::size_t k = g.rank();
    if (col == k) {
        Int sub(1);
        for (std::size_t i = 0; i < k; ++i) sub *= g.factors()[i] / h(i, i);
        out.push_back(Subgroup{h, sub});
        return;
    }
    for (const Int& d : divisors_ascending(g.factors()[col])) {
        h(col, col) = d;
        // entries above the pivot in column `col`, each in [0, d)
        std::vector<Int> above(col, Int(0));
        for (;;) {
            for (std::size_t i = 0; i < col; ++i) h(i, col) = above[i];
            if (block_admissible(h, g.factors(), col)) enumerate_hnf(g, h, col + 1, out);
            std::size_t i = 0;
            while (i < col) {
                above[i] += 1;
                if (above[i] < d) break;
                above[i] = 0;
                ++i;
            }
            if (i == col) break;
        }
    }
    for (std::size_t i = 0; i < col; ++i) h(i, col) = 0;
    h(col, col) = 0;
}

}  // namespace

std::vector<Subgroup> subgroups(const LinkedGroup& h, const Int& cap) {
    if (h.order() > cap) throw GroupTooLarge("group order exceeds enumeration cap");
    const std::size_t k = h.rank();
    if (k == 0) return {Subgroup{IntMatrix(), Int(1)}};
    IntMatrix work(k, k);
    std::vector<Subgroup> out;
    enumerate_hnf(h, work, 0, out);
    std::sort(out.begin(), out.end(), [k](const Subgroup& a, const Subgroup& b) {
        if (a.order != b.order) return a.order < b.order;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (a.basis(i, j) != b.basis(i, j)) return a.basis(i, j) < b.basis(i, j);
        return false;
    });
    return out;
}

Subgroup trivial_subgroup(const LinkedGroup& h) {
    const std::size_t k = h.rank();
    IntMatrix b(k, k);
    for (std::size_t i = 0; i < k; ++i) b(i, i) = h.factors()[i];
    return Subgroup{std::move(b), Int(1)};
}

Subgroup full_subgroup(const LinkedGroup& h) {
    return Subgroup{IntMatrix::identity(h.rank()), h.order()};
}

Subgroup subgroup_from_elements(const LinkedGroup& h, const std::vector<Element>& gens) {
    const std::size_t k = h.rank();
    IntMatrix stack(gens.size() + k, k);
    for (std::size_t r = 0; r < gens.size(); ++r) {
        Element e = h.reduce(gens[r]);
        for (std::size_t j = 0; j < k; ++j) stack(r, j) = e[j];
    }
    for (std::size_t i = 0; i < k; ++i) stack(gens.size() + i, i) = h.factors()[i];
    IntMatrix basis = linalg::hermite_row_basis(stack);
    if (basis.rows() != k) throw InternalCheck("subgroup lattice not full rank");
    Int sub(1);
    for (std::size_t i = 0; i < k; ++i) sub *= h.factors()[i] / basis(i, i);
    return Subgroup{std::move(basis), sub};
}

bool subgroup_contains(const LinkedGroup& h, const Subgroup& p, const Element& x) {
    const std::size_t k = h.rank();
    if (k == 0) return true;
    Element e = h.reduce(x);
    return linalg::solve_integer(p.basis.transpose(), e).has_value();
}

std::vector<Element> subgroup_elements(const LinkedGroup& h, const Subgroup& p) {
    const std::size_t k = h.rank();
    std::set<Element> seen;
    seen.insert(h.zero());
    std::vector<Element> frontier{h.zero()};
    std::vector<Element> gens = subgroup_generators(h, p);
    while (!frontier.empty()) {
        Element cur = frontier.back();
        frontier.pop_back();
        for (const Element& g : gens) {
            Element nxt = h.add(cur, g);
            if (seen.insert(nxt).second) frontier.push_back(nxt);
        }
    }
    std::vector<Element> out(seen.begin(), seen.end());
    if (Int(static_cast<unsigned long>(out.size())) != p.order)
        throw InternalCheck("subgroup element count does not match order");
    (void)k;
    return out;
}

std::vector<Element> subgroup_generators(const LinkedGroup& h, const Subgroup& p) {
    std::vector<Element> gens;
    for (std::size_t i = 0; i < p.basis.rows(); ++i) {
        Element row(h.rank());
        for (std::size_t j = 0; j < h.rank(); ++j) row[j] = p.basis(i, j);
        row = h.reduce(row);
        bool zero = true;
        for (const Int& c : row)
            if (c != 0) zero = false;
        if (!zero) gens.push_back(std::move(row));
    }
    return gens;
}

bool subgroup_t_invariant(const LinkedGroup& h, const Subgroup& p) {
    for (const Element& g : subgroup_generators(h, p))
        if (!subgroup_contains(h, p, h.t_apply(g))) return false;
    return true;
}

Subgroup orthogonal_complement(const LinkedGroup& h, const Subgroup& p) {
    std::vector<Element> gens = subgroup_generators(h, p);
    std::vector<Element> kept;
    h.for_each_element([&](const Element& y) {
        for (const Element& g : gens)
            if (h.link(g, y) != 0) return;
        kept.push_back(y);
    });
    return subgroup_from_elements(h, kept);
}

bool is_metabolizer(const LinkedGroup& h, const Subgroup& p) {
    if (p.order * p.order != h.order()) return false;
    std::vector<Element> gens = subgroup_generators(h, p);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j)
            if (h.link(gens[i], gens[j]) != 0) return false;
    return true;
}

std::vector<Subgroup> metabolizers(const LinkedGroup& h, bool lambda_invariant, const Int& cap) {
    std::vector<Subgroup> out;
    for (const Subgroup& p : subgroups(h, cap)) {
        if (!is_metabolizer(h, p)) continue;
        if (lambda_invariant && !subgroup_t_invariant(h, p)) continue;
        out.push_back(p);
    }
    return out;
}

std::vector<MetabolizerPair> metabolizer_pairs(const LinkedGroup& h, bool lambda_invariant,
                                               const Int& cap) {
    std::vector<Subgroup> mets = metabolizers(h, lambda_invariant, cap);
    std::vector<MetabolizerPair> out;
    for (std::size_t i = 0; i < mets.size(); ++i)
        for (std::size_t j = i; j < mets.size(); ++j) {
            if (mets[i].order * mets[j].order != h.order()) continue;
            bool trivial_meet = true;
            const Subgroup& small = mets[i].order <= mets[j].order ? mets[i] : mets[j];
            const Subgroup& big = mets[i].order <= mets[j].order ? mets[j] : mets[i];
            for (const Element& e : subgroup_elements(h, small)) {
                bool zero = true;
                for (const Int& c : e)
                    if (c != 0) zero = false;
                if (zero) continue;
                if (subgroup_contains(h, big, e)) {
                    trivial_meet = false;
                    break;
                }
            }
            if (trivial_meet) out.push_back(MetabolizerPair{mets[i], mets[j]});
        }
    return out;
}

}  // namespace dslice
