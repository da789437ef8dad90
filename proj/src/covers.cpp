#include "dslice/covers.hpp"

#include <sstream>

#include "dslice/laurent.hpp"

namespace dslice {

bool is_prime_power(unsigned long q) {
    if (q < 2) return false;
    unsigned long p = 0;
    for (unsigned long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return true;  // prime
    while (q % p == 0) q /= p;
    return q == 1;
}

std::vector<unsigned long> prime_powers_up_to(unsigned long bound) {
    std::vector<unsigned long> out;
    for (unsigned long q = 2; q <= bound; ++q)
        if (is_prime_power(q)) out.push_back(q);
    return out;
}

namespace {

IntMatrix build_l(const IntMatrix& v, unsigned long q) {
    std::size_t n = v.rows();
    std::size_t m = q - 1;
    IntMatrix sym = v + v.transpose();
    IntMatrix vt = v.transpose();
    IntMatrix l(n * m, n * m);
    for (std::size_t i = 0; i < m; ++i) {
        l.set_block(i * n, i * n, sym);
        if (i + 1 < m) {
            l.set_block(i * n, (i + 1) * n, vt);
            l.set_block((i + 1) * n, i * n, v);
        }
    }
    return l;
}

// Deck action on block coordinates: block i picks up block i+1 negated, the
// last block takes the alternating sum sum_j (-1)^(m+j) x_j.
IntMatrix build_tau(std::size_t n, unsigned long q) {
    std::size_t m = q - 1;
    IntMatrix t(n * m, n * m);
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t r = 0; r < n; ++r) t(i * n + r, (i + 1) * n + r) = -1;
    for (std::size_t j = 0; j < m; ++j) {
        long sign = ((m + j) % 2 == 0) ? 1 : -1;
        for (std::size_t r = 0; r < n; ++r) t((m - 1) * n + r, j * n + r) += sign;
    }
    return t;
}

void verify_presentation(const CoverPresentation& p) {
    const std::size_t n = p.L.rows();
    if (n == 0) return;
    if (!p.L.is_symmetric()) throw InternalCheck("cover presentation: L not symmetric");
    if (linalg::det(p.L) == 0)
        throw DegenerateCover("cover presentation: det L = 0");

    IntMatrix id = IntMatrix::identity(n);
    IntMatrix pw = id;
    IntMatrix norm(n, n);
    for (unsigned long k = 0; k < p.q; ++k) {
        norm = norm + pw;
        pw = pw * p.tau;
    }
    if (!(pw == id)) throw InternalCheck("cover presentation: tau^q != I");
    if (!(norm == IntMatrix(n, n))) throw InternalCheck("cover presentation: norm map nonzero");

    RatMatrix li = linalg::rational_inverse(p.L);
    RatMatrix taur = RatMatrix::from(p.tau);
    if (!(li * taur * RatMatrix::from(p.L)).is_integral())
        throw InternalCheck("cover presentation: tau does not descend to coker(L)");
    if (!(taur.transpose() * li * taur - li).is_integral())
        throw InternalCheck("cover presentation: tau does not preserve the form mod Z");
}

}  // namespace

CoverPresentation build_presentation(const SeifertMatrix& v, unsigned long q) {
    if (!is_prime_power(q)) throw NotPrimePower("cover degree must be a prime power >= 2");
    CoverPresentation pres;
    pres.q = q;
    pres.V = v.V;
    pres.L = build_l(v.V, q);
    pres.tau = build_tau(v.V.rows(), q);
    verify_presentation(pres);
    return pres;
}

Int LinkedGroup::order() const {
    Int o(1);
    for (const Int& f : factors_) o *= f;
    return o;
}

Element LinkedGroup::reduce(Element x) const {
    if (x.size() != rank()) throw ElementOutOfRange("element has wrong rank");
    for (std::size_t i = 0; i < x.size(); ++i) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), x[i].get_mpz_t(), factors_[i].get_mpz_t());
        x[i] = r;
    }
    return x;
}

Element LinkedGroup::add(const Element& a, const Element& b) const {
    Element out(rank());
    for (std::size_t i = 0; i < rank(); ++i) out[i] = a[i] + b[i];
    return reduce(std::move(out));
}

Element LinkedGroup::negate(const Element& a) const {
    Element out(rank());
    for (std::size_t i = 0; i < rank(); ++i) out[i] = -a[i];
    return reduce(std::move(out));
}

Element LinkedGroup::scale(const Int& k, const Element& a) const {
    Element out(rank());
    for (std::size_t i = 0; i < rank(); ++i) out[i] = k * a[i];
    return reduce(std::move(out));
}

Element LinkedGroup::t_apply(const Element& a) const {
    if (a.size() != rank()) throw ElementOutOfRange("element has wrong rank");
    return reduce(t_.apply(a));
}

Rat LinkedGroup::link(const Element& a, const Element& b) const {
    if (a.size() != rank() || b.size() != rank()) throw ElementOutOfRange("element has wrong rank");
    Rat s(0);
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j) {
            if (b[j] == 0) continue;
            s += Rat(a[i]) * gram_(i, j) * Rat(b[j]);
        }
    }
    return frac_part(s);
}

void LinkedGroup::for_each_element(const std::function<void(const Element&)>& fn) const {
    Element cur(rank(), Int(0));
    for (;;) {
        fn(cur);
        std::size_t i = 0;
        while (i < rank()) {
            cur[i] += 1;
            if (cur[i] < factors_[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == rank()) return;
    }
}

bool LinkedGroup::same_structure(const LinkedGroup& o) const {
    return q_ == o.q_ && factors_ == o.factors_ && gram_ == o.gram_ && t_ == o.t_;
}

LinkedGroup LinkedGroup::trivial(unsigned long q) {
    LinkedGroup g;
    g.q_ = q;
    return g;
}

LinkedGroup LinkedGroup::cyclic(unsigned long q, const Int& order, const Rat& self_link,
                                const Int& t_scalar) {
    if (order == 1) return trivial(q);
    RatMatrix gram(1, 1);
    gram(0, 0) = self_link;
    IntMatrix t(1, 1);
    t(0, 0) = t_scalar;
    return from_parts(q, {order}, gram, t);
}

LinkedGroup LinkedGroup::from_parts(unsigned long q, std::vector<Int> factors, RatMatrix gram,
                                    IntMatrix t_action) {
    LinkedGroup g;
    g.q_ = q;
    g.factors_ = std::move(factors);
    const std::size_t k = g.factors_.size();
    if (gram.rows() != k || gram.cols() != k || t_action.rows() != k || t_action.cols() != k)
        throw DimensionMismatch("LinkedGroup parts have mismatched rank");
    for (const Int& f : g.factors_)
        if (f <= 1) throw InternalCheck("LinkedGroup factors must exceed 1");

    g.gram_ = gram.mod1();
    if (!g.gram_.is_symmetric()) throw InternalCheck("linking form gram not symmetric");

    // canonical t entries: t(i,j) mod factor_i
    g.t_ = IntMatrix(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), t_action(i, j).get_mpz_t(), g.factors_[i].get_mpz_t());
            g.t_(i, j) = r;
        }

    // well-definedness: lambda(g_i, d_j g_j) = 0
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (!is_integral(Rat(g.gram_(i, j) * Rat(g.factors_[j]))))
                throw InternalCheck("linking form not defined on the stated group");

    // nonsingularity: adjoint map bijective <=> SNF of [diag(d)*gram | diag(d)] is all units
    {
        IntMatrix b(k, 2 * k);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                Rat e = Rat(g.factors_[i]) * g.gram_(i, j);
                if (!is_integral(e)) throw InternalCheck("adjoint matrix not integral");
                b(i, j) = e.get_num();
            }
            b(i, k + i) = g.factors_[i];
        }
        auto d = linalg::smith_normal_form(b).diagonal();
        for (const Int& x : d)
            if (x != 1) throw InternalCheck("linking form is singular");
    }

    // t preserves the form mod Z
    {
        RatMatrix tr = RatMatrix::from(g.t_);
        RatMatrix moved = (tr.transpose() * g.gram_ * tr).mod1();
        if (!(moved == g.gram_)) throw InternalCheck("deck action does not preserve the form");
    }

    // t^q = id and norm annihilation on the group
    {
        IntMatrix id = IntMatrix::identity(k);
        IntMatrix pw = id;
        IntMatrix norm(k, k);
        for (unsigned long s = 0; s < q; ++s) {
            norm = norm + pw;
            pw = pw * g.t_;
        }
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if ((pw(i, j) - id(i, j)) % g.factors_[i] != 0)
                    throw InternalCheck("deck action order does not divide q");
                if (norm(i, j) % g.factors_[i] != 0)
                    throw InternalCheck("deck action norm map nonzero on the group");
            }
    }
    return g;
}

LinkedGroup homology(const CoverPresentation& pres, FormSign sign) {
    const std::size_t n = pres.L.rows();
    if (n == 0) {
        LinkedGroup g = LinkedGroup::trivial(pres.q);
        return g;
    }
    linalg::SnfResult snf = linalg::smith_normal_form(pres.L);
    std::vector<Int> diag = snf.diagonal();
    for (const Int& d : diag)
        if (d == 0) throw DegenerateCover("cover homology has free rank");

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (diag[i] > 1) keep.push_back(i);

    RatMatrix uinv = linalg::rational_inverse(snf.U);
    if (!uinv.is_integral()) throw InternalCheck("U not unimodular");
    IntMatrix p = uinv.to_int();

    RatMatrix li = linalg::rational_inverse(pres.L);
    RatMatrix pr = RatMatrix::from(p);
    RatMatrix gfull = pr.transpose() * li * pr;
    if (sign == FormSign::Minus) gfull = -gfull;

    IntMatrix tfull = snf.U * pres.tau * p;

    const std::size_t k = keep.size();
    std::vector<Int> factors;
    factors.reserve(k);
    RatMatrix gram(k, k);
    IntMatrix t(k, k);
    for (std::size_t a = 0; a < k; ++a) {
        factors.push_back(diag[keep[a]]);
        for (std::size_t b = 0; b < k; ++b) {
            gram(a, b) = gfull(keep[a], keep[b]);
            t(a, b) = tfull(keep[a], keep[b]);
        }
    }
    LinkedGroup g = LinkedGroup::from_parts(pres.q, std::move(factors), gram, t);

    // order cross-check against the resultant identity
    Int expect = resultant_order(alexander_from_seifert(pres.V), pres.q);
    if (g.order() != expect) {
        std::ostringstream os;
        os << "cover homology order " << g.order().get_str() << " != resultant order "
           << expect.get_str();
        throw InternalCheck(os.str());
    }
    return g;
}

LinkedGroup direct_sum(const LinkedGroup& a, const LinkedGroup& b) {
    if (a.q() != b.q()) throw MismatchedCover("direct sum needs matching cover degree");
    const std::size_t ka = a.rank(), kb = b.rank(), k = ka + kb;
    std::vector<Int> factors = a.factors();
    factors.insert(factors.end(), b.factors().begin(), b.factors().end());
    RatMatrix gram(k, k);
    IntMatrix t(k, k);
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < ka; ++j) {
            gram(i, j) = a.gram()(i, j);
            t(i, j) = a.t_action()(i, j);
        }
    for (std::size_t i = 0; i < kb; ++i)
        for (std::size_t j = 0; j < kb; ++j) {
            gram(ka + i, ka + j) = b.gram()(i, j);
            t(ka + i, ka + j) = b.t_action()(i, j);
        }
    return LinkedGroup::from_parts(a.q(), std::move(factors), gram, t);
}

}  // namespace dslice
