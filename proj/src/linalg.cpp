#include "dslice/linalg.hpp"

#include <algorithm>
#include <tuple>

namespace dslice::linalg {

std::vector<Int> SnfResult::diagonal() const {
    std::vector<Int> d;
    std::size_t n = std::min(D.rows(), D.cols());
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(D(i, i));
    return d;
}

namespace {

void row_add(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}
void col_add(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}
void row_swap(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) swap(m(a, j), m(b, j));
}
void col_swap(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) swap(m(i, a), m(i, b));
}
void row_negate(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// Smallest |entry| != 0 in the active submatrix; ties by leftmost column, then topmost row.
bool find_pivot(const IntMatrix& d, std::size_t k, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = k; i < d.rows(); ++i)
        for (std::size_t j = k; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Int v = abs(d(i, j));
            if (!found || v < best || (v == best && (j < pj || (j == pj && i < pi)))) {
                found = true;
                best = v;
                pi = i;
                pj = j;
            }
        }
    return found;
}

// Clear row and column k of d (except the pivot) by repeated reduction.
void eliminate_at(IntMatrix& d, IntMatrix& u, IntMatrix& w, std::size_t k) {
    for (;;) {
        std::size_t pi = k, pj = k;
        if (!find_pivot(d, k, pi, pj)) return;
        row_swap(d, k, pi);
        row_swap(u, k, pi);
        col_swap(d, k, pj);
        col_swap(w, k, pj);
        bool clean = true;
        for (std::size_t i = k + 1; i < d.rows(); ++i) {
            if (d(i, k) == 0) continue;
            Int f;
            mpz_fdiv_q(f.get_mpz_t(), d(i, k).get_mpz_t(), d(k, k).get_mpz_t());
            row_add(d, i, k, -f);
            row_add(u, i, k, -f);
            if (d(i, k) != 0) clean = false;
        }
        for (std::size_t j = k + 1; j < d.cols(); ++j) {
            if (d(k, j) == 0) continue;
            Int f;
            mpz_fdiv_q(f.get_mpz_t(), d(k, j).get_mpz_t(), d(k, k).get_mpz_t());
            col_add(d, j, k, -f);
            col_add(w, j, k, -f);
            if (d(k, j) != 0) clean = false;
        }
        if (!clean) continue;
        bool lone = true;
        for (std::size_t i = k + 1; i < d.rows() && lone; ++i)
            if (d(i, k) != 0) lone = false;
        for (std::size_t j = k + 1; j < d.cols() && lone; ++j)
            if (d(k, j) != 0) lone = false;
        if (lone) break;
    }
    if (d(k, k) < 0) {
        row_negate(d, k);
        row_negate(u, k);
    }
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    SnfResult r{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t k = 0; k < n; ++k) eliminate_at(r.D, r.U, r.W, k);

    // enforce the divisibility chain d_i | d_{i+1}
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const Int& a = r.D(i, i);
            const Int& b = r.D(i + 1, i + 1);
            if (a != 0 && b % a != 0) {
                col_add(r.D, i, i + 1, Int(1));
                col_add(r.W, i, i + 1, Int(1));
                for (std::size_t k = i; k < n; ++k) eliminate_at(r.D, r.U, r.W, k);
                changed = true;
                break;
            }
        }
    }
    return r;
}

Int det(const IntMatrix& m) {
    if (!m.is_square()) throw NonSquareMatrix("det of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Int(1);
    // Bareiss fraction-free elimination
    IntMatrix a = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && a(s, k) == 0) ++s;
            if (s == n) return Int(0);
            row_swap(a, k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = num / prev;  // exact by Bareiss
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

Rat det(const RatMatrix& m) {
    if (!m.is_square()) throw NonSquareMatrix("det of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Rat(1);
    RatMatrix a = m;
    Rat d(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) swap(a(p, j), a(k, j));
            d = -d;
        }
        d *= a(k, k);
        Rat inv = 1 / a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rat f = a(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return d;
}

RatMatrix rational_inverse(const RatMatrix& m) {
    if (!m.is_square()) throw NonSquareMatrix("inverse of non-square matrix");
    std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) throw SingularMatrix("matrix is singular");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                swap(a(p, j), a(k, j));
                swap(inv(p, j), inv(k, j));
            }
        Rat piv = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rat f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

RatMatrix rational_inverse(const IntMatrix& m) { return rational_inverse(RatMatrix::from(m)); }

std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("solve_integer shape");
    SnfResult s = smith_normal_form(m);
    std::vector<Int> ub = s.U.apply(b);
    std::size_t r = std::min(m.rows(), m.cols());
    std::vector<Int> y(m.cols(), Int(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Int di = i < r ? s.D(i, i) : Int(0);
        if (di == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % di != 0) return std::nullopt;
            y[i] = ub[i] / di;
        }
    }
    return s.W.apply(y);
}

IntMatrix hermite_row_basis(const IntMatrix& a) {
    IntMatrix h = a;
    std::size_t m = h.rows(), n = h.cols();
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        // gcd-reduce column j below row r
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i) {
                if (h(i, j) == 0) continue;
                if (best == m || abs(h(i, j)) < abs(h(best, j))) best = i;
            }
            if (best == m) break;  // column is zero below r
            row_swap(h, r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (h(i, j) == 0) continue;
                Int f;
                mpz_fdiv_q(f.get_mpz_t(), h(i, j).get_mpz_t(), h(r, j).get_mpz_t());
                row_add(h, i, r, -f);
                if (h(i, j) != 0) done = false;
            }
            if (done) break;
        }
        if (h(r, j) == 0) continue;
        if (h(r, j) < 0) row_negate(h, r);
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            Int f;
            mpz_fdiv_q(f.get_mpz_t(), h(i, j).get_mpz_t(), h(r, j).get_mpz_t());
            if (f != 0) row_add(h, i, r, -f);
        }
        ++r;
    }
    return h.block(0, 0, r, n);
}

}  // namespace dslice::linalg
