#include "engeltori/smith.hpp"

#include <algorithm>

namespace engeltori::homology {

namespace {

using boost::multiprecision::abs;

// g = s*a + u*b with g = gcd(a, b) > 0, for a, b not both zero.
struct Bezout {
    Int g, s, u;
};

Bezout ext_gcd(Int a, Int b) {
    Int s0 = 1, s1 = 0, u0 = 0, u1 = 1;
    while (b != 0) {
        Int q = a / b;
        a -= q * b;
        std::swap(a, b);
        s0 -= q * s1;
        std::swap(s0, s1);
        u0 -= q * u1;
        std::swap(u0, u1);
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        u0 = -u0;
    }
    return {std::move(a), std::move(s0), std::move(u0)};
}

struct Elim {
    IntMatrix d, u, v;

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
        for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
        for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    // row a += c * row b
    void row_add(int a, int b, const Int& c) {
        for (int j = 0; j < d.cols(); ++j) d.at(a, j) += c * d.at(b, j);
        for (int j = 0; j < u.cols(); ++j) u.at(a, j) += c * u.at(b, j);
    }
    // col a += c * col b
    void col_add(int a, int b, const Int& c) {
        for (int i = 0; i < d.rows(); ++i) d.at(i, a) += c * d.at(i, b);
        for (int i = 0; i < v.rows(); ++i) v.at(i, a) += c * v.at(i, b);
    }
    // (row a, row b) <- (p*row a + q*row b, r*row a + s*row b); needs ps - qr = ±1
    void row_combine(int a, int b, const Int& p, const Int& q, const Int& r, const Int& s) {
        for (int j = 0; j < d.cols(); ++j) {
            Int x = d.at(a, j), y = d.at(b, j);
            d.at(a, j) = p * x + q * y;
            d.at(b, j) = r * x + s * y;
        }
        for (int j = 0; j < u.cols(); ++j) {
            Int x = u.at(a, j), y = u.at(b, j);
            u.at(a, j) = p * x + q * y;
            u.at(b, j) = r * x + s * y;
        }
    }
    // (col a, col b) <- (p*col a + q*col b, r*col a + s*col b); needs ps - qr = ±1
    void col_combine(int a, int b, const Int& p, const Int& q, const Int& r, const Int& s) {
        for (int i = 0; i < d.rows(); ++i) {
            Int x = d.at(i, a), y = d.at(i, b);
            d.at(i, a) = p * x + q * y;
            d.at(i, b) = r * x + s * y;
        }
        for (int i = 0; i < v.rows(); ++i) {
            Int x = v.at(i, a), y = v.at(i, b);
            v.at(i, a) = p * x + q * y;
            v.at(i, b) = r * x + s * y;
        }
    }
    void negate_row(int a) {
        for (int j = 0; j < d.cols(); ++j) d.at(a, j) = -d.at(a, j);
        for (int j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
    }
};

}  // namespace

int SmithForm::rank() const {
    int r = 0;
    int n = std::min(d.rows(), d.cols());
    for (int i = 0; i < n; ++i)
        if (d.at(i, i) != 0) ++r;
    return r;
}

std::vector<Int> SmithForm::diagonal() const {
    int n = std::min(d.rows(), d.cols());
    std::vector<Int> out(n);
    for (int i = 0; i < n; ++i) out[i] = d.at(i, i);
    return out;
}

SmithForm smith_normal_form(const IntMatrix& a,
                            const std::function<bool()>& cancelled) {
    const int m = a.rows();
    const int n = a.cols();
    Elim w{a, IntMatrix::identity(m), IntMatrix::identity(n)};

    int t = 0;
    while (t < m && t < n) {
        if (cancelled && cancelled())
            throw CancelledError("smith_normal_form cancelled by caller");

        // Smallest nonzero |entry| of the working submatrix becomes the pivot.
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                const Int& x = w.d.at(i, j);
                if (x == 0) continue;
                if (pi < 0 || abs(x) < abs(w.d.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // submatrix is zero
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        while (true) {
            // Clear column then row t. Entries the pivot divides vanish with a
            // single exact subtraction; the rest go through a unimodular gcd
            // transform that shrinks the pivot to a proper divisor of itself.
            // Only those transforms on the row side can refill the column, so
            // each extra pass of this loop walks a divisor chain and the loop
            // terminates without the entry blow-up a remainder-swapping scheme
            // suffers.
            bool clean = false;
            while (!clean) {
                clean = true;
                for (int i = t + 1; i < m; ++i) {
                    if (w.d.at(i, t) == 0) continue;
                    Int p = w.d.at(t, t);
                    Int x = w.d.at(i, t);
                    if (x % p == 0) {
                        w.row_add(i, t, -(x / p));
                    } else {
                        Bezout bz = ext_gcd(p, x);
                        w.row_combine(t, i, bz.s, bz.u, -(x / bz.g), p / bz.g);
                    }
                }
                for (int j = t + 1; j < n; ++j) {
                    if (w.d.at(t, j) == 0) continue;
                    Int p = w.d.at(t, t);
                    Int x = w.d.at(t, j);
                    if (x % p == 0) {
                        w.col_add(j, t, -(x / p));
                    } else {
                        Bezout bz = ext_gcd(p, x);
                        w.col_combine(t, j, bz.s, bz.u, -(x / bz.g), p / bz.g);
                        clean = false;
                    }
                }
            }

            // The finished pivot must divide everything that is left; folding
            // an offending row into row t and re-eliminating enforces
            // d_t | d_{t+1}. The re-elimination meets the offender in row t,
            // so it also strictly shrinks the pivot and cannot recur forever.
            const Int& p = w.d.at(t, t);
            if (p == 1 || p == -1) break;
            bool folded = false;
            for (int i = t + 1; i < m && !folded; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (w.d.at(i, j) % p != 0) {
                        w.row_add(t, i, 1);
                        folded = true;
                        break;
                    }
            if (!folded) break;
        }
        ++t;
    }

    for (int k = 0; k < std::min(m, n); ++k)
        if (w.d.at(k, k) < 0) w.negate_row(k);

    return SmithForm{std::move(w.u), std::move(w.d), std::move(w.v)};
}

int rank_of(const IntMatrix& a) { return smith_normal_form(a).rank(); }

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a) {
    SmithForm s = smith_normal_form(a);
    int r = s.rank();
    std::vector<std::vector<Int>> basis;
    for (int j = r; j < a.cols(); ++j) {
        std::vector<Int> col(a.cols());
        for (int i = 0; i < a.cols(); ++i) col[i] = s.v.at(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

bool in_image(const SmithForm& s, const std::vector<Int>& x) {
    // Solve Ay = x through D = UAV: z with Dz = Ux exists over Z iff each
    // leading coordinate is divisible by the matching diagonal entry and the
    // rest vanish.
    std::vector<Int> ux = s.u.apply(x);
    int r = s.rank();
    for (int i = 0; i < static_cast<int>(ux.size()); ++i) {
        if (i < r) {
            if (ux[i] % s.d.at(i, i) != 0) return false;
        } else if (ux[i] != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace engeltori::homology
