#pragma once

#include <vector>

#include "raag/errors.hpp"
#include "raag/int_matrix.hpp"

namespace raag {

/**
 * Unimodular congruence normal form of a skew-symmetric integer matrix M:
 *
 *   U * M * U^T = H(lambda_1) + ... + H(lambda_k) + 0,   H(l) = [[0, l], [-l, 0]]
 *
 * with |det U| = 1, every lambda_i > 0 and lambda_i | lambda_{i+1}.
 * The number of hyperbolic blocks k satisfies 2k = rank(M).
 */
struct SkewNormalForm {
    IntMatrix U;
    std::vector<Int> lambdas;
    Index size = 0;
};

/**
 * Smith normal form U * M * V = D with U, V unimodular and D diagonal,
 * d_1 | d_2 | ..., all d_i >= 0.
 */
struct SmithForm {
    IntMatrix U;
    IntMatrix V;
    IntMatrix D;
};

namespace detail {

template <typename Scalar>
Scalar abs_val(const Scalar& x) {
    return x < 0 ? Scalar(-x) : x;
}

}  // namespace detail

/**
 * Rank over the rationals, by fraction-free (division-exact) elimination.
 * All intermediate values are exact integers; no overflow at any size.
 */
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    DenseMatrix<Scalar> a = m.derived();
    const Index rows = a.rows(), cols = a.cols();
    Scalar prev(1);
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index p = -1;
        for (Index i = r; i < rows; ++i) {
            if (a(i, c) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r) a.row(p).swap(a.row(r));
        for (Index i = r + 1; i < rows; ++i) {
            for (Index j = c + 1; j < cols; ++j) {
                a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
            }
            a(i, c) = Scalar(0);
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

/** Exact determinant by Bareiss fraction-free elimination. */
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols()) {
        fail(ErrorCode::NotSquare, "determinant requires a square matrix");
    }
    DenseMatrix<Scalar> a = m.derived();
    const Index n = a.rows();
    if (n == 0) return Scalar(1);
    Scalar prev(1);
    int sign = 1;
    for (Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Index p = -1;
            for (Index i = k + 1; i < n; ++i) {
                if (a(i, k) != 0) {
                    p = i;
                    break;
                }
            }
            if (p < 0) return Scalar(0);
            a.row(p).swap(a.row(k));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = Scalar(0);
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Scalar(-a(n - 1, n - 1));
}

template <typename Derived>
bool is_skew_symmetric(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() != m.cols()) return false;
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = i; j < m.cols(); ++j) {
            if (m(i, j) != -m(j, i)) return false;
        }
    }
    return true;
}

/** True iff m is square with determinant +1 or -1. */
template <typename Derived>
bool is_unimodular(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() != m.cols()) return false;
    using Scalar = typename Derived::Scalar;
    Scalar d = determinant(m);
    return d == 1 || d == -1;
}

/**
 * Smith normal form by minimal-pivot integer reduction.
 *
 * Pivot rule: smallest nonzero absolute value in the trailing submatrix,
 * ties broken by row-major position. Row operations accumulate in U, column
 * operations in V, so U * M * V = D holds exactly on return.
 */
template <typename Derived>
SmithForm smith_normal_form(const Eigen::MatrixBase<Derived>& m) {
    IntMatrix a = m.derived().template cast<Int>();
    const Index rows = a.rows(), cols = a.cols();
    IntMatrix u = IntMatrix::Identity(rows, rows);
    IntMatrix v = IntMatrix::Identity(cols, cols);

    const Index steps = rows < cols ? rows : cols;
    for (Index t = 0; t < steps; ++t) {
        for (;;) {
            // minimal nonzero pivot in the trailing submatrix
            Index pi = -1, pj = -1;
            for (Index i = t; i < rows; ++i) {
                for (Index j = t; j < cols; ++j) {
                    if (a(i, j) == 0) continue;
                    if (pi < 0 ||
                        detail::abs_val(a(i, j)) < detail::abs_val(a(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi < 0) {
                t = steps;  // trailing submatrix is zero: done
                break;
            }
            if (pi != t) {
                a.row(pi).swap(a.row(t));
                u.row(pi).swap(u.row(t));
            }
            if (pj != t) {
                a.col(pj).swap(a.col(t));
                v.col(pj).swap(v.col(t));
            }
            const Int p = a(t, t);
            bool dirty = false;
            for (Index i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / p;
                if (q != 0) {
                    a.row(i) -= q * a.row(t);
                    u.row(i) -= q * u.row(t);
                }
                if (a(i, t) != 0) dirty = true;
            }
            for (Index j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / p;
                if (q != 0) {
                    a.col(j) -= q * a.col(t);
                    v.col(j) -= q * v.col(t);
                }
                if (a(t, j) != 0) dirty = true;
            }
            if (dirty) continue;  // remainders below |p| exist: reselect pivot
            // pivot must divide the whole trailing submatrix
            Index oi = -1;
            for (Index i = t + 1; i < rows && oi < 0; ++i) {
                for (Index j = t + 1; j < cols; ++j) {
                    if (a(i, j) % p != 0) {
                        oi = i;
                        break;
                    }
                }
            }
            if (oi >= 0) {
                a.row(t) += a.row(oi);
                u.row(t) += u.row(oi);
                continue;
            }
            break;
        }
        if (t >= steps) break;
    }

    for (Index i = 0; i < steps; ++i) {
        if (a(i, i) < 0) {
            a.row(i) = -a.row(i);
            u.row(i) = -u.row(i);
        }
    }
    SmithForm f;
    f.U = u;
    f.V = v;
    f.D = a;
    return f;
}

/**
 * Skew-symmetric congruence normal form. Simultaneous row and mirrored
 * column operations (so skew symmetry is preserved) pivot on the
 * minimal-magnitude nonzero entry; before a hyperbolic block is split off,
 * its pivot is forced to divide the whole trailing submatrix, which yields
 * the divisibility chain lambda_1 | lambda_2 | ... directly.
 */
template <typename Derived>
SkewNormalForm skew_normal_form(const Eigen::MatrixBase<Derived>& m) {
    if (!is_skew_symmetric(m)) {
        fail(ErrorCode::NotSkewSymmetric,
             "skew_normal_form requires a skew-symmetric matrix");
    }
    IntMatrix a = m.derived().template cast<Int>();
    const Index n = a.rows();
    IntMatrix u = IntMatrix::Identity(n, n);

    auto swap_sym = [&](Index i, Index j) {
        a.row(i).swap(a.row(j));
        a.col(i).swap(a.col(j));
        u.row(i).swap(u.row(j));
    };
    // row_i += c * row_j together with the mirrored column operation
    auto add_sym = [&](Index i, Index j, const Int& c) {
        a.row(i) += c * a.row(j);
        a.col(i) += c * a.col(j);
        u.row(i) += c * u.row(j);
    };

    std::vector<Int> lambdas;
    Index active = 0;
    while (active + 1 < n) {
        bool isolated = false;
        for (;;) {
            Index pi = -1, pj = -1;
            for (Index i = active; i < n; ++i) {
                for (Index j = i + 1; j < n; ++j) {
                    if (a(i, j) == 0) continue;
                    if (pi < 0 ||
                        detail::abs_val(a(i, j)) < detail::abs_val(a(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi < 0) break;  // active part is zero
            const Index s = active, t = active + 1;
            if (pi != s) swap_sym(pi, s);  // pj > pi >= active, so pj != s
            if (pj != t) swap_sym(pj, t);
            const Int p = a(s, t);
            bool dirty = false;
            for (Index r = active + 2; r < n; ++r) {
                // a(r, t) shifts by c * a(s, t) = c * p under row_r += c * row_s
                Int q = a(r, t) / p;
                if (q != 0) add_sym(r, s, Int(-q));
                // a(r, s) shifts by c * a(t, s) = -c * p under row_r += c * row_t
                Int q2 = a(r, s) / p;
                if (q2 != 0) add_sym(r, t, q2);
                if (a(r, s) != 0 || a(r, t) != 0) dirty = true;
            }
            if (dirty) continue;
            Index oi = -1;
            for (Index r = active + 2; r < n && oi < 0; ++r) {
                for (Index c = r + 1; c < n; ++c) {
                    if (a(r, c) % p != 0) {
                        oi = r;
                        break;
                    }
                }
            }
            if (oi >= 0) {
                add_sym(s, oi, Int(1));
                continue;
            }
            isolated = true;
            break;
        }
        if (!isolated) break;
        if (a(active, active + 1) < 0) swap_sym(active, active + 1);
        lambdas.push_back(a(active, active + 1));
        active += 2;
    }

    SkewNormalForm f;
    f.U = u;
    f.lambdas = std::move(lambdas);
    f.size = n;
    return f;
}

/** Rebuild the block matrix described by a SkewNormalForm. */
inline IntMatrix skew_block_matrix(const SkewNormalForm& f) {
    IntMatrix h = IntMatrix::Zero(f.size, f.size);
    for (size_t i = 0; i < f.lambdas.size(); ++i) {
        const Index r = static_cast<Index>(2 * i);
        h(r, r + 1) = f.lambdas[i];
        h(r + 1, r) = -f.lambdas[i];
    }
    return h;
}

/**
 * Exact inverse of a unimodular integer matrix. Runs the Smith reduction;
 * U * M * V = I forces M^{-1} = V * U.
 */
template <typename Derived>
IntMatrix unimodular_inverse(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() != m.cols()) {
        fail(ErrorCode::NotUnimodular, "unimodular_inverse requires a square matrix");
    }
    SmithForm f = smith_normal_form(m);
    if (f.D != IntMatrix::Identity(f.D.rows(), f.D.cols())) {
        fail(ErrorCode::NotUnimodular, "matrix is not unimodular");
    }
    IntMatrix inv = f.V * f.U;
    return inv;
}

}  // namespace raag
