#include "lmisyn/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace lmisyn {

namespace {

constexpr double kAbsFloor = 1e-14;

double sign_with(double magnitude, double sign_source) {
    return sign_source >= 0.0 ? std::fabs(magnitude) : -std::fabs(magnitude);
}

} // namespace

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double v : a.data()) s += v * v;
    return std::sqrt(s);
}

double frobenius_norm(const CMatrix& a) {
    double s = 0.0;
    for (const auto& v : a.data()) s += std::norm(v);
    return std::sqrt(s);
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (double v : a.data()) m = std::max(m, std::fabs(v));
    return m;
}

CMatrix to_complex(const Matrix& a) {
    CMatrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.data().size(); ++k) c.data()[k] = a.data()[k];
    return c;
}

CMatrix conjugate_transpose(const CMatrix& a) {
    CMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    return r;
}

// ---------------------------------------------------------------------------
// LU with partial pivoting
// ---------------------------------------------------------------------------

template <class T>
static BasicMatrix<T> lu_solve(BasicMatrix<T> a, BasicMatrix<T> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionMismatch("solve_linear: A must be square");
    if (b.rows() != n) throw DimensionMismatch("solve_linear: B row count");
    double anorm = 0.0;
    for (const auto& v : a.data()) anorm += std::norm(v);
    anorm = std::sqrt(anorm);
    const double threshold = std::max(1e-12 * anorm, kAbsFloor);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(a(r, col));
            if (v > best) { best = v; piv = r; }
        }
        if (best < threshold) throw SingularMatrix("solve_linear: pivot below threshold");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(col, j), b(piv, j));
        }
        const T inv_p = T{1} / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const T f = a(r, col) * inv_p;
            if (f == T{}) continue;
            a(r, col) = f;
            for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= f * a(col, j);
            for (std::size_t j = 0; j < b.cols(); ++j) b(r, j) -= f * b(col, j);
        }
    }
    // back substitution
    for (std::size_t ri = n; ri-- > 0;) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            T s = b(ri, j);
            for (std::size_t k = ri + 1; k < n; ++k) s -= a(ri, k) * b(k, j);
            b(ri, j) = s / a(ri, ri);
        }
    }
    return b;
}

Matrix solve_linear(const Matrix& a, const Matrix& b) { return lu_solve(a, b); }
CMatrix solve_linear(const CMatrix& a, const CMatrix& b) { return lu_solve(a, b); }

// ---------------------------------------------------------------------------
// General eigenvalues: Householder Hessenberg reduction + Francis double-shift
// QR with deflation (classic hqr scheme). Eigenvalues only, no vectors.
// ---------------------------------------------------------------------------

static void hessenberg_reduce(Matrix& a) {
    const std::size_t n = a.rows();
    if (n < 3) return;
    std::vector<double> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double scale = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) scale += std::fabs(a(i, k));
        if (scale == 0.0) continue;
        double alpha = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = a(i, k) / scale;
            alpha += v[i] * v[i];
        }
        alpha = std::sqrt(alpha);
        if (v[k + 1] < 0.0) alpha = -alpha;
        v[k + 1] += alpha;
        const double beta = alpha * v[k + 1];
        if (beta == 0.0) continue;
        // A <- (I - v v^T / beta) A  on rows k+1.., all cols
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) s += v[i] * a(i, j);
            s /= beta;
            for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= s * v[i];
        }
        // A <- A (I - v v^T / beta)  on cols k+1.., all rows
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
            s /= beta;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= s * v[j];
        }
        a(k + 1, k) = -alpha * scale;
        for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
    }
}

std::vector<std::complex<double>> eigenvalues(const Matrix& a_in) {
    const std::size_t nsz = a_in.rows();
    if (a_in.cols() != nsz) throw DimensionMismatch("eigenvalues: square input required");
    for (double v : a_in.data())
        if (!std::isfinite(v)) throw DimensionMismatch("eigenvalues: non-finite entry");
    const int n = static_cast<int>(nsz);
    std::vector<std::complex<double>> wri(nsz);
    if (n == 0) return wri;
    Matrix h = a_in;
    hessenberg_reduce(h);

    const double eps = std::numeric_limits<double>::epsilon();
    const long max_sweeps = 100L * std::max(n, 1);
    long sweeps = 0;

    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::fabs(h(i, j));
    if (anorm == 0.0) return wri; // zero matrix

    int nn = n - 1;
    double t = 0.0;
    while (nn >= 0) {
        int its = 0;
        int l;
        do {
            for (l = nn; l > 0; --l) {
                double s = std::fabs(h(l - 1, l - 1)) + std::fabs(h(l, l));
                if (s == 0.0) s = anorm;
                if (std::fabs(h(l, l - 1)) <= eps * s) {
                    h(l, l - 1) = 0.0;
                    break;
                }
            }
            double x = h(nn, nn);
            if (l == nn) {
                wri[nn--] = x + t;
            } else {
                double y = h(nn - 1, nn - 1);
                double w = h(nn, nn - 1) * h(nn - 1, nn);
                if (l == nn - 1) {
                    double p = 0.5 * (y - x);
                    double q = p * p + w;
                    double z = std::sqrt(std::fabs(q));
                    x += t;
                    if (q >= 0.0) {
                        z = p + sign_with(z, p);
                        wri[nn - 1] = wri[nn] = x + z;
                        if (z != 0.0) wri[nn] = x - w / z;
                    } else {
                        wri[nn] = std::complex<double>(x + p, -z);
                        wri[nn - 1] = std::conj(wri[nn]);
                    }
                    nn -= 2;
                } else {
                    if (++sweeps > max_sweeps)
                        throw NoConvergence("eigenvalues: QR sweep budget exhausted");
                    if (its != 0 && its % 10 == 0) {
                        // exceptional shift
                        t += x;
                        for (int i = 0; i <= nn; ++i) h(i, i) -= x;
                        double s = std::fabs(h(nn, nn - 1)) + std::fabs(h(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        w = -0.4375 * s * s;
                    }
                    ++its;
                    int m;
                    double p = 0.0, q = 0.0, r = 0.0;
                    for (m = nn - 2; m >= l; --m) {
                        double z = h(m, m);
                        double rr = x - z;
                        double ss = y - z;
                        p = (rr * ss - w) / h(m + 1, m) + h(m, m + 1);
                        q = h(m + 1, m + 1) - z - rr - ss;
                        r = h(m + 2, m + 1);
                        double s = std::fabs(p) + std::fabs(q) + std::fabs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        const double u = std::fabs(h(m, m - 1)) * (std::fabs(q) + std::fabs(r));
                        const double v = std::fabs(p) *
                            (std::fabs(h(m - 1, m - 1)) + std::fabs(z) + std::fabs(h(m + 1, m + 1)));
                        if (u <= eps * v) break;
                    }
                    for (int i = m; i < nn - 1; ++i) {
                        h(i + 2, i) = 0.0;
                        if (i != m) h(i + 2, i - 1) = 0.0;
                    }
                    for (int k = m; k < nn; ++k) {
                        if (k != m) {
                            p = h(k, k - 1);
                            q = h(k + 1, k - 1);
                            r = 0.0;
                            if (k + 1 != nn) r = h(k + 2, k - 1);
                            x = std::fabs(p) + std::fabs(q) + std::fabs(r);
                            if (x != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        double s = sign_with(std::sqrt(p * p + q * q + r * r), p);
                        if (s == 0.0) continue;
                        if (k == m) {
                            if (l != m) h(k, k - 1) = -h(k, k - 1);
                        } else {
                            h(k, k - 1) = -s * x;
                        }
                        p += s;
                        x = p / s;
                        y = q / s;
                        double z = r / s;
                        q /= p;
                        r /= p;
                        for (int j = k; j <= nn; ++j) {
                            double pp = h(k, j) + q * h(k + 1, j);
                            if (k + 1 != nn) {
                                pp += r * h(k + 2, j);
                                h(k + 2, j) -= pp * z;
                            }
                            h(k + 1, j) -= pp * y;
                            h(k, j) -= pp * x;
                        }
                        const int mmin = nn < k + 3 ? nn : k + 3;
                        for (int i = l; i <= mmin; ++i) {
                            double pp = x * h(i, k) + y * h(i, k + 1);
                            if (k + 1 != nn) {
                                pp += z * h(i, k + 2);
                                h(i, k + 2) -= pp * r;
                            }
                            h(i, k + 1) -= pp * q;
                            h(i, k) -= pp;
                        }
                    }
                }
            }
        } while (l + 1 < nn);
    }
    return wri;
}

// ---------------------------------------------------------------------------
// Cyclic Jacobi for symmetric matrices
// ---------------------------------------------------------------------------

void symmetric_eig(const Matrix& s, std::vector<double>& values, Matrix* vectors) {
    const std::size_t n = s.rows();
    if (s.cols() != n) throw DimensionMismatch("symmetric_eig: square input required");
    Matrix a = s;
    Matrix v;
    if (vectors) v = Matrix::identity(n);
    const double scale = frobenius_norm(a);
    const double tol = std::max(1e-14 * scale, kAbsFloor * kAbsFloor);

    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
        if (std::sqrt(off) <= tol) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::fabs(apq) <= tol / (double)(n * n + 1)) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double tt = sign_with(1.0, theta) /
                    (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(tt * tt + 1.0);
                const double sn = tt * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - sn * akq;
                    a(k, q) = sn * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - sn * aqk;
                    a(q, k) = sn * apk + c * aqk;
                }
                if (vectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const double vkp = v(k, p), vkq = v(k, q);
                        v(k, p) = c * vkp - sn * vkq;
                        v(k, q) = sn * vkp + c * vkq;
                    }
                }
            }
        }
    }
    values.resize(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });
    for (std::size_t i = 0; i < n; ++i) values[i] = diag[order[i]];
    if (vectors) {
        *vectors = Matrix(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) (*vectors)(i, j) = v(i, order[j]);
    }
}

double symmetric_min_eig(const Matrix& s) {
    if (s.rows() == 0) return 0.0;
    std::vector<double> vals;
    symmetric_eig(s, vals, nullptr);
    return vals.front();
}

// ---------------------------------------------------------------------------
// Singular values via the Gram matrix of the smaller side
// ---------------------------------------------------------------------------

static std::vector<double> gram_eigs(const Matrix& a) {
    const Matrix g = a.rows() <= a.cols() ? a * a.transpose() : a.transpose() * a;
    std::vector<double> vals;
    symmetric_eig(g, vals, nullptr);
    return vals;
}

double spectral_norm(const Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    for (double v : a.data())
        if (!std::isfinite(v)) throw DimensionMismatch("spectral_norm: non-finite entry");
    const auto vals = gram_eigs(a);
    return std::sqrt(std::max(vals.back(), 0.0));
}

// sigma(M) for complex M equals sigma of the real embedding [[Re,-Im],[Im,Re]].
static Matrix real_embedding(const CMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    Matrix e(2 * r, 2 * c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            const double re = m(i, j).real(), im = m(i, j).imag();
            e(i, j) = re;
            e(i, j + c) = -im;
            e(i + r, j) = im;
            e(i + r, j + c) = re;
        }
    return e;
}

double spectral_norm(const CMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    const auto vals = gram_eigs(real_embedding(a));
    return std::sqrt(std::max(vals.back(), 0.0));
}

double smallest_singular_value(const CMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    const auto vals = gram_eigs(real_embedding(a));
    return std::sqrt(std::max(vals.front(), 0.0));
}

// ---------------------------------------------------------------------------
// Cholesky
// ---------------------------------------------------------------------------

bool cholesky(const Matrix& s, Matrix& l) {
    const std::size_t n = s.rows();
    if (s.cols() != n) throw DimensionMismatch("cholesky: square input required");
    l = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = s(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (!(d > 0.0) || !std::isfinite(d)) return false;
        const double ljj = std::sqrt(d);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double v = s(i, j);
            for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
            l(i, j) = v / ljj;
        }
    }
    return true;
}

bool is_positive_definite(const Matrix& s) {
    const std::size_t n = s.rows();
    if (s.cols() != n) throw DimensionMismatch("is_positive_definite: square input required");
    const double scale = frobenius_norm(s);
    const double tol = 1e-12 * scale + kAbsFloor;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::fabs(s(i, j) - s(j, i)) > tol)
                throw NotSymmetric("is_positive_definite: asymmetric input");
    Matrix l;
    return cholesky(s, l);
}

// ---------------------------------------------------------------------------
// Sylvester equation A X - X L = C, Kronecker formulation
// ---------------------------------------------------------------------------

Matrix solve_sylvester(const Matrix& a, const Matrix& lambda, const Matrix& c) {
    const std::size_t n = a.rows(), k = lambda.rows();
    if (a.cols() != n || lambda.cols() != k) throw DimensionMismatch("solve_sylvester: square A, L");
    if (c.rows() != n || c.cols() != k) throw DimensionMismatch("solve_sylvester: C shape");
    const auto ea = eigenvalues(a);
    const auto el = eigenvalues(lambda);
    const double sep_tol = 1e-10 * (frobenius_norm(a) + frobenius_norm(lambda)) + kAbsFloor;
    for (const auto& la : ea)
        for (const auto& ll : el)
            if (std::abs(la - ll) < sep_tol)
                throw SpectraOverlap("solve_sylvester: spectra of A and L intersect");

    const std::size_t dim = n * k;
    Matrix m(dim, dim);
    Matrix rhs(dim, 1);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t row = j * n + i;
            for (std::size_t r = 0; r < n; ++r) m(row, j * n + r) += a(i, r);
            for (std::size_t l2 = 0; l2 < k; ++l2) m(row, l2 * n + i) -= lambda(l2, j);
            rhs(row, 0) = c(i, j);
        }
    const Matrix x = solve_linear(m, rhs);
    Matrix out(n, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) out(i, j) = x(j * n + i, 0);
    return out;
}

} // namespace lmisyn
