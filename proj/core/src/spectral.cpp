#include "magr/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "magr/errors.hpp"
#include "magr/threading.hpp"

namespace magr {

DenseMatrix gram(const DenseMatrix& x, std::size_t memory_cap) {
    if (x.empty()) throw argument_error("gram: empty matrix");
    const std::size_t m = x.cols();
    if (m > 0 && m > memory_cap / 8 / m)
        throw capacity_error("gram: " + std::to_string(m) + "x" + std::to_string(m) +
                             " result exceeds memory cap");
    DenseMatrix h(m, m);
    // Upper triangle accumulated over sample rows, then mirrored; the
    // mirror makes H exactly symmetric.
    parallel_for(0, m, [&](std::size_t a) {
        for (std::size_t r = 0; r < x.rows(); ++r) {
            const double xa = x(r, a);
            if (xa == 0.0) continue;
            const double* xrow = x.values().data() + r * m;
            double* hrow = h.values().data() + a * m;
            for (std::size_t b = a; b < m; ++b) hrow[b] += xa * xrow[b];
        }
    });
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) h(b, a) = h(a, b);
    return h;
}

SpectralEstimate power_iteration(const DenseMatrix& h, double tol, std::size_t max_iter,
                                 std::uint64_t seed) {
    if (h.rows() != h.cols()) throw argument_error("power_iteration: matrix not square");
    if (tol <= 0.0) throw argument_error("power_iteration: tol must be positive");
    const std::size_t m = h.rows();

    SplitMix64 rng(seed);
    std::vector<double> v(m);
    double norm = 0.0;
    for (auto& vi : v) {
        vi = rng.next_uniform(-1.0, 1.0);
        norm += vi * vi;
    }
    norm = std::sqrt(norm);
    for (auto& vi : v) vi /= norm;

    std::vector<double> y(m);
    SpectralEstimate est;
    double lambda_prev = 0.0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        double ynorm2 = 0.0;
        double rayleigh = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double s = 0.0;
            const double* row = h.values().data() + i * m;
            for (std::size_t j = 0; j < m; ++j) s += row[j] * v[j];
            y[i] = s;
            ynorm2 += s * s;
            rayleigh += s * v[i];
        }
        est.iterations_used = it + 1;
        est.lambda_max = rayleigh;
        if (ynorm2 == 0.0) {
            // v is annihilated by H; for PSD input this means lambda_max = 0.
            est.lambda_max = 0.0;
            est.converged = true;
            return est;
        }
        if (it > 0 && std::fabs(rayleigh - lambda_prev) <=
                          tol * std::max(std::fabs(rayleigh), 1e-300)) {
            est.converged = true;
            return est;
        }
        lambda_prev = rayleigh;
        const double inv = 1.0 / std::sqrt(ynorm2);
        for (std::size_t i = 0; i < m; ++i) v[i] = y[i] * inv;
    }
    return est;
}

std::vector<double> jacobi_eigenvalues(const DenseMatrix& h, double tol, std::size_t max_sweeps) {
    if (h.rows() != h.cols()) throw argument_error("jacobi_eigenvalues: matrix not square");
    const std::size_t m = h.rows();
    DenseMatrix a = h;

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = p + 1; q < m; ++q) s += a(p, q) * a(p, q);
        return std::sqrt(2.0 * s);
    };

    const double scale = std::max(a.frobenius_norm(), 1e-300);
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_norm() <= tol * scale) break;
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const double apq = a(p, q);
                if (std::fabs(apq) <= 1e-300 * scale) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                // Smaller-angle rotation root; stable for large |theta|.
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < m; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> eig(m);
    for (std::size_t i = 0; i < m; ++i) eig[i] = a(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

std::vector<double> singular_values(const DenseMatrix& x) {
    if (x.empty()) throw argument_error("singular_values: empty matrix");
    // Eigensolve the smaller Gram matrix; shared nonzero spectrum.
    const bool wide = x.rows() <= x.cols();
    const DenseMatrix g = wide ? gram(x.transposed()) : gram(x);
    std::vector<double> eig = jacobi_eigenvalues(g);
    std::vector<double> sv(eig.size());
    for (std::size_t i = 0; i < eig.size(); ++i) sv[i] = std::sqrt(std::max(eig[i], 0.0));
    return sv;
}

double fraction_rank(const DenseMatrix& x, double rel_threshold) {
    if (x.empty()) throw argument_error("fraction_rank: empty matrix");
    if (rel_threshold <= 0.0 || rel_threshold >= 1.0)
        throw argument_error("fraction_rank: rel_threshold must lie in (0,1)");
    const std::vector<double> sv = singular_values(x);
    const double smax = sv.empty() ? 0.0 : sv.front();
    if (smax == 0.0) return 0.0;
    std::size_t count = 0;
    for (double s : sv)
        if (s > rel_threshold * smax) ++count;
    return static_cast<double>(count) / static_cast<double>(std::min(x.rows(), x.cols()));
}

}  // namespace magr
