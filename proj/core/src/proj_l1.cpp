#include "magr/proj_l1.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "magr/errors.hpp"
#include "magr/threading.hpp"

namespace magr {

namespace {

struct Scratch {
    std::vector<double> mag;
    std::vector<std::size_t> order;
};

// Projects values[idx(0..m-1)] in place. Returns {theta, rho}; {0, 0}
// when the segment is already inside the ball.
template <typename At>
std::pair<double, std::size_t> project_segment(At&& at, std::size_t m, double eps,
                                               Scratch& scratch) {
    double l1 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double v = at(i);
        if (!std::isfinite(v)) throw argument_error("project_l1: non-finite input");
        l1 += std::fabs(v);
    }
    if (l1 <= eps) return {0.0, 0};

    scratch.mag.resize(m);
    scratch.order.resize(m);
    for (std::size_t i = 0; i < m; ++i) scratch.mag[i] = std::fabs(at(i));
    std::iota(scratch.order.begin(), scratch.order.end(), std::size_t{0});
    // Stable on the original index so rho/theta are deterministic under ties.
    std::stable_sort(scratch.order.begin(), scratch.order.end(),
                     [&](std::size_t a, std::size_t b) { return scratch.mag[a] > scratch.mag[b]; });

    double csum = 0.0;
    double theta = 0.0;
    std::size_t rho = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double mu = scratch.mag[scratch.order[i]];
        csum += mu;
        const double cand = (csum - eps) / static_cast<double>(i + 1);
        if (mu > cand) {
            rho = i + 1;
            theta = cand;
        }
    }
    // l1 > eps guarantees the i = 0 test fires, so rho >= 1.

    for (std::size_t i = 0; i < m; ++i) {
        const double v = at(i);
        const double shrunk = std::max(std::fabs(v) - theta, 0.0);
        at(i) = v > 0.0 ? shrunk : (v < 0.0 ? -shrunk : 0.0);
    }
    return {theta, rho};
}

}  // namespace

VectorProjection project_l1_vector(const std::vector<double>& v, double eps) {
    if (eps <= 0.0) throw argument_error("project_l1_vector: eps must be positive");
    VectorProjection out;
    out.w = v;
    Scratch scratch;
    auto [theta, rho] =
        project_segment([&](std::size_t i) -> double& { return out.w[i]; }, v.size(), eps, scratch);
    out.theta = theta;
    out.rho = rho;
    return out;
}

ProjectionResult project_l1_grouped(const DenseMatrix& v, std::size_t group_size, double eps) {
    if (eps <= 0.0) throw argument_error("project_l1_grouped: eps must be positive");
    const std::size_t m = v.rows();
    const std::size_t n = v.cols();
    if (group_size == 0 || m % group_size != 0)
        throw argument_error("project_l1_grouped: group size must divide the row count");
    const std::size_t segs = m / group_size;

    ProjectionResult out;
    out.w = v;
    out.theta.assign(segs * n, 0.0);
    out.rho.assign(segs * n, 0);
    parallel_for(0, n, [&](std::size_t j) {
        Scratch scratch;
        for (std::size_t s = 0; s < segs; ++s) {
            const std::size_t base = s * group_size;
            auto at = [&](std::size_t i) -> double& { return out.w(base + i, j); };
            auto [theta, rho] = project_segment(at, group_size, eps, scratch);
            out.theta[j * segs + s] = theta;
            out.rho[j * segs + s] = rho;
        }
    });
    return out;
}

ProjectionResult project_l1_columns(const DenseMatrix& v, double eps) {
    if (v.empty()) throw argument_error("project_l1_columns: empty matrix");
    return project_l1_grouped(v, v.rows(), eps);
}

DenseMatrix prox_linf_grouped(const DenseMatrix& v, std::size_t group_size, double t) {
    if (t <= 0.0) throw argument_error("prox_linf: t must be positive");
    const std::size_t m = v.rows();
    const std::size_t n = v.cols();
    if (group_size == 0 || m % group_size != 0)
        throw argument_error("prox_linf_grouped: group size must divide the row count");
    const std::size_t segs = m / group_size;

    DenseMatrix out = v;
    parallel_for(0, n, [&](std::size_t j) {
        Scratch scratch;
        std::vector<double> seg(group_size);
        for (std::size_t s = 0; s < segs; ++s) {
            const std::size_t base = s * group_size;
            const double vmax = v.col_max_abs(j, base, base + group_size);
            // v/t would overflow for vanishing t; the prox tends to the
            // identity there.
            if (t < 1e-300 * vmax) continue;
            if (vmax == 0.0) continue;
            for (std::size_t i = 0; i < group_size; ++i) seg[i] = v(base + i, j) / t;
            project_segment([&](std::size_t i) -> double& { return seg[i]; }, group_size, 1.0,
                            scratch);
            for (std::size_t i = 0; i < group_size; ++i)
                out(base + i, j) = v(base + i, j) - t * seg[i];
        }
    });
    return out;
}

DenseMatrix prox_linf_columns(const DenseMatrix& v, double t) {
    if (v.empty()) throw argument_error("prox_linf_columns: empty matrix");
    return prox_linf_grouped(v, v.rows(), t);
}

}  // namespace magr
