#ifndef BGC_KERNELS_HPP
#define BGC_KERNELS_HPP

#include <Eigen/Dense>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bgc {

enum class Execution { Serial, Parallel };

namespace kernels {

// Samples f(xi_x, xi_p) over the centered points x points grid with spacing
// dxi, xi = (index - points/2) * dxi. out(r, c) holds xi_x = grid(r),
// xi_p = grid(c). The serial variant is the reference implementation; the
// parallel one distributes columns across OpenMP threads and must produce
// bit-identical values.
template <class F>
void sample_centered_grid_serial(int points, double dxi, F&& f, Eigen::MatrixXcd& out) {
    out.resize(points, points);
    const int half = points / 2;
    for (int c = 0; c < points; ++c) {
        const double xi_p = (c - half) * dxi;
        for (int r = 0; r < points; ++r) out(r, c) = f((r - half) * dxi, xi_p);
    }
}

template <class F>
void sample_centered_grid_parallel(int points, double dxi, F&& f, Eigen::MatrixXcd& out) {
    out.resize(points, points);
    const int half = points / 2;
#pragma omp parallel for schedule(static)
    for (int c = 0; c < points; ++c) {
        const double xi_p = (c - half) * dxi;
        for (int r = 0; r < points; ++r) out(r, c) = f((r - half) * dxi, xi_p);
    }
}

template <class F>
void sample_centered_grid(int points, double dxi, F&& f, Eigen::MatrixXcd& out,
                          Execution exec) {
    if (exec == Execution::Parallel)
        sample_centered_grid_parallel(points, dxi, f, out);
    else
        sample_centered_grid_serial(points, dxi, f, out);
}

} // namespace kernels
} // namespace bgc

#endif
