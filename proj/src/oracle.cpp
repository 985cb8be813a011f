#include "bgc/oracle.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

#include <fftw3.h>

namespace bgc {

namespace {

constexpr double kExpGuard = 700.0;  // exp() overflow guard on the exponent

// |alpha|^2 beyond which every matrix element underflows to zero long
// before the Laguerre factors could overflow.
double negligible_radius(int cutoff) { return 1200.0 + 8.0 * cutoff; }

std::complex<double> displacement_amplitude(const Eigen::Vector2d& xi) {
    // D(xi) = exp[alpha a^dag - conj(alpha) a] with alpha = xi_p - i xi_x
    return {xi(1), -xi(0)};
}

void require_single_mode(const GaussianChannel& ch, const char* who) {
    if (ch.modes() != 1)
        throw DimensionError(std::string(who) + ": oracle supports single-mode channels only");
}

// Quadratic kernel exponent -xi^T (Y - s 1) xi / 2.
double noise_exponent(const GaussianChannel& ch, const Eigen::Vector2d& xi, double s) {
    const Eigen::Matrix2d kernel =
        ch.y().topLeftCorner<2, 2>() - s * Eigen::Matrix2d::Identity();
    return -0.5 * xi.dot(kernel * xi);
}

std::complex<double> gaussian_weyl_char(const GaussianState& state,
                                        const Eigen::Vector2d& xi) {
    const double quad = xi.dot(state.cov().topLeftCorner<2, 2>() * xi);
    const double phase = -std::sqrt(2.0) * state.mean().head<2>().dot(xi);
    return std::exp(std::complex<double>(-0.5 * quad, phase));
}

// Mean photon number of the channel output given input moments.
double output_mean_photons(const GaussianChannel& ch, const Eigen::Vector2d& mean_in,
                           const Eigen::Matrix2d& cov_in) {
    const Eigen::Matrix2d x = ch.x().topLeftCorner<2, 2>();
    const Eigen::Matrix2d v_out =
        x.transpose() * cov_in * x + ch.y().topLeftCorner<2, 2>();
    const Eigen::Vector2d m_out = x.transpose() * mean_in;
    return 0.25 * (v_out.trace() - 2.0) + 0.5 * m_out.squaredNorm();
}

void guard_output_energy(const GaussianChannel& ch, const Eigen::Vector2d& mean_in,
                         const Eigen::Matrix2d& cov_in, int cutoff) {
    const double photons = output_mean_photons(ch, mean_in, cov_in);
    if (photons > 0.25 * cutoff)
        throw DomainError("quasiprob_grid: output mean photon number " +
                          std::to_string(photons) + " exceeds cutoff/4; raise the cutoff");
}

// Unnormalized 2D transform with kernel exp(+2 pi i jk / M) along both axes.
// Planning is serialized; execution is concurrency-safe.
void fft2d_backward(MatrixXcd& data) {
    static std::mutex plan_mutex;
    const int m = static_cast<int>(data.rows());
    auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan = nullptr;
    {
        const std::lock_guard<std::mutex> lock(plan_mutex);
        plan = fftw_plan_dft_2d(m, m, buffer, buffer, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        const std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }
}

// Shared grid pipeline: sample the output characteristic function over the
// conjugate grid, checkerboard, transform, checkerboard, rescale.
template <class Sampler>
QuasiProbGrid grid_pipeline(const GaussianChannel& ch, double s, double extent,
                            int points, Execution exec, Sampler&& sampler) {
    require_single_mode(ch, "quasiprob_grid");
    if (s >= 1.0 || s < -1.0)
        throw DomainError("quasiprob_grid: order parameter must lie in [-1, 1)");
    if (extent <= 0.0) throw DomainError("quasiprob_grid: extent must be positive");
    if (points < 64 || (points & (points - 1)) != 0)
        throw DomainError("quasiprob_grid: points must be a power of two >= 64");

    const double dxi = std::numbers::pi / (2.0 * extent);
    const double xi_max_sq = 2.0 * std::pow(0.5 * points * dxi, 2);
    const Eigen::Matrix2d kernel =
        ch.y().topLeftCorner<2, 2>() - s * Eigen::Matrix2d::Identity();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(kernel, Eigen::EigenvaluesOnly);
    if (0.5 * std::max(0.0, -es.eigenvalues().minCoeff()) * xi_max_sq > kExpGuard)
        throw RangeError("quasiprob_grid: kernel grows too fast at this order; "
                         "reduce the grid extent or lower s");

    MatrixXcd samples;
    kernels::sample_centered_grid(points, dxi, sampler, samples, exec);
    for (int c = 0; c < points; ++c)
        for (int r = (c % 2 == 0) ? 1 : 0; r < points; r += 2) samples(r, c) *= -1.0;
    fft2d_backward(samples);

    QuasiProbGrid grid;
    grid.s = s;
    grid.extent = extent;
    grid.points = points;
    grid.values.resize(points, points);
    grid.max_imag = 0.0;
    const double scale = dxi * dxi / (std::numbers::pi * std::numbers::pi);
    for (int c = 0; c < points; ++c) {
        for (int r = 0; r < points; ++r) {
            const double sign = ((r + c) % 2 == 0) ? 1.0 : -1.0;
            grid.values(r, c) = sign * scale * samples(r, c).real();
            grid.max_imag = std::max(grid.max_imag, std::abs(scale * samples(r, c).imag()));
        }
    }
    return grid;
}

} // namespace

MatrixXcd displacement_matrix(const Eigen::Vector2d& xi, int cutoff) {
    if (cutoff < 1) throw DimensionError("displacement_matrix: cutoff must be >= 1");
    const int dim = cutoff + 1;
    const std::complex<double> alpha = displacement_amplitude(xi);
    const double x = std::norm(alpha);
    MatrixXcd d = MatrixXcd::Zero(dim, dim);
    if (x > negligible_radius(cutoff)) return d;

    const double gauss = std::exp(-0.5 * x);
    for (int k = 0; k <= cutoff; ++k) {
        // band m = n + k: prefactor sqrt(n!/(n+k)!) alpha^k, Laguerre L_n^{(k)}(x)
        std::complex<double> pref(1.0, 0.0);
        for (int j = 1; j <= k; ++j) pref *= alpha / std::sqrt(static_cast<double>(j));
        double lag_prev = 0.0;
        double lag = 1.0;  // L_0^{(k)}
        for (int n = 0; n + k <= cutoff; ++n) {
            if (n > 0) {
                const double next =
                    ((2.0 * n - 1.0 + k - x) * lag - (n - 1.0 + k) * lag_prev) / n;
                lag_prev = lag;
                lag = next;
                pref *= std::sqrt(static_cast<double>(n) / (n + k));
            }
            const std::complex<double> value = pref * lag * gauss;
            d(n + k, n) = value;
            if (k > 0) d(n, n + k) = (k % 2 == 0 ? 1.0 : -1.0) * std::conj(value);
        }
    }
    return d;
}

std::complex<double> char_fn(const FockState& state, const Eigen::Vector2d& xi,
                             double s) {
    if (std::abs(s) > 1.0)
        throw DomainError("char_fn: order parameter must satisfy |s| <= 1");
    const double exponent = 0.5 * s * xi.squaredNorm();
    if (exponent > kExpGuard)
        throw RangeError("char_fn: exp(s|xi|^2/2) overflows; reduce |xi| or the grid extent");
    const MatrixXcd d = displacement_matrix(xi, state.cutoff());
    const std::complex<double> trace =
        state.density().transpose().cwiseProduct(d).sum();
    return std::exp(exponent) * trace;
}

std::complex<double> output_char_fn(const GaussianChannel& ch, const FockState& state,
                                    const Eigen::Vector2d& xi, double s) {
    require_single_mode(ch, "output_char_fn");
    const double exponent = noise_exponent(ch, xi, s);
    if (exponent > kExpGuard)
        throw RangeError("output_char_fn: noise kernel overflows; reduce the grid extent");
    const Eigen::Vector2d mapped = ch.x().topLeftCorner<2, 2>() * xi;
    const MatrixXcd d = displacement_matrix(mapped, state.cutoff());
    const std::complex<double> trace =
        state.density().transpose().cwiseProduct(d).sum();
    return trace * std::exp(exponent);
}

std::complex<double> output_char_fn(const GaussianChannel& ch,
                                    const GaussianState& state,
                                    const Eigen::Vector2d& xi, double s) {
    require_single_mode(ch, "output_char_fn");
    if (state.modes() != 1)
        throw DimensionError("output_char_fn: oracle states are single mode");
    const double exponent = noise_exponent(ch, xi, s);
    if (exponent > kExpGuard)
        throw RangeError("output_char_fn: noise kernel overflows; reduce the grid extent");
    const Eigen::Vector2d mapped = ch.x().topLeftCorner<2, 2>() * xi;
    return gaussian_weyl_char(state, mapped) * std::exp(exponent);
}

QuasiProbGrid quasiprob_grid(const GaussianChannel& ch, const FockState& state,
                             double s, double extent, int points, Execution exec) {
    guard_output_energy(ch, state.quadrature_mean(), state.quadrature_cov(),
                        state.cutoff());
    const Eigen::Matrix2d x = ch.x().topLeftCorner<2, 2>();
    const MatrixXcd& rho = state.density();
    const int cutoff = state.cutoff();
    return grid_pipeline(ch, s, extent, points, exec,
                         [&, s](double xi_x, double xi_p) {
                             const Eigen::Vector2d xi(xi_x, xi_p);
                             const Eigen::Vector2d mapped = x * xi;
                             const MatrixXcd d = displacement_matrix(mapped, cutoff);
                             const std::complex<double> trace =
                                 rho.transpose().cwiseProduct(d).sum();
                             return trace * std::exp(noise_exponent(ch, xi, s));
                         });
}

QuasiProbGrid quasiprob_grid(const GaussianChannel& ch, const GaussianState& state,
                             double s, double extent, int points, Execution exec) {
    if (state.modes() != 1)
        throw DimensionError("quasiprob_grid: oracle states are single mode");
    guard_output_energy(ch, state.mean().head<2>(), state.cov().topLeftCorner<2, 2>(),
                        40);
    const Eigen::Matrix2d x = ch.x().topLeftCorner<2, 2>();
    return grid_pipeline(ch, s, extent, points, exec,
                         [&, s](double xi_x, double xi_p) {
                             const Eigen::Vector2d xi(xi_x, xi_p);
                             return gaussian_weyl_char(state, x * xi) *
                                    std::exp(noise_exponent(ch, xi, s));
                         });
}

WitnessInput WitnessInput::fock(int k, int cutoff) {
    return {"fock:" + std::to_string(k), FockState::number(k, cutoff)};
}

WitnessInput WitnessInput::gaussian(std::string label, GaussianState state) {
    return {std::move(label), std::move(state)};
}

std::optional<Witness> witness_search(const GaussianChannel& ch,
                                      const std::vector<WitnessInput>& inputs,
                                      const std::vector<double>& s_schedule,
                                      double extent, int points, double witness_tol,
                                      Execution exec) {
    require_single_mode(ch, "witness_search");
    for (const WitnessInput& input : inputs) {
        for (const double s : s_schedule) {
            const QuasiProbGrid grid = std::visit(
                [&](const auto& state) {
                    return quasiprob_grid(ch, state, s, extent, points, exec);
                },
                input.state);
            Eigen::Index r = 0;
            Eigen::Index c = 0;
            const double min_value = grid.values.minCoeff(&r, &c);
            if (min_value < -witness_tol) {
                Witness witness;
                witness.input_spec = input.label;
                witness.s = s;
                witness.location = {grid.coord(static_cast<int>(r)),
                                    grid.coord(static_cast<int>(c))};
                witness.value = min_value;
                return witness;
            }
        }
    }
    return std::nullopt;
}

} // namespace bgc
