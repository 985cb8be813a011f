#include "bgc/states.hpp"

#include <cmath>

namespace bgc {

namespace {

void require_state_shape(const MatrixXd& cov, const char* who) {
    if (cov.rows() != cov.cols() || cov.rows() <= 0 || cov.rows() % 2 != 0)
        throw DimensionError(std::string(who) + ": covariance must be 2n x 2n");
    const double scale = 1.0 + cov.cwiseAbs().maxCoeff();
    if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw ContractViolation(std::string(who) + ": covariance is not symmetric");
}

} // namespace

GaussianState::GaussianState(VectorXd mean, MatrixXd cov, double tol)
    : n_(static_cast<int>(cov.rows() / 2)), mean_(std::move(mean)), cov_(std::move(cov)) {
    require_state_shape(cov_, "GaussianState");
    if (mean_.size() != cov_.rows())
        throw DimensionError("GaussianState: mean length must match covariance");
    if (!validate_state(cov_, tol).is_psd)
        throw DomainError("GaussianState: covariance violates the uncertainty relation");
}

GaussianState GaussianState::vacuum(int n) {
    if (n < 1) throw DimensionError("vacuum: mode count must be >= 1");
    return GaussianState(VectorXd::Zero(2 * n), MatrixXd::Identity(2 * n, 2 * n));
}

PsdReport validate_state(const MatrixXd& cov, double tol) {
    require_state_shape(cov, "validate_state");
    const int n = static_cast<int>(cov.rows() / 2);
    const std::complex<double> im(0.0, 1.0);
    return check_psd(MatrixXcd(cov.cast<std::complex<double>>() +
                               im * omega_matrix(n).cast<std::complex<double>>()),
                     tol);
}

ClassicalityVerdict is_classical_gaussian(const MatrixXd& cov, double tol) {
    if (!validate_state(cov, tol).is_psd)
        throw DomainError("is_classical_gaussian: not a valid covariance matrix");
    const PsdReport report =
        check_psd(MatrixXd(cov - MatrixXd::Identity(cov.rows(), cov.cols())), tol);
    return {report.is_psd, report.margin};
}

std::complex<double> gaussian_char_fn(const GaussianState& state, const VectorXd& xi,
                                      double s) {
    if (xi.size() != 2 * state.modes())
        throw DimensionError("gaussian_char_fn: xi must have length 2n");
    if (std::abs(s) > 1.0)
        throw DomainError("gaussian_char_fn: order parameter must satisfy |s| <= 1");
    const double quad =
        xi.dot(state.cov() * xi) - s * xi.squaredNorm();
    const double phase = -std::sqrt(2.0) * state.mean().dot(xi);
    return std::exp(std::complex<double>(-0.5 * quad, phase));
}

GaussianState random_gaussian_state(int n, double max_squeeze, double thermal_max,
                                    std::uint64_t seed) {
    if (max_squeeze < 1.0 || thermal_max < 1.0)
        throw ContractViolation("random_gaussian_state: squeeze and thermal bounds must be >= 1");
    Rng rng = Rng(seed).fork(0x5747454dULL);
    const MatrixXd s = random_symplectic(n, max_squeeze, rng.next_u64());
    VectorXd diag(2 * n);
    for (int j = 0; j < n; ++j) {
        const double nu = rng.uniform(1.0, thermal_max);
        diag(2 * j) = nu;
        diag(2 * j + 1) = nu;
    }
    MatrixXd cov = s.transpose() * diag.asDiagonal() * s;
    cov = 0.5 * (cov + cov.transpose());
    return GaussianState(VectorXd::Zero(2 * n), cov);
}

} // namespace bgc
