#include "bgc/fock.hpp"

#include <cmath>

namespace bgc {

namespace {

MatrixXcd annihilation(int cutoff) {
    MatrixXcd a = MatrixXcd::Zero(cutoff + 1, cutoff + 1);
    for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

double expectation(const MatrixXcd& rho, const MatrixXcd& op) {
    return (rho * op).trace().real();
}

} // namespace

FockState::FockState(MatrixXcd density) : density_(std::move(density)) {
    if (density_.rows() != density_.cols() || density_.rows() < 2)
        throw DimensionError("FockState: density must be (N+1) x (N+1) with N >= 1");
    cutoff_ = static_cast<int>(density_.rows()) - 1;
    if ((density_ - density_.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw ContractViolation("FockState: density is not Hermitian");
    if (std::abs(density_.trace().real() - 1.0) > 1e-10 ||
        std::abs(density_.trace().imag()) > 1e-10)
        throw ContractViolation("FockState: density must have unit trace");
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(density_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw DomainError("FockState: density is not positive semidefinite");
}

FockState FockState::number(int k, int cutoff) {
    if (k < 0 || k > cutoff)
        throw DimensionError("FockState::number: need 0 <= k <= cutoff");
    MatrixXcd rho = MatrixXcd::Zero(cutoff + 1, cutoff + 1);
    rho(k, k) = 1.0;
    return FockState(std::move(rho));
}

FockState FockState::coherent(std::complex<double> beta, int cutoff) {
    Eigen::VectorXcd amp(cutoff + 1);
    amp(0) = std::exp(-0.5 * std::norm(beta));
    for (int n = 1; n <= cutoff; ++n)
        amp(n) = amp(n - 1) * beta / std::sqrt(static_cast<double>(n));
    MatrixXcd rho = amp * amp.adjoint();
    // renormalize the truncated tail so the density is exactly unit trace
    rho /= rho.trace().real();
    return FockState(std::move(rho));
}

Eigen::Vector2d FockState::quadrature_mean() const {
    const MatrixXcd a = annihilation(cutoff_);
    const std::complex<double> mean_a = (density_ * a).trace();
    // x = (a + a^dag)/sqrt2, p = (a - a^dag)/(i sqrt2)
    return {std::sqrt(2.0) * mean_a.real(), std::sqrt(2.0) * mean_a.imag()};
}

Eigen::Matrix2d FockState::quadrature_cov() const {
    const MatrixXcd a = annihilation(cutoff_);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const MatrixXcd x = inv_sqrt2 * (a + a.adjoint());
    const MatrixXcd p =
        std::complex<double>(0.0, -inv_sqrt2) * (a - a.adjoint());
    const Eigen::Vector2d m = quadrature_mean();
    Eigen::Matrix2d v;
    v(0, 0) = 2.0 * expectation(density_, x * x) - 2.0 * m(0) * m(0);
    v(1, 1) = 2.0 * expectation(density_, p * p) - 2.0 * m(1) * m(1);
    v(0, 1) = expectation(density_, x * p + p * x) - 2.0 * m(0) * m(1);
    v(1, 0) = v(0, 1);
    return v;
}

double FockState::mean_photons() const {
    double total = 0.0;
    for (int n = 0; n <= cutoff_; ++n) total += n * density_(n, n).real();
    return total;
}

} // namespace bgc
