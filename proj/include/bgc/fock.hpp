#ifndef BGC_FOCK_HPP
#define BGC_FOCK_HPP

#include <complex>

#include "bgc/states.hpp"

namespace bgc {

// Single-mode state as a truncated number-basis density matrix.
class FockState {
public:
    explicit FockState(MatrixXcd density);

    static FockState number(int k, int cutoff = 40);  // |k><k|
    static FockState coherent(std::complex<double> beta, int cutoff = 40);

    int cutoff() const { return cutoff_; }
    const MatrixXcd& density() const { return density_; }

    // First and second quadrature moments of the truncated density, in the
    // same convention as GaussianState (vacuum covariance = identity).
    Eigen::Vector2d quadrature_mean() const;
    Eigen::Matrix2d quadrature_cov() const;
    double mean_photons() const;

private:
    int cutoff_;
    MatrixXcd density_;
};

} // namespace bgc

#endif
