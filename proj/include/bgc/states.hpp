#ifndef BGC_STATES_HPP
#define BGC_STATES_HPP

#include <complex>
#include <cstdint>

#include "bgc/symplectic.hpp"

namespace bgc {

// Gaussian state in the convention where the vacuum covariance is the
// identity and quadratures are ordered (x1,p1,...,xn,pn). The mean vector
// rides along under channel action but plays no role in classicality.
class GaussianState {
public:
    GaussianState(VectorXd mean, MatrixXd cov, double tol = kDefaultTol);

    static GaussianState vacuum(int n);

    int modes() const { return n_; }
    const VectorXd& mean() const { return mean_; }
    const MatrixXd& cov() const { return cov_; }

private:
    int n_;
    VectorXd mean_;
    MatrixXd cov_;
};

struct ClassicalityVerdict {
    bool is_classical = false;
    double margin = 0.0;  // PSD margin of V - 1
};

// PSD report of V + i Omega (the uncertainty relation).
PsdReport validate_state(const MatrixXd& cov, double tol = kDefaultTol);

ClassicalityVerdict is_classical_gaussian(const MatrixXd& cov, double tol = kDefaultTol);

// s-ordered characteristic function
//   exp[-i sqrt2 mean^T xi - xi^T (V - s 1) xi / 2],  |s| <= 1.
std::complex<double> gaussian_char_fn(const GaussianState& state,
                                      const VectorXd& xi, double s);

// Covariance S^T diag(nu) S with S a random symplectic of squeezing at most
// max_squeeze and symplectic eigenvalues uniform in [1, thermal_max].
GaussianState random_gaussian_state(int n, double max_squeeze, double thermal_max,
                                    std::uint64_t seed);

} // namespace bgc

#endif
