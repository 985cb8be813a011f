#ifndef BGC_SYMPLECTIC_HPP
#define BGC_SYMPLECTIC_HPP

#include <cstdint>
#include <utility>

#include <Eigen/Dense>

#include "bgc/errors.hpp"
#include "bgc/rng.hpp"

namespace bgc {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// Default relative tolerance for all positive-semidefinite verdicts.
inline constexpr double kDefaultTol = 1e-9;

// The symplectic form for n modes in (x1,p1,...,xn,pn) ordering:
// block diagonal with 2x2 blocks [[0,1],[-1,0]].
struct SymplecticForm {
    int n = 0;
    MatrixXd omega;
};

SymplecticForm build_omega(int n);

// Convenience: just the matrix.
MatrixXd omega_matrix(int n);

// Verdict of a positive-semidefiniteness test. The margin is the minimum
// eigenvalue normalized by (1 + spectral radius), so the boolean behaves
// uniformly across channels with small and large noise.
struct PsdReport {
    double min_eigenvalue = 0.0;
    double margin = 0.0;
    bool is_psd = false;
};

// Smallest eigenvalue of a Hermitian matrix. Throws ContractViolation if
// the input deviates from its conjugate transpose by more than 1e-12
// relative to its magnitude.
double hermitian_min_eigenvalue(const MatrixXcd& h);

PsdReport check_psd(const MatrixXcd& h, double tol = kDefaultTol);
PsdReport check_psd(const MatrixXd& symmetric, double tol = kDefaultTol);

// Residual is the max-norm of S^T Omega S - Omega.
std::pair<bool, double> is_symplectic(const MatrixXd& s, double tol = 1e-8);

// S^T V S = diag(nu_1,nu_1,...,nu_n,nu_n) with S symplectic, nu sorted
// descending.
struct WilliamsonDecomposition {
    MatrixXd s_matrix;
    VectorXd nu;
};

WilliamsonDecomposition williamson(const MatrixXd& v);

// S = R1 * D(d) * R2 with R1, R2 orthogonal symplectic and
// D(d) = diag(d_1, 1/d_1, ..., d_n, 1/d_n), d_i >= 1 sorted descending.
struct EulerDecomposition {
    MatrixXd r1;
    MatrixXd r2;
    VectorXd d;

    MatrixXd squeezer() const;  // expands d into D(d)
};

EulerDecomposition euler_decompose(const MatrixXd& s, double tol = 1e-8);

// Splits a valid covariance matrix as v = s^T s + delta with s symplectic
// and delta PSD.
std::pair<MatrixXd, MatrixXd> covariance_lower_factor(const MatrixXd& v,
                                                      double tol = kDefaultTol);

// Haar-random element of Sp(2n,R) /\ SO(2n) via the unitary embedding.
MatrixXd random_orthogonal_symplectic(int n, Rng& rng);

// Random symplectic matrix R1 * D(d) * R2 whose Euler squeezing values
// lie in [1, max_squeeze]; deterministic per seed.
MatrixXd random_symplectic(int n, double max_squeeze, std::uint64_t seed);

} // namespace bgc

#endif
