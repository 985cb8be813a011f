#include "bgc/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace bgc {

namespace {

void require_even_square(const Eigen::Index rows, const Eigen::Index cols,
                         const char* who) {
    if (rows != cols)
        throw DimensionError(std::string(who) + ": matrix must be square");
    if (rows <= 0 || rows % 2 != 0)
        throw DimensionError(std::string(who) +
                             ": dimension must be a positive even number");
}

void require_hermitian(const MatrixXcd& h, const char* who) {
    require_even_square(h.rows(), h.cols(), who);
    const double scale = 1.0 + h.cwiseAbs().maxCoeff();
    const double dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (dev > 1e-12 * scale)
        throw ContractViolation(std::string(who) + ": input is not Hermitian " +
                                "(relative deviation " + std::to_string(dev / scale) + ")");
}

// Inverse square root of a symmetric positive-definite matrix.
MatrixXd spd_inverse_sqrt(const MatrixXd& v, const char* who) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(v);
    if (es.eigenvalues().minCoeff() <= 0.0)
        throw DomainError(std::string(who) + ": matrix is not positive definite");
    return es.eigenvectors() *
           es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
           es.eigenvectors().transpose();
}

// Post-rotates each (x_j, p_j) column pair of S by an in-plane rotation so
// that S(2j+1, 2j) = 0 and S(2j, 2j) >= 0. Valid gauge freedom whenever S
// is paired with diag(c_j, c_j) blocks on the right.
void canonicalize_block_rotations(MatrixXd& s) {
    const Eigen::Index dim = s.rows();
    for (Eigen::Index j = 0; j + 1 < dim; j += 2) {
        const double p = s(j + 1, j);
        const double q = s(j + 1, j + 1);
        const double h = std::hypot(p, q);
        if (h < 1e-300) continue;
        double c = q / h;
        double sn = -p / h;
        if (c * s(j, j) + sn * s(j, j + 1) < 0.0) {
            c = -c;
            sn = -sn;
        }
        const VectorXd col_a = s.col(j);
        const VectorXd col_b = s.col(j + 1);
        s.col(j) = c * col_a + sn * col_b;
        s.col(j + 1) = -sn * col_a + c * col_b;
    }
}

} // namespace

SymplecticForm build_omega(int n) {
    if (n < 1) throw DimensionError("build_omega: mode count must be >= 1");
    SymplecticForm form;
    form.n = n;
    form.omega = MatrixXd::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        form.omega(2 * j, 2 * j + 1) = 1.0;
        form.omega(2 * j + 1, 2 * j) = -1.0;
    }
    return form;
}

MatrixXd omega_matrix(int n) { return build_omega(n).omega; }

double hermitian_min_eigenvalue(const MatrixXcd& h) {
    require_hermitian(h, "hermitian_min_eigenvalue");
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

PsdReport check_psd(const MatrixXcd& h, double tol) {
    require_hermitian(h, "check_psd");
    if (tol <= 0.0) throw ContractViolation("check_psd: tolerance must be positive");
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    PsdReport report;
    report.min_eigenvalue = es.eigenvalues().minCoeff();
    const double radius = es.eigenvalues().cwiseAbs().maxCoeff();
    report.margin = report.min_eigenvalue / (1.0 + radius);
    report.is_psd = report.margin >= -tol;
    return report;
}

PsdReport check_psd(const MatrixXd& symmetric, double tol) {
    return check_psd(MatrixXcd(symmetric.cast<std::complex<double>>()), tol);
}

std::pair<bool, double> is_symplectic(const MatrixXd& s, double tol) {
    require_even_square(s.rows(), s.cols(), "is_symplectic");
    const MatrixXd omega = omega_matrix(static_cast<int>(s.rows() / 2));
    const double residual = (s.transpose() * omega * s - omega).cwiseAbs().maxCoeff();
    return {residual <= tol, residual};
}

WilliamsonDecomposition williamson(const MatrixXd& v) {
    require_even_square(v.rows(), v.cols(), "williamson");
    const double scale = 1.0 + v.cwiseAbs().maxCoeff();
    if ((v - v.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw ContractViolation("williamson: input is not symmetric");

    const int n = static_cast<int>(v.rows() / 2);
    const MatrixXd omega = omega_matrix(n);
    const MatrixXd v_inv_sqrt = spd_inverse_sqrt(v, "williamson");

    // A = V^{-1/2} Omega V^{-1/2} is skew-symmetric; iA is Hermitian with
    // eigenvalues +/- kappa_j and the symplectic eigenvalues are 1/kappa_j.
    const MatrixXd a = v_inv_sqrt * omega * v_inv_sqrt;
    const std::complex<double> im(0.0, 1.0);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(im * a.cast<std::complex<double>>());

    struct Pair {
        double kappa;
        Eigen::VectorXcd vec;
    };
    std::vector<Pair> pairs;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        if (es.eigenvalues()(k) > 0.0)
            pairs.push_back({es.eigenvalues()(k), es.eigenvectors().col(k)});
    }
    if (static_cast<int>(pairs.size()) != n)
        throw DomainError("williamson: spectral pairing failed");
    // kappa ascending -> nu = 1/kappa descending
    std::sort(pairs.begin(), pairs.end(),
              [](const Pair& a_, const Pair& b_) { return a_.kappa < b_.kappa; });

    // For eigenvector u = x + iy of iA with eigenvalue kappa:
    // A x = kappa y, A y = -kappa x, and (sqrt2 y, sqrt2 x) columns bring A
    // to the block kappa * [[0,1],[-1,0]].
    MatrixXd o(2 * n, 2 * n);
    VectorXd d_scale(2 * n);
    VectorXd nu(n);
    const double sqrt2 = std::sqrt(2.0);
    for (int j = 0; j < n; ++j) {
        o.col(2 * j) = sqrt2 * pairs[j].vec.imag();
        o.col(2 * j + 1) = sqrt2 * pairs[j].vec.real();
        const double inv_sqrt_kappa = 1.0 / std::sqrt(pairs[j].kappa);
        d_scale(2 * j) = inv_sqrt_kappa;
        d_scale(2 * j + 1) = inv_sqrt_kappa;
        nu(j) = 1.0 / pairs[j].kappa;
    }

    WilliamsonDecomposition result;
    result.s_matrix = v_inv_sqrt * o * d_scale.asDiagonal();
    result.nu = nu;
    canonicalize_block_rotations(result.s_matrix);
    return result;
}

MatrixXd EulerDecomposition::squeezer() const {
    const Eigen::Index n = d.size();
    VectorXd diag(2 * n);
    for (Eigen::Index j = 0; j < n; ++j) {
        diag(2 * j) = d(j);
        diag(2 * j + 1) = 1.0 / d(j);
    }
    return diag.asDiagonal();
}

EulerDecomposition euler_decompose(const MatrixXd& s, double tol) {
    const auto [ok, residual] = is_symplectic(s, tol);
    if (!ok)
        throw ContractViolation("euler_decompose: input is not symplectic (residual " +
                                std::to_string(residual) + ")");

    const int n = static_cast<int>(s.rows() / 2);
    const MatrixXd omega = omega_matrix(n);

    // Left polar split S = P R with P = (S S^T)^{1/2} symplectic SPD and R
    // orthogonal symplectic.
    const MatrixXd m = s * s.transpose();
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(m);
    const MatrixXd p = es.eigenvectors() *
                       es.eigenvalues().cwiseSqrt().asDiagonal() *
                       es.eigenvectors().transpose();
    const MatrixXd p_inv = es.eigenvectors() *
                           es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                           es.eigenvectors().transpose();
    const MatrixXd r = p_inv * s;

    // Eigenvalues of P pair as (lambda, 1/lambda) with Omega^T v the partner
    // eigenvector of v. Assemble K = [v_1, Omega^T v_1, ...] from the top-n
    // eigenvectors, re-orthogonalized against the span of the chosen pairs
    // to keep degenerate clusters (lambda ~ 1) symplectically paired.
    Eigen::SelfAdjointEigenSolver<MatrixXd> ep(p);
    std::vector<std::pair<double, Eigen::Index>> order;
    for (Eigen::Index k = 0; k < ep.eigenvalues().size(); ++k)
        order.push_back({ep.eigenvalues()(k), k});
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    MatrixXd k_mat(2 * n, 2 * n);
    VectorXd d(n);
    for (int j = 0; j < n; ++j) {
        VectorXd v = ep.eigenvectors().col(order[j].second);
        for (int i = 0; i < j; ++i) {
            v -= k_mat.col(2 * i) * (k_mat.col(2 * i).dot(v));
            v -= k_mat.col(2 * i + 1) * (k_mat.col(2 * i + 1).dot(v));
        }
        const double norm = v.norm();
        if (norm < 1e-8)
            throw DomainError("euler_decompose: eigenvector pairing collapsed");
        v /= norm;
        k_mat.col(2 * j) = v;
        k_mat.col(2 * j + 1) = omega.transpose() * v;
        d(j) = std::max(order[j].first, 1.0);
    }

    EulerDecomposition result;
    result.r1 = k_mat;
    result.d = d;
    result.r2 = k_mat.transpose() * r;

    // Sign gauge: flipping column pair j of R1 together with row pair j of
    // R2 leaves R1 D R2 unchanged. Make the first significant entry in each
    // R2 row pair positive.
    for (int j = 0; j < n; ++j) {
        const auto row = result.r2.row(2 * j);
        Eigen::Index lead = 0;
        double best = 0.0;
        for (Eigen::Index c = 0; c < row.size(); ++c) {
            if (std::abs(row(c)) > 1e-9) {
                lead = c;
                best = row(c);
                break;
            }
            if (std::abs(row(c)) > std::abs(best)) {
                lead = c;
                best = row(c);
            }
        }
        if (result.r2(2 * j, lead) < 0.0) {
            result.r1.col(2 * j) *= -1.0;
            result.r1.col(2 * j + 1) *= -1.0;
            result.r2.row(2 * j) *= -1.0;
            result.r2.row(2 * j + 1) *= -1.0;
        }
    }
    return result;
}

std::pair<MatrixXd, MatrixXd> covariance_lower_factor(const MatrixXd& v, double tol) {
    require_even_square(v.rows(), v.cols(), "covariance_lower_factor");
    const int n = static_cast<int>(v.rows() / 2);
    const std::complex<double> im(0.0, 1.0);
    const MatrixXcd uncertainty =
        v.cast<std::complex<double>>() + im * omega_matrix(n).cast<std::complex<double>>();
    if (!check_psd(uncertainty, tol).is_psd)
        throw DomainError("covariance_lower_factor: not a valid covariance matrix");

    const WilliamsonDecomposition w = williamson(v);
    // V = S_w^{-T} diag(nu) S_w^{-1}; with s = S_w^{-1} the gap
    // delta = s^T (diag(nu) - 1) s is PSD exactly when all nu >= 1.
    const MatrixXd s = w.s_matrix.inverse();
    const MatrixXd delta = v - s.transpose() * s;
    return {s, 0.5 * (delta + delta.transpose())};
}

MatrixXd random_orthogonal_symplectic(int n, Rng& rng) {
    using Eigen::MatrixXcd;
    MatrixXcd g(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            g(r, c) = std::complex<double>(rng.normal(), rng.normal());
    Eigen::HouseholderQR<MatrixXcd> qr(g);
    MatrixXcd q = qr.householderQ();
    const MatrixXcd r_mat = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < n; ++c) {
        const std::complex<double> rc = r_mat(c, c);
        const double mag = std::abs(rc);
        q.col(c) *= (mag > 0.0) ? rc / mag : std::complex<double>(1.0, 0.0);
    }

    // Unitary u = A + iB embeds as the interleaved orthogonal symplectic
    // matrix with 2x2 blocks [[A_jk, -B_jk],[B_jk, A_jk]].
    MatrixXd o(2 * n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            o(2 * r, 2 * c) = q(r, c).real();
            o(2 * r, 2 * c + 1) = -q(r, c).imag();
            o(2 * r + 1, 2 * c) = q(r, c).imag();
            o(2 * r + 1, 2 * c + 1) = q(r, c).real();
        }
    }
    return o;
}

MatrixXd random_symplectic(int n, double max_squeeze, std::uint64_t seed) {
    if (n < 1) throw DimensionError("random_symplectic: mode count must be >= 1");
    if (max_squeeze < 1.0)
        throw ContractViolation("random_symplectic: max_squeeze must be >= 1");
    Rng rng(seed);
    const MatrixXd r1 = random_orthogonal_symplectic(n, rng);
    const MatrixXd r2 = random_orthogonal_symplectic(n, rng);
    VectorXd diag(2 * n);
    const double log_max = std::log(max_squeeze);
    for (int j = 0; j < n; ++j) {
        const double d = std::exp(rng.uniform() * log_max);
        diag(2 * j) = d;
        diag(2 * j + 1) = 1.0 / d;
    }
    return r1 * diag.asDiagonal() * r2;
}

} // namespace bgc
