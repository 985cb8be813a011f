#include "bgc/eb.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace bgc {

namespace {

const std::complex<double> kI(0.0, 1.0);

// Real embedding of the Hermitian matrix A + iB as [[A, -B],[B, A]].
MatrixXd embed(const MatrixXd& a, const MatrixXd& b) {
    const Eigen::Index d = a.rows();
    MatrixXd m(2 * d, 2 * d);
    m.topLeftCorner(d, d) = a;
    m.topRightCorner(d, d) = -b;
    m.bottomLeftCorner(d, d) = b;
    m.bottomRightCorner(d, d) = a;
    return m;
}

MatrixXd clip_to_psd(const MatrixXd& sym) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (sym + sym.transpose()));
    const VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
    return es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().transpose();
}

FeasibilityResult run_dykstra(const GaussianChannel& ch, const MatrixXd& y1_init,
                              double tol, int max_iter) {
    const Eigen::Index d = ch.y().rows();
    const int n = ch.modes();
    const MatrixXd omega = omega_matrix(n);
    const MatrixXd skew = ch.x().transpose() * omega * ch.x();
    const MatrixXd& y = ch.y();

    // Constraint 1: Y1 + i Omega >= 0, lifted with skew part Omega.
    // Constraint 2: (Y - Y1) - i X^T Omega X >= 0, lifted with skew part -skew.
    const auto lift1 = [&](const MatrixXd& y1) { return embed(y1, omega); };
    const auto lift2 = [&](const MatrixXd& y1) { return embed(y - y1, -skew); };

    MatrixXd y1 = 0.5 * (y1_init + y1_init.transpose());
    MatrixXd z1 = lift1(y1);
    MatrixXd z2 = lift2(y1);
    MatrixXd corr1 = MatrixXd::Zero(2 * d, 2 * d);
    MatrixXd corr2 = MatrixXd::Zero(2 * d, 2 * d);

    constexpr double kFloorFactor = 10.0;   // infeasibility floor = 10 * tol
    constexpr int kStallWindow = 100;
    const double floor = kFloorFactor * tol;
    std::vector<double> gap_history;
    gap_history.reserve(max_iter > 0 ? max_iter : 1);

    FeasibilityResult result;
    double gap = 0.0;
    for (int iter = 1; iter <= max_iter; ++iter) {
        EbCertificate cert = make_certificate(ch, y1, y - y1);
        if (certificate_valid(cert, tol)) {
            result.status = EbStatus::Feasible;
            result.certificate = std::move(cert);
            result.iterations = iter;
            result.gap = gap;
            result.reason = "projection-certificate";
            return result;
        }

        // cone step with Dykstra corrections
        const MatrixXd x1 = clip_to_psd(z1 + corr1);
        const MatrixXd x2 = clip_to_psd(z2 + corr2);
        corr1 = z1 + corr1 - x1;
        corr2 = z2 + corr2 - x2;

        // affine step: closest lifted pair sharing one symmetric Y1
        MatrixXd avg = x1.topLeftCorner(d, d) + x1.bottomRightCorner(d, d) + 2.0 * y -
                       x2.topLeftCorner(d, d) - x2.bottomRightCorner(d, d);
        y1 = 0.125 * (avg + avg.transpose());
        z1 = lift1(y1);
        z2 = lift2(y1);

        gap = std::sqrt((x1 - z1).squaredNorm() + (x2 - z2).squaredNorm());
        gap_history.push_back(gap);

        if (iter > kStallWindow && gap >= floor) {
            const double past = gap_history[iter - 1 - kStallWindow];
            if (std::abs(gap - past) < 1e-12 * std::max(1.0, gap)) {
                result.status = EbStatus::Infeasible;
                result.iterations = iter;
                result.gap = gap;
                result.reason = "gap-stall";
                return result;
            }
        }
    }

    result.status = EbStatus::Undecided;
    result.iterations = max_iter;
    result.gap = gap;
    result.reason = "budget-exhausted";
    return result;
}

// Warm start: pull the identity back through the Williamson frame of Y when
// Y is positive definite, otherwise split Y evenly.
MatrixXd default_start(const MatrixXd& y) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(y, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() <= 1e-12) return 0.5 * y;
    const MatrixXd s_inv = williamson(y).s_matrix.inverse();
    return s_inv.transpose() * s_inv;
}

} // namespace

std::string to_string(EbStatus status) {
    switch (status) {
        case EbStatus::Feasible: return "feasible";
        case EbStatus::Infeasible: return "infeasible";
        default: return "undecided";
    }
}

EbCertificate make_certificate(const GaussianChannel& ch, const MatrixXd& y1,
                               const MatrixXd& y2) {
    const int n = ch.modes();
    EbCertificate cert;
    cert.y1 = 0.5 * (y1 + y1.transpose());
    cert.y2 = 0.5 * (y2 + y2.transpose());
    cert.residual_cov = validate_state(cert.y1).margin;
    const MatrixXcd noise_gap =
        cert.y2.cast<std::complex<double>>() -
        kI * (ch.x().transpose() * omega_matrix(n) * ch.x()).cast<std::complex<double>>();
    cert.residual_noise = check_psd(noise_gap).margin;
    cert.residual_sum = (ch.y() - cert.y1 - cert.y2).cwiseAbs().maxCoeff();
    return cert;
}

bool certificate_valid(const EbCertificate& cert, double tol) {
    return cert.residual_cov >= -tol && cert.residual_noise >= -tol &&
           cert.residual_sum <= tol;
}

FeasibilityResult eb_check(const GaussianChannel& ch, double tol, int max_iter) {
    if (!is_cp(ch, kDefaultTol).is_psd)
        throw DomainError("eb_check: channel is not completely positive");

    const Eigen::Index d = ch.y().rows();
    FeasibilityResult result;

    // (a) EB implies PPT, so a PPT violation settles infeasibility.
    if (is_ppt(ch).margin < -tol) {
        result.status = EbStatus::Infeasible;
        result.reason = "ppt-violation";
        return result;
    }

    const auto accept = [&](EbCertificate cert, const char* reason) {
        FeasibilityResult r;
        r.status = EbStatus::Feasible;
        r.certificate = std::move(cert);
        r.reason = reason;
        return r;
    };

    // (b) single mode: PPT plus CP makes the Williamson-frame identity
    // pullback of Y a valid split. The solver remains the authority if the
    // residuals land outside tolerance.
    if (ch.modes() == 1) {
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(ch.y(), Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() > 1e-12) {
            const MatrixXd s_inv = williamson(ch.y()).s_matrix.inverse();
            const MatrixXd y1 = s_inv.transpose() * s_inv;
            EbCertificate cert = make_certificate(ch, y1, ch.y() - y1);
            if (certificate_valid(cert, tol))
                return accept(std::move(cert), "single-mode-williamson");
        }
    }

    // (c) X = 0: CP already makes Y a valid covariance matrix.
    if (ch.x().cwiseAbs().maxCoeff() <= 1e-12) {
        EbCertificate cert = make_certificate(ch, ch.y(), MatrixXd::Zero(d, d));
        if (certificate_valid(cert, tol)) return accept(std::move(cert), "x-zero");
    }

    // (d) nonclassicality breaking: Y = 1 + (Y - 1) splits directly.
    if (is_nb(ch).margin >= -tol) {
        const MatrixXd eye = MatrixXd::Identity(d, d);
        EbCertificate cert = make_certificate(ch, eye, ch.y() - eye);
        if (certificate_valid(cert, tol)) return accept(std::move(cert), "nb-split");
    }

    // (e) general case
    return run_dykstra(ch, default_start(ch.y()), tol, max_iter);
}

FeasibilityResult eb_decompose_projection(const GaussianChannel& ch,
                                          const MatrixXd& y1_init, double tol,
                                          int max_iter) {
    if (!is_cp(ch, kDefaultTol).is_psd)
        throw DomainError("eb_decompose_projection: channel is not completely positive");
    if (y1_init.rows() != ch.y().rows() || y1_init.cols() != ch.y().cols())
        throw DimensionError("eb_decompose_projection: start must match Y");
    const double scale = 1.0 + y1_init.cwiseAbs().maxCoeff();
    if ((y1_init - y1_init.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
        throw ContractViolation("eb_decompose_projection: start must be symmetric");
    return run_dykstra(ch, y1_init, tol, max_iter);
}

} // namespace bgc
