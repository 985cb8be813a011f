#include "bgc/channels.hpp"

#include <cmath>
#include <complex>

#include "bgc/eb.hpp"

namespace bgc {

namespace {

const std::complex<double> kI(0.0, 1.0);

void require_channel_shape(const MatrixXd& x, const MatrixXd& y) {
    if (x.rows() != x.cols() || x.rows() <= 0 || x.rows() % 2 != 0)
        throw DimensionError("GaussianChannel: X must be 2n x 2n");
    if (y.rows() != x.rows() || y.cols() != x.cols())
        throw DimensionError("GaussianChannel: Y must match the shape of X");
    const double scale = 1.0 + y.cwiseAbs().maxCoeff();
    if ((y - y.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw ContractViolation("GaussianChannel: Y is not symmetric");
}

MatrixXcd twisted_noise(const GaussianChannel& ch) {
    return ch.y().cast<std::complex<double>>() -
           kI * (ch.x().transpose() * omega_matrix(ch.modes()) * ch.x())
                    .cast<std::complex<double>>();
}

MatrixXcd i_omega(int n) {
    return kI * omega_matrix(n).cast<std::complex<double>>();
}

void require_cp(const GaussianChannel& ch, double tol, const char* who) {
    if (!is_cp(ch, tol).is_psd)
        throw DomainError(std::string(who) + ": channel is not completely positive");
}

MatrixXd random_square(int dim, Rng& rng) {
    MatrixXd m(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m(r, c) = rng.normal();
    return m;
}

double skewness_radius(const MatrixXd& x, int n) {
    // lambda_max of i X^T Omega X
    const MatrixXcd h =
        kI * (x.transpose() * omega_matrix(n) * x).cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

} // namespace

GaussianChannel::GaussianChannel(MatrixXd x, MatrixXd y, double tol) {
    require_channel_shape(x, y);
    n_ = static_cast<int>(x.rows() / 2);
    x_ = std::move(x);
    y_ = std::move(y);
    if (!check_psd(y_, tol).is_psd)
        throw DomainError("GaussianChannel: noise matrix Y must be PSD");
    if (!is_cp(*this, tol).is_psd)
        throw DomainError("GaussianChannel: (X, Y) violates the CP condition");
}

GaussianChannel GaussianChannel::unchecked(MatrixXd x, MatrixXd y) {
    require_channel_shape(x, y);
    GaussianChannel ch;
    ch.n_ = static_cast<int>(x.rows() / 2);
    ch.x_ = std::move(x);
    ch.y_ = std::move(y);
    return ch;
}

GaussianChannel GaussianChannel::identity(int n) {
    if (n < 1) throw DimensionError("identity: mode count must be >= 1");
    return unchecked(MatrixXd::Identity(2 * n, 2 * n), MatrixXd::Zero(2 * n, 2 * n));
}

CharacteristicMatrix characteristic_matrix(const GaussianChannel& ch) {
    return {twisted_noise(ch)};
}

PsdReport is_cp(const GaussianChannel& ch, double tol) {
    return check_psd(MatrixXcd(twisted_noise(ch) + i_omega(ch.modes())), tol);
}

PsdReport is_ppt(const GaussianChannel& ch, double tol) {
    require_cp(ch, tol, "is_ppt");
    return check_psd(MatrixXcd(twisted_noise(ch) - i_omega(ch.modes())), tol);
}

PsdReport is_nb(const GaussianChannel& ch, double tol) {
    require_cp(ch, tol, "is_nb");
    const Eigen::Index dim = ch.y().rows();
    return check_psd(MatrixXcd(twisted_noise(ch) - MatrixXcd::Identity(dim, dim)), tol);
}

double nb_threshold(const GaussianChannel& ch, double tol) {
    require_cp(ch, tol, "nb_threshold");
    const Eigen::Index dim = ch.y().rows();
    const MatrixXcd gap = MatrixXcd::Identity(dim, dim) - twisted_noise(ch);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(gap, Eigen::EigenvaluesOnly);
    return std::max(0.0, es.eigenvalues().maxCoeff());
}

GaussianState apply_to_state(const GaussianChannel& ch, const GaussianState& state) {
    if (ch.modes() != state.modes())
        throw DimensionError("apply_to_state: mode counts differ");
    MatrixXd cov = ch.x().transpose() * state.cov() * ch.x() + ch.y();
    cov = 0.5 * (cov + cov.transpose());
    return GaussianState(ch.x().transpose() * state.mean(), cov);
}

GaussianChannel compose(const GaussianChannel& first, const GaussianChannel& second) {
    if (first.modes() != second.modes())
        throw DimensionError("compose: mode counts differ");
    MatrixXd y = second.x().transpose() * first.y() * second.x() + second.y();
    y = 0.5 * (y + y.transpose());
    return GaussianChannel::unchecked(first.x() * second.x(), std::move(y));
}

GaussianChannel pre_post_unitary(const GaussianChannel& ch,
                                 const std::optional<MatrixXd>& s1,
                                 const std::optional<MatrixXd>& s2, double sym_tol) {
    for (const auto* s : {&s1, &s2}) {
        if (!s->has_value()) continue;
        const auto [ok, residual] = is_symplectic(s->value(), sym_tol);
        if (!ok)
            throw ContractViolation("pre_post_unitary: argument is not symplectic (residual " +
                                    std::to_string(residual) + ")");
        if (s->value().rows() != ch.x().rows())
            throw DimensionError("pre_post_unitary: mode counts differ");
    }
    MatrixXd x = ch.x();
    MatrixXd y = ch.y();
    if (s2.has_value()) {
        x = x * s2.value();
        y = s2.value().transpose() * y * s2.value();
        y = 0.5 * (y + y.transpose());
    }
    if (s1.has_value()) x = s1.value() * x;
    return GaussianChannel::unchecked(std::move(x), std::move(y));
}

ClassificationReport classify(const GaussianChannel& ch, double tol, int eb_budget) {
    const Eigen::Index dim = ch.y().rows();
    const MatrixXcd v = twisted_noise(ch);
    const MatrixXcd eye = MatrixXcd::Identity(dim, dim);

    ClassificationReport report;
    report.tol = tol;
    report.cp_margin = check_psd(MatrixXcd(v + i_omega(ch.modes())), tol).margin;
    report.ppt_margin = check_psd(MatrixXcd(v - i_omega(ch.modes())), tol).margin;
    report.nb_margin = check_psd(MatrixXcd(v - eye), tol).margin;
    report.cp = report.cp_margin >= -tol;
    report.ppt = report.ppt_margin >= -tol;
    report.nb = report.nb_margin >= -tol;

    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(MatrixXcd(eye - v), Eigen::EigenvaluesOnly);
    report.nb_threshold = std::max(0.0, es.eigenvalues().maxCoeff());

    if (report.cp) {
        const FeasibilityResult eb = eb_check(ch, std::min(tol, 1e-8), eb_budget);
        report.eb_status = eb.status;
        report.eb_certificate = eb.certificate;
        report.eb_iterations = eb.iterations;
        report.eb_gap = eb.gap;
    } else {
        // EB is only defined for channels; a non-CP pair cannot be one.
        report.eb_status = EbStatus::Infeasible;
    }
    return report;
}

RandomEbInstance random_eb_instance(int n, std::uint64_t seed, double noise_scale) {
    if (noise_scale <= 0.0)
        throw ContractViolation("random_eb_instance: noise_scale must be positive");
    Rng rng = Rng(seed).fork(0x4542ULL);
    const MatrixXd x = random_square(2 * n, rng);
    const MatrixXd y1 = random_gaussian_state(n, 1.6, 2.5, rng.next_u64()).cov();
    const double u = rng.uniform_pos() * noise_scale;
    const MatrixXd y2 =
        skewness_radius(x, n) * (1.0 + u) * MatrixXd::Identity(2 * n, 2 * n);

    GaussianChannel ch(x, y1 + y2);
    EbCertificate cert;
    cert.y1 = y1;
    cert.y2 = y2;
    cert.residual_cov = validate_state(y1).margin;
    cert.residual_noise =
        check_psd(MatrixXcd(y2.cast<std::complex<double>>() -
                            kI * (x.transpose() * omega_matrix(n) * x)
                                     .cast<std::complex<double>>()))
            .margin;
    cert.residual_sum = 0.0;
    return {std::move(ch), std::move(cert)};
}

GaussianChannel random_channel(ChannelKind kind, int n, std::uint64_t seed,
                               double noise_scale) {
    if (n < 1) throw DimensionError("random_channel: mode count must be >= 1");
    if (noise_scale <= 0.0)
        throw ContractViolation("random_channel: noise_scale must be positive");
    if (kind == ChannelKind::Eb) return random_eb_instance(n, seed, noise_scale).channel;

    Rng rng = Rng(seed).fork(kind == ChannelKind::Cp ? 0x4350ULL : 0x4e42ULL);
    const MatrixXd x = random_square(2 * n, rng);
    const MatrixXd eye = MatrixXd::Identity(2 * n, 2 * n);
    const double u = rng.uniform_pos() * noise_scale;

    if (kind == ChannelKind::Cp) {
        // least isotropic noise making (X, t 1) completely positive
        const MatrixXcd h =
            kI * (x.transpose() * omega_matrix(n) * x - omega_matrix(n))
                     .cast<std::complex<double>>();
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h, Eigen::EigenvaluesOnly);
        const double t_cp = std::max(0.0, es.eigenvalues().maxCoeff());
        const MatrixXd g = 0.5 * random_square(2 * n, rng);
        MatrixXd psd = g.transpose() * g / (2.0 * n);
        psd = 0.5 * (psd + psd.transpose());
        return GaussianChannel(x, t_cp * (1.0 + u) * eye + psd);
    }

    // Nb: Y = 1 + lambda_max(i X^T Omega X) (1 + u) 1
    return GaussianChannel(x, eye + skewness_radius(x, n) * (1.0 + u) * eye);
}

} // namespace bgc
