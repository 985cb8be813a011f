#include "bgc/duality.hpp"

#include <limits>

namespace bgc {

FilterResult filter_to_nb(const GaussianChannel& ch, const EbCertificate& cert,
                          double tol) {
    if (cert.y1.rows() != ch.y().rows())
        throw DimensionError("filter_to_nb: certificate does not match the channel");
    const EbCertificate checked = make_certificate(ch, cert.y1, cert.y2);
    if (!certificate_valid(checked, std::max(tol, 1e-7)))
        throw ContractViolation("filter_to_nb: certificate is not valid for this channel");

    MatrixXd y1 = checked.y1;
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(y1, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < 1e-12) {
        // residual-level certificates can leave Y1 semidefinite; nudge it
        // into the Williamson domain
        y1 += 1e-10 * MatrixXd::Identity(y1.rows(), y1.cols());
    }

    const WilliamsonDecomposition w = williamson(y1);
    FilterResult result{
        w.s_matrix,
        pre_post_unitary(ch, std::nullopt, w.s_matrix),
        euler_decompose(w.s_matrix),
        0.0,
    };
    result.nb_margin = is_nb(result.filtered, std::max(tol, 1e-7)).margin;
    return result;
}

EbCertificate nb_to_eb_certificate(const GaussianChannel& ch, double tol) {
    const PsdReport nb = is_nb(ch, tol);
    if (nb.margin < -tol)
        throw DomainError("nb_to_eb_certificate: channel is not nonclassicality breaking");
    const MatrixXd eye = MatrixXd::Identity(ch.y().rows(), ch.y().cols());
    return make_certificate(ch, eye, ch.y() - eye);
}

std::pair<bool, double> verify_filterable(const std::vector<GaussianState>& states,
                                          const MatrixXd& s, double tol) {
    const auto [ok, residual] = is_symplectic(s, 1e-8);
    if (!ok)
        throw ContractViolation("verify_filterable: filter is not symplectic (residual " +
                                std::to_string(residual) + ")");
    bool all_classical = true;
    double worst = std::numeric_limits<double>::infinity();
    for (const GaussianState& state : states) {
        if (state.cov().rows() != s.rows())
            throw DimensionError("verify_filterable: state and filter sizes differ");
        const MatrixXd filtered = s.transpose() * state.cov() * s;
        const ClassicalityVerdict verdict =
            is_classical_gaussian(0.5 * (filtered + filtered.transpose()), tol);
        all_classical = all_classical && verdict.is_classical;
        worst = std::min(worst, verdict.margin);
    }
    return {all_classical, worst};
}

} // namespace bgc
