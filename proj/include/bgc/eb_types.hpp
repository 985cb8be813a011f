#ifndef BGC_EB_TYPES_HPP
#define BGC_EB_TYPES_HPP

#include <optional>
#include <string>

#include <Eigen/Dense>

namespace bgc {

// Witness for the noise split Y = Y1 + Y2 with Y1 a valid covariance matrix
// and Y2 majorizing i X^T Omega X. Residuals are the PSD margins of the two
// constraints plus the max-norm defect of the sum.
struct EbCertificate {
    Eigen::MatrixXd y1;
    Eigen::MatrixXd y2;
    double residual_cov = 0.0;
    double residual_noise = 0.0;
    double residual_sum = 0.0;
};

enum class EbStatus { Feasible, Infeasible, Undecided };

std::string to_string(EbStatus status);

struct FeasibilityResult {
    EbStatus status = EbStatus::Undecided;
    std::optional<EbCertificate> certificate;
    int iterations = 0;
    double gap = 0.0;
    std::string reason;
};

} // namespace bgc

#endif
