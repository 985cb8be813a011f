#ifndef BGC_DUALITY_HPP
#define BGC_DUALITY_HPP

#include <utility>
#include <vector>

#include "bgc/eb.hpp"

namespace bgc {

// Squeezing filter built from an EB certificate: the symplectic S that
// diagonalizes the Y1 partition per Williamson, together with the filtered
// channel (X S, S^T Y S) and the Euler factorization exposing the filter's
// single-mode squeezing content.
struct FilterResult {
    MatrixXd s_filter;
    GaussianChannel filtered;
    EulerDecomposition euler;
    double nb_margin = 0.0;
};

// Turns an entanglement-breaking channel into a nonclassicality-breaking
// one by Gaussian unitary post-processing. The caller pins the Y1
// partition; different certificates yield different, equally valid filters.
FilterResult filter_to_nb(const GaussianChannel& ch, const EbCertificate& cert,
                          double tol = kDefaultTol);

// The trivial EB split Y = 1 + (Y - 1) of a nonclassicality-breaking channel.
EbCertificate nb_to_eb_certificate(const GaussianChannel& ch, double tol = kDefaultTol);

// True when conjugating every covariance by S leaves only classical states.
std::pair<bool, double> verify_filterable(const std::vector<GaussianState>& states,
                                          const MatrixXd& s, double tol = kDefaultTol);

} // namespace bgc

#endif
