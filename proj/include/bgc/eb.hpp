#ifndef BGC_EB_HPP
#define BGC_EB_HPP

#include "bgc/channels.hpp"
#include "bgc/eb_types.hpp"

namespace bgc {

// Recomputes all certificate residuals for the split (y1, y2) of ch.y()
// from scratch; nothing is trusted from solver state.
EbCertificate make_certificate(const GaussianChannel& ch, const MatrixXd& y1,
                               const MatrixXd& y2);

bool certificate_valid(const EbCertificate& cert, double tol);

// Decides whether Y splits as Y1 + Y2 with Y1 + i Omega >= 0 and
// Y2 >= i X^T Omega X. Analytic fast paths (PPT violation, single mode,
// X = 0, nonclassicality breaking) cover most channels; the rest go to a
// Dykstra alternating-projection solver on the lifted PSD constraints.
FeasibilityResult eb_check(const GaussianChannel& ch, double tol = 1e-8,
                           int max_iter = 20000);

// Runs the projection solver directly from a caller-chosen start, skipping
// the fast paths. Exposes the iteration count and terminal gap.
FeasibilityResult eb_decompose_projection(const GaussianChannel& ch,
                                          const MatrixXd& y1_init, double tol = 1e-8,
                                          int max_iter = 20000);

} // namespace bgc

#endif
