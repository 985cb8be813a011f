#ifndef BGC_CHANNELS_HPP
#define BGC_CHANNELS_HPP

#include <cstdint>
#include <optional>

#include "bgc/eb_types.hpp"
#include "bgc/states.hpp"
#include "bgc/symplectic.hpp"

namespace bgc {

// Bosonic Gaussian channel (X, Y) acting on covariance matrices as
// V -> X^T V X + Y. The checked constructor enforces Y = Y^T, Y >= 0 and
// the CP condition Y + i Omega >= i X^T Omega X; unchecked() skips the CP
// and PSD checks so sweeps can probe non-channels.
class GaussianChannel {
public:
    GaussianChannel(MatrixXd x, MatrixXd y, double tol = kDefaultTol);

    static GaussianChannel unchecked(MatrixXd x, MatrixXd y);
    static GaussianChannel identity(int n);

    int modes() const { return n_; }
    const MatrixXd& x() const { return x_; }
    const MatrixXd& y() const { return y_; }

private:
    GaussianChannel() = default;

    int n_ = 0;
    MatrixXd x_;
    MatrixXd y_;
};

// Hermitian characteristic matrix Y - i X^T Omega X. CP, PPT and NB are
// the conditions  V + iOmega >= 0,  V - iOmega >= 0  and  V >= 1.
struct CharacteristicMatrix {
    MatrixXcd v;
};

CharacteristicMatrix characteristic_matrix(const GaussianChannel& ch);

PsdReport is_cp(const GaussianChannel& ch, double tol = kDefaultTol);
PsdReport is_ppt(const GaussianChannel& ch, double tol = kDefaultTol);
PsdReport is_nb(const GaussianChannel& ch, double tol = kDefaultTol);

// Least additive isotropic noise t such that (X, Y + t 1) is
// nonclassicality breaking: max(0, lambda_max(1 + i X^T Omega X - Y)).
double nb_threshold(const GaussianChannel& ch, double tol = kDefaultTol);

GaussianState apply_to_state(const GaussianChannel& ch, const GaussianState& state);

// apply(second, apply(first, rho)) == apply(compose(first, second), rho)
GaussianChannel compose(const GaussianChannel& first, const GaussianChannel& second);

// Conjugation by Gaussian unitaries: pre-processing s1, post-processing s2,
// giving (S1 X S2, S2^T Y S2). Pass std::nullopt to skip either side.
GaussianChannel pre_post_unitary(const GaussianChannel& ch,
                                 const std::optional<MatrixXd>& s1,
                                 const std::optional<MatrixXd>& s2,
                                 double sym_tol = 1e-8);

struct ClassificationReport {
    double cp_margin = 0.0;
    double ppt_margin = 0.0;
    double nb_margin = 0.0;
    double nb_threshold = 0.0;
    EbStatus eb_status = EbStatus::Undecided;
    std::optional<EbCertificate> eb_certificate;
    int eb_iterations = 0;
    double eb_gap = 0.0;
    bool cp = false;
    bool ppt = false;
    bool nb = false;
    double tol = kDefaultTol;
};

ClassificationReport classify(const GaussianChannel& ch, double tol = kDefaultTol,
                              int eb_budget = 20000);

enum class ChannelKind { Cp, Eb, Nb };

GaussianChannel random_channel(ChannelKind kind, int n, std::uint64_t seed,
                               double noise_scale = 0.5);

// As random_channel(ChannelKind::Eb, ...) but keeps the construction split.
struct RandomEbInstance {
    GaussianChannel channel;
    EbCertificate certificate;
};

RandomEbInstance random_eb_instance(int n, std::uint64_t seed, double noise_scale = 0.5);

} // namespace bgc

#endif
