#ifndef BGC_ORACLE_HPP
#define BGC_ORACLE_HPP

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bgc/channels.hpp"
#include "bgc/fock.hpp"
#include "bgc/kernels.hpp"

namespace bgc {

// Matrix elements <m|D(xi)|n> of the displacement operator
// exp[-i sqrt2 xi^T R] for m, n <= cutoff, via the associated-Laguerre
// recurrence.
MatrixXcd displacement_matrix(const Eigen::Vector2d& xi, int cutoff);

// s-ordered characteristic function exp[s|xi|^2/2] tr(rho D(xi)).
std::complex<double> char_fn(const FockState& state, const Eigen::Vector2d& xi,
                             double s);

// Characteristic function of the channel output,
// chi_in,W(X xi) * exp[-xi^T (Y - s 1) xi / 2], for single-mode channels.
std::complex<double> output_char_fn(const GaussianChannel& ch, const FockState& state,
                                    const Eigen::Vector2d& xi, double s);
std::complex<double> output_char_fn(const GaussianChannel& ch,
                                    const GaussianState& state,
                                    const Eigen::Vector2d& xi, double s);

// Sampled s-ordered quasiprobability on [-extent, extent]^2, normalized as
// a probability density in the coherent amplitude alpha (the vacuum Q
// function peaks at 1/pi). values(r, c) sits at alpha = (coord(r), coord(c)).
struct QuasiProbGrid {
    double s = 0.0;
    double extent = 0.0;
    int points = 0;
    MatrixXd values;
    double max_imag = 0.0;  // residual imaginary part, diagnostic only

    double coord(int index) const {
        return (index - points / 2) * (2.0 * extent / points);
    }
    double cell_area() const {
        const double d = 2.0 * extent / points;
        return d * d;
    }
};

QuasiProbGrid quasiprob_grid(const GaussianChannel& ch, const FockState& state,
                             double s, double extent = 6.0, int points = 256,
                             Execution exec = Execution::Parallel);
QuasiProbGrid quasiprob_grid(const GaussianChannel& ch, const GaussianState& state,
                             double s, double extent = 6.0, int points = 256,
                             Execution exec = Execution::Parallel);

struct Witness {
    std::string input_spec;
    double s = 0.0;
    Eigen::Vector2d location = Eigen::Vector2d::Zero();
    double value = 0.0;  // grid value below -witness_tol
};

struct WitnessInput {
    std::string label;
    std::variant<FockState, GaussianState> state;

    static WitnessInput fock(int k, int cutoff = 40);
    static WitnessInput gaussian(std::string label, GaussianState state);
};

inline constexpr double kWitnessTol = 1e-4;

// Scans inputs x s_schedule in order and returns the first grid negativity
// below -witness_tol. A returned witness certifies a nonclassical output;
// absence proves nothing.
std::optional<Witness> witness_search(const GaussianChannel& ch,
                                      const std::vector<WitnessInput>& inputs,
                                      const std::vector<double>& s_schedule = {0.9, 0.99,
                                                                               0.999},
                                      double extent = 6.0, int points = 256,
                                      double witness_tol = kWitnessTol,
                                      Execution exec = Execution::Parallel);

} // namespace bgc

#endif
