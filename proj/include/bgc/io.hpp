#ifndef BGC_IO_HPP
#define BGC_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bgc/channels.hpp"
#include "bgc/oracle.hpp"

namespace bgc::io {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

// Structural problems with an input document (bad JSON, wrong lengths,
// asymmetric Y, invalid covariance). The CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Self-describing block embedded in every CLI output.
json conventions(double tol);

json matrix_to_json(const MatrixXd& m);           // row-major flat array
json vector_to_json(const VectorXd& v);
MatrixXd matrix_from_json(const json& node, Eigen::Index rows, Eigen::Index cols,
                          const std::string& field);
VectorXd vector_from_json(const json& node, Eigen::Index size, const std::string& field);

json channel_to_json(const GaussianChannel& ch, json metadata = json::object());
// Structural validation only (shape, Y symmetric within 1e-9); the CP check
// is a separate concern with its own exit code.
GaussianChannel channel_from_json(const json& doc);
GaussianChannel load_channel(const std::string& path);

json state_to_json(const GaussianState& state);
GaussianState state_from_json(const json& doc);
GaussianState load_state(const std::string& path);

// Generic square-matrix document for the decompose subcommand:
// {"schema_version", "dim", "data"}.
MatrixXd square_matrix_from_json(const json& doc);
MatrixXd load_square_matrix(const std::string& path);

// Grid document: JSON header plus base64-encoded row-major float64 payload.
json grid_to_json(const QuasiProbGrid& grid);
QuasiProbGrid grid_from_json(const json& doc);

std::string base64_encode(const std::uint8_t* data, std::size_t size);
std::vector<std::uint8_t> base64_decode(const std::string& text);

// 8-bit PGM with values mapped linearly from [min, max].
void write_pgm(const QuasiProbGrid& grid, const std::string& path);

json load_json(const std::string& path);

} // namespace bgc::io

#endif
