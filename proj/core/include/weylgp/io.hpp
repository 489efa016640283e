#ifndef WEYLGP_IO_HPP
#define WEYLGP_IO_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weylgp/gp.hpp"
#include "weylgp/janet.hpp"
#include "weylgp/syzygy.hpp"

namespace weylgp {

/// Configuration or input-file failure (exit code 2 at the CLI).
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Symbolic-stage failure surfaced by the CLI with exit code 3.
class AlgebraError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Presentation file: {"generators": [...], "derivations": [...],
/// "table": [[poly string per derivation] per generator],
/// "realizations": [expression strings]} (optional).
PresentationPtr presentation_from_json_text(const std::string& text);
PresentationPtr load_presentation(const std::string& path);
std::string presentation_to_json_text(const Presentation& pres);

/// Ordering descriptor: {"kind": "degrevlex", "weights": [...]} |
/// {"kind": "elim-partials"} | {"kind": "top"/"pot", "base": {...}} |
/// {"kind": "elim-components", "split": n, "first": {...}, "second": {...}}.
MonomialOrdering ordering_from_json_text(const std::string& text, const Presentation& pres);

/// Matrix files: {"entries": [[operator strings]]}.
OperatorMatrix matrix_from_json_text(const std::string& text, PresentationPtr pres,
                                     const MonomialOrdering& ord);
std::string matrix_to_json_text(const OperatorMatrix& m);
void save_matrix(const std::string& path, const OperatorMatrix& m);
OperatorMatrix load_matrix(const std::string& path, PresentationPtr pres,
                           const MonomialOrdering& ord);

/// Janet basis dump: elements, per-element multiplicative variables, and the
/// ordering descriptor.
std::string basis_to_json_text(const JanetBasis& basis);

/// Parametrization result with the reduction certificate.
std::string parametrization_to_json_text(const ParametrizationResult& result);

/// Data file: CSV with header x1,..,xd,component,value,noise_var and
/// 1-based component indices.
DataSet load_data_csv(const std::string& path, std::size_t dim);
void save_data_csv(const std::string& path, const DataSet& data, std::size_t dim);

/// Grid file: CSV with header x1,..,xd,mean_1,..,mean_l,sd_1,..,sd_l.
void save_grid_csv(const std::string& path, const std::vector<GridPoint>& grid,
                   std::size_t dim, std::size_t outputs);
std::vector<GridPoint> load_grid_csv(const std::string& path, std::size_t& dim,
                                     std::size_t& outputs);

struct SvgOptions {
    double arrow_scale = 0.25;
    int width = 720;
    int height = 480;
};

/// Minimal quiver rendering for planar fields: mean arrows, the zero contour
/// of the region function, and data markers in red.
void render_quiver_svg(const std::string& path, const std::vector<GridPoint>& grid,
                       const std::vector<std::pair<double, double>>& box,
                       const std::function<double(const std::vector<double>&)>& region_value,
                       const std::vector<std::vector<double>>& data_points,
                       const SvgOptions& options = {});

}  // namespace io
}  // namespace weylgp

#endif
