#pragma once

#include "frozen/characteristic.hpp"
#include "frozen/core_params.hpp"
#include "frozen/interval_ops.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace frozen {

/// Header `# k=<k> m=<m>`, then one `x,re,im` row per midpoint (%.17g).
void write_grid_csv(std::ostream& os, const GridFunction& g);
/// Throws InvalidInput on a missing header, wrong row count or off-grid x.
[[nodiscard]] GridFunction read_grid_csv(std::istream& is);

/// Profile on (0,b): header `# m=<m>`, then `t,re,im` rows.
void write_profile_csv(std::ostream& os, std::span<const cplx> f, int k);
[[nodiscard]] std::vector<cplx> read_profile_csv(std::istream& is);

/// {"alpha":0,"beta":1,"j":3,"k":7}
[[nodiscard]] std::string config_to_json(const ProblemConfig& config);
/// Accepts the plain object or one nested under "config". Values pass
/// through make_config.
[[nodiscard]] ProblemConfig config_from_json(std::string_view text);

/// {"alpha":..,"beta":..,"eigenvalues":[[re,im],...]}
[[nodiscard]] std::string spectrum_to_json(const Spectrum& spec);
[[nodiscard]] Spectrum spectrum_from_json(std::string_view text);

/// `n,re,im` rows with a `n,re,im` header.
void write_eigs_csv(std::ostream& os, const Spectrum& spec);

/// Metadata written next to CLI outputs. Only `wall_time_s` varies between runs,
/// so data files never embed it.
struct RunManifest {
    std::string command;
    ProblemConfig config;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    int k = 0;
    int m = 0;
    std::map<std::string, double> tolerances;
    double wall_time_s = 0.0;

    [[nodiscard]] std::string to_json() const;
};

[[nodiscard]] std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace frozen
