#ifndef TVB_CLI_HPP
#define TVB_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace tvb {

/// One batch invocation. Parameters are validated per command before any
/// computation runs.
struct RunManifest {
  enum class Command { barycenter, tverberg, vkf, colored, delprod, lift, bounds, verify };

  Command command = Command::bounds;
  std::string polytope_path;
  std::string config_path;
  std::string colors_path;
  std::string out_path;
  std::string certificate_path;  // verify
  std::string problem_path;      // verify
  std::string point_text;        // barycenter target point "x,y,..."
  std::optional<long long> r, k, d, n, trials, table_dmax;
  std::optional<std::uint64_t> seed;
  bool recursive = false;
};

/// Executes the manifest and writes result files.
/// Exit status: 0 certificate found / report written; 3 solver returned none
/// (a mathematical answer, not an error); 1 input error; 2 internal
/// inconsistency or invalid certificate.
int run(const RunManifest& manifest);

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInconsistent = 2;
inline constexpr int kExitNoCertificate = 3;

}  // namespace tvb

#endif
