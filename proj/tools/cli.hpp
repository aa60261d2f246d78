#ifndef TRIGONAL_TOOLS_CLI_HPP
#define TRIGONAL_TOOLS_CLI_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigonal/confluence_type.hpp"
#include "trigonal/correspondence.hpp"
#include "trigonal/monodromy.hpp"
#include "trigonal/symplectic.hpp"

namespace trigonal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvalidInput = 3;

/// Bad subcommand arguments (unknown target, format, scope, ...).
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr const char* kIndexNote =
    "index note: the stabilizer of a cover type has index equal to its orbit size, computed as 29524 = (3^10-1)/2; "
    "the stated index (3^9-1)/2 = 9841 does not match and is not used";
inline constexpr const char* kHExampleNote =
    "H-example note: the separating-node configuration is written both as t0 = t1 != t2 = ... = t11 and as "
    "t0 = t1 != t3 = ... = t11 (t2 absent); the first form is used, and the product relation forces t2 = t3 in "
    "the second";

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::Skipped;
  nlohmann::json observed;
  nlohmann::json expected;
  std::int64_t runtime_ms = 0;
  std::string detail;
};

struct VerificationReport {
  nlohmann::json header;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool any_failed() const;
  const CheckResult* find(const std::string& name) const;
  nlohmann::json to_json() const;
};

enum class Scope { All, Lattice, Symplectic, Monodromy, Correspondence };
Scope parse_scope(const std::string& s);

struct VerifyOptions {
  Scope scope = Scope::All;
  bool optional = false;
  int jobs = 1;
  std::uint64_t seed = 0;
};

/// Tables shared between suites, built on first use (thread-safe).
class Workbench {
public:
  const ProjectiveSpace& space();
  const ClassTable& classes();
  const BraidActions& actions();
  const Correspondence& correspondence();

  bool has_space() const;
  bool has_classes() const;

private:
  mutable std::mutex state_mutex_;
  std::once_flag space_once_, classes_once_, actions_once_, corr_once_;
  std::unique_ptr<ProjectiveSpace> space_;
  std::unique_ptr<ClassTable> classes_;
  std::unique_ptr<BraidActions> actions_;
  std::unique_ptr<Correspondence> corr_;
};

/// Runs the suites of the scope in dependency order. The check order in the
/// report is fixed regardless of --jobs.
VerificationReport run_verification(const VerifyOptions& opts, Workbench& bench);

enum class ExportTarget { Bijection, Orbits, Gram, Classes };
enum class ExportFormat { Json, Dot };
ExportTarget parse_export_target(const std::string& s);
ExportFormat parse_export_format(const std::string& s);

/// Deterministic export text. Throws UsageError for a combination with no DOT form.
std::string export_artifact(ExportTarget what, ExportFormat format, Workbench& bench);

struct ClassifyResult {
  Confluence combinatorial = Confluence::H;
  std::optional<Confluence> symplectic;  // only with cross-check at positions 1..10
  std::string canonical;
};

/// Throws InvalidTuple for malformed or invalid tuples, std::out_of_range for a bad position.
ClassifyResult classify(const std::string& tuple, int position, bool cross_check, Workbench& bench);

// Subcommand drivers: write output, return the process exit code.
int cmd_verify(const VerifyOptions& opts, const std::string& out_path, std::ostream& out, std::ostream& err);
int cmd_export(const std::string& what, const std::string& format, const std::string& out_path, std::ostream& out,
               std::ostream& err);
int cmd_classify(const std::string& tuple, int position, bool cross_check, std::ostream& out, std::ostream& err);

}  // namespace trigonal::cli

#endif
