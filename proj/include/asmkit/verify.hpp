#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "asmkit/group.hpp"

namespace asmkit {

/// @brief Parameters of a check; fields a check does not use stay empty.
/// R and i are one-based variable positions; eps has one sign per variable.
struct CheckParams {
  std::optional<int> k;
  std::optional<int> n;
  std::optional<int> R;
  std::optional<int> i;
  std::vector<int> a;
  std::vector<int> eps;

  /// @brief "k=2 n=3 a=2,1 R=1 i=2 eps=+,-" with absent fields omitted.
  std::string to_string() const;
  friend bool operator==(const CheckParams&, const CheckParams&) = default;
};

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  CheckParams params;
  CheckStatus status = CheckStatus::Skipped;
  /// @brief Value summary on pass, counterexample on failure, reason when skipped.
  std::string witness;
  std::chrono::duration<double, std::milli> elapsed{0};
};

struct VerifyOptions {
  /// @brief Include the k = 3 grids of the partial-fraction residue checks.
  bool heavy = false;
  /// @brief Mutation hook: checks that build Phi_k themselves add x1 to it.
  bool corrupt_phi = false;
  /// @brief Worker threads for run_all; results are merged in grid order.
  unsigned threads = 1;
};

struct CheckInfo {
  std::string id;
  /// @brief Names of the parameters the check reads, e.g. {"k", "n"}.
  std::vector<std::string> params;
  std::string summary;
};

/// @brief Every registered check, in run order.
const std::vector<CheckInfo>& registered_checks();
const CheckInfo& check_info(const std::string& id);

/// @brief Runs one check. Throws RegistryError for an unknown id and
/// UsageError for missing or out-of-range parameters.
CheckResult run_check(const std::string& id, const CheckParams& params, const VerifyOptions& options = {});

/// @brief Parameter grid of a check within the bounds.
std::vector<CheckParams> default_grid(const std::string& id, int max_k, int max_n, bool heavy);

/// @brief Shell-style pattern match ("*", "?", "[...]") on check ids.
bool matches_filter(const std::string& id, const std::string& filter);

/// @brief Runs every check whose id matches filter over its default grid.
std::vector<CheckResult> run_all(int max_k, int max_n, const std::string& filter = "*",
                                 const VerifyOptions& options = {});

/// @brief The fixed W(B_3) elements used for the k = 3 residue checks.
std::vector<SignedPermutation> fixed_wb3_elements();

/// @brief Aligned table with a summary line; the elapsed column only when timings is set.
std::string format_human(const std::vector<CheckResult>& results, bool timings = false);
/// @brief One JSON object per line: id, params, status, witness, elapsed_ms.
std::string format_record(const CheckResult& r);

}  // namespace asmkit
