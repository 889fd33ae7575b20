#ifndef HOMLEIB_CLI_HPP
#define HOMLEIB_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "homleib/document.hpp"
#include "homleib/enumerate.hpp"

namespace homleib {

/// Exit-code contract shared by all commands:
/// 0 success / verified, 1 mathematical check failed, 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// `homleib check --identity ...`; "all" covers multiplicative, left, right
/// and symmetric (hom-lie stays opt-in since most entries are not skew).
int cmd_check(const std::string& document_text, const std::string& identity, std::ostream& out);

struct SolveOptions {
  std::string kind;  // der | centroid | zder | gen
  unsigned long r = 0;
  std::optional<std::string> lambda, mu, gamma;  // exact scalar strings, gen only
  std::optional<int> parity;                     // graded documents
};
int cmd_solve(const std::string& document_text, const SolveOptions& opt, std::ostream& out);

struct TablesOptions {
  std::optional<std::string> id;  // all entries when absent
  unsigned long rmax = 3;
  std::vector<std::string> params;  // name=value overrides
  bool json = false;
};
int cmd_tables(const TablesOptions& opt, std::ostream& out);

int cmd_twist(const std::string& document_text, const std::string& beta_json, std::ostream& out);
int cmd_tensor(const std::string& document_text, std::ostream& out);

struct EnumerateOptions {
  std::int64_t p = 3;
  std::string sidedness = "left";
  bool classify = false;
  bool require_multiplicative = true;
};
int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out);

/// Emit a catalog entry as a JSON algebra document (pipes into `check`).
int cmd_export(const std::string& id, const std::string& variant,
               const std::vector<std::string>& params, std::ostream& out);

}  // namespace homleib

#endif
