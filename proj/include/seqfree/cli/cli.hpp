#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace seqfree::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // verify not monotone, zagier mismatch
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNonConvergent = 3;
inline constexpr int kExitReconstruction = 4;

enum class Format { csv, json };

struct RunConfig {
  std::string subcommand;
  int k = 2;
  int order = 20;
  int N = 1;
  // Decimal strings, parsed exactly and converted once at the target precision.
  std::vector<std::string> s_grid;
  // Subcommand default (256, or 512 for zagier) when unset.
  std::optional<long> precision_bits;
  std::string out;  // empty: standard output
  Format format = Format::csv;
  std::string which = "gk";       // coeffs: gk, Gk, chi; wright: W, phi
  std::string route = "andrews";  // coeffs gk: andrews, oracle
  int m_max = 5;                  // zagier, beta
  int L = 3;                      // wright expansion terms
  std::vector<std::string> w_grid;  // wright W: w values; phi: |z| values
  std::string rho = "3/4";
  std::string beta = "1";
  std::string arg = "0";  // phi: z = |z| e^{i pi arg}
  bool parallel = true;

  long precision_or(long fallback) const { return precision_bits.value_or(fallback); }
};

/// Each command writes its table to `out` and returns an exit code.
/// Library errors propagate; run() maps them to exit codes.
int cmd_coeffs(const RunConfig& rc, std::ostream& out);
int cmd_verify(const RunConfig& rc, std::ostream& out);
int cmd_zagier(const RunConfig& rc, std::ostream& out);
int cmd_beta(const RunConfig& rc, std::ostream& out);
int cmd_wright(const RunConfig& rc, std::ostream& out);
int cmd_plotdata(const RunConfig& rc, std::ostream& out);

/// Dispatches on rc.subcommand, honours rc.out, and maps errors to exit codes.
int run(const RunConfig& rc, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

std::vector<std::string> split_list(const std::string& text);

}  // namespace seqfree::cli
