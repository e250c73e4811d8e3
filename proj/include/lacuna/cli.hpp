#pragma once

// Command-line surface of the lacuna tool.
//
//   lacuna stirling --kind 1|2 [--mod P] N K
//   lacuna adelberg poly --family A|B --u U
//   lacuna adelberg eval --family A|B --u U [--x X] --y Y --m M
//   lacuna table 1|2
//   lacuna verify cong1|cong1n|cong2|cong3|identity33|cor34 <range flags>
//   lacuna verify classical --kind glaisher|fleck|wan|suntauraso <range flags>
//   lacuna verify rewrite --form 1|2 <range flags>
//
// Global flags: --format tsv|json, --jobs N, --strict. Range flags take
// "a..b" (inclusive) or a single integer.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lacuna/congruence.hpp"

namespace lacuna::cli {

enum class OutputFormat { tsv, json };

enum class SweepTarget { cong1, cong1n, cong2, cong3, identity33, cor34, classical, rewrite };

struct IntRange {
  std::int64_t lo;
  std::int64_t hi;
};

/// Parses "a..b" or "a". Throws std::invalid_argument on malformed input or
/// an empty range.
IntRange parse_range(const std::string& text);

struct SweepSpec {
  SweepTarget target = SweepTarget::cong1;
  std::map<std::string, IntRange> ranges;
  ClassicalKind classical_kind = ClassicalKind::glaisher;
  RewriteForm rewrite_form = RewriteForm::fleck_like;
  OutputFormat format = OutputFormat::tsv;
  bool strict = false;
  unsigned jobs = 1;
};

/// A sweep row: either a report or the error raised while computing it.
struct SweepRow {
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::optional<CongruenceReport> report;
  std::string error;

  bool ok() const { return report && report->holds; }
};

/// Parameter names a target reads, in output order.
std::vector<std::string> sweep_parameters(const SweepSpec& spec);

/// Evaluates every admissible parameter tuple in canonical (lexicographic)
/// order. Rows are identical for any jobs setting. Throws
/// std::invalid_argument for a missing range, or, in strict mode, a
/// composite value in a prime-valued range.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

void write_rows(const SweepSpec& spec, const std::vector<SweepRow>& rows, std::ostream& out);

/// Table 1 (B_0..B_4) or table 2 (A_0..A_3): "u<TAB>polynomial" lines.
void emit_tables(int which, std::ostream& out);

/// Entry point. Returns 0 when every verification holds, 1 when any fails or
/// a computation raises, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lacuna::cli
