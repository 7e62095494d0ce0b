#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bott/one_twist.hpp"
#include "bott/scalar.hpp"

namespace bott {

enum class OutputFormat { Json, Csv, Text };
std::optional<OutputFormat> parse_output_format(std::string_view text);

struct RunConfig {
  CoeffRing coeff_ring = CoeffRing::IntegerZ;
  long coeff_bound = 2;
  /// Largest tower the certified oracle accepts.
  std::size_t n_max = 4;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::Json;
  bool certified = false;
};

/// Exit codes: 0 affirmative, 1 negative verdict, 2 input error,
/// 3 budget exhaustion or oracle disagreement.
struct CommandResult {
  int exit_code = 0;
  std::string output;
  std::string error;
};

/// Each command takes the JSON text of its input file(s).
CommandResult cmd_twist(std::string_view matrix_json, const RunConfig& config);
CommandResult cmd_equiv(std::string_view vector_a_json, std::string_view vector_b_json, const RunConfig& config);
/// Enumerates [-bound, bound]^{n-1} unless a corpus (JSON array of integer
/// vectors) is supplied.
CommandResult cmd_classify(std::size_t n, long bound, std::optional<std::string_view> corpus_json,
                           const RunConfig& config);
CommandResult cmd_recognize(std::string_view matrix_json, const RunConfig& config);
CommandResult cmd_selftest(const RunConfig& config);

/// Shared by cmd_classify and the golden-table generator so that both
/// emit byte-identical tables.
std::string render_classification(const std::vector<EquivalenceClassReport>& classes, std::size_t n,
                                  OutputFormat format);

/// Largest corpus cmd_classify will enumerate.
inline constexpr std::size_t kClassifyCorpusLimit = 20000;

}  // namespace bott
