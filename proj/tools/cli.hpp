#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "resolvent/bound_report.hpp"
#include "resolvent/linalg.hpp"

namespace resolvent::cli {

enum class OutputFormat { json, csv, human };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Parses `a+bi`, `a-bi`, `a`, `bi`, `i`, `-i` (decimal point, optional
/// exponent). Throws std::invalid_argument on malformed input.
Complex parse_complex(std::string_view text);

/// Comma-separated complex literals.
std::vector<Complex> parse_complex_list(std::string_view text);

/// %.15g
std::string format_number(double v);

/// Header `n,r,exact,asymptotic,ratio,lower,upper,davies_simon` followed by one
/// row per report, 15 significant digits.
void write_table_csv(std::span<const BoundReport> rows, std::ostream& out);
void write_table_json(std::span<const BoundReport> rows, std::ostream& out);
void write_table_human(std::span<const BoundReport> rows, std::ostream& out);

/// Reads back what write_table_csv emits. Throws std::runtime_error on a
/// malformed header or row.
std::vector<BoundReport> read_table_csv(std::istream& in);

}  // namespace resolvent::cli
