#pragma once

// CSV witness file: header `k,status,method,witness`, one row per k.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace porous {

enum class RecordStatus { Excluded, Porous, NonPorous, Undecided };
enum class RecordMethod { Decider, Constructor, BruteForce, None };

struct WitnessRecord {
  std::uint32_t k = 0;
  RecordStatus status = RecordStatus::Undecided;
  RecordMethod method = RecordMethod::None;
  std::string witness;
  /// Set when the witness passed validate_witness at write time. Not serialized.
  bool checked = false;

  friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

inline constexpr std::string_view kWitnessHeader = "k,status,method,witness";

std::string_view to_string(RecordStatus status) noexcept;
std::string_view to_string(RecordMethod method) noexcept;
std::optional<RecordStatus> parse_status(std::string_view text) noexcept;
std::optional<RecordMethod> parse_method(std::string_view text) noexcept;

std::string format_record(const WitnessRecord& record);
std::string render_witness_file(const std::vector<WitnessRecord>& records);

/// Writes through a temporary file and renames it into place; on failure the
/// partial file is removed and std::runtime_error is thrown.
void write_witness_file(const std::filesystem::path& path, const std::vector<WitnessRecord>& records);

class WitnessFileParseError : public std::runtime_error {
 public:
  WitnessFileParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct ParsedRecord {
  std::size_t line = 0;
  WitnessRecord record;
};

/// An empty stream is a valid file with no rows.
std::vector<ParsedRecord> parse_witness_file(std::istream& in);

struct RowVerdict {
  std::size_t line = 0;
  std::uint32_t k = 0;
  bool passed = false;
  std::vector<std::string> failures;  // e.g. "zero_free_violation"
};

struct VerificationReport {
  std::vector<RowVerdict> rows;
  std::size_t passed = 0;
  bool ok() const noexcept { return passed == rows.size(); }
};

/// Re-checks every row using only the digit-level predicates.
VerificationReport verify_witness_records(const std::vector<ParsedRecord>& records);
VerificationReport verify_witness_file(const std::filesystem::path& path);

nlohmann::json to_json(const VerificationReport& report);

}  // namespace porous
