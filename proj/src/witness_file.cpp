#include "porous/witness_file.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "porous/digits.hpp"

namespace porous {

std::string_view to_string(RecordStatus status) noexcept {
  switch (status) {
    case RecordStatus::Excluded: return "excluded";
    case RecordStatus::Porous: return "porous";
    case RecordStatus::NonPorous: return "non_porous";
    case RecordStatus::Undecided: return "undecided";
  }
  return "undecided";
}

std::string_view to_string(RecordMethod method) noexcept {
  switch (method) {
    case RecordMethod::Decider: return "decider";
    case RecordMethod::Constructor: return "constructor";
    case RecordMethod::BruteForce: return "brute_force";
    case RecordMethod::None: return "none";
  }
  return "none";
}

std::optional<RecordStatus> parse_status(std::string_view text) noexcept {
  for (auto s : {RecordStatus::Excluded, RecordStatus::Porous, RecordStatus::NonPorous,
                 RecordStatus::Undecided}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

std::optional<RecordMethod> parse_method(std::string_view text) noexcept {
  for (auto m : {RecordMethod::Decider, RecordMethod::Constructor, RecordMethod::BruteForce,
                 RecordMethod::None}) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

std::string format_record(const WitnessRecord& record) {
  std::string line = std::to_string(record.k);
  line += ',';
  line += to_string(record.status);
  line += ',';
  line += to_string(record.method);
  line += ',';
  line += record.witness;
  return line;
}

std::string render_witness_file(const std::vector<WitnessRecord>& records) {
  std::string out(kWitnessHeader);
  out += '\n';
  for (const auto& r : records) {
    out += format_record(r);
    out += '\n';
  }
  return out;
}

void write_witness_file(const std::filesystem::path& path, const std::vector<WitnessRecord>& records) {
  auto tmp = path;
  tmp += ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (out) out << render_witness_file(records);
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw std::runtime_error("cannot write witness file " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot move witness file into place at " + path.string());
  }
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace

std::vector<ParsedRecord> parse_witness_file(std::istream& in) {
  std::vector<ParsedRecord> out;
  std::string line;
  std::size_t number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header_seen) {
      if (line != kWitnessHeader) throw WitnessFileParseError("expected header '" + std::string(kWitnessHeader) + "'", number);
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != 4) {
      throw WitnessFileParseError("expected 4 fields, found " + std::to_string(fields.size()), number);
    }
    WitnessRecord record;
    const auto [end, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), record.k);
    if (ec != std::errc{} || end != fields[0].data() + fields[0].size() || record.k == 0) {
      throw WitnessFileParseError("k is not a positive integer", number);
    }
    const auto status = parse_status(fields[1]);
    if (!status) throw WitnessFileParseError("unknown status '" + std::string(fields[1]) + "'", number);
    const auto method = parse_method(fields[2]);
    if (!method) throw WitnessFileParseError("unknown method '" + std::string(fields[2]) + "'", number);
    record.status = *status;
    record.method = *method;
    record.witness = std::string(fields[3]);
    out.push_back({number, std::move(record)});
  }
  return out;
}

VerificationReport verify_witness_records(const std::vector<ParsedRecord>& records) {
  VerificationReport report;
  std::set<std::uint32_t> seen;
  for (const auto& [line, record] : records) {
    RowVerdict row{line, record.k, false, {}};
    auto fail = [&](std::string reason) { row.failures.push_back(std::move(reason)); };
    if (!seen.insert(record.k).second) fail("duplicate_k");
    const bool multiple_of_ten = record.k % 10 == 0;
    switch (record.status) {
      case RecordStatus::Excluded:
        if (!multiple_of_ten) fail("excluded_not_multiple_of_10");
        if (!record.witness.empty()) fail("unexpected_witness");
        if (record.method != RecordMethod::None) fail("unexpected_method");
        break;
      case RecordStatus::Porous:
      case RecordStatus::Undecided:
        if (multiple_of_ten) fail("multiple_of_10_not_excluded");
        if (!record.witness.empty()) fail("unexpected_witness");
        if (record.method != RecordMethod::None) fail("unexpected_method");
        break;
      case RecordStatus::NonPorous: {
        if (multiple_of_ten) fail("multiple_of_10_not_excluded");
        if (record.method == RecordMethod::None) fail("missing_method");
        try {
          const auto m = DigitString::parse(record.witness);
          const auto check = validate_witness(record.k, m, true);
          if (!check.divides_m) fail("k_does_not_divide_m");
          if (!check.divides_rev) fail("k_does_not_divide_rev");
          if (!check.digit_sum_equals_k) fail("digit_sum_mismatch");
          if (!check.zero_free) fail("zero_free_violation");
        } catch (const ParseError&) {
          fail("malformed_witness");
        }
        break;
      }
    }
    row.passed = row.failures.empty();
    if (row.passed) ++report.passed;
    report.rows.push_back(std::move(row));
  }
  return report;
}

VerificationReport verify_witness_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return verify_witness_records(parse_witness_file(in));
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json failed = nlohmann::json::array();
  for (const auto& row : report.rows) {
    if (!row.passed) failed.push_back({{"line", row.line}, {"k", row.k}, {"failures", row.failures}});
  }
  return {{"rows", report.rows.size()},
          {"passed", report.passed},
          {"failed", std::move(failed)},
          {"ok", report.ok()}};
}

}  // namespace porous
