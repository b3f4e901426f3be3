#pragma once

// Machine checks of the five analytic porousness proofs (k = 11, 37, 74,
// 101, 121).
//
// Each certifier recomputes the residue tables its argument relies on from
// modular exponentiation, compares them with the published constants, and
// then enumerates every tuple of position-class digit sums (A, B[, C])
// compatible with the divisibility congruences of m and rev(m). The proof
// holds when every admissible tuple leaves some position class empty,
// which forces a zero digit once the number is long enough to populate
// every class.
//
// Certifiers take their coefficients as parameters so that negative
// controls can rerun them with a corrupted value and observe the failure.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace porous {

struct ClassSums {
  std::vector<std::int64_t> values;

  friend bool operator==(const ClassSums&, const ClassSums&) = default;
};

struct SolutionSet {
  std::string length_class;  // e.g. "s mod 3 = 1"
  std::uint64_t tuples_scanned = 0;
  std::vector<ClassSums> solutions;
};

struct TableCheck {
  std::string name;
  std::vector<std::int64_t> published;
  std::vector<std::int64_t> recomputed;
  bool matched = false;
};

struct CertificateReport {
  std::uint32_t k = 0;
  bool tables_verified = false;
  std::vector<TableCheck> tables;
  std::vector<SolutionSet> solution_sets;
  bool forced_zero_conclusion = false;
  std::uint32_t min_length = 0;
  std::optional<std::uint32_t> min_zero_count;
  std::vector<std::string> notes;
};

class CertificateFailure : public std::runtime_error {
 public:
  CertificateFailure(const std::string& what, std::optional<ClassSums> violating = std::nullopt)
      : std::runtime_error(what), violating_(std::move(violating)) {}
  const std::optional<ClassSums>& violating() const noexcept { return violating_; }

 private:
  std::optional<ClassSums> violating_;
};

/// Alternating-sum argument: A = even positions, B = odd positions.
struct ParityParams {
  std::uint32_t digit_sum = 11;
  std::uint32_t modulus = 11;
};

/// Three position classes mod 3 with weights (A, B, C).
struct ThreeClassParams {
  std::uint32_t digit_sum;
  std::uint32_t modulus;
  std::array<std::int64_t, 3> weights;
};

constexpr ThreeClassParams kParams37{37, 37, {1, 10, 26}};
constexpr ThreeClassParams kParams74{74, 37, {19, 5, 13}};

/// Alternating two-digit blocks: signed weights of positions 0..3 mod 4 are
/// (a, b, -a, -b).
struct TwoBlockParams {
  std::uint32_t digit_sum = 101;
  std::uint32_t modulus = 101;
  std::int64_t weight_a = 1;
  std::int64_t weight_b = 10;
};

enum class BetaSignReading { Alternating, AlwaysOne };

struct Beta121Params {
  /// How the term written 1^(i+1) in 10^i = a*121 + 11*b - 1^(i+1) is read.
  BetaSignReading sign = BetaSignReading::Alternating;
};

CertificateReport certify_11(const ParityParams& params = {});
CertificateReport certify_37(const ThreeClassParams& params = kParams37);
CertificateReport certify_74(const ThreeClassParams& params = kParams74);
CertificateReport certify_101(const TwoBlockParams& params = {});
CertificateReport certify_121(const Beta121Params& params = {});

/// Dispatch for the five certified k; nullopt for any other k.
std::optional<CertificateReport> certify(std::uint32_t k);

constexpr std::array<std::uint32_t, 5> kCertifiedPorous{11, 37, 74, 101, 121};

/// The published 22-entry beta sequence for k = 121.
const std::array<std::int64_t, 22>& published_beta_121();

/// beta_i recomputed from 10^i mod 121 for i in [0, count); throws
/// CertificateFailure when 10^i + sign term is not a multiple of 11.
std::vector<std::int64_t> recompute_beta_121(std::size_t count,
                                             BetaSignReading sign = BetaSignReading::Alternating);

/// Remainders (r_A, r_B) mod 11 shared by beta_i +/- beta_(s-1-i) over even
/// and odd i respectively (sum for odd s, difference for even s).
std::pair<std::int64_t, std::int64_t> beta_row_remainders(std::uint32_t s,
                                                          const std::vector<std::int64_t>& beta);

nlohmann::json to_json(const CertificateReport& report);

}  // namespace porous
