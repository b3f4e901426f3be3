#pragma once

// Exhaustive reachability decider for porousness.
//
// A number is built one digit at a time, most significant first. After t
// digits the search tracks (digit sum, m mod k, rev(m) mod k); the power
// index 10^t mod k that the next digit contributes to rev(m) is implied by
// t through the ResidueTable. States are packed as bit rows over the
// rev-residue, so a digit append is a cyclic rotate-OR of a whole row.
//
// The search runs breadth-first over digit count and only expands states
// the first time they are reached at a given power index. The first
// accepting state found therefore lies on a shortest witness, and the
// lexicographically smallest digit path among shortest witnesses is the
// numerically smallest witness.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "porous/digits.hpp"
#include "porous/kernels.hpp"
#include "porous/residue_table.hpp"

namespace porous {

enum class SearchMode { ZeroFree, ZerosAllowed };

struct DeciderLimits {
  std::uint64_t max_bytes = std::uint64_t{2} << 30;
  /// Cap on the full state space size (power indices x sums x residues^2); 0 disables it.
  std::uint64_t max_states = 0;
  /// Kernel override; defaults to the best ISA of the running CPU.
  std::optional<kernels::Isa> isa;
};

class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error(what), required_(required), budget_(budget) {}
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// Raised when an internal cross-check fails; always a bug, never masked.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SearchState {
  std::uint32_t sum = 0;
  std::uint32_t m_residue = 0;
  std::uint32_t rev_residue = 0;
  std::uint64_t length = 0;

  friend bool operator==(const SearchState&, const SearchState&) = default;
};

/// Appends one digit: m -> 10m + d, rev -> rev + d * 10^length.
SearchState advance(const ResidueTable& table, const SearchState& state, std::uint8_t digit);

/// States first reached with exactly `length` digits. Sparse: only rows
/// (sum, m residue) holding at least one rev-residue bit are stored.
class LevelSet {
 public:
  LevelSet(std::uint32_t k, std::uint64_t length);

  std::uint32_t k() const noexcept { return k_; }
  std::uint64_t length() const noexcept { return length_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool contains(const SearchState& s) const;
  bool contains(std::uint32_t sum, std::uint32_t m_residue, std::uint32_t rev_residue) const;
  std::uint64_t count() const;
  bool empty() const noexcept { return rows_.empty(); }
  std::size_t bytes() const noexcept {
    return rows_.size() * sizeof(std::uint32_t) + bits_.size() * sizeof(kernels::Word);
  }

  std::span<const std::uint32_t> row_ids() const noexcept { return rows_; }
  std::span<const kernels::Word> row_bits(std::size_t slot) const noexcept {
    return {bits_.data() + slot * words_, words_};
  }
  /// Slot index of a row id, or -1.
  std::ptrdiff_t find(std::uint32_t row_id) const noexcept;

  std::uint32_t row_id(std::uint32_t sum, std::uint32_t m_residue) const noexcept {
    return sum * k_ + m_residue;
  }

  /// Row ids must be appended in ascending order.
  void append_row(std::uint32_t row_id, std::span<const kernels::Word> bits);
  void insert(std::uint32_t sum, std::uint32_t m_residue, std::uint32_t rev_residue);

 private:
  std::uint32_t k_;
  std::uint64_t length_;
  std::size_t words_;
  std::vector<std::uint32_t> rows_;
  std::vector<kernels::Word> bits_;
};

struct SearchOutcome {
  bool accepted = false;
  std::uint64_t accept_length = 0;
  /// Frontier levels 0..accept_length when they fit in the memory budget
  /// (levels_kept). Otherwise only every checkpoint_stride-th level from the
  /// start, which is enough to recover the witness segment by segment.
  std::vector<LevelSet> levels;
  bool levels_kept = false;
  std::uint64_t checkpoint_stride = 1;
  std::uint64_t rows_expanded = 0;
  std::uint64_t peak_bytes = 0;
};

/// Bytes the search needs before storing any frontier levels.
std::uint64_t search_fixed_bytes(std::uint32_t k);

/// Runs the reachability search for k from the empty number.
SearchOutcome explore(std::uint32_t k, SearchMode mode, const DeciderLimits& limits = {});

/// Reconstructs the numerically smallest witness from the frontier levels
/// of a successful search (levels[0] is the start, levels.back() holds the
/// accepting state).
DigitString extract_witness(std::span<const LevelSet> levels, const ResidueTable& table,
                            SearchMode mode);

enum class ProofKind { Exhaustion, Certificate };
enum class WitnessMethod { Decider, Constructor, BruteForce };

struct ExcludedMultipleOfTen {};
struct Porous {
  ProofKind proof = ProofKind::Exhaustion;
};
struct NonPorous {
  DigitString witness;
  WitnessMethod method = WitnessMethod::Decider;
};

struct Classification {
  std::uint32_t k = 0;
  std::variant<ExcludedMultipleOfTen, Porous, NonPorous> verdict;

  bool excluded() const noexcept { return std::holds_alternative<ExcludedMultipleOfTen>(verdict); }
  bool porous() const noexcept { return std::holds_alternative<Porous>(verdict); }
  bool non_porous() const noexcept { return std::holds_alternative<NonPorous>(verdict); }
  const NonPorous* witness() const noexcept { return std::get_if<NonPorous>(&verdict); }
};

/// Porousness verdicts are only meaningful in ZeroFree mode; ZerosAllowed
/// reports whether any witness with zeros exists.
Classification decide(std::uint32_t k, SearchMode mode = SearchMode::ZeroFree,
                      const DeciderLimits& limits = {});

/// Numerically smallest witness, or nullopt when none exists in `mode`.
/// Requires k not a multiple of 10.
std::optional<DigitString> minimal_witness(std::uint32_t k, SearchMode mode,
                                           const DeciderLimits& limits = {});

std::string_view to_string(WitnessMethod method) noexcept;
std::string_view to_string(SearchMode mode) noexcept;

}  // namespace porous
