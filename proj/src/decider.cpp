#include "porous/decider.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace porous {

using kernels::Word;

SearchState advance(const ResidueTable& table, const SearchState& state, std::uint8_t digit) {
  const std::uint64_t k = table.k;
  SearchState next;
  next.sum = state.sum + digit;
  next.m_residue = static_cast<std::uint32_t>((std::uint64_t{state.m_residue} * 10 + digit) % k);
  next.rev_residue = static_cast<std::uint32_t>(
      (state.rev_residue + std::uint64_t{digit} * table.power(state.length)) % k);
  next.length = state.length + 1;
  return next;
}

LevelSet::LevelSet(std::uint32_t k, std::uint64_t length)
    : k_(k), length_(length), words_(kernels::words_for(k)) {}

std::ptrdiff_t LevelSet::find(std::uint32_t row_id) const noexcept {
  const auto it = std::lower_bound(rows_.begin(), rows_.end(), row_id);
  if (it == rows_.end() || *it != row_id) return -1;
  return it - rows_.begin();
}

bool LevelSet::contains(std::uint32_t sum, std::uint32_t m_residue,
                        std::uint32_t rev_residue) const {
  if (sum > k_ || m_residue >= k_ || rev_residue >= k_) return false;
  const auto slot = find(row_id(sum, m_residue));
  if (slot < 0) return false;
  const auto bits = row_bits(static_cast<std::size_t>(slot));
  return (bits[rev_residue / 64] >> (rev_residue % 64)) & 1;
}

bool LevelSet::contains(const SearchState& s) const {
  return s.length == length_ && contains(s.sum, s.m_residue, s.rev_residue);
}

std::uint64_t LevelSet::count() const {
  std::uint64_t total = 0;
  for (Word w : bits_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

void LevelSet::append_row(std::uint32_t row_id, std::span<const Word> bits) {
  if (!rows_.empty() && rows_.back() >= row_id) {
    throw std::logic_error("LevelSet::append_row: row ids must ascend");
  }
  rows_.push_back(row_id);
  bits_.insert(bits_.end(), bits.begin(), bits.end());
}

void LevelSet::insert(std::uint32_t sum, std::uint32_t m_residue, std::uint32_t rev_residue) {
  const std::uint32_t id = row_id(sum, m_residue);
  auto slot = find(id);
  if (slot < 0) {
    const auto it = std::lower_bound(rows_.begin(), rows_.end(), id);
    const auto pos = static_cast<std::size_t>(it - rows_.begin());
    rows_.insert(it, id);
    bits_.insert(bits_.begin() + static_cast<std::ptrdiff_t>(pos * words_), words_, Word{0});
    slot = static_cast<std::ptrdiff_t>(pos);
  }
  bits_[static_cast<std::size_t>(slot) * words_ + rev_residue / 64] |= Word{1} << (rev_residue % 64);
}

namespace {

std::uint8_t min_digit(SearchMode mode, std::uint64_t length) {
  if (length == 0) return 1;
  return mode == SearchMode::ZeroFree ? 1 : 0;
}

std::uint64_t fixed_bytes_for(const ResidueTable& table) {
  const std::uint64_t rows = std::uint64_t{table.k + 1} * table.k;
  const std::uint64_t row_bytes = kernels::words_for(table.k) * sizeof(Word);
  return table.index_count() * rows * row_bytes  // visited
         + rows * row_bytes                      // next-level scratch
         + rows;                                 // touched flags
}

// coreach[t]: states of levels[t] from which some state of `target` (a set
// at the length of levels.back()) is reachable in exactly the remaining digits.
std::vector<LevelSet> coreach_sets(std::span<const LevelSet> levels, const LevelSet& target,
                                   const ResidueTable& table, SearchMode mode,
                                   const kernels::BitRowOps& ops) {
  const std::uint32_t k = table.k;
  const std::size_t words = kernels::words_for(k);
  const std::size_t depth = levels.size() - 1;
  std::vector<LevelSet> coreach;
  coreach.reserve(levels.size());
  for (std::size_t t = 0; t < depth; ++t) coreach.emplace_back(k, levels[t].length());
  coreach.push_back(target);

  std::vector<Word> moved(words);
  std::vector<Word> back(words);
  for (std::size_t t = depth; t-- > 0;) {
    const LevelSet& level = levels[t];
    const LevelSet& next = coreach[t + 1];
    const std::uint64_t power = table.power(level.length());
    const auto ids = level.row_ids();
    for (std::size_t slot = 0; slot < ids.size(); ++slot) {
      const std::uint32_t sum = ids[slot] / k;
      const std::uint32_t m = ids[slot] % k;
      std::fill(back.begin(), back.end(), Word{0});
      bool hit = false;
      for (std::uint32_t d = min_digit(mode, level.length()); d <= 9 && sum + d <= k; ++d) {
        const auto m2 = static_cast<std::uint32_t>((std::uint64_t{m} * 10 + d) % k);
        const auto next_slot = next.find(next.row_id(sum + d, m2));
        if (next_slot < 0) continue;
        const auto shift = static_cast<std::size_t>((d * power) % k);
        std::fill(moved.begin(), moved.end(), Word{0});
        ops.rotate_or(moved, level.row_bits(slot), k, shift);
        if (ops.intersect(moved, moved, next.row_bits(static_cast<std::size_t>(next_slot)))) {
          ops.rotate_or(back, moved, k, (k - shift) % k);
          hit = true;
        }
      }
      if (hit) coreach[t].append_row(ids[slot], back);
    }
  }
  return coreach;
}

// Smallest digit at each step that stays inside the coreach sets.
void greedy_walk(std::span<const LevelSet> coreach, SearchState& state, const ResidueTable& table,
                 SearchMode mode, std::vector<std::uint8_t>& digits) {
  for (std::size_t t = 0; t + 1 < coreach.size(); ++t) {
    bool found = false;
    for (std::uint8_t d = min_digit(mode, state.length); d <= 9; ++d) {
      const SearchState next = advance(table, state, d);
      if (next.sum > table.k) break;
      if (coreach[t + 1].contains(next)) {
        digits.push_back(d);
        state = next;
        found = true;
        break;
      }
    }
    if (!found) {
      throw InternalInconsistency("witness walk dead-ended at digit " +
                                  std::to_string(state.length) + " for k=" +
                                  std::to_string(table.k));
    }
  }
}

std::uint64_t total_bytes(std::span<const LevelSet> levels) {
  std::uint64_t bytes = 0;
  for (const auto& level : levels) bytes += level.bytes();
  return bytes;
}

class Engine {
 public:
  Engine(const ResidueTable& table, SearchMode mode, const DeciderLimits& limits)
      : table_(table),
        mode_(mode),
        limits_(limits),
        ops_(limits.isa ? kernels::ops(*limits.isa) : kernels::active_ops()),
        k_(table.k),
        words_(kernels::words_for(table.k)),
        rows_(std::size_t{table.k + 1} * table.k) {
    fixed_bytes_ = fixed_bytes_for(table_);
    if (fixed_bytes_ > limits_.max_bytes) {
      throw ResourceLimitError("decider for k=" + std::to_string(k_) + " needs " +
                                   std::to_string(fixed_bytes_) + " bytes, budget is " +
                                   std::to_string(limits_.max_bytes),
                               fixed_bytes_, limits_.max_bytes);
    }
    const std::uint64_t states =
        std::uint64_t{table_.index_count()} * (k_ + 1) * std::uint64_t{k_} * k_;
    if (limits_.max_states != 0 && states > limits_.max_states) {
      throw ResourceLimitError("decider for k=" + std::to_string(k_) + " has " +
                                   std::to_string(states) + " states, limit is " +
                                   std::to_string(limits_.max_states),
                               states, limits_.max_states);
    }
  }

  LevelSet origin() const {
    LevelSet start(k_, 0);
    start.insert(0, 0, 0);
    return start;
  }

  // Breadth-first search from `start`, stopping at the first accepting
  // level, at exhaustion, or once `max_length` digits are reached.
  // `reserved` bytes are held by the caller and count against the budget.
  SearchOutcome run(LevelSet start, bool keep_levels, std::uint64_t max_length,
                    std::uint64_t reserved = 0) const {
    if (fixed_bytes_ + reserved > limits_.max_bytes) {
      throw ResourceLimitError("witness recovery for k=" + std::to_string(k_) + " needs " +
                                   std::to_string(fixed_bytes_ + reserved) +
                                   " bytes, budget is " + std::to_string(limits_.max_bytes),
                               fixed_bytes_ + reserved, limits_.max_bytes);
    }
    const std::uint64_t room = limits_.max_bytes - fixed_bytes_ - reserved;
    const std::uint64_t first = start.length();

    SearchOutcome out;
    const std::size_t row_words = words_;
    std::vector<Word> visited(table_.index_count() * rows_ * row_words, 0);
    std::vector<Word> next(rows_ * row_words, 0);
    std::vector<std::uint8_t> touched_flag(rows_, 0);
    std::vector<std::uint32_t> touched;
    std::vector<Word> fresh_row(row_words);

    auto visited_row = [&](std::size_t index, std::uint32_t row) {
      return std::span<Word>(visited.data() + (index * rows_ + row) * row_words, row_words);
    };

    const std::size_t start_index = table_.index_at(first);
    for (std::size_t slot = 0; slot < start.row_ids().size(); ++slot) {
      const auto src = start.row_bits(slot);
      auto dst = visited_row(start_index, start.row_ids()[slot]);
      for (std::size_t w = 0; w < row_words; ++w) dst[w] |= src[w];
    }

    // Every level is kept while it fits; past that, only every stride-th
    // level from the start survives, the stride doubling as needed.
    std::uint64_t level_bytes = 0;
    auto keep = [&](const LevelSet& level) {
      if (!keep_levels || (level.length() - first) % out.checkpoint_stride != 0) return;
      out.levels.push_back(level);
      level_bytes += level.bytes();
      while (level_bytes > room && out.levels.size() > 1) {
        out.checkpoint_stride *= 2;
        std::erase_if(out.levels, [&](const LevelSet& l) {
          return (l.length() - first) % out.checkpoint_stride != 0;
        });
        level_bytes = total_bytes(out.levels);
      }
      out.peak_bytes = std::max(out.peak_bytes, fixed_bytes_ + reserved + level_bytes);
    };
    out.peak_bytes = fixed_bytes_ + reserved;

    LevelSet frontier = std::move(start);
    keep(frontier);
    std::uint64_t t = first;
    for (;;) {
      if (frontier.contains(k_, 0, 0)) {
        out.accepted = true;
        out.accept_length = t;
        break;
      }
      if (t >= max_length) break;

      const std::uint64_t power = table_.power(t);
      const std::uint8_t low = min_digit(mode_, t);
      const auto ids = frontier.row_ids();
      for (std::size_t slot = 0; slot < ids.size(); ++slot) {
        const std::uint32_t sum = ids[slot] / k_;
        const std::uint32_t m = ids[slot] % k_;
        const auto src = frontier.row_bits(slot);
        for (std::uint32_t d = low; d <= 9 && sum + d <= k_; ++d) {
          const auto m2 = static_cast<std::uint32_t>((std::uint64_t{m} * 10 + d) % k_);
          const auto shift = static_cast<std::size_t>((d * power) % k_);
          const std::uint32_t target = (sum + d) * k_ + m2;
          if (!touched_flag[target]) {
            touched_flag[target] = 1;
            touched.push_back(target);
          }
          ops_.rotate_or({next.data() + std::size_t{target} * row_words, row_words}, src, k_, shift);
        }
        ++out.rows_expanded;
      }

      std::sort(touched.begin(), touched.end());
      const std::size_t index = table_.index_at(t + 1);
      LevelSet fresh(k_, t + 1);
      for (std::uint32_t target : touched) {
        std::span<Word> row(next.data() + std::size_t{target} * row_words, row_words);
        if (ops_.absorb(fresh_row, row, visited_row(index, target))) {
          fresh.append_row(target, fresh_row);
        }
        std::fill(row.begin(), row.end(), Word{0});
        touched_flag[target] = 0;
      }
      touched.clear();
      if (fresh.empty()) break;

      frontier = std::move(fresh);
      ++t;
      keep(frontier);
    }
    out.levels_kept = keep_levels && out.checkpoint_stride == 1;
    return out;
  }

  // States of `from` that reach a state of `target` at length `end`.
  LevelSet coreach_from(LevelSet from, std::uint64_t end, const LevelSet& target,
                        std::uint64_t reserved) const {
    const std::uint64_t first = from.length();
    SearchOutcome out = run(std::move(from), true, end, reserved);
    if (out.levels_kept) {
      if (out.levels.back().length() != end) return LevelSet(k_, first);
      return coreach_sets(out.levels, target, table_, mode_, ops_).front();
    }
    require_progress(out, first, end);
    LevelSet reach = target;
    std::uint64_t stop = end;
    while (!out.levels.empty()) {
      LevelSet checkpoint = std::move(out.levels.back());
      out.levels.pop_back();
      const std::uint64_t length = checkpoint.length();
      reach = coreach_from(std::move(checkpoint), stop, reach,
                           reserved + total_bytes(out.levels) + reach.bytes());
      stop = length;
    }
    return reach;
  }

  // Appends the smallest digits leading from `state` to `target` at `end`,
  // given a search from `state` whose levels or checkpoints are in `out`.
  void walk(SearchOutcome out, SearchState& state, std::uint64_t end, const LevelSet& target,
            std::uint64_t reserved, std::vector<std::uint8_t>& digits) const {
    if (out.levels_kept) {
      if (out.levels.back().length() != end) {
        throw InternalInconsistency("witness walk for k=" + std::to_string(k_) +
                                    " ended before length " + std::to_string(end));
      }
      const auto coreach = coreach_sets(out.levels, target, table_, mode_, ops_);
      greedy_walk(coreach, state, table_, mode_, digits);
      return;
    }
    require_progress(out, state.length, end);
    // stops[i], targets[i]: end of segment i and the states there that complete.
    std::vector<std::uint64_t> stops{end};
    std::vector<LevelSet> targets{target};
    std::uint64_t target_bytes = target.bytes();
    while (out.levels.size() > 1) {
      LevelSet checkpoint = std::move(out.levels.back());
      out.levels.pop_back();
      const std::uint64_t length = checkpoint.length();
      const std::uint64_t held = reserved + total_bytes(out.levels) + target_bytes;
      targets.push_back(coreach_from(std::move(checkpoint), stops.back(), targets.back(), held));
      stops.push_back(length);
      target_bytes += targets.back().bytes();
    }
    out.levels.clear();
    while (!targets.empty()) {
      const LevelSet goal = std::move(targets.back());
      targets.pop_back();
      const std::uint64_t stop = stops.back();
      stops.pop_back();
      target_bytes -= goal.bytes();
      const std::uint64_t held = reserved + target_bytes + goal.bytes();
      LevelSet from(k_, state.length);
      from.insert(state.sum, state.m_residue, state.rev_residue);
      walk(run(from, true, stop, held), state, stop, goal, held, digits);
    }
  }

 private:
  void require_progress(const SearchOutcome& out, std::uint64_t from, std::uint64_t end) const {
    if (out.levels.size() < 2) {
      throw ResourceLimitError("budget cannot hold two frontier levels while recovering the witness "
                               "for k=" + std::to_string(k_) + " between lengths " +
                                   std::to_string(from) + " and " + std::to_string(end),
                               out.peak_bytes, limits_.max_bytes);
    }
  }

  const ResidueTable& table_;
  SearchMode mode_;
  DeciderLimits limits_;
  const kernels::BitRowOps& ops_;
  std::uint32_t k_;
  std::size_t words_;
  std::size_t rows_;
  std::uint64_t fixed_bytes_ = 0;
};

constexpr std::uint64_t kUnbounded = UINT64_MAX;

void require_searchable(std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (k % 10 == 0) throw std::invalid_argument("k must not be a multiple of 10");
}

}  // namespace

std::uint64_t search_fixed_bytes(std::uint32_t k) {
  require_searchable(k);
  return fixed_bytes_for(build_residue_table(k));
}

SearchOutcome explore(std::uint32_t k, SearchMode mode, const DeciderLimits& limits) {
  require_searchable(k);
  const ResidueTable table = build_residue_table(k);
  const Engine engine(table, mode, limits);
  return engine.run(engine.origin(), true, kUnbounded);
}

DigitString extract_witness(std::span<const LevelSet> levels, const ResidueTable& table,
                            SearchMode mode) {
  const std::uint32_t k = table.k;
  if (levels.empty() || !levels.back().contains(k, 0, 0)) {
    throw InternalInconsistency("extract_witness: final level has no accepting state");
  }
  if (levels.front().length() != 0) {
    throw InternalInconsistency("extract_witness: levels must start at the empty number");
  }
  LevelSet accept(k, levels.back().length());
  accept.insert(k, 0, 0);
  const auto coreach = coreach_sets(levels, accept, table, mode, kernels::active_ops());
  if (!coreach.front().contains(0, 0, 0)) {
    throw InternalInconsistency("extract_witness: start state cannot reach acceptance");
  }
  std::vector<std::uint8_t> digits;
  SearchState state;
  greedy_walk(coreach, state, table, mode, digits);
  return DigitString::from_digits(std::move(digits));
}

std::optional<DigitString> minimal_witness(std::uint32_t k, SearchMode mode,
                                           const DeciderLimits& limits) {
  require_searchable(k);
  const ResidueTable table = build_residue_table(k);
  const Engine engine(table, mode, limits);
  SearchOutcome outcome = engine.run(engine.origin(), true, kUnbounded);
  if (!outcome.accepted) return std::nullopt;
  const std::uint64_t length = outcome.accept_length;

  LevelSet accept(k, length);
  accept.insert(k, 0, 0);
  std::vector<std::uint8_t> digits;
  SearchState state;
  engine.walk(std::move(outcome), state, length, accept, 0, digits);
  DigitString witness = DigitString::from_digits(std::move(digits));
  const WitnessCheck check = validate_witness(k, witness, mode == SearchMode::ZeroFree);
  if (!check.valid() || witness.size() != length) {
    throw InternalInconsistency("decider produced an invalid witness " + witness.str() +
                                " for k=" + std::to_string(k));
  }
  return witness;
}

Classification decide(std::uint32_t k, SearchMode mode, const DeciderLimits& limits) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  Classification result{k, ExcludedMultipleOfTen{}};
  if (k % 10 == 0) return result;
  if (auto witness = minimal_witness(k, mode, limits)) {
    result.verdict = NonPorous{std::move(*witness), WitnessMethod::Decider};
  } else {
    result.verdict = Porous{ProofKind::Exhaustion};
  }
  return result;
}

std::string_view to_string(WitnessMethod method) noexcept {
  switch (method) {
    case WitnessMethod::Decider: return "decider";
    case WitnessMethod::Constructor: return "constructor";
    case WitnessMethod::BruteForce: return "brute_force";
  }
  return "none";
}

std::string_view to_string(SearchMode mode) noexcept {
  return mode == SearchMode::ZeroFree ? "zero_free" : "zeros_allowed";
}

}  // namespace porous
