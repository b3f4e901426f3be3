#include "porous/commands.hpp"

#include <json.hpp>

#include "porous/certificates.hpp"
#include "porous/constructor.hpp"
#include "porous/counting.hpp"
#include "porous/witness_file.hpp"

namespace porous {
namespace {

using nlohmann::json;

CommandResult emit(const json& body, int code = kExitOk) { return {code, body.dump() + "\n", ""}; }

CommandResult failure(int code, const std::string& message) { return {code, "", message + "\n"}; }

CommandResult usage_if_zero(std::uint32_t k) {
  return k == 0 ? failure(kExitUsage, "k must be a positive integer") : CommandResult{};
}

}  // namespace

CommandResult cmd_decide(std::uint32_t k, const DeciderLimits& limits) {
  if (k == 0) return usage_if_zero(k);
  if (k % 10 == 0) return emit({{"k", k}, {"verdict", "excluded"}});
  try {
    const Classification c = decide(k, SearchMode::ZeroFree, limits);
    if (c.porous()) return emit({{"k", k}, {"verdict", "porous"}, {"proof", "exhaustion"}});
    const auto* found = c.witness();
    return emit({{"k", k},
                 {"verdict", "non_porous"},
                 {"witness", found->witness.str()},
                 {"method", to_string(found->method)}});
  } catch (const ResourceLimitError& e) {
    if (auto witness = construct_witness(k)) {
      return emit({{"k", k},
                   {"verdict", "non_porous"},
                   {"witness", witness->str()},
                   {"method", to_string(WitnessMethod::Constructor)}});
    }
    return failure(kExitResourceLimit, e.what());
  }
}

CommandResult cmd_witness(std::uint32_t k, SearchMode mode, const DeciderLimits& limits) {
  if (k == 0) return usage_if_zero(k);
  json body{{"k", k}, {"mode", to_string(mode)}};
  if (k % 10 == 0) {
    body["verdict"] = "excluded";
    body["witness"] = nullptr;
    return emit(body);
  }
  try {
    const auto witness = minimal_witness(k, mode, limits);
    body["witness"] = witness ? json(witness->str()) : json(nullptr);
    return emit(body);
  } catch (const ResourceLimitError& e) {
    return failure(kExitResourceLimit, e.what());
  }
}

CommandResult cmd_certify(std::uint32_t k) {
  if (k == 0) return usage_if_zero(k);
  try {
    const auto report = certify(k);
    if (!report) return emit({{"k", k}, {"certificate", nullptr}});
    return emit(to_json(*report));
  } catch (const CertificateFailure& e) {
    return failure(kExitVerificationFailed, std::string("certificate failure: ") + e.what());
  }
}

CommandResult cmd_count(std::uint32_t k) {
  if (k == 0) return usage_if_zero(k);
  const CostEstimate estimate = estimate_brute_force_cost(k);
  return emit({{"k", k}, {"count", estimate.candidates.str()}, {"scientific", estimate.scientific}});
}

CommandResult cmd_scan(const ScanConfig& config,
                       const std::optional<std::filesystem::path>& out_path) {
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    return failure(kExitUsage, e.what());
  }
  const auto rows = run_scan(config);
  if (!out_path) return {kExitOk, render_witness_file(rows), ""};
  try {
    write_witness_file(*out_path, rows);
  } catch (const std::runtime_error& e) {
    return failure(kExitUsage, e.what());
  }
  json porous = json::array();
  json undecided = json::array();
  std::size_t non_porous = 0;
  for (const auto& r : rows) {
    if (r.status == RecordStatus::Porous) porous.push_back(r.k);
    if (r.status == RecordStatus::Undecided) undecided.push_back(r.k);
    if (r.status == RecordStatus::NonPorous) ++non_porous;
  }
  return emit({{"lo", config.lo},
               {"hi", config.hi},
               {"rows", rows.size()},
               {"non_porous", non_porous},
               {"porous", std::move(porous)},
               {"undecided", std::move(undecided)},
               {"out", out_path->string()}});
}

CommandResult cmd_verify(const std::filesystem::path& path) {
  try {
    const VerificationReport report = verify_witness_file(path);
    return emit(to_json(report), report.ok() ? kExitOk : kExitVerificationFailed);
  } catch (const WitnessFileParseError& e) {
    return failure(kExitVerificationFailed, std::string("parse error: ") + e.what());
  } catch (const std::runtime_error& e) {
    return failure(kExitUsage, e.what());
  }
}

}  // namespace porous
