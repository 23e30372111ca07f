#include "lightsout/report.hpp"

#include <stdexcept>

namespace lightsout {

Json make_report(const std::string& command, Json inputs, Json result,
                 std::optional<std::uint64_t> seed, std::optional<double> elapsed_ms) {
  Json report;
  report["schema"] = kSchemaVersion;
  report["command"] = command;
  report["inputs"] = std::move(inputs);
  report["result"] = std::move(result);
  Json provenance;
  provenance["version"] = kVersion;
  provenance["seed"] = seed ? Json(*seed) : Json(nullptr);
  if (elapsed_ms) provenance["elapsed_ms"] = *elapsed_ms;
  report["provenance"] = std::move(provenance);
  return report;
}

Json to_json(const ToggleCoset& coset) {
  Json j;
  j["modulus"] = coset.modulus.value();
  j["empty"] = coset.empty;
  if (!coset.empty) {
    j["base"] = coset.base;
    j["generator"] = coset.generator;
  }
  j["text"] = coset.to_string();
  return j;
}

ToggleCoset toggle_coset_from_json(const Json& j) {
  try {
    const Modulus m(j.at("modulus").get<std::int64_t>());
    if (j.at("empty").get<bool>()) return ToggleCoset::none(m);
    return ToggleCoset::make(m, j.at("base").get<Residue>(), j.at("generator").get<Residue>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad toggle coset: ") + e.what());
  }
}

namespace {

Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<std::size_t> read_optional_size(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::size_t>();
}

}  // namespace

Json to_json(const ExtremalReport& report, bool timing) {
  Json j;
  j["n"] = report.n;
  j["ell"] = report.ell;
  j["max_size"] = optional_size(report.max_size);
  j["extremal_graphs"] = report.extremal_graphs;
  j["labelled_count"] = report.labelled_count;
  Json method;
  method["mode"] = report.search_method;
  method["complement_cap"] = optional_size(report.complement_cap);
  method["pruned"] = report.pruned;
  j["search_method"] = std::move(method);
  Json conj;
  conj["size"] = report.conjectured.size;
  conj["rule"] = report.conjectured.rule;
  conj["k"] = report.conjectured.k;
  conj["status"] = to_string(report.conjectured.status);
  j["conjectured"] = std::move(conj);
  j["agree"] = report.agree;
  j["candidates"] = report.candidates;
  j["skipped_by_degree"] = report.skipped_by_degree;
  if (timing) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

ExtremalReport extremal_report_from_json(const Json& j) {
  try {
    ExtremalReport r;
    r.n = j.at("n").get<std::size_t>();
    r.ell = j.at("ell").get<std::int64_t>();
    r.max_size = read_optional_size(j.at("max_size"));
    r.extremal_graphs = j.at("extremal_graphs").get<std::vector<std::string>>();
    r.labelled_count = j.at("labelled_count").get<std::uint64_t>();
    const Json& method = j.at("search_method");
    r.search_method = method.at("mode").get<std::string>();
    r.complement_cap = read_optional_size(method.at("complement_cap"));
    r.pruned = method.at("pruned").get<bool>();
    const Json& conj = j.at("conjectured");
    r.conjectured.size = conj.at("size").get<std::size_t>();
    r.conjectured.rule = conj.at("rule").get<std::string>();
    r.conjectured.k = conj.at("k").get<std::size_t>();
    const auto status = conj.at("status").get<std::string>();
    if (status != "proven" && status != "conjectured") throw std::invalid_argument("bad status " + status);
    r.conjectured.status = status == "proven" ? ProofStatus::kProven : ProofStatus::kConjectured;
    r.agree = j.at("agree").get<bool>();
    r.candidates = j.at("candidates").get<std::uint64_t>();
    r.skipped_by_degree = j.at("skipped_by_degree").get<std::uint64_t>();
    if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad extremal report: ") + e.what());
  }
}

}  // namespace lightsout
