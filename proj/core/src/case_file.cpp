#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chowdefect/catalog.hpp"
#include "chowdefect/errors.hpp"

namespace chowdefect {

namespace {

using Json = nlohmann::ordered_json;

Json gens_to_json(const std::vector<GeneratorSpec>& gens) {
  Json a = Json::array();
  for (const auto& g : gens) a.push_back({{"name", g.name}, {"expr", g.expr}});
  return a;
}

std::vector<GeneratorSpec> gens_from_json(const Json& j) {
  std::vector<GeneratorSpec> out;
  for (const auto& g : j) {
    if (g.is_string()) {
      out.push_back({g.get<std::string>(), g.get<std::string>()});
    } else {
      const std::string expr = g.at("expr").get<std::string>();
      out.push_back({g.value("name", expr), expr});
    }
  }
  return out;
}

Json series_to_json(const std::optional<SeriesExpr>& e) {
  return e ? Json(to_string(*e)) : Json(nullptr);
}

std::optional<SeriesExpr> series_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return parse_series(j.at(key).get<std::string>());
}

}  // namespace

std::string case_to_json(const CaseSpec& c) {
  Json j;
  j["id"] = c.id;
  j["scenario"] = c.scenario;
  j["prime"] = c.prime;
  j["vars"] = c.num_vars;
  j["ker"] = gens_to_json(c.ker);
  j["im"] = gens_to_json(c.im);
  j["truncate_degree"] = c.truncate_degree ? Json(*c.truncate_degree) : Json(nullptr);
  j["b_degrees"] = c.b_degrees;
  j["claimed_D"] = series_to_json(c.claimed_D);
  j["claimed_flag"] = series_to_json(c.claimed_flag);
  j["motive_series"] = series_to_json(c.motive_series);
  j["claimed_tilde_D"] = series_to_json(c.claimed_tilde_D);
  if (c.bound) {
    j["bound"] = {{"weights", c.bound->weights},
                  {"relations", c.bound->relations},
                  {"min_total", c.bound->min_total},
                  {"free_degrees", c.bound->free_degrees}};
  } else {
    j["bound"] = nullptr;
  }
  j["series_only"] = c.series_only;
  Json sc = Json::array();
  for (const auto& s : c.scenarios) {
    sc.push_back({{"name", s.name},
                  {"aliases", s.aliases},
                  {"extra_ker", gens_to_json(s.extra_ker)},
                  {"extra_im", gens_to_json(s.extra_im)},
                  {"note", s.note}});
  }
  j["scenarios"] = sc;
  j["default_max_degree"] = c.default_max_degree;
  j["provenance"] = c.provenance;
  j["notes"] = c.notes;
  return j.dump(2) + "\n";
}

CaseSpec case_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CatalogError(std::string("case file is not valid JSON: ") + e.what());
  }
  try {
    CaseSpec c;
    c.id = j.at("id").get<std::string>();
    c.scenario = j.value("scenario", std::string{});
    c.prime = j.at("prime").get<std::uint32_t>();
    c.num_vars = j.at("vars").get<unsigned>();
    c.ker = gens_from_json(j.at("ker"));
    c.im = gens_from_json(j.at("im"));
    if (j.contains("truncate_degree") && !j.at("truncate_degree").is_null()) {
      c.truncate_degree = j.at("truncate_degree").get<unsigned>();
    }
    c.b_degrees = j.value("b_degrees", std::vector<unsigned>{});
    c.claimed_D = series_from_json(j, "claimed_D");
    c.claimed_flag = series_from_json(j, "claimed_flag");
    c.motive_series = series_from_json(j, "motive_series");
    c.claimed_tilde_D = series_from_json(j, "claimed_tilde_D");
    if (j.contains("bound") && !j.at("bound").is_null()) {
      const Json& b = j.at("bound");
      MonomialBound mb;
      mb.weights = b.at("weights").get<std::vector<unsigned>>();
      mb.relations = b.value("relations", std::vector<std::vector<unsigned>>{});
      mb.min_total = b.value("min_total", 0u);
      mb.free_degrees = b.value("free_degrees", std::vector<unsigned>{});
      c.bound = std::move(mb);
    }
    c.series_only = j.value("series_only", false);
    if (c.series_only && !c.bound) throw CatalogError("series_only case needs a bound");
    if (j.contains("scenarios")) {
      for (const auto& s : j.at("scenarios")) {
        ScenarioSpec sc;
        sc.name = s.at("name").get<std::string>();
        sc.aliases = s.value("aliases", std::vector<std::string>{});
        if (s.contains("extra_ker")) sc.extra_ker = gens_from_json(s.at("extra_ker"));
        if (s.contains("extra_im")) sc.extra_im = gens_from_json(s.at("extra_im"));
        sc.note = s.value("note", std::string{});
        c.scenarios.push_back(std::move(sc));
      }
    }
    c.default_max_degree = j.value("default_max_degree", 24u);
    c.provenance = j.value("provenance", std::string{});
    c.notes = j.value("notes", std::vector<std::string>{});
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw CatalogError(std::string("malformed case file: ") + e.what());
  }
}

CaseSpec load_case_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open case file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  CaseSpec c = case_from_json(buf.str());
  materialize(c);
  return c;
}

void save_case_file(const CaseSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw CatalogError("cannot write case file " + path.string());
  out << case_to_json(spec);
}

}  // namespace chowdefect
