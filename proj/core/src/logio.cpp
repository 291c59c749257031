#include "shadowbench/logio.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace shadowbench {

namespace {

using json = nlohmann::ordered_json;

json vec_to_json(const std::vector<double>& v) {
  // nlohmann serializes NaN as null on dump; keep that explicit on load.
  json arr = json::array();
  for (double x : v) {
    if (std::isnan(x)) {
      arr.push_back(nullptr);
    } else {
      arr.push_back(x);
    }
  }
  return arr;
}

std::vector<double> vec_from_json(const json& arr) {
  std::vector<double> v;
  v.reserve(arr.size());
  for (const auto& x : arr) {
    v.push_back(x.is_null() ? std::numeric_limits<double>::quiet_NaN() : x.get<double>());
  }
  return v;
}

json decision_to_json(const Decision& d) {
  json j;
  j["a_star"] = d.a_star;
  j["p"] = vec_to_json(d.p);
  j["v"] = vec_to_json(d.v);
  j["b"] = d.b;
  j["conv"] = d.conv;
  return j;
}

Decision decision_from_json(const json& j) {
  Decision d;
  d.a_star = j.at("a_star").get<int>();
  d.p = vec_from_json(j.at("p"));
  d.v = vec_from_json(j.at("v"));
  d.b = j.at("b").get<double>();
  d.conv = j.at("conv").get<double>();
  return d;
}

json agent_to_json(const AgentConfig& cfg) {
  json j;
  j["name"] = cfg.name;
  j["kind"] = to_string(cfg.kind);
  if (cfg.policy) j["policy"] = cfg.policy->render();
  j["rollout_depth"] = cfg.rollout_depth;
  j["alpha"] = cfg.alpha;
  j["seed"] = cfg.seed;
  return j;
}

AgentConfig agent_from_json(const json& j) {
  AgentConfig cfg;
  cfg.name = j.at("name").get<std::string>();
  cfg.kind = *agent_kind_from_string(j.at("kind").get<std::string>());
  if (j.contains("policy")) cfg.policy = parse_policy(j.at("policy").get<std::string>());
  cfg.rollout_depth = j.at("rollout_depth").get<int>();
  cfg.alpha = j.at("alpha").get<double>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  return cfg;
}

}  // namespace

std::string playthrough_to_jsonl(const PlaythroughLog& log) {
  std::string out;
  {
    json header;
    header["type"] = "header";
    header["game"] = log.game_id;
    header["level"] = log.level_id;
    header["seed"] = log.seed;
    header["budget"] = log.budget_cap;
    header["main"] = agent_to_json(log.main_config);
    header["shadow"] = agent_to_json(log.shadow_config);
    out += header.dump();
    out += '\n';
  }
  for (const TickLog& t : log.ticks) {
    json j;
    j["type"] = "tick";
    j["tick"] = t.tick;
    json legal = json::array();
    for (Action a : t.legal) legal.push_back(to_string(a));
    j["legal"] = legal;
    j["main"] = decision_to_json(t.main);
    j["shadow"] = decision_to_json(t.shadow);
    j["played"] = to_string(t.played);
    out += j.dump();
    out += '\n';
  }
  {
    json j;
    j["type"] = "outcome";
    j["win"] = log.outcome.win;
    j["score"] = log.outcome.score;
    j["length"] = log.outcome.length;
    out += j.dump();
    out += '\n';
  }
  return out;
}

PlaythroughLog playthrough_from_jsonl(const std::string& text) {
  PlaythroughLog log;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    const std::string type = j.at("type").get<std::string>();
    if (type == "header") {
      log.game_id = j.at("game").get<std::string>();
      log.level_id = j.at("level").get<int>();
      log.seed = j.at("seed").get<std::uint64_t>();
      log.budget_cap = j.at("budget").get<int>();
      log.main_config = agent_from_json(j.at("main"));
      log.shadow_config = agent_from_json(j.at("shadow"));
      header_seen = true;
    } else if (type == "tick") {
      TickLog t;
      t.tick = j.at("tick").get<int>();
      for (const auto& a : j.at("legal")) {
        t.legal.push_back(*action_from_string(a.get<std::string>()));
      }
      t.main = decision_from_json(j.at("main"));
      t.shadow = decision_from_json(j.at("shadow"));
      t.played = *action_from_string(j.at("played").get<std::string>());
      log.ticks.push_back(std::move(t));
    } else if (type == "outcome") {
      log.outcome.win = j.at("win").get<bool>();
      log.outcome.score = j.at("score").get<double>();
      log.outcome.length = j.at("length").get<int>();
    }
  }
  if (!header_seen) throw AnalysisError("playthrough log has no header record");
  return log;
}

void write_playthrough(const std::filesystem::path& file, const PlaythroughLog& log) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw EngineError("cannot open " + file.string() + " for writing");
  out << playthrough_to_jsonl(log);
}

PlaythroughLog read_playthrough(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw EngineError("cannot open " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return playthrough_from_jsonl(buf.str());
}

}  // namespace shadowbench
