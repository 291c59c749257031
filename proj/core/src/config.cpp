#include "shadowbench/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace shadowbench {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> items;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      items.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  const std::string tail = trim(cur);
  if (!tail.empty() || !items.empty()) items.push_back(tail);
  return items;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ConfigError("config line " + std::to_string(line) + ": " + what);
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig config;
  config.playthroughs = 20;
  AgentConfig* agent = nullptr;
  std::vector<AgentConfig> roster;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;

    if (line == "[agent]") {
      roster.emplace_back();
      agent = &roster.back();
      continue;
    }
    if (line.front() == '[') fail(line_no, "unknown section " + line);

    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    try {
      if (agent) {
        if (key == "name") {
          if (!valid_name(value)) fail(line_no, "agent name must be [A-Za-z0-9_-]+");
          agent->name = value;
        } else if (key == "kind") {
          auto kind = agent_kind_from_string(value);
          if (!kind) fail(line_no, "unknown agent kind '" + value + "'");
          agent->kind = *kind;
        } else if (key == "policy") {
          agent->policy = parse_policy(value);
        } else if (key == "rollout_depth") {
          agent->rollout_depth = std::stoi(value);
        } else if (key == "alpha") {
          agent->alpha = std::stod(value);
        } else if (key == "seed") {
          agent->seed = std::stoull(value);
        } else {
          fail(line_no, "unknown agent key '" + key + "'");
        }
        continue;
      }

      if (key == "games") {
        for (const std::string& g : split_list(value)) {
          auto id = game_from_string(g);
          if (!id) fail(line_no, "unknown game '" + g + "'");
          config.games.push_back(*id);
        }
      } else if (key.rfind("level.", 0) == 0) {
        auto id = game_from_string(key.substr(6));
        if (!id) fail(line_no, "unknown game in '" + key + "'");
        config.levels[*id] = std::stoi(value);
      } else if (key == "budget") {
        config.budget_cap = std::stoi(value);
      } else if (key == "playthroughs") {
        config.playthroughs = std::stoi(value);
      } else if (key == "seed") {
        config.base_seed = std::stoull(value);
      } else if (key == "out") {
        config.output_dir = value;
      } else if (key == "jobs") {
        config.jobs = std::stoi(value);
      } else {
        fail(line_no, "unknown key '" + key + "'");
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      fail(line_no, std::string("bad value for '") + key + "': " + e.what());
    }
  }

  if (!roster.empty()) config.roster = std::move(roster);
  if (config.roster.empty()) config.roster = full_roster();
  if (config.games.empty()) {
    config.games = {GameId::Aliens, GameId::Brainman, GameId::Camelrace, GameId::Racebet2,
                    GameId::Zenpuzzle};
  }
  if (config.budget_cap < 1) throw ConfigError("budget must be >= 1");
  if (config.playthroughs < 0) throw ConfigError("playthroughs must be >= 0");

  std::set<std::string> names;
  for (const AgentConfig& a : config.roster) {
    if (!valid_name(a.name)) throw ConfigError("agent with missing or invalid name");
    if (!names.insert(a.name).second) {
      throw ConfigError("duplicate agent name '" + a.name + "'");
    }
  }
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open config file " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

ExperimentConfig profile_config(const std::string& name) {
  ExperimentConfig config;
  if (name == "full") {
    config.games = {GameId::Aliens, GameId::Brainman, GameId::Camelrace, GameId::Racebet2,
                    GameId::Zenpuzzle};
    config.roster = full_roster();
    config.playthroughs = 20;
    config.output_dir = "runs/full";
  } else if (name == "desk") {
    config.games = {GameId::Aliens, GameId::Racebet2};
    config.roster = desk_roster();
    config.playthroughs = 10;
    config.output_dir = "runs/desk";
  } else {
    throw ConfigError("unknown profile '" + name + "' (expected desk or full)");
  }
  return config;
}

std::string config_to_json(const ExperimentConfig& config) {
  nlohmann::ordered_json j;
  auto games = nlohmann::ordered_json::array();
  for (GameId g : config.games) games.push_back(to_string(g));
  j["games"] = std::move(games);
  auto levels = nlohmann::ordered_json::object();
  for (GameId g : config.games) levels[to_string(g)] = config.level_of(g);
  j["levels"] = std::move(levels);
  auto roster = nlohmann::ordered_json::array();
  for (const AgentConfig& a : config.roster) {
    nlohmann::ordered_json ja;
    ja["name"] = a.name;
    ja["kind"] = to_string(a.kind);
    if (a.policy) ja["policy"] = a.policy->render();
    if (a.kind == AgentKind::Mcts && !a.policy) ja["alpha"] = a.alpha;
    ja["rollout_depth"] = a.rollout_depth;
    ja["seed"] = a.seed;
    roster.push_back(std::move(ja));
  }
  j["roster"] = std::move(roster);
  j["budget"] = config.budget_cap;
  j["playthroughs"] = config.playthroughs;
  j["base_seed"] = config.base_seed;
  return j.dump(2) + "\n";
}

}  // namespace shadowbench
