#include "qcube/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qcube {

static std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

void apply_config_entry(Config& cfg, const std::string& key,
                        const std::string& value) {
  try {
    if (key == "threshold_base")
      cfg.threshold_base = std::stold(value);
    else if (key == "cutoff")
      cfg.cutoff_override = std::stold(value);
    else if (key == "zeta")
      cfg.zeta = std::stold(value);
    else if (key == "linkage_exponent")
      cfg.linkage_exponent = std::stold(value);
    else if (key == "big_o_const")
      cfg.big_o_const = std::stold(value);
    else if (key == "entropy_tol")
      cfg.entropy_tol = std::stold(value);
    else if (key == "threads")
      cfg.threads = std::stoi(value);
    else
      throw std::invalid_argument("unknown config key: " + key);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad value for config key " + key + ": " +
                                value);
  }
  if (cfg.threads < 1) throw std::invalid_argument("threads must be >= 1");
}

Config load_config(const std::string& path) {
  Config cfg;
  if (path.empty()) return cfg;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line is not key = value: " + line);
    apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

}  // namespace qcube
