#include "kslab/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "kslab/csv.hpp"

namespace kslab {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool parse_bool(const std::string& s, const std::string& key) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw std::invalid_argument("config key '" + key + "': expected a boolean, got '" + s + "'");
}

class ConfigReader {
 public:
  explicit ConfigReader(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

  bool has(const std::string& key) {
    return kv_.count(key) != 0;
  }
  std::string take(const std::string& key) {
    auto it = kv_.find(key);
    std::string v = it->second;
    kv_.erase(it);
    return v;
  }
  double take_double(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    return parse_double(take(key));
  }
  long take_long(const std::string& key, long fallback) {
    if (!has(key)) return fallback;
    return static_cast<long>(parse_double(take(key)));
  }
  bool take_bool(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    return parse_bool(take(key), key);
  }
  std::string take_string(const std::string& key, const std::string& fallback) {
    if (!has(key)) return fallback;
    return take(key);
  }
  void ensure_empty() const {
    if (!kv_.empty())
      throw std::invalid_argument("unknown config key: '" + kv_.begin()->first + "'");
  }

 private:
  std::map<std::string, std::string> kv_;
};

}  // namespace

std::map<std::string, std::string> parse_key_value_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open config file: " + path.string());
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      std::ostringstream msg;
      msg << path.string() << ":" << lineno << ": expected key=value, got '" << t << "'";
      throw std::invalid_argument(msg.str());
    }
    kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return kv;
}

SimConfig sim_config_from_file(const std::filesystem::path& path) {
  ConfigReader r(parse_key_value_file(path));
  SimConfig cfg;
  const int nx = static_cast<int>(r.take_long("nx", cfg.grid.nx));
  const int ny = static_cast<int>(r.take_long("ny", cfg.grid.ny));
  const double lx = r.take_double("lx", cfg.grid.lx);
  const double ly = r.take_double("ly", cfg.grid.ly);
  cfg.grid = Grid(nx, ny, lx, ly);
  cfg.dt = r.take_double("dt", cfg.dt);
  cfg.t_end = r.take_double("t_end", cfg.t_end);
  cfg.chi = r.take_double("chi", cfg.chi);
  cfg.init_u.kind = field_kind_from_string(
      r.take_string("init_u_kind", to_string(cfg.init_u.kind)));
  cfg.init_u.amplitude = r.take_double("init_u_amp", cfg.init_u.amplitude);
  cfg.u_mass = r.take_double("u_mass", cfg.u_mass);
  cfg.init_v.kind = field_kind_from_string(
      r.take_string("init_v_kind", to_string(cfg.init_v.kind)));
  cfg.init_v.amplitude = r.take_double("init_v_amp", cfg.init_v.amplitude);
  cfg.v_base = r.take_double("v_base", cfg.v_base);
  cfg.v_floor = r.take_double("v_floor", cfg.v_floor);
  cfg.record_every = static_cast<int>(r.take_long("record_every", cfg.record_every));
  cfg.linsolve_tol = r.take_double("linsolve_tol", cfg.linsolve_tol);
  cfg.adaptive_dt = r.take_bool("adaptive_dt", cfg.adaptive_dt);
  cfg.checkpoint_every = static_cast<int>(r.take_long("checkpoint_every", cfg.checkpoint_every));
  cfg.seed = static_cast<std::uint64_t>(r.take_long("seed", static_cast<long>(cfg.seed)));
  cfg.monitor_a = r.take_double("monitor_a", cfg.monitor_a);
  cfg.monitor_b = r.take_double("monitor_b", cfg.monitor_b);
  r.ensure_empty();
  cfg.validate();
  return cfg;
}

void write_resolved_config(const std::filesystem::path& path, const SimConfig& cfg) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write config: " + path.string());
  os << "adaptive_dt=" << (cfg.adaptive_dt ? "true" : "false") << '\n'
     << "checkpoint_every=" << cfg.checkpoint_every << '\n'
     << "chi=" << format_double(cfg.chi) << '\n'
     << "dt=" << format_double(cfg.dt) << '\n'
     << "init_u_amp=" << format_double(cfg.init_u.amplitude) << '\n'
     << "init_u_kind=" << to_string(cfg.init_u.kind) << '\n'
     << "init_v_amp=" << format_double(cfg.init_v.amplitude) << '\n'
     << "init_v_kind=" << to_string(cfg.init_v.kind) << '\n'
     << "linsolve_tol=" << format_double(cfg.linsolve_tol) << '\n'
     << "lx=" << format_double(cfg.grid.lx) << '\n'
     << "ly=" << format_double(cfg.grid.ly) << '\n'
     << "monitor_a=" << format_double(cfg.monitor_a) << '\n'
     << "monitor_b=" << format_double(cfg.monitor_b) << '\n'
     << "nx=" << cfg.grid.nx << '\n'
     << "ny=" << cfg.grid.ny << '\n'
     << "record_every=" << cfg.record_every << '\n'
     << "seed=" << cfg.seed << '\n'
     << "t_end=" << format_double(cfg.t_end) << '\n'
     << "u_mass=" << format_double(cfg.u_mass) << '\n'
     << "v_base=" << format_double(cfg.v_base) << '\n'
     << "v_floor=" << format_double(cfg.v_floor) << '\n';
}

}  // namespace kslab
