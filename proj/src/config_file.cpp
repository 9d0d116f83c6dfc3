// Copyright 2026 branchlab authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "branchlab/config_file.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "branchlab/errors.hpp"

namespace branchlab {

namespace {

struct Entry {
  std::string value;
  int line = 0;
  bool used = false;
};

using KeyMap = std::map<std::string, Entry>;

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  std::ostringstream os;
  os << "config line " << line << ": " << msg;
  throw ConfigError(os.str());
}

[[noreturn]] void fail_key(const std::string& key, const std::string& msg) {
  throw ConfigError("config key '" + key + "': " + msg);
}

KeyMap tokenize(const std::string& text) {
  KeyMap keys;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(line_no, "expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(line_no, "empty key");
    if (value.empty()) fail(line_no, "empty value for key '" + key + "'");
    if (keys.count(key) != 0) {
      fail(line_no, "duplicate key '" + key + "'");
    }
    keys[key] = Entry{value, line_no, false};
  }
  return keys;
}

class Reader {
 public:
  explicit Reader(KeyMap keys) : keys_(std::move(keys)) {}

  bool has(const std::string& key) const { return keys_.count(key) != 0; }

  std::string get_string(const std::string& key) {
    auto it = keys_.find(key);
    if (it == keys_.end()) fail_key(key, "missing required key");
    it->second.used = true;
    return it->second.value;
  }

  double get_number(const std::string& key) {
    const std::string v = get_string(key);
    try {
      std::size_t pos = 0;
      const double x = std::stod(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return x;
    } catch (const std::exception&) {
      fail(keys_.at(key).line, "key '" + key + "': not a number: '" + v + "'");
    }
  }

  // "const K" or "pmf p0 p1 ..." -> probability vector.
  DiscretePmf get_discrete(const std::string& key) {
    const std::string v = get_string(key);
    std::istringstream in(v);
    std::string kind;
    in >> kind;
    if (kind == "const") {
      double k = -1.0;
      if (!(in >> k) || k < 0.0 || k != static_cast<double>(int(k))) {
        fail(keys_.at(key).line,
             "key '" + key + "': expected 'const <nonnegative integer>'");
      }
      std::vector<double> probs(static_cast<std::size_t>(k) + 1, 0.0);
      probs.back() = 1.0;
      return DiscretePmf(std::move(probs));
    }
    if (kind == "pmf") {
      std::vector<double> probs;
      double p;
      while (in >> p) probs.push_back(p);
      if (probs.empty()) {
        fail(keys_.at(key).line, "key '" + key + "': empty pmf");
      }
      return DiscretePmf(std::move(probs));
    }
    fail(keys_.at(key).line,
         "key '" + key + "': expected 'const K' or 'pmf p0 p1 ...'");
  }

  std::vector<double> get_prob_vector(const std::string& key) {
    const std::string v = get_string(key);
    std::istringstream in(v);
    std::vector<double> probs;
    double p;
    while (in >> p) probs.push_back(p);
    if (probs.empty()) {
      fail(keys_.at(key).line, "key '" + key + "': expected probabilities");
    }
    return probs;
  }

  void check_all_used() const {
    for (const auto& [key, entry] : keys_) {
      if (!entry.used) {
        fail(entry.line, "unknown key '" + key + "'");
      }
    }
  }

 private:
  KeyMap keys_;
};

OffspringLaw read_offspring(Reader& r) {
  const std::string family = r.get_string("offspring.family");
  if (family == "poisson_unit") return OffspringLaw::poisson_unit();
  if (family == "geometric") {
    return OffspringLaw::geometric(r.get_number("offspring.success"));
  }
  if (family == "two_point") {
    return OffspringLaw::two_point(r.get_number("offspring.p0"),
                                   r.get_number("offspring.p2"));
  }
  if (family == "pmf") {
    return OffspringLaw::explicit_pmf(r.get_prob_vector("offspring.probs"));
  }
  fail_key("offspring.family",
           "expected poisson_unit | geometric | two_point | pmf, got '" +
               family + "'");
}

MigrationLaw read_migration(Reader& r) {
  MigrationLaw law;
  law.p = r.get_number("migration.p");
  law.q = r.get_number("migration.q");
  law.r = r.has("migration.r") ? r.get_number("migration.r") : 0.0;
  law.family_emigration =
      r.has("migration.family_emigration")
          ? r.get_discrete("migration.family_emigration")
          : DiscretePmf({1.0});
  law.individual_emigration =
      r.has("migration.individual_emigration")
          ? r.get_discrete("migration.individual_emigration")
          : DiscretePmf({1.0});
  law.immigration = r.has("migration.immigration")
                        ? r.get_discrete("migration.immigration")
                        : DiscretePmf({1.0});
  return law;
}

InitialLaw read_initial(Reader& r) {
  const std::string kind = r.get_string("initial.kind");
  if (kind == "fixed") return InitialLaw::fixed(r.get_number("initial.k"));
  if (kind == "pmf") {
    return InitialLaw::finite_mean(r.get_prob_vector("initial.probs"));
  }
  if (kind == "heavy_tail") {
    return InitialLaw::heavy_tail(r.get_number("initial.gamma"),
                                  r.get_number("initial.c"));
  }
  fail_key("initial.kind",
           "expected fixed | pmf | heavy_tail, got '" + kind + "'");
}

InterarrivalLaw read_interarrival(Reader& r) {
  const std::string kind = r.get_string("interarrival.kind");
  if (kind == "exponential") {
    return InterarrivalLaw::exponential(r.get_number("interarrival.mu"));
  }
  if (kind == "deterministic") {
    return InterarrivalLaw::deterministic(r.get_number("interarrival.d"));
  }
  if (kind == "pareto") {
    return InterarrivalLaw::pareto_tail(r.get_number("interarrival.rho"),
                                        r.get_number("interarrival.x_m"));
  }
  if (kind == "fractional") {
    return InterarrivalLaw::fractional(r.get_number("interarrival.rho"),
                                       r.get_number("interarrival.scale"));
  }
  fail_key("interarrival.kind",
           "expected exponential | deterministic | pareto | fractional, "
           "got '" + kind + "'");
}

SojournLaw read_sojourn(Reader& r) {
  const std::string kind = r.get_string("sojourn.kind");
  if (kind == "exponential") {
    return SojournLaw::exponential(r.get_number("sojourn.mu"));
  }
  if (kind == "deterministic") {
    return SojournLaw::deterministic(r.get_number("sojourn.d"));
  }
  if (kind == "pareto") {
    return SojournLaw::pareto_tail(r.get_number("sojourn.alpha"),
                                   r.get_number("sojourn.x_m"));
  }
  fail_key("sojourn.kind",
           "expected exponential | deterministic | pareto, got '" + kind +
               "'");
}

}  // namespace

ArbConfig ExperimentConfig::arb() const {
  if (!interarrival.has_value() || !sojourn.has_value()) {
    throw ConfigError(
        "regenerative run needs both interarrival.* and sojourn.* sections");
  }
  return ArbConfig{model, *interarrival, *sojourn};
}

ExperimentConfig parse_config_text(const std::string& text) {
  Reader reader(tokenize(text));
  ExperimentConfig out;
  out.model.offspring = read_offspring(reader);
  out.model.migration = read_migration(reader);
  out.model.initial = read_initial(reader);
  if (reader.has("interarrival.kind")) {
    out.interarrival = read_interarrival(reader);
    out.interarrival->check();
  }
  if (reader.has("sojourn.kind")) {
    out.sojourn = read_sojourn(reader);
    out.sojourn->check();
  }
  reader.check_all_used();

  std::ostringstream canon;
  canon << "offspring=" << out.model.offspring.describe()
        << "; migration=" << out.model.migration.describe()
        << "; initial=" << out.model.initial.describe();
  if (out.interarrival) canon << "; interarrival=" << out.interarrival->describe();
  if (out.sojourn) canon << "; sojourn=" << out.sojourn->describe();
  out.canonical = canon.str();
  return out;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace branchlab
