// Copyright 2026 The nlasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "nlasim/errors.hpp"
#include "nlasim/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Options {
  std::string config;
  std::string out;
  std::string format;
};

std::string pick_format(const Options& o) {
  if (!o.format.empty()) return o.format;
  if (o.out.size() >= 5 && o.out.compare(o.out.size() - 5, 5, ".json") == 0) return "json";
  return "csv";
}

int run(const std::string& name, const Options& o) {
  const int threads = nlasim::parse_thread_count(std::getenv("SIM_THREADS"));
  const nlasim::Config config = nlasim::Config::load(o.config, nlasim::experiment_schema(name));
  const nlasim::Report report = nlasim::run_experiment(name, config, threads);
  const std::string data = pick_format(o) == "json" ? nlasim::to_json(report) : nlasim::to_csv(report);
  if (o.out.empty()) {
    std::cout << data;
    return kExitOk;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + o.out + "'");
  f << data;
  f.close();
  if (!f) throw std::runtime_error("failed writing '" + o.out + "'");
  std::cout << nlasim::to_text_summary(report) << "  written to " << o.out << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heralded noiseless linear amplifier simulator"};
  app.require_subcommand(1);
  Options options;
  for (const auto& name : nlasim::experiment_names()) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " experiment");
    sub->add_option("--config", options.config, "key = value experiment file")->required();
    sub->add_option("--out", options.out, "output file (stdout when omitted)");
    sub->add_option("--format", options.format, "csv or json (default from --out extension, else csv)")
        ->check(CLI::IsMember({"csv", "json"}));
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return run(name, options);
  } catch (const nlasim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const nlasim::TruncationError& e) {
    std::cerr << "numerical envelope exceeded: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::domain_error& e) {
    std::cerr << "numerical envelope exceeded: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
