// Copyright 2026 The opmgr Authors
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

// Regenerates Taillard benchmark files from the published generator seeds.
// Usage: gen_taillard <out-dir> <first> <last>   (instance numbers 1..120)

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "opmgr/bench/instance_io.hpp"

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: gen_taillard <out-dir> <first> <last>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  int first = 0;
  int last = 0;
  try {
    first = std::stoi(argv[2]);
    last = std::stoi(argv[3]);
  } catch (const std::exception&) {
    std::cerr << "gen_taillard: instance numbers must be integers\n";
    return 2;
  }
  if (first < 1 || last > 120 || first > last) {
    std::cerr << "gen_taillard: range must lie within 1..120\n";
    return 2;
  }
  std::filesystem::create_directories(dir);
  for (int k = first; k <= last; ++k) {
    const auto [jobs, machines] = opmgr::bench::taillard_size(k);
    const auto seed = opmgr::bench::taillard_seed(k);
    auto instance = opmgr::bench::generate_taillard(seed, jobs, machines);
    std::ostringstream name;
    name << "ta" << std::setw(3) << std::setfill('0') << k;
    instance.set_name(name.str());
    std::ofstream out(dir / name.str());
    opmgr::bench::write_instance(out, instance, opmgr::bench::InstanceFormat::Taillard, seed);
    if (!out) {
      std::cerr << "gen_taillard: failed writing " << name.str() << '\n';
      return 1;
    }
  }
  return 0;
}
