// Copyright 2026 The Fabula Authors
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

// Times the extraction kernels against the serial O(n^2) reference on
// synthetic mention layouts and checks that both produce identical networks.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fabula/extraction.hpp"
#include "fabula/extraction_reference.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<fabula::Character> synthetic_cast(std::mt19937& rng, int mentions,
                                              int characters) {
  std::uniform_int_distribution<int> owner(0, characters - 1);
  std::uniform_int_distribution<int> gap(1, 9);
  std::uniform_int_distribution<int> len(1, 3);
  std::vector<fabula::Character> cast(characters);
  for (int c = 0; c < characters; ++c) {
    cast[c].id = c;
    cast[c].canonical = "c" + std::to_string(c);
    cast[c].names = {cast[c].canonical};
  }
  int position = 0;
  for (int m = 0; m < mentions; ++m) {
    position += gap(rng);
    int length = len(rng);
    int c = owner(rng);
    cast[c].mentions.push_back(
        {position, position + length - 1, cast[c].canonical});
    position += length;
  }
  return cast;
}

int token_count_of(const std::vector<fabula::Character>& cast) {
  int count = 0;
  for (const auto& c : cast)
    for (const auto& m : c.mentions)
      if (m.last_token + 1 > count) count = m.last_token + 1;
  return count;
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::string(argv[1]) == "--quick";
#ifdef _OPENMP
  std::printf("kernels: OpenMP, %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("kernels: serial build (no OpenMP)\n");
#endif

  std::vector<int> sizes = quick ? std::vector<int>{2000, 8000}
                                 : std::vector<int>{2000, 8000, 20000, 40000};

  fabula::ExtractionConfig static_cfg;
  static_cfg.co_occurrences_dist = 10;

  std::printf("\n-- static co-occurrence (dist=10, 40 characters) --\n");
  std::printf("%10s %12s %12s %9s %7s\n", "mentions", "kernel_s",
              "reference_s", "speedup", "match");
  for (int n : sizes) {
    std::mt19937 rng(12345);
    auto cast = synthetic_cast(rng, n, 40);

    auto t0 = Clock::now();
    auto fast = fabula::extract_cooccurrence_static(cast, static_cfg);
    double kernel_s = seconds_since(t0);

    t0 = Clock::now();
    auto slow = fabula::reference::cooccurrence_static(cast, static_cfg);
    double reference_s = seconds_since(t0);

    std::printf("%10d %12.4f %12.4f %8.1fx %7s\n", n, kernel_s, reference_s,
                kernel_s > 0 ? reference_s / kernel_s : 0.0,
                fast == slow ? "yes" : "NO");
  }

  std::printf("\n-- dynamic co-occurrence (window=2000, overlap=500) --\n");
  std::printf("%10s %12s %12s %9s %7s\n", "mentions", "kernel_s",
              "reference_s", "speedup", "match");
  fabula::ExtractionConfig dyn_cfg = static_cfg;
  dyn_cfg.dynamic = true;
  dyn_cfg.dynamic_window = 2000;
  dyn_cfg.dynamic_overlap = 500;
  for (int n : sizes) {
    std::mt19937 rng(54321);
    auto cast = synthetic_cast(rng, n, 40);
    int tokens = token_count_of(cast);

    auto t0 = Clock::now();
    auto fast = fabula::extract_cooccurrence_dynamic(cast, dyn_cfg, tokens);
    double kernel_s = seconds_since(t0);

    t0 = Clock::now();
    auto slow = fabula::reference::cooccurrence_dynamic(cast, dyn_cfg, tokens);
    double reference_s = seconds_since(t0);

    std::printf("%10d %12.4f %12.4f %8.1fx %7s\n", n, kernel_s, reference_s,
                kernel_s > 0 ? reference_s / kernel_s : 0.0,
                fast == slow ? "yes" : "NO");
  }
  return 0;
}
