#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parstab/hurwitz.hpp"

namespace {

template <class F>
double run_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

struct Instance {
  std::string name;
  parstab::HurwitzQuery query;
  bool run_naive;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compare the parallel class enumerator with the serial reference scan"};
  int threads = 0;
  app.add_option("--threads", threads, "worker count for the parallel runs (0 = default)");
  CLI11_PARSE(app, argc, argv);

  std::vector<Instance> instances = {
      {"deg3 transpositions x4", {0, 3, {{2}, {2}, {2}, {2}}}, true},
      {"deg4 transpositions x6", {0, 4, {{2}, {2}, {2}, {2}, {2}, {2}}}, true},
      {"deg5 mixed 3+3+22+22", {0, 5, {{3}, {3}, {2, 2}, {2, 2}}}, true},
      {"deg6 type 3,3 x4", {0, 6, {{3, 3}, {3, 3}, {3, 3}, {3, 3}}}, true},
      {"deg2 etale genus2", {2, 2, {}}, true},
  };

  std::printf("%-24s %10s %12s %12s %12s %12s\n", "instance", "classes", "parallel ms",
              "serial ms", "tuples", "naive ms");
  for (const Instance& inst : instances) {
    std::vector<parstab::Word> classes;
    double t_par = run_ms([&] { classes = parstab::enumerate_classes(inst.query, {}, threads); });
    std::vector<parstab::Word> serial;
    double t_one = run_ms([&] { serial = parstab::enumerate_classes(inst.query, {}, 1); });
    if (serial != classes) {
      std::printf("DISAGREEMENT on %s\n", inst.name.c_str());
      return 1;
    }
    if (inst.run_naive) {
      std::vector<parstab::Word> tuples;
      double t_naive = run_ms([&] { tuples = parstab::enumerate_tuples_naive(inst.query); });
      std::printf("%-24s %10zu %12.2f %12.2f %12zu %12.2f\n", inst.name.c_str(), classes.size(),
                  t_par, t_one, tuples.size(), t_naive);
    } else {
      std::printf("%-24s %10zu %12.2f %12.2f %12s %12s\n", inst.name.c_str(), classes.size(),
                  t_par, t_one, "-", "-");
    }
  }
  return 0;
}
