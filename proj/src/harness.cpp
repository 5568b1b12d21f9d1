#include "gasopt/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>

#include "gasopt/baselines.hpp"
#include "gasopt/gas.hpp"
#include "gasopt/testbed.hpp"
#include <json.hpp>

namespace gasopt {

namespace {

constexpr const char* kCsvHeader =
    "algo,function,run_id,seed,reads,best_value,error";

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void require_algorithm(const std::string& algo) {
  if (algo != "gas" && algo != "bh" && algo != "cs" && algo != "de")
    throw UnknownAlgorithm(algo);
}

Target registry_target(const std::string& function_name) {
  const auto& reg = FunctionRegistry::instance();
  return Target{reg.known_minimum(function_name).first,
                reg.success_tolerance(function_name)};
}

// Runs a deterministic batch of work items on up to `workers` threads. Items
// are independent; the first exception (if any) is rethrown after join.
void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& item) {
  const int threads = std::max(1, std::min<int>(workers, int(count)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) item(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (std::size_t i = next++; i < count && !failed; i = next++) {
      try {
        item(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::uint64_t solved_threshold(const RunTrace& trace) {
  return trace.solved_at_reads ? *trace.solved_at_reads
                               : std::numeric_limits<std::uint64_t>::max();
}

void write_curves_svg(const std::vector<SuccessCurve>& curves,
                      const std::filesystem::path& path) {
  const double width = 860, height = 520;
  const double left = 70, right = 830, top = 30, bottom = 470;

  std::uint64_t min_reads = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t max_reads = 0;
  for (const auto& c : curves)
    for (const auto& p : c.points) {
      min_reads = std::min(min_reads, p.reads);
      max_reads = std::max(max_reads, p.reads);
    }
  if (curves.empty() || min_reads >= max_reads) {
    min_reads = 100;
    max_reads = 1000000;
  }
  const double lx = std::log10(double(min_reads));
  const double ux = std::log10(double(max_reads));

  auto xpos = [&](std::uint64_t reads) {
    const double t = (std::log10(double(reads)) - lx) / (ux - lx);
    return left + t * (right - left);
  };
  auto ypos = [&](double fraction) {
    return bottom - fraction * (bottom - top);
  };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";

  // Frame and horizontal gridlines every 0.2.
  for (int k = 0; k <= 5; ++k) {
    const double f = k / 5.0;
    const double y = ypos(f);
    svg << "<line x1=\"" << num(left) << "\" y1=\"" << num(y) << "\" x2=\""
        << num(right) << "\" y2=\"" << num(y)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << num(left - 10) << "\" y=\"" << num(y + 4)
        << "\" font-family=\"sans-serif\" font-size=\"13\" "
           "text-anchor=\"end\">"
        << num(f) << "</text>\n";
  }

  // Decade ticks on the read axis.
  for (int e = 0; e <= 9; ++e) {
    const double reads = std::pow(10.0, e);
    if (reads < double(min_reads) || reads > double(max_reads)) continue;
    const double x = xpos(std::uint64_t(reads));
    svg << "<line x1=\"" << num(x) << "\" y1=\"" << num(bottom) << "\" x2=\""
        << num(x) << "\" y2=\"" << num(top)
        << "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << num(x) << "\" y=\"" << num(bottom + 20)
        << "\" font-family=\"sans-serif\" font-size=\"13\" "
           "text-anchor=\"middle\">1e"
        << e << "</text>\n";
  }
  svg << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\""
      << num(right - left) << "\" height=\"" << num(bottom - top)
      << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  svg << "<text x=\"" << num((left + right) / 2) << "\" y=\""
      << num(height - 10)
      << "\" font-family=\"sans-serif\" font-size=\"15\" "
         "text-anchor=\"middle\">function reads</text>\n";
  svg << "<text x=\"18\" y=\"" << num((top + bottom) / 2)
      << "\" font-family=\"sans-serif\" font-size=\"15\" "
         "text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << num((top + bottom) / 2)
      << ")\">fraction of functions solved</text>\n";

  auto color_of = [](const std::string& algo) {
    if (algo == "gas") return "#d62728";
    if (algo == "bh") return "#1f77b4";
    if (algo == "cs") return "#2ca02c";
    if (algo == "de") return "#9467bd";
    return "#7f7f7f";
  };
  auto dash_of = [](int runs) {
    if (runs >= 50) return "12,4";
    if (runs >= 20) return "2,3";
    if (runs >= 10) return "7,3";
    return "";
  };

  double legend_y = top + 18;
  for (const auto& curve : curves) {
    if (curve.points.empty()) continue;
    std::ostringstream pts;
    // Step rendering: the fraction holds until the next checkpoint.
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
      const auto& p = curve.points[i];
      if (i > 0)
        pts << num(xpos(p.reads)) << "," << num(ypos(curve.points[i - 1].fraction))
            << " ";
      pts << num(xpos(p.reads)) << "," << num(ypos(p.fraction)) << " ";
    }
    const std::string dash = dash_of(curve.runs_T);
    svg << "<polyline fill=\"none\" stroke=\"" << color_of(curve.algorithm)
        << "\" stroke-width=\"2\"";
    if (!dash.empty()) svg << " stroke-dasharray=\"" << dash << "\"";
    svg << " points=\"" << pts.str() << "\"/>\n";

    svg << "<line x1=\"" << num(left + 14) << "\" y1=\"" << num(legend_y - 4)
        << "\" x2=\"" << num(left + 54) << "\" y2=\"" << num(legend_y - 4)
        << "\" stroke=\"" << color_of(curve.algorithm)
        << "\" stroke-width=\"2\"";
    if (!dash.empty()) svg << " stroke-dasharray=\"" << dash << "\"";
    svg << "/>\n";
    svg << "<text x=\"" << num(left + 62) << "\" y=\"" << num(legend_y)
        << "\" font-family=\"sans-serif\" font-size=\"13\">" << curve.algorithm
        << " (T=" << curve.runs_T << ")</text>\n";
    legend_y += 18;
  }
  svg << "</svg>\n";

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << svg.str();
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

std::vector<std::uint64_t> log_sample_grid(std::uint64_t budget, int points) {
  std::vector<std::uint64_t> grid;
  if (budget <= 100 || points <= 1) {
    grid.push_back(budget);
    return grid;
  }
  const double lo = 2.0;  // log10(100)
  const double hi = std::log10(double(budget));
  for (int k = 0; k < points; ++k) {
    const double t = lo + (hi - lo) * double(k) / double(points - 1);
    auto b = std::uint64_t(std::llround(std::pow(10.0, t)));
    grid.push_back(std::clamp<std::uint64_t>(b, 100, budget));
  }
  grid.back() = budget;
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::vector<std::string> expand_function_set(const std::string& token) {
  const auto& names = FunctionRegistry::instance().names();
  if (token == "all") return names;
  if (token == "2d")
    return {names.begin(), names.begin() + 15};
  if (token == "lj")
    return {names.begin() + 15, names.begin() + 23};
  if (token == "rastrigin")
    return {names.begin() + 23, names.end()};
  std::vector<std::string> out;
  std::stringstream ss(token);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (!FunctionRegistry::instance().contains(item))
      throw UnknownFunction(item);
    out.push_back(item);
  }
  if (out.empty()) throw UnknownFunction(token);
  return out;
}

RunTrace run_single(const std::string& algo, const std::string& function_name,
                    std::uint64_t budget, std::uint64_t seed) {
  require_algorithm(algo);
  const ObjectiveSpec& spec = FunctionRegistry::instance().get(function_name);
  const Target target = registry_target(function_name);
  EvalBudget reads(budget);
  if (algo == "gas") return gas_run(spec, GasConfig{}, reads, seed, target);
  if (algo == "bh") return bh_run(spec, BhConfig{}, reads, seed, target);
  if (algo == "cs") return cs_run(spec, CsConfig{}, reads, seed, target);
  return de_run(spec, DeConfig{}, reads, seed, target);
}

std::vector<RunTrace> run_concurrent(const std::string& algo,
                                     const std::string& function_name,
                                     std::uint64_t budget, int runs_T,
                                     std::uint64_t base_seed, int workers) {
  require_algorithm(algo);
  (void)FunctionRegistry::instance().get(function_name);
  std::vector<RunTrace> out(runs_T);
  parallel_for(std::size_t(runs_T), workers, [&](std::size_t i) {
    out[i] = run_single(algo, function_name, budget,
                        derive_run_seed(base_seed, i));
  });
  return out;
}

SuccessCurve success_curve(const std::vector<RunTrace>& traces,
                           const std::vector<std::uint64_t>& sample_grid,
                           int runs_T) {
  if (traces.empty()) throw IncompleteData("no traces to aggregate");
  std::map<std::string, std::vector<const RunTrace*>> groups;
  for (const auto& t : traces) groups[t.objective].push_back(&t);
  for (const auto& [name, group] : groups)
    if (int(group.size()) != runs_T)
      throw IncompleteData(name + ": have " + std::to_string(group.size()) +
                           " runs, expected " + std::to_string(runs_T));

  SuccessCurve curve;
  curve.algorithm = traces.front().algorithm;
  curve.runs_T = runs_T;
  curve.points.reserve(sample_grid.size());
  for (std::uint64_t b : sample_grid) {
    int solved = 0;
    for (const auto& [name, group] : groups) {
      const bool any = std::any_of(group.begin(), group.end(),
                                   [&](const RunTrace* t) {
                                     return solved_threshold(*t) <= b;
                                   });
      if (any) ++solved;
    }
    curve.points.push_back({b, double(solved) / double(groups.size())});
  }
  return curve;
}

BenchmarkResults run_plan(const BenchmarkPlan& plan, int workers) {
  BenchmarkResults results;
  results.plan = plan;
  if (results.plan.sample_grid.empty())
    results.plan.sample_grid = log_sample_grid(plan.budget);
  for (const auto& algo : plan.algorithms) require_algorithm(algo);
  for (const auto& fname : plan.functions)
    (void)FunctionRegistry::instance().get(fname);

  struct Unit {
    const std::string* algo;
    const std::string* function;
    std::uint64_t seed;
  };
  std::vector<Unit> units;
  units.reserve(plan.algorithms.size() * plan.functions.size() *
                std::size_t(plan.runs_T));
  for (const auto& algo : results.plan.algorithms)
    for (const auto& fname : results.plan.functions)
      for (int i = 0; i < plan.runs_T; ++i)
        units.push_back({&algo, &fname, derive_run_seed(plan.base_seed, i)});

  results.traces.resize(units.size());
  parallel_for(units.size(), workers, [&](std::size_t i) {
    results.traces[i] =
        run_single(*units[i].algo, *units[i].function, plan.budget,
                   units[i].seed);
  });

  for (const auto& algo : results.plan.algorithms) {
    std::vector<RunTrace> mine;
    for (const auto& t : results.traces)
      if (t.algorithm == algo) mine.push_back(t);
    if (mine.empty()) continue;
    results.curves.push_back(
        success_curve(mine, results.plan.sample_grid, plan.runs_T));
  }
  return results;
}

void export_results(const BenchmarkResults& results,
                    const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string());

  const auto& reg = FunctionRegistry::instance();

  {
    std::ofstream csv(out_dir / "traces.csv", std::ios::binary);
    if (!csv) throw IoError("cannot write traces.csv");
    csv << kCsvHeader << "\n";
    std::string prev_algo, prev_fn;
    int run_id = -1;
    for (const auto& trace : results.traces) {
      if (trace.algorithm != prev_algo || trace.objective != prev_fn) {
        prev_algo = trace.algorithm;
        prev_fn = trace.objective;
        run_id = 0;
      } else {
        ++run_id;
      }
      const double target = reg.known_minimum(trace.objective).first;
      for (const auto& s : trace.samples) {
        csv << trace.algorithm << ',' << trace.objective << ',' << run_id
            << ',' << trace.seed << ',' << s.reads << ','
            << fmt_double(s.best_value) << ','
            << fmt_double(std::abs(s.best_value - target)) << "\n";
      }
    }
    if (!csv) throw IoError("write failed: traces.csv");
  }

  {
    nlohmann::ordered_json j;
    j["plan"] = {{"algorithms", results.plan.algorithms},
                 {"functions", results.plan.functions},
                 {"budget", results.plan.budget},
                 {"runs", results.plan.runs_T},
                 {"base_seed", results.plan.base_seed},
                 {"sample_grid", results.plan.sample_grid}};
    j["runs"] = nlohmann::ordered_json::array();
    std::string prev_algo, prev_fn;
    int run_id = -1;
    for (const auto& trace : results.traces) {
      if (trace.algorithm != prev_algo || trace.objective != prev_fn) {
        prev_algo = trace.algorithm;
        prev_fn = trace.objective;
        run_id = 0;
      } else {
        ++run_id;
      }
      nlohmann::ordered_json r;
      r["algo"] = trace.algorithm;
      r["function"] = trace.objective;
      r["run_id"] = run_id;
      r["seed"] = trace.seed;
      r["status"] = std::string(to_string(trace.status));
      if (trace.solved_at_reads)
        r["solved_at_reads"] = *trace.solved_at_reads;
      else
        r["solved_at_reads"] = nullptr;
      r["final_best"] = trace.final_best();
      r["error"] = std::abs(trace.final_best() -
                            reg.known_minimum(trace.objective).first);
      j["runs"].push_back(std::move(r));
    }
    j["curves"] = nlohmann::ordered_json::array();
    for (const auto& curve : results.curves) {
      nlohmann::ordered_json c;
      c["algorithm"] = curve.algorithm;
      c["runs"] = curve.runs_T;
      c["points"] = nlohmann::ordered_json::array();
      for (const auto& p : curve.points)
        c["points"].push_back({p.reads, p.fraction});
      j["curves"].push_back(std::move(c));
    }
    std::ofstream js(out_dir / "summary.json", std::ios::binary);
    if (!js) throw IoError("cannot write summary.json");
    js << j.dump(2) << "\n";
    if (!js) throw IoError("write failed: summary.json");
  }

  write_curves_svg(results.curves, out_dir / "curves.svg");
}

std::vector<RunTrace> load_traces_csv(const std::filesystem::path& csv_path) {
  std::ifstream in(csv_path, std::ios::binary);
  if (!in) throw IoError("cannot read " + csv_path.string());
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw IoError("unexpected traces.csv header");

  const auto& reg = FunctionRegistry::instance();
  std::vector<RunTrace> traces;
  std::map<std::tuple<std::string, std::string, std::uint64_t>, std::size_t>
      index;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<std::string, 7> field;
    std::size_t start = 0;
    for (int k = 0; k < 7; ++k) {
      const std::size_t comma = line.find(',', start);
      if (k < 6 && comma == std::string::npos)
        throw IoError("malformed row: " + line);
      field[k] = line.substr(start, comma - start);
      start = comma + 1;
    }
    const std::uint64_t run_id = std::stoull(field[2]);
    const auto key = std::make_tuple(field[0], field[1], run_id);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, traces.size()).first;
      RunTrace t;
      t.algorithm = field[0];
      t.objective = field[1];
      t.seed = std::stoull(field[3]);
      traces.push_back(std::move(t));
    }
    traces[it->second].samples.push_back(
        {std::stoull(field[4]), std::stod(field[5])});
  }
  for (auto& t : traces) {
    const double target = reg.known_minimum(t.objective).first;
    const double tol = reg.success_tolerance(t.objective);
    for (const auto& s : t.samples) {
      if (std::abs(s.best_value - target) <= tol) {
        t.solved_at_reads = s.reads;
        t.status = RunStatus::solved;
        break;
      }
    }
  }
  return traces;
}

void rebuild_curves(const std::filesystem::path& in_dir,
                    const std::filesystem::path& out_dir) {
  std::vector<RunTrace> traces = load_traces_csv(in_dir / "traces.csv");

  std::vector<std::string> algo_order;
  std::map<std::string, int> group_sizes;  // algo -> runs per function
  for (const auto& t : traces)
    if (std::find(algo_order.begin(), algo_order.end(), t.algorithm) ==
        algo_order.end())
      algo_order.push_back(t.algorithm);

  // Prefer the original plan's grid; otherwise rebuild one from the data.
  std::vector<std::uint64_t> grid;
  int runs_T = 0;
  const std::filesystem::path summary = in_dir / "summary.json";
  if (std::filesystem::exists(summary)) {
    std::ifstream js(summary, std::ios::binary);
    nlohmann::json j;
    js >> j;
    if (j.contains("plan")) {
      runs_T = j["plan"].value("runs", 0);
      if (j["plan"].contains("sample_grid"))
        grid = j["plan"]["sample_grid"].get<std::vector<std::uint64_t>>();
    }
  }
  if (runs_T == 0) {
    std::map<std::pair<std::string, std::string>, int> counts;
    for (const auto& t : traces) ++counts[{t.algorithm, t.objective}];
    for (const auto& [key, c] : counts) runs_T = std::max(runs_T, c);
    if (runs_T == 0) runs_T = 1;
  }
  if (grid.empty()) {
    std::uint64_t budget = 100;
    for (const auto& t : traces)
      for (const auto& s : t.samples) budget = std::max(budget, s.reads);
    grid = log_sample_grid(budget);
  }

  std::vector<SuccessCurve> curves;
  for (const auto& algo : algo_order) {
    std::vector<RunTrace> mine;
    for (const auto& t : traces)
      if (t.algorithm == algo) mine.push_back(t);
    curves.push_back(success_curve(mine, grid, runs_T));
  }

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string());
  write_curves_svg(curves, out_dir / "curves.svg");
}

}  // namespace gasopt
