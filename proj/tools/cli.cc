// Copyright 2026 The cubefill Authors
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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <ostream>
#include <sstream>
#include <system_error>
#include <utility>

#include "CLI11.hpp"
#include "cubefill/chain.h"
#include "cubefill/chain_io.h"
#include "cubefill/constants.h"
#include "cubefill/filling.h"
#include "cubefill/minimizers.h"

namespace cubefill::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxMinimizerDimension = 20;
constexpr std::int64_t kDefaultBudget = 1'000'000;

std::string FormatDouble(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

Json BigToJson(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) {
    return v.convert_to<std::uint64_t>();
  }
  return v.str();
}

std::string RationalString(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

Json FaceList(const Chain& c) {
  Json list = Json::array();
  for (const Face& f : c.faces()) list.push_back(RenderFace(f));
  return list;
}

Json LinearBoundJson(int n, int k, std::uint64_t norm) {
  const Rational bound = FillBoundLinear(n, k, norm);
  std::ostringstream inst;
  inst << "(" << n << "-" << k << ")/(2*" << k + 1 << ") * " << norm;
  return Json{{"closed_form", "(n-k)/(2(k+1)) * ||z||"},
              {"instantiated", inst.str()},
              {"exact", RationalString(bound)},
              {"value", boost::rational_cast<double>(bound)}};
}

Json PowerBoundJson(int k, std::uint64_t norm) {
  std::ostringstream inst;
  inst << "c_" << k << " * " << norm << "^(" << k + 1 << "/" << k << ")";
  return Json{{"closed_form", "c_k * ||z||^((k+1)/k)"},
              {"instantiated", inst.str()},
              {"c_k", FillingConstant(k)},
              {"value", FillBoundPower(k, norm)},
              {"relative_tolerance", kBoundRelativeTolerance}};
}

Json TraceJson(const RecursionTrace& t) {
  return Json{{"top_cell", t.top_cell},   {"subcube_shrink", t.subcube_shrink},
              {"components", t.components}, {"case1", t.case1},
              {"case2", t.case2},           {"case3", t.case3},
              {"max_depth", t.max_depth}};
}

// Scalars print bare; arrays of scalars are space-joined; nested objects
// and arrays of objects flatten to dotted keys.
void Flatten(const std::string& prefix, const Json& j,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      Flatten(prefix.empty() ? key : prefix + "." + key, value, rows);
    }
  } else if (j.is_array()) {
    const bool scalars = std::none_of(j.begin(), j.end(), [](const Json& e) {
      return e.is_structured();
    });
    if (scalars) {
      std::string joined;
      for (const Json& e : j) {
        if (!joined.empty()) joined += ' ';
        joined += e.is_string() ? e.get<std::string>() : e.dump();
      }
      rows.emplace_back(prefix, joined.empty() ? "(none)" : joined);
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) {
        Flatten(prefix + "." + std::to_string(i), j[i], rows);
      }
    }
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

// Prints the report and maps its status to an exit code.
int Finish(std::ostream& sink, const Report& report, bool json) {
  PrintReport(sink, report, json);
  switch (report.status) {
    case Status::kOk:
      return kOk;
    case Status::kBoundViolation:
      return kBoundViolation;
    case Status::kInvalidInput:
      return kInvalidInput;
  }
  return kInvalidInput;
}

int Invalid(std::ostream& sink, Report report, const std::string& message,
            bool json) {
  report.status = Status::kInvalidInput;
  report.results["error"] = message;
  return Finish(sink, report, json);
}

int IoFailure(std::ostream& err, const std::exception& e) {
  err << "cubefill: " << e.what() << "\n";
  return kIoError;
}

// Runs `body`, turning parse errors and argument errors into invalid-input
// reports and filesystem failures into exit code 4.
template <typename Body>
int Guard(const Streams& io, Report& report, bool json, Body body) {
  try {
    return body();
  } catch (const ChainParseError& e) {
    report.results["line"] = e.line();
    return Invalid(io.out, report, e.what(), json);
  } catch (const std::system_error& e) {
    return IoFailure(io.err, e);
  } catch (const std::invalid_argument& e) {
    return Invalid(io.out, report, e.what(), json);
  } catch (const std::out_of_range& e) {
    return Invalid(io.out, report, e.what(), json);
  }
}

void EmitChain(const std::string& path, const Chain& chain, std::ostream& out) {
  if (path.empty()) {
    WriteChain(out, chain);
  } else {
    WriteChainFile(path, chain);
  }
}

struct GenOptions {
  int n = 0;
  int k = 0;
  std::string out;
  bool json = false;
};

int GenMinimizer(const GenOptions& opt, const Streams& io) {
  Report report;
  report.command = "gen-minimizer";
  report.inputs = Json{{"n", opt.n}, {"k", opt.k}};
  if (!opt.out.empty()) report.inputs["out"] = opt.out;
  // With no --out the chain owns stdout and the report moves to stderr.
  std::ostream& sink = opt.out.empty() ? io.err : io.out;
  return Guard(io, report, opt.json, [&] {
    if (opt.k < 1 || opt.k >= opt.n || opt.n > kMaxMinimizerDimension) {
      return Invalid(io.out, report,
                     "gen-minimizer needs 1 <= k < n <= " +
                         std::to_string(kMaxMinimizerDimension),
                     opt.json);
    }
    const Chain z = MinimizerCycle(opt.n, opt.k);
    EmitChain(opt.out, z, io.out);
    report.results["norm"] = z.norm();
    report.results["norm_formula"] = Json{
        {"closed_form", "2*C(n,k)"}, {"value", BigToJson(MinimizerNorm(opt.n, opt.k))}};
    report.results["fill_formula"] =
        Json{{"closed_form", "C(n,k+1)"},
             {"value", BigToJson(MinimizerFillValue(opt.n, opt.k))}};
    return Finish(sink, report, opt.json);
  });
}

struct FillOptions {
  std::string in;
  std::string strategy = "recursive";
  std::int64_t budget = kDefaultBudget;
  std::string out;
  bool json = false;
};

int Fill(const FillOptions& opt, const Streams& io) {
  Report report;
  report.command = "fill";
  const std::string out_path = opt.out.empty() ? opt.in + ".fill" : opt.out;
  report.inputs = Json{{"path", opt.in}, {"strategy", opt.strategy}};
  if (opt.strategy == "exact") report.inputs["budget"] = opt.budget;
  report.inputs["out"] = out_path;

  return Guard(io, report, opt.json, [&] {
    const Strategy strategy = ParseStrategy(opt.strategy);
    const Chain z = ReadChainFile(opt.in);
    const int n = z.n();
    const int k = z.k();
    report.results["n"] = n;
    report.results["k"] = k;
    report.results["input_norm"] = z.norm();

    try {
      RequireFillable(z);
    } catch (const NotACycleError& e) {
      report.results["is_cycle"] = false;
      report.results["boundary_faces"] = FaceList(e.boundary());
      return Invalid(io.out, report, e.what(), opt.json);
    }

    FillResult result;
    switch (strategy) {
      case Strategy::kLinear:
        result = LinearFill(z);
        break;
      case Strategy::kRecursive:
        result = RecursiveFill(z);
        break;
      case Strategy::kExact:
        result = ExactFill(z, opt.budget, Execution::kSerial);
        break;
    }

    const std::uint64_t weight = result.filling.norm();
    const bool valid = Boundary(result.filling) == z;
    bool within = false;
    if (strategy == Strategy::kRecursive) {
      within = WithinBound(static_cast<double>(weight), result.bound_certificate);
      report.results["bound"] = PowerBoundJson(k, z.norm());
    } else {
      within = Rational(static_cast<std::int64_t>(weight)) <= *result.linear_bound;
      report.results["bound"] = LinearBoundJson(n, k, z.norm());
    }
    report.results["filling_norm"] = weight;
    report.results["boundary_matches"] = valid;
    report.results["within_bound"] = within;
    if (strategy == Strategy::kExact) {
      report.results["optimal"] = result.optimal;
      report.results["nodes_explored"] = result.nodes_explored;
    }
    if (strategy == Strategy::kRecursive) {
      report.results["trace"] = TraceJson(result.trace);
    }
    if (!valid || !within) {
      report.status = Status::kBoundViolation;
      return Finish(io.out, report, opt.json);
    }
    WriteChainFile(out_path, result.filling);
    report.results["output"] = out_path;
    return Finish(io.out, report, opt.json);
  });
}

struct VerifyOptions {
  std::string in;
  bool json = false;
};

int Verify(const VerifyOptions& opt, const Streams& io) {
  Report report;
  report.command = "verify";
  report.inputs = Json{{"path", opt.in}};
  return Guard(io, report, opt.json, [&] {
    const Chain z = ReadChainFile(opt.in);
    const Chain boundary = Boundary(z);
    const SubcubeRestriction sub = SupportSubcube(z);
    Json active = Json::array();
    for (int i = 0; i < z.n(); ++i) {
      if ((sub.active_mask >> i) & 1) active.push_back(i + 1);
    }
    Json& r = report.results;
    r["n"] = z.n();
    r["k"] = z.k();
    r["norm"] = z.norm();
    r["is_cycle"] = boundary.empty();
    if (!boundary.empty()) r["boundary_faces"] = FaceList(boundary);
    if (z.k() == 0) r["fillable"] = z.norm() % 2 == 0;
    r["components"] = ConnectedComponents(z).size();
    r["support_subcube_dimension"] = sub.restricted.n();
    r["active_coordinates"] = active;
    return Finish(io.out, report, opt.json);
  });
}

struct SharpnessOptions {
  int k = 0;
  int n_max = 0;
  int n_min = 0;
  bool csv = false;
  bool json = false;
};

void PrintSharpnessText(std::ostream& out,
                        const std::vector<SharpnessRow>& rows) {
  const std::vector<std::string> header = {"n",     "norm",      "fill",
                                           "ratio", "asymptote", "quotient"};
  std::vector<std::vector<std::string>> cells;
  cells.push_back(header);
  for (const SharpnessRow& row : rows) {
    cells.push_back({std::to_string(row.n), row.norm.str(), row.fill.str(),
                     FormatDouble(row.ratio), FormatDouble(row.asymptote),
                     FormatDouble(row.quotient)});
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      width[c] = std::max(width[c], line[c].size());
    }
  }
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c > 0) out << "  ";
      out << std::string(width[c] - line[c].size(), ' ') << line[c];
    }
    out << "\n";
  }
}

int Sharpness(const SharpnessOptions& opt, const Streams& io) {
  Report report;
  report.command = "sharpness";
  report.inputs = Json{{"k", opt.k}, {"n_max", opt.n_max}, {"n_min", opt.n_min}};
  return Guard(io, report, opt.json, [&] {
    if (opt.k < 1) return Invalid(io.out, report, "sharpness needs k >= 1", opt.json);
    const auto rows = SharpnessTable(opt.k, opt.n_max, opt.n_min);
    if (opt.csv) {
      io.out << "n,norm,fill,ratio,asymptote,quotient\n";
      for (const SharpnessRow& row : rows) {
        io.out << row.n << ',' << row.norm << ',' << row.fill << ','
               << FormatDouble(row.ratio) << ',' << FormatDouble(row.asymptote)
               << ',' << FormatDouble(row.quotient) << "\n";
      }
      return static_cast<int>(kOk);
    }
    if (!opt.json) {
      PrintSharpnessText(io.out, rows);
      return static_cast<int>(kOk);
    }
    Json table = Json::array();
    for (const SharpnessRow& row : rows) {
      table.push_back(Json{{"n", row.n},
                           {"norm", BigToJson(row.norm)},
                           {"fill", BigToJson(row.fill)},
                           {"ratio", row.ratio},
                           {"asymptote", row.asymptote},
                           {"quotient", row.quotient}});
    }
    report.results["ratio_formula"] = "C(n,k+1) / (2*C(n,k))^((k+1)/k)";
    report.results["asymptote_formula"] = "(k!)^(1/k) / (2^((k+1)/k) * (k+1))";
    report.results["rows"] = std::move(table);
    return Finish(io.out, report, opt.json);
  });
}

struct RandomOptions {
  int n = 0;
  int k = 0;
  double density = 0.5;
  std::uint64_t seed = 0;
  std::string out;
  bool json = false;
};

int Random(const RandomOptions& opt, const Streams& io) {
  Report report;
  report.command = "random";
  report.inputs = Json{{"n", opt.n},           {"k", opt.k},
                       {"density", opt.density}, {"seed", opt.seed}};
  if (!opt.out.empty()) report.inputs["out"] = opt.out;
  std::ostream& sink = opt.out.empty() ? io.err : io.out;
  return Guard(io, report, opt.json, [&] {
    const Chain z = RandomCycle(opt.n, opt.k, opt.density, opt.seed);
    EmitChain(opt.out, z, io.out);
    report.results["norm"] = z.norm();
    return Finish(sink, report, opt.json);
  });
}

}  // namespace

const char* StatusName(Status s) {
  switch (s) {
    case Status::kOk:
      return "ok";
    case Status::kBoundViolation:
      return "bound-violation";
    case Status::kInvalidInput:
      return "invalid-input";
  }
  return "invalid-input";
}

nlohmann::ordered_json Report::ToJson() const {
  return Json{{"command", command},
              {"inputs", inputs},
              {"results", results},
              {"status", StatusName(status)}};
}

Report Report::FromJson(const nlohmann::ordered_json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.results = j.at("results");
  const std::string status = j.at("status").get<std::string>();
  if (status == "ok") {
    r.status = Status::kOk;
  } else if (status == "bound-violation") {
    r.status = Status::kBoundViolation;
  } else if (status == "invalid-input") {
    r.status = Status::kInvalidInput;
  } else {
    throw std::invalid_argument("unknown report status '" + status + "'");
  }
  return r;
}

void PrintReport(std::ostream& out, const Report& report, bool json) {
  if (json) {
    out << report.ToJson().dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("command", report.command);
  rows.emplace_back("status", StatusName(report.status));
  Flatten("inputs", report.inputs, rows);
  Flatten("results", report.results, rows);
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  for (const auto& [key, value] : rows) {
    out << key << std::string(width - key.size() + 2, ' ') << value << "\n";
  }
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fillings of Z2 cycles in the n-cube.", "cubefill"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand(
      "gen-minimizer", "Write the alternating-block cycle z^k_n.");
  gen_cmd->add_option("n", gen.n, "ambient dimension")->required();
  gen_cmd->add_option("k", gen.k, "cycle degree")->required();
  gen_cmd->add_option("--out", gen.out, "chain file (default: stdout)");
  gen_cmd->add_flag("--json", gen.json, "machine-readable report");

  FillOptions fill;
  auto* fill_cmd = app.add_subcommand("fill", "Fill a cycle read from a chain file.");
  fill_cmd->add_option("input", fill.in, "chain file")->required();
  fill_cmd->add_option("--strategy", fill.strategy, "linear, recursive or exact")
      ->check(CLI::IsMember({"linear", "recursive", "exact"}))
      ->capture_default_str();
  fill_cmd->add_option("--budget", fill.budget, "node budget for exact")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fill_cmd->add_option("--out", fill.out, "filling file (default: <input>.fill)");
  fill_cmd->add_flag("--json", fill.json, "machine-readable report");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Describe a chain file.");
  verify_cmd->add_option("input", verify.in, "chain file")->required();
  verify_cmd->add_flag("--json", verify.json, "machine-readable report");

  SharpnessOptions sharp;
  auto* sharp_cmd = app.add_subcommand(
      "sharpness", "Tabulate Fill(z^k_n) / ||z^k_n||^((k+1)/k) against its limit.");
  sharp_cmd->add_option("k", sharp.k, "cycle degree")->required();
  sharp_cmd->add_option("n_max", sharp.n_max, "last row")->required();
  sharp_cmd->add_option("--n-min", sharp.n_min, "first row (clamped to k+1)");
  auto* csv_flag = sharp_cmd->add_flag("--csv", sharp.csv, "CSV output");
  auto* json_flag = sharp_cmd->add_flag("--json", sharp.json, "machine-readable report");
  csv_flag->excludes(json_flag);

  RandomOptions random;
  auto* random_cmd = app.add_subcommand(
      "random", "Write the boundary of a random (k+1)-chain.");
  random_cmd->add_option("n", random.n, "ambient dimension")->required();
  random_cmd->add_option("k", random.k, "cycle degree")->required();
  random_cmd->add_option("--density", random.density, "cell probability in [0,1]")
      ->capture_default_str();
  random_cmd->add_option("--seed", random.seed, "generator seed")
      ->capture_default_str();
  random_cmd->add_option("--out", random.out, "chain file (default: stdout)");
  random_cmd->add_flag("--json", random.json, "machine-readable report");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kOk : kInvalidInput;
  }

  const Streams io{out, err};
  if (gen_cmd->parsed()) return GenMinimizer(gen, io);
  if (fill_cmd->parsed()) return Fill(fill, io);
  if (verify_cmd->parsed()) return Verify(verify, io);
  if (sharp_cmd->parsed()) return Sharpness(sharp, io);
  return Random(random, io);
}

}  // namespace cubefill::cli
