#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "knotvol/diagram.hpp"
#include "knotvol/knotbase.hpp"
#include "knotvol/report.hpp"

#ifndef KNOTVOL_DEFAULT_TABLE
#define KNOTVOL_DEFAULT_TABLE "data/knot_table.csv"
#endif

namespace knotvol::cli {

namespace fs = std::filesystem;

void write_atomically(const fs::path& path, const std::string& contents) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

namespace {

struct Settings {
  std::string format = "json";
  bool color3 = false;
  std::size_t max_crossings = 10;
  unsigned jobs = 0;
  std::string table = KNOTVOL_DEFAULT_TABLE;
  std::string out_dir;
  std::string input;
};

AnalysisOptions analysis_options(const Settings& s, bool skip_over_budget) {
  AnalysisOptions o;
  o.color3 = s.color3;
  o.max_color3_crossings = s.max_crossings;
  o.skip_color3_over_budget = skip_over_budget;
  return o;
}

std::string render(const Analysis& a, const std::string& format) {
  if (format == "csv") return csv_header() + "\n" + to_csv_row(a) + "\n";
  if (format == "text") return to_text(a);
  return to_json(a).dump(2) + "\n";
}

std::string extension(const std::string& format) { return format == "text" ? "txt" : format; }

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

// A table is optional for analyze: it only resolves names and reference volumes.
std::optional<KnotTable> try_table(const std::string& path) {
  if (!fs::exists(path)) return std::nullopt;
  return KnotTable(load_table(path).records);
}

int cmd_analyze(const Settings& s, std::ostream& out, std::ostream& err) {
  try {
    const auto table = try_table(s.table);
    std::string name;
    std::string pd;
    if (fs::is_regular_file(s.input)) {
      name = fs::path(s.input).stem().string();
      pd = slurp(s.input);
    } else if (const KnotRecord* r = table ? table->find(s.input) : nullptr) {
      name = r->name;
      pd = r->pd;
    } else {
      err << "error: '" << s.input << "' is neither a PD file nor a knot in " << s.table << "\n";
      return kExitError;
    }
    const std::optional<double> volume = table ? table->reference_volume(name) : std::nullopt;
    const Analysis a = analyze(parse_pd(pd), name, analysis_options(s, false), volume);
    const std::string text = render(a, s.format);
    if (!s.out_dir.empty()) {
      fs::create_directories(s.out_dir);
      write_atomically(fs::path(s.out_dir) / (name + "." + extension(s.format)), text);
    }
    out << text;
    return kExitOk;
  } catch (const ValidationRejected& e) {
    err << "rejected: " << e.what() << "\n";
    for (const auto& m : e.report().messages) err << "  " << m << "\n";
    return kExitRejected;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

struct BatchRow {
  std::string name;
  std::optional<double> best;
  std::optional<double> reference;
  std::optional<double> slack;
  bool residuals_ok = false;
  bool below_reference = false;
  std::string status;
};

BatchRow run_one(const KnotRecord& r, const Settings& s, const fs::path& out_dir) {
  BatchRow row;
  row.name = r.name;
  row.reference = r.reference_volume;
  try {
    const Analysis a = analyze(parse_pd(r.pd), r.name, analysis_options(s, true), r.reference_volume);
    write_atomically(out_dir / (r.name + "." + extension(s.format)), render(a, s.format));
    row.best = a.bounds.best;
    row.slack = a.bounds.slack;
    row.residuals_ok = a.residuals_ok;
    if (r.reference_volume) {
      for (const Bound* b : a.bounds.all()) {
        if (b->applicable && b->value() < *r.reference_volume - 1e-9) row.below_reference = true;
      }
    }
    row.status = row.below_reference ? "bound below reference volume"
                 : row.residuals_ok  ? "ok"
                                     : "nonzero residual";
  } catch (const ValidationRejected& e) {
    row.status = "rejected: " + e.gate();
  } catch (const std::exception& e) {
    row.status = std::string("failed: ") + e.what();
  }
  return row;
}

int cmd_batch(const Settings& s, std::ostream& out, std::ostream& err) {
  TableLoad load;
  try {
    load = load_table(s.table);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  const fs::path out_dir = s.out_dir.empty() ? fs::path("knotvol-reports") : fs::path(s.out_dir);
  fs::create_directories(out_dir);

  std::vector<BatchRow> rows(load.records.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::min<unsigned>(s.jobs ? s.jobs : std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(std::max<std::size_t>(1, rows.size()))));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) rows[i] = run_one(load.records[i], s, out_dir);
      });
    }
  }

  std::string summary = "name,best_bound,reference_volume,slack,residuals_ok,status\n";
  bool failed = false;
  int problems = 0;
  for (const auto& e : load.errors) {
    summary += csv_field(e.name) + ",,,,," + csv_field("failed: line " + std::to_string(e.line) + ": " + e.message) + "\n";
    ++problems;
  }
  for (const auto& r : rows) {
    summary += csv_field(r.name) + ',' + (r.best ? number(*r.best) : "") + ',' +
               (r.reference ? number(*r.reference) : "") + ',' + (r.slack ? number(*r.slack) : "") + ',' +
               (r.best ? (r.residuals_ok ? "true" : "false") : "") + ',' + csv_field(r.status) + "\n";
    if (r.best && (!r.residuals_ok || r.below_reference)) failed = true;
    if (r.status != "ok") ++problems;
  }
  write_atomically(out_dir / "summary.csv", summary);
  out << rows.size() + load.errors.size() << " entries, " << problems << " not ok; summary in "
      << (out_dir / "summary.csv").string() << "\n";
  return failed ? kExitError : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Volume bounds for alternating knot and link diagrams"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "knotvol 0.1.0");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", s.format, "Report format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_flag("--color3", s.color3, "Also compute the n = 3 colored Jones polynomial");
    sub->add_option("--max-crossings", s.max_crossings, "Base-crossing budget for J(3)")->check(CLI::PositiveNumber);
    sub->add_option("--table", s.table, "Knot table CSV");
    sub->add_option("--out", s.out_dir, "Directory for report files");
  };
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Analyze one diagram (PD file or table name)");
  analyze_cmd->add_option("input", s.input, "PD file or knot name")->required();
  common(analyze_cmd);
  CLI::App* batch_cmd = app.add_subcommand("batch", "Analyze every knot in the table");
  common(batch_cmd);
  batch_cmd->add_option("--jobs", s.jobs, "Worker threads (0 = hardware concurrency)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }
  if (analyze_cmd->parsed()) return cmd_analyze(s, out, err);
  return cmd_batch(s, out, err);
}

}  // namespace knotvol::cli
