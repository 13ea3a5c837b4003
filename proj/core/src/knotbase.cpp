#include "knotvol/knotbase.hpp"

#include <boost/tokenizer.hpp>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "knotvol/diagram.hpp"
#include "knotvol/error.hpp"

namespace knotvol {

namespace {

using Tokenizer = boost::tokenizer<boost::escaped_list_separator<char>>;

std::vector<std::string> split_row(const std::string& line) {
  Tokenizer tok(line);
  return {tok.begin(), tok.end()};
}

std::string quoted(const std::string& field) {
  if (field.find_first_of(",\"\\") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + '"';
}

std::string format_volume(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string trim_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

TableLoad parse_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || trim_cr(line) != kTableHeader) {
    throw TableError("table header must be '" + std::string(kTableHeader) + "'");
  }
  TableLoad out;
  std::set<std::string> seen;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim_cr(line);
    if (line.empty()) continue;
    std::vector<std::string> f;
    try {
      f = split_row(line);
    } catch (const boost::escaped_list_error& e) {
      out.errors.push_back({lineno, "", std::string("malformed CSV: ") + e.what()});
      continue;
    }
    if (f.size() != 5) {
      out.errors.push_back({lineno, f.empty() ? "" : f[0],
                            "expected 5 fields, found " + std::to_string(f.size())});
      continue;
    }
    if (!seen.insert(f[0]).second) throw TableError("duplicate knot name '" + f[0] + "' on line " + std::to_string(lineno));

    KnotRecord r;
    r.name = f[0];
    r.pd = f[2];
    r.provenance = f[4];
    auto bad = [&](const std::string& msg) { out.errors.push_back({lineno, r.name, msg}); };
    const auto& c = f[1];
    if (auto [p, ec] = std::from_chars(c.data(), c.data() + c.size(), r.crossings);
        ec != std::errc{} || p != c.data() + c.size()) {
      bad("crossing count '" + c + "' is not an integer");
      continue;
    }
    if (!f[3].empty()) {
      double v = 0;
      const auto& s = f[3];
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || p != s.data() + s.size() || !(v > 0)) {
        bad("volume '" + s + "' is not a positive number");
        continue;
      }
      r.reference_volume = v;
    }
    try {
      const LinkDiagram d = parse_pd(r.pd);
      if (static_cast<int>(d.crossing_count()) != r.crossings) {
        bad("PD code has " + std::to_string(d.crossing_count()) + " crossings, row says " +
            std::to_string(r.crossings));
        continue;
      }
    } catch (const Error& e) {
      bad(std::string("invalid PD code: ") + e.what());
      continue;
    }
    out.records.push_back(std::move(r));
  }
  return out;
}

TableLoad load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TableError("cannot open knot table " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

std::string format_table(std::span<const KnotRecord> records) {
  std::string out(kTableHeader);
  out += '\n';
  for (const auto& r : records) {
    out += quoted(r.name) + ',' + std::to_string(r.crossings) + ",\"" + r.pd + "\"," +
           (r.reference_volume ? format_volume(*r.reference_volume) : "") + ',' +
           quoted(r.provenance) + '\n';
  }
  return out;
}

void save_table(const std::filesystem::path& path, std::span<const KnotRecord> records) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw TableError("cannot write " + tmp.string());
    out << format_table(records);
    if (!out.flush()) throw TableError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

KnotTable::KnotTable(std::vector<KnotRecord> records) : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    if (!index_.emplace(records_[i].name, i).second) {
      throw TableError("duplicate knot name '" + records_[i].name + "'");
    }
  }
}

const KnotRecord* KnotTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? nullptr : &records_[it->second];
}

std::optional<double> KnotTable::reference_volume(std::string_view name) const {
  const KnotRecord* r = find(name);
  return r ? r->reference_volume : std::nullopt;
}

}  // namespace knotvol
