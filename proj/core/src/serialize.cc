// Copyright 2026 The sring Authors.
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

#include "sring/serialize.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sring {
namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// Non-blank lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view line = trim(text.substr(0, end));
    if (!line.empty()) out.push_back({number, line});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const std::size_t pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  for (std::string_view w : split(s, ' '))
    if (!w.empty()) out.push_back(w);
  return out;
}

long long parse_int(std::string_view s, std::size_t line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(line, std::string("expected an integer for ") + what +
                               ", got '" + std::string(s) + "'");
  return value;
}

// Parses "key=<int>".
long long parse_field(std::string_view word, std::string_view key,
                      std::size_t line) {
  if (word.size() <= key.size() + 1 || word.substr(0, key.size()) != key ||
      word[key.size()] != '=')
    throw ParseError(line, "expected '" + std::string(key) + "=<value>', got '" +
                               std::string(word) + "'");
  return parse_int(word.substr(key.size() + 1), line, std::string(key).c_str());
}

std::string join(const ElementSet& set, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(set[i]);
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// "1^27" style multiset.
std::string size_multiset(const std::vector<std::size_t>& sorted) {
  std::string out;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    if (!out.empty()) out += ' ';
    out += std::to_string(sorted[i]) + "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string inline_sring(const SRing& a) {
  std::string out;
  for (const ElementSet& cls : a.classes()) {
    if (!out.empty()) out += " | ";
    out += join(cls, " ");
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string format_sring(const SRing& a) {
  std::string out = "p=" + std::to_string(a.context().p()) +
                    " n=" + std::to_string(a.context().n()) + "\n";
  for (const ElementSet& cls : a.classes()) out += join(cls, " ") + "\n";
  return out;
}

namespace {

struct PartitionLines {
  ParsedPartition parsed;
  std::vector<std::size_t> line_of;  // line of each element
  std::size_t header_line;
};

PartitionLines read_partition(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header 'p=<p> n=<n>'");
  const auto header = words(lines[0].text);
  if (header.size() != 2)
    throw ParseError(lines[0].number, "header must be 'p=<p> n=<n>'");
  const long long p = parse_field(header[0], "p", lines[0].number);
  const long long n = parse_field(header[1], "n", lines[0].number);
  if (p < 3 || p > 251 || !is_prime(static_cast<int>(p)))
    throw ParseError(lines[0].number, "p must be an odd prime");
  if (n < 0 || n > 8) throw ParseError(lines[0].number, "n must be in 0..8");
  GroupContext ctx(static_cast<int>(p), static_cast<int>(n));

  Partition partition;
  std::vector<std::size_t> line_of(ctx.order(), 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    ElementSet cls;
    for (std::string_view w : words(lines[i].text)) {
      const long long h = parse_int(w, lines[i].number, "element index");
      if (h < 0 || h >= static_cast<long long>(ctx.order()))
        throw ParseError(lines[i].number,
                         "element " + std::string(w) + " out of range");
      if (line_of[h] != 0)
        throw ParseError(lines[i].number,
                         "element " + std::string(w) + " already listed on line " +
                             std::to_string(line_of[h]));
      line_of[h] = lines[i].number;
      cls.push_back(static_cast<Index>(h));
    }
    partition.push_back(std::move(cls));
  }
  for (Index h = 0; h < ctx.order(); ++h)
    if (line_of[h] == 0)
      throw ParseError(lines.back().number,
                       "element " + std::to_string(h) + " is in no class");
  return {{ctx, std::move(partition)}, std::move(line_of), lines[0].number};
}

}  // namespace

ParsedPartition parse_partition(std::string_view text) {
  return read_partition(text).parsed;
}

SRing parse_sring(std::string_view text) {
  PartitionLines read = read_partition(text);
  const GroupContext& ctx = read.parsed.ctx;
  const Verdict verdict = verify_sring(ctx, read.parsed.classes);
  if (!verdict.ok()) {
    const std::size_t line = verdict.failure == Verdict::Failure::kIdentityClass
                                 ? read.line_of[0]
                                 : read.header_line;
    throw ParseError(line, "not an S-ring (" + to_string(verdict.failure) +
                               "): " + verdict.message);
  }
  return SRing::create(ctx, std::move(read.parsed.classes));
}

std::string format_perm_group(const PermGroup& g) {
  std::string out = "deg=" + std::to_string(g.degree()) + "\n";
  for (const Permutation& s : g.generators()) {
    for (std::size_t i = 0; i < s.degree(); ++i) {
      if (i) out += ' ';
      out += std::to_string(s(static_cast<Point>(i)));
    }
    out += '\n';
  }
  return out;
}

PermGroup parse_perm_group(std::string_view text, const Deadline& deadline) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header 'deg=<N>'");
  const long long deg = parse_field(trim(lines[0].text), "deg", lines[0].number);
  if (deg < 1 || deg > 65535)
    throw ParseError(lines[0].number, "degree out of range");
  std::vector<Permutation> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto w = words(lines[i].text);
    if (static_cast<long long>(w.size()) != deg)
      throw ParseError(lines[i].number, "expected " + std::to_string(deg) +
                                            " images, got " + std::to_string(w.size()));
    std::vector<Point> images;
    for (std::string_view x : w) {
      const long long v = parse_int(x, lines[i].number, "image");
      if (v < 0 || v >= deg)
        throw ParseError(lines[i].number, "image " + std::string(x) + " out of range");
      images.push_back(static_cast<Point>(v));
    }
    try {
      gens.emplace_back(std::move(images));
    } catch (const InputError& e) {
      throw ParseError(lines[i].number, e.what());
    }
  }
  return PermGroup::generate(static_cast<std::size_t>(deg), std::move(gens), {},
                             deadline);
}

std::vector<AutMatrix> parse_matrices(int p, int n, std::string_view text) {
  std::vector<AutMatrix> out;
  std::vector<int> entries;
  std::size_t block_start = 0;
  auto flush = [&](std::size_t line) {
    if (entries.empty()) return;
    if (entries.size() != static_cast<std::size_t>(n * n))
      throw ParseError(block_start, "matrix block ending before line " +
                                        std::to_string(line) + " needs " +
                                        std::to_string(n) + " rows");
    Matrix m(p, n, entries);
    if (m.determinant() == 0) throw ParseError(block_start, "matrix is singular");
    out.emplace_back(std::move(m));
    entries.clear();
  };
  std::size_t number = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++number;
    std::string_view line = trim(raw);
    if (line.empty()) {
      flush(number);
      continue;
    }
    if (entries.empty()) block_start = number;
    const auto w = words(line);
    if (static_cast<int>(w.size()) != n)
      throw ParseError(number, "expected " + std::to_string(n) + " entries");
    for (std::string_view x : w)
      entries.push_back(static_cast<int>(parse_int(x, number, "matrix entry")));
  }
  flush(number + 1);
  if (out.empty()) throw ParseError(1, "no matrices given");
  return out;
}

ElementSet parse_index_list(std::string_view text) {
  ElementSet out;
  if (trim(text).empty()) return out;
  for (std::string_view w : split(text, ',')) {
    const long long v = parse_int(w, 1, "element index");
    if (v < 0) throw ParseError(1, "negative element index");
    out.push_back(static_cast<Index>(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ElementSet> parse_set_list(std::string_view text) {
  std::vector<ElementSet> out;
  for (std::string_view part : split(text, ';')) out.push_back(parse_index_list(part));
  return out;
}

std::string format_report(const ClassificationReport& report) {
  std::ostringstream out;
  out << "p: " << report.p << "\n"
      << "n: " << report.n << "\n"
      << "scope: " << report.scope << "\n"
      << "total_inputs: " << report.total_inputs << "\n"
      << "classes: " << report.classes.size() << "\n"
      << "matches_table: " << yes_no(report.matches_table()) << "\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const ClassificationClass& c = report.classes[i];
    out << "\n"
        << "class: " << i + 1 << "\n"
        << "row: " << c.row << "\n"
        << "rank: " << c.fingerprint.rank << "\n"
        << "class_sizes: " << size_multiset(c.fingerprint.class_sizes) << "\n"
        << "subgroups_by_dim:";
    for (std::size_t k : c.fingerprint.subgroups_by_dim) out << ' ' << k;
    out << "\n"
        << "decomposable: " << yes_no(c.fingerprint.decomposable) << "\n"
        << "schurian: " << yes_no(c.schurian) << "\n"
        << "members: " << c.member_count << "\n"
        << "representative: " << inline_sring(c.representative) << "\n";
  }
  return out.str();
}

std::string format_report_json(const ClassificationReport& report) {
  nlohmann::ordered_json j;
  j["p"] = report.p;
  j["n"] = report.n;
  j["scope"] = report.scope;
  j["total_inputs"] = report.total_inputs;
  j["matches_table"] = report.matches_table();
  j["classes"] = nlohmann::ordered_json::array();
  for (const ClassificationClass& c : report.classes) {
    nlohmann::ordered_json k;
    k["row"] = c.row;
    k["rank"] = c.fingerprint.rank;
    k["class_sizes"] = c.fingerprint.class_sizes;
    k["subgroups_by_dim"] = c.fingerprint.subgroups_by_dim;
    k["decomposable"] = c.fingerprint.decomposable;
    k["schurian"] = c.schurian;
    k["members"] = c.member_count;
    k["representative"] = c.representative.classes();
    j["classes"].push_back(std::move(k));
  }
  return j.dump(2) + "\n";
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite: " << report.name << "\n"
      << "p: " << report.p << "\n"
      << "seed: " << report.seed << "\n"
      << "trials: " << report.trials << "\n"
      << "cases: " << report.cases << "\n"
      << "skipped: " << report.skipped << "\n"
      << "failures: " << report.failures.size() << "\n"
      << "seconds: " << report.seconds << "\n"
      << "verdict: " << (report.passed() ? "pass" : "fail") << "\n";
  for (const SuiteFailure& f : report.failures)
    out << "failure: " << f.input << " :: " << f.message << "\n";
  return out.str();
}

std::string format_report_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.name;
  j["p"] = report.p;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["cases"] = report.cases;
  j["skipped"] = report.skipped;
  j["seconds"] = report.seconds;
  j["verdict"] = report.passed() ? "pass" : "fail";
  j["failures"] = nlohmann::ordered_json::array();
  for (const SuiteFailure& f : report.failures)
    j["failures"].push_back({{"input", f.input}, {"message", f.message}});
  return j.dump(2) + "\n";
}

}  // namespace sring
