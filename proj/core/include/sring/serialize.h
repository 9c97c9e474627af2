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

#ifndef SRING_SERIALIZE_H_
#define SRING_SERIALIZE_H_

#include <string>
#include <string_view>
#include <vector>

#include "sring/catalog.h"
#include "sring/perm_group.h"
#include "sring/sring.h"
#include "sring/suites.h"

namespace sring {

// Malformed input. what() reads "line L: message".
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// S-ring file: "p=<p> n=<n>", then one line per class of space-separated
// element indices, classes sorted by least element.
std::string format_sring(const SRing& a);
// Header and classes of an S-ring file, checked for syntax, range and
// covering only.
struct ParsedPartition {
  GroupContext ctx;
  Partition classes;
};
ParsedPartition parse_partition(std::string_view text);
// Accepts classes in any order; the result is normalized. Throws ParseError
// for syntax or range problems and for partitions that are not S-rings.
SRing parse_sring(std::string_view text);

// Permutation group file: "deg=<N>", then one generator per line as its
// image sequence.
std::string format_perm_group(const PermGroup& g);
PermGroup parse_perm_group(std::string_view text, const Deadline& deadline = {});

// Matrices as n rows of n entries each, blocks separated by blank lines.
std::vector<AutMatrix> parse_matrices(int p, int n, std::string_view text);

// "a,b,c;d,e" -> {{a,b,c},{d,e}}.
std::vector<ElementSet> parse_set_list(std::string_view text);
// "c,a,b" -> {a,b,c}, sorted with duplicates dropped.
ElementSet parse_index_list(std::string_view text);

// Reports as "key: value" lines, or as JSON.
std::string format_report(const ClassificationReport& report);
std::string format_report_json(const ClassificationReport& report);
std::string format_report(const SuiteReport& report);
std::string format_report_json(const SuiteReport& report);

}  // namespace sring

#endif  // SRING_SERIALIZE_H_
