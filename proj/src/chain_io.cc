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

#include "cubefill/chain_io.h"

#include <algorithm>
#include <cerrno>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <system_error>

namespace cubefill {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

ChainParseError::ChainParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                        message
                                  : message),
      line_(line) {}

Chain ReadChain(std::istream& in) {
  std::optional<std::pair<int, int>> header;
  std::vector<Face> faces;
  std::map<Face, int> seen;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!header) {
      std::istringstream fields{std::string(line)};
      std::string tag, extra;
      int n = -1, k = -2;
      if (!(fields >> tag >> n >> k) || tag != "cube" || (fields >> extra)) {
        throw ChainParseError(line_no, "expected header 'cube <n> <k>'");
      }
      if (n < 1 || n > 64 || k < 0 || k > n) {
        throw ChainParseError(line_no, "invalid cube dimensions n=" +
                                           std::to_string(n) +
                                           " k=" + std::to_string(k));
      }
      header.emplace(n, k);
      continue;
    }
    Face f;
    try {
      f = ParseFace(line);
    } catch (const std::invalid_argument& e) {
      throw ChainParseError(line_no, e.what());
    }
    if (f.n() != header->first || f.dim() != header->second) {
      throw ChainParseError(line_no, "face " + std::string(line) +
                                         " is not a " +
                                         std::to_string(header->second) +
                                         "-face of Q_" +
                                         std::to_string(header->first));
    }
    if (auto [it, inserted] = seen.emplace(f, line_no); !inserted) {
      throw ChainParseError(line_no, "duplicate face " + std::string(line) +
                                         " (first on line " +
                                         std::to_string(it->second) + ")");
    }
    faces.push_back(f);
  }
  if (!header) throw ChainParseError(0, "missing 'cube <n> <k>' header");
  return Chain::FromFaces(header->first, header->second, std::move(faces));
}

void WriteChain(std::ostream& out, const Chain& chain) {
  out << "cube " << chain.n() << ' ' << chain.k() << '\n';
  for (const Face& f : chain.faces()) out << f << '\n';
}

Chain ReadChainFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::system_error(errno, std::generic_category(),
                            "cannot open " + path.string());
  }
  return ReadChain(in);
}

void WriteChainFile(const std::filesystem::path& path, const Chain& chain) {
  std::ofstream out(path);
  if (!out) {
    throw std::system_error(errno, std::generic_category(),
                            "cannot write " + path.string());
  }
  WriteChain(out, chain);
  out.flush();
  if (!out) {
    throw std::system_error(errno, std::generic_category(),
                            "write failed for " + path.string());
  }
}

}  // namespace cubefill
