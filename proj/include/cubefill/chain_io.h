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

// Line-oriented chain files:
//
//   # optional comment lines
//   cube <n> <k>
//   0*1
//   **0
//
// One face per line, blank lines and lines starting with '#' ignored. A face
// listed twice is an error: the file must spell out the Z2 support exactly.

#ifndef CUBEFILL_CHAIN_IO_H_
#define CUBEFILL_CHAIN_IO_H_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cubefill/chain.h"

namespace cubefill {

class ChainParseError : public std::runtime_error {
 public:
  ChainParseError(int line, const std::string& message);
  // 1-based; 0 when the error is not tied to a line (e.g. missing header).
  int line() const { return line_; }

 private:
  int line_;
};

Chain ReadChain(std::istream& in);
void WriteChain(std::ostream& out, const Chain& chain);

// Throws std::system_error when the file cannot be opened.
Chain ReadChainFile(const std::filesystem::path& path);
void WriteChainFile(const std::filesystem::path& path, const Chain& chain);

}  // namespace cubefill

#endif  // CUBEFILL_CHAIN_IO_H_
