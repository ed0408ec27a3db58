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

#ifndef CUBEFILL_SRC_FILL_ENGINES_H_
#define CUBEFILL_SRC_FILL_ENGINES_H_

#include "cubefill/chain.h"
#include "cubefill/filling.h"

// Unchecked fill constructions. Inputs must already be fillable cycles with
// n >= k+1; the public wrappers in filling.h validate and certify.
namespace cubefill::internal {

Chain LinearEngine(const Chain& z);
Chain RecursiveEngine(const Chain& z, RecursionTrace& trace, int depth);

}  // namespace cubefill::internal

#endif  // CUBEFILL_SRC_FILL_ENGINES_H_
