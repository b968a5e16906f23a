/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <iosfwd>

namespace sct {

/// Runs the built-in worked examples (the 7-vertex weighted fixture, the
/// overshadow triples, the negative control and the 3-sun) end to end,
/// printing one "ok"/"FAIL" line per check.  Returns the number of failures.
int run_selftest(std::ostream& out);

}  // namespace sct
