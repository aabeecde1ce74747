// Copyright 2026 The Aspin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace aspin::analysis {

// Every kernel ships a serial reference next to the OpenMP version; the two
// accumulate in integers, so results match bit for bit and the serial path
// stays the test oracle for the parallel one.
enum class ExecMode { serial, parallel };

}  // namespace aspin::analysis
