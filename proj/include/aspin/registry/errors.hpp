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

#include <string_view>

namespace aspin {

/// Outcome codes for registry operations. `ok` is zero so codes can be used
/// in boolean contexts the way transaction result codes usually are.
enum class Errc {
    ok = 0,
    invalid_config,
    not_authorized,
    duplicate_sidechain,
    reserved_id,
    key_occupied,
    no_such_sidechain,
    not_masked,
    no_such_pin,
    linkage_invalid,
    dispute_window_closed,
    duplicate_active_proposal,
    no_such_proposal,
    voting_closed,
    already_voted,
    voting_still_open,
    already_actioned,
    clock_regression,
    invalid_height,
};

std::string_view errc_name(Errc e);

inline bool is_ok(Errc e) { return e == Errc::ok; }

}  // namespace aspin
