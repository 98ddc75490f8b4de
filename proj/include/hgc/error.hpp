// Copyright 2026 The hgc Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace hgc {

enum class Errc {
  invalid_config,
  invalid_input,
  arity_mismatch,
  division_by_zero,
  invalid_placement,
  unsupported_config,
  insufficient_evaluations,
  decoding_failure,
  adversary_budget_exceeded,
  invalid_fault_plan,
  too_many_patterns,
  mode_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_config: return "invalid_config";
    case Errc::invalid_input: return "invalid_input";
    case Errc::arity_mismatch: return "arity_mismatch";
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::invalid_placement: return "invalid_placement";
    case Errc::unsupported_config: return "unsupported_config";
    case Errc::insufficient_evaluations: return "insufficient_evaluations";
    case Errc::decoding_failure: return "decoding_failure";
    case Errc::adversary_budget_exceeded: return "adversary_budget_exceeded";
    case Errc::invalid_fault_plan: return "invalid_fault_plan";
    case Errc::too_many_patterns: return "too_many_patterns";
    case Errc::mode_error: return "mode_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace hgc
