/*
 * Copyright 2026 the wmgsynth authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace wmg {

/// Error with a stable machine-readable code next to the human message.
/// Codes in use: EmptyWord, BadLabel, BadProjection, BadNet, ParseError,
/// NotEnabled, StateBudgetExceeded, NonIntegerScaling, NotChoiceFree,
/// NotReversible, NotCircuit, NotConservative, PreconditionViolated,
/// NonPrimeParikh, NonPrimeVector, ZeroComponent, EmptyAlphabet,
/// AlphabetTooLarge, SimulationDiverged, BadSizes.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace wmg
