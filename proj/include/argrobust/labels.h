// Copyright 2026 The ArgRobust Authors.
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

#ifndef ARGROBUST_LABELS_H_
#define ARGROBUST_LABELS_H_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace argrobust {

// Failure categories surfaced by parsers and validators. The CLI maps any
// Error to a nonzero exit status.
enum class ErrorCode {
  kMalformedJson,
  kLengthMismatch,
  kUnknownLabel,
  kDuplicateId,
  kUnknownTopic,
  kEmptyInput,
  kMissingPrediction,
  kInvalidArgument,
  kInsufficientData,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Token labels and sentence labels share the same closed set.
enum class Label : std::uint8_t { kPro = 0, kCon = 1, kNon = 2 };

enum class BinaryLabel : std::uint8_t { kArg = 0, kNonArg = 1 };

inline constexpr std::array<Label, 3> kAllLabels = {Label::kPro, Label::kCon,
                                                    Label::kNon};
inline constexpr std::array<BinaryLabel, 2> kAllBinaryLabels = {
    BinaryLabel::kArg, BinaryLabel::kNonArg};

// Which label inventory a metric is computed over.
enum class LabelSpace { kThreeClass, kBinary };

std::string_view LabelName(Label label);
std::string_view BinaryLabelName(BinaryLabel label);

// Throws Error(kUnknownLabel) for anything but "PRO", "CON" or "NON".
Label ParseLabel(std::string_view text);
// Accepts "ARG" and "NON_ARG".
BinaryLabel ParseBinaryLabel(std::string_view text);

inline bool IsArgumentative(Label label) { return label != Label::kNon; }

}  // namespace argrobust

#endif  // ARGROBUST_LABELS_H_
