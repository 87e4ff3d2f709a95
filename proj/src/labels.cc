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

#include "argrobust/labels.h"

#include <string>

namespace argrobust {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedJson:
      return "MalformedJson";
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kUnknownLabel:
      return "UnknownLabel";
    case ErrorCode::kDuplicateId:
      return "DuplicateId";
    case ErrorCode::kUnknownTopic:
      return "UnknownTopic";
    case ErrorCode::kEmptyInput:
      return "EmptyInput";
    case ErrorCode::kMissingPrediction:
      return "MissingPrediction";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kInsufficientData:
      return "InsufficientData";
    case ErrorCode::kIo:
      return "Io";
  }
  return "Unknown";
}

std::string_view LabelName(Label label) {
  switch (label) {
    case Label::kPro:
      return "PRO";
    case Label::kCon:
      return "CON";
    case Label::kNon:
      return "NON";
  }
  return "?";
}

std::string_view BinaryLabelName(BinaryLabel label) {
  return label == BinaryLabel::kArg ? "ARG" : "NON_ARG";
}

Label ParseLabel(std::string_view text) {
  if (text == "PRO") return Label::kPro;
  if (text == "CON") return Label::kCon;
  if (text == "NON") return Label::kNon;
  throw Error(ErrorCode::kUnknownLabel,
              "unknown label '" + std::string(text) + "'");
}

BinaryLabel ParseBinaryLabel(std::string_view text) {
  if (text == "ARG") return BinaryLabel::kArg;
  if (text == "NON_ARG") return BinaryLabel::kNonArg;
  throw Error(ErrorCode::kUnknownLabel,
              "unknown binary label '" + std::string(text) + "'");
}

}  // namespace argrobust
