// Copyright 2026 The streamcc Authors.
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

#ifndef STREAMCC_ERROR_HPP_
#define STREAMCC_ERROR_HPP_

#include <stdexcept>
#include <string>

// STREAMCC_DCHECK is active in debug builds and whenever
// STREAMCC_ENABLE_DCHECKS is defined (the test targets define it).
#if !defined(NDEBUG) || defined(STREAMCC_ENABLE_DCHECKS)
#define STREAMCC_DCHECK(cond)                                               \
  do {                                                                      \
    if (!(cond)) {                                                          \
      throw ::streamcc::Error(::streamcc::ErrorCode::kInvariant,            \
                              std::string("check failed: ") + #cond);       \
    }                                                                       \
  } while (false)
#else
#define STREAMCC_DCHECK(cond) \
  do {                        \
  } while (false)
#endif

namespace streamcc {

enum class ErrorCode {
  kInvalidInstance,
  kParameter,
  kStreamFormat,
  kOracleCapacity,
  kSpec,
  kInvalidInput,
  kInvariant,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInstance: return "invalid instance";
    case ErrorCode::kParameter: return "parameter error";
    case ErrorCode::kStreamFormat: return "stream format error";
    case ErrorCode::kOracleCapacity: return "oracle capacity exceeded";
    case ErrorCode::kSpec: return "invalid instance spec";
    case ErrorCode::kInvalidInput: return "invalid input";
    case ErrorCode::kInvariant: return "invariant violated";
  }
  return "unknown error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace streamcc

#endif  // STREAMCC_ERROR_HPP_
