// Copyright 2026 The bellport authors
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

#ifndef BELLPORT_CORE_ERRORS_HPP
#define BELLPORT_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bellport {

/// Stable error categories, mirrored one-to-one by the C API status codes.
enum class ErrorCode {
    invalid_dimension,
    invalid_index,
    size_limit,
    configuration,
    empty_state,
    insufficient_data,
    parse,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

struct InvalidDimensionError : Error {
    explicit InvalidDimensionError(const std::string &m) : Error(ErrorCode::invalid_dimension, m) {}
};

struct InvalidIndexError : Error {
    explicit InvalidIndexError(const std::string &m) : Error(ErrorCode::invalid_index, m) {}
};

struct SizeLimitError : Error {
    explicit SizeLimitError(const std::string &m) : Error(ErrorCode::size_limit, m) {}
};

struct ConfigurationError : Error {
    explicit ConfigurationError(const std::string &m) : Error(ErrorCode::configuration, m) {}
};

struct EmptyStateError : Error {
    explicit EmptyStateError(const std::string &m) : Error(ErrorCode::empty_state, m) {}
};

struct InsufficientDataError : Error {
    explicit InsufficientDataError(const std::string &m) : Error(ErrorCode::insufficient_data, m) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string &m) : Error(ErrorCode::parse, m) {}
};

}  // namespace bellport

#endif
