// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace coembed {

// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Non-finite intermediate values or a failed numerical procedure.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coembed
