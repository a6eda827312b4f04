// Copyright 2026 The nullrig Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace nullrig {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DegeneracyError : public Error {
public:
  explicit DegeneracyError(const std::string& what) : Error(what) {}
};

class ImmersionError : public Error {
public:
  explicit ImmersionError(const std::string& what) : Error(what) {}
};

class NotNullError : public Error {
public:
  explicit NotNullError(const std::string& what) : Error(what) {}
};

class RechartError : public Error {
public:
  explicit RechartError(const std::string& what) : Error(what) {}
};

class ScreenSelectionError : public Error {
public:
  explicit ScreenSelectionError(const std::string& what) : Error(what) {}
};

class TransversalError : public Error {
public:
  explicit TransversalError(const std::string& what) : Error(what) {}
};

class UnsupportedError : public Error {
public:
  explicit UnsupportedError(const std::string& what) : Error(what) {}
};

class EvaluationError : public Error {
public:
  explicit EvaluationError(const std::string& what) : Error(what) {}
};

class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace nullrig
