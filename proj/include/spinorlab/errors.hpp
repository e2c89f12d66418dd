#pragma once

#include <stdexcept>
#include <string>

namespace spinorlab {

// Direction-dependent spin operators (Pryce, Fradkin-Good) divide by |p|^2;
// requesting them below the momentum cutoff is a caller error.
class DegenerateMomentum : public std::invalid_argument {
public:
  explicit DegenerateMomentum(const std::string& what) : std::invalid_argument(what) {}
};

class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

class QuadratureFailure : public std::runtime_error {
public:
  explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

class PacketTooWide : public std::invalid_argument {
public:
  explicit PacketTooWide(const std::string& what) : std::invalid_argument(what) {}
};

class StepTooLarge : public std::runtime_error {
public:
  explicit StepTooLarge(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::invalid_argument {
public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace spinorlab
