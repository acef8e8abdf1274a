#pragma once

#include <stdexcept>
#include <string>

namespace latin {

// Error taxonomy mirrored by the CLI exit codes:
//   parameter_error -> 2, data_error -> 3, resource_error -> 4.
// construction_error is a data error raised when a construction's
// precondition check or post-hoc validation fails.

class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

class data_error : public std::runtime_error {
public:
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

class construction_error : public data_error {
public:
    explicit construction_error(const std::string& what) : data_error(what) {}
};

class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace latin
