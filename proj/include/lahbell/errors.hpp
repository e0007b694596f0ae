#pragma once

#include <stdexcept>
#include <string>

namespace lahbell {

// A rational value that must be integral was not. Always an implementation
// bug, never a consequence of user input.
class integrality_error : public std::logic_error {
public:
    explicit integrality_error(const std::string& what) : std::logic_error(what) {}
};

class missing_variable_error : public std::invalid_argument {
public:
    explicit missing_variable_error(const std::string& variable)
        : std::invalid_argument("no value assigned to variable " + variable), variable_(variable) {}

    const std::string& variable() const noexcept { return variable_; }

private:
    std::string variable_;
};

class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

class order_error : public std::out_of_range {
public:
    explicit order_error(const std::string& what) : std::out_of_range(what) {}
};

class length_error : public std::length_error {
public:
    explicit length_error(const std::string& what) : std::length_error(what) {}
};

} // namespace lahbell
