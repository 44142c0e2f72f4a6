#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace moveselect {

// Semantic invariant violation: out-of-range trait component, broken
// simplex, unknown state, malformed move record.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input document. `where` addresses the offending field
// ("/agents/0/weights") or line ("line 12").
class schema_error : public std::runtime_error {
public:
    schema_error(std::string where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what),
          where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the weight fitters when no observation carries any signal.
class fit_error : public std::runtime_error {
public:
    explicit fit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace moveselect
