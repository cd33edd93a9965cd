#pragma once

#include <stdexcept>
#include <string>

namespace mcg {

/// Malformed input: unknown vertex, bad subset, wrong graph class, ...
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Input file rejected; carries the 1-based line number of the offending line.
class parse_error : public input_error {
    int line_;
public:
    parse_error(int line, const std::string& what)
        : input_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }
};

/// Operation undefined for this graph (e.g. tight cuts of a graph that is not
/// matching covered). Distinct from input_error so callers can tell
/// "undefined" apart from "malformed".
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured enumeration cap would be exceeded; names the cap.
class resource_error : public std::runtime_error {
public:
    resource_error(const std::string& cap, const std::string& what)
        : std::runtime_error(what + " (cap: " + cap + ")"), cap_(cap) {}
    const std::string& cap() const { return cap_; }
private:
    std::string cap_;
};

/// A structural identity that is supposed to hold unconditionally failed at
/// runtime. Never caught internally: a throw means either a bug or a genuine
/// counterexample that a human must look at.
class property_violation : public std::logic_error {
public:
    explicit property_violation(const std::string& what) : std::logic_error(what) {}
};

} // namespace mcg
