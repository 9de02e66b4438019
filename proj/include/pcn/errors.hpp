#ifndef PCN_ERRORS_HPP
#define PCN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pcn {

// Invalid arguments or out-of-domain parameters (bad vertex id, missing
// edge, n out of range, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text. Carries the 1-based line number of the offending
// line when known (0 if not tied to a specific line).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                      : what),
          line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

// A constructive procedure produced output that fails its own
// verification. Reaching this on valid input would falsify the theorem
// the procedure implements, so it is never caught and repaired.
class InternalConsistencyError : public std::logic_error {
public:
    explicit InternalConsistencyError(const std::string& what)
        : std::logic_error(what)
    {
    }
};

} // namespace pcn

#endif
