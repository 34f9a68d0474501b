#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace repapq {

// Error categories map onto CLI exit codes: Validation=2, Numeric=3, Io=4.
enum class ErrorKind { Validation, Numeric, Io };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    static Error validation(const std::string& msg) { return {ErrorKind::Validation, msg}; }
    static Error numeric(const std::string& msg) { return {ErrorKind::Numeric, msg}; }
    static Error io(const std::string& msg) { return {ErrorKind::Io, msg}; }

private:
    ErrorKind kind_;
};

namespace detail {
inline void format_into(std::ostringstream&) {}
template <typename T, typename... Rest>
void format_into(std::ostringstream& os, const T& head, const Rest&... rest) {
    os << head;
    format_into(os, rest...);
}
}  // namespace detail

// cat("conv2d: expected ", a, " channels, got ", b)
template <typename... Args>
std::string cat(const Args&... args) {
    std::ostringstream os;
    detail::format_into(os, args...);
    return os.str();
}

}  // namespace repapq
