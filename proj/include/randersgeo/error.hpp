#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace randers {

/// All recoverable failures (degenerate inputs, domain violations) throw this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
inline void msg_impl(std::ostringstream&) {}
template <class T, class... Rest>
void msg_impl(std::ostringstream& os, const T& t, const Rest&... rest) {
    os << t;
    msg_impl(os, rest...);
}
}  // namespace detail

template <class... Args>
std::string msg(const Args&... args) {
    std::ostringstream os;
    os.precision(17);
    detail::msg_impl(os, args...);
    return os.str();
}

template <class... Args>
[[noreturn]] void fail(const Args&... args) {
    throw Error(msg(args...));
}

}  // namespace randers
