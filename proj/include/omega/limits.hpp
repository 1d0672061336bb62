#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omega {

/// Size guards for the exponential and double-description routines.
struct Limits {
    std::size_t max_bruteforce = 20;  ///< largest part count n for 2^n enumeration
    std::size_t max_hull_dim = 15;
    std::size_t max_hull_points = 64;
};

/// Thrown when an input exceeds a guard; carries the guard and the flag that overrides it.
class GuardError : public std::runtime_error {
public:
    GuardError(std::string guard, std::string override_flag, const std::string& what)
        : std::runtime_error(what), guard_(std::move(guard)), override_flag_(std::move(override_flag))
    {
    }

    const std::string& guard() const noexcept { return guard_; }
    const std::string& override_flag() const noexcept { return override_flag_; }

private:
    std::string guard_;
    std::string override_flag_;
};

inline void require_bruteforce(std::size_t n, const Limits& limits)
{
    if (n > limits.max_bruteforce)
        throw GuardError("max_bruteforce", "--max-bruteforce",
                         "n = " + std::to_string(n) + " is too large for brute force (limit "
                             + std::to_string(limits.max_bruteforce) + ")");
}

} // namespace omega
