#ifndef NEGACIRC_ERRORS_HPP
#define NEGACIRC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace negacirc {

// Every domain failure carries a stable machine-readable name ("DivisionByZero",
// "NotCoprime", ...) next to the human-readable message. The CLI maps the name
// straight into its JSON error output and exit code 2.
class DomainError : public std::runtime_error {
   public:
    DomainError(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

   private:
    std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& message) {
    throw DomainError(std::move(name), message);
}

}  // namespace negacirc

#endif
