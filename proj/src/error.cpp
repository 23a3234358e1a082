#include "linknet/error.hpp"

namespace linknet {

ExplosionAborted::ExplosionAborted(std::uint64_t predicted, std::uint64_t limit)
    : Error("product aborted: predicted " + std::to_string(predicted) +
            " multiply operations exceed the guard of " + std::to_string(limit)),
      predicted_(predicted),
      limit_(limit) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

IndexOutOfRange::IndexOutOfRange(const std::string& what, std::size_t line)
    : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

}  // namespace linknet
