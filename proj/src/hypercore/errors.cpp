#include "hyperlab/hypercore/errors.hpp"

namespace hyperlab {

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(message + " (at offset " + std::to_string(position) + ")"), position_(position) {}

}  // namespace hyperlab
