#include "agarch/errors.hpp"

namespace agarch {

ParseError::ParseError(std::size_t row, const std::string& what)
    : Error("row " + std::to_string(row) + ": " + what), row_(row) {}

}  // namespace agarch
