#pragma once

#include <stdexcept>
#include <string>

namespace lds {

// Coordinate or flat index outside the lattice shape.
class addressing_error : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

// Caller supplied a value outside the documented domain (height, key, alpha...).
class argument_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Lattice text file is malformed or fails structural validation.
class format_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace lds
