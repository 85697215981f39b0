#pragma once

#include <stdexcept>
#include <string>

namespace framevote {

// Thrown for file and format problems (missing files, bad PGM/JSON/manifest
// content). Contract violations use std::invalid_argument instead.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace framevote
