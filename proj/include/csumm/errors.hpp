#pragma once

#include <stdexcept>
#include <string>

namespace csumm {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tensor extents do not conform (bad conv length, mismatched matmul, ...).
struct shape_error : error {
  using error::error;
};

// An id or index is outside its valid range.
struct index_error : error {
  using error::error;
};

// A caller-supplied value violates a precondition (empty code, empty split, ...).
struct input_error : error {
  using error::error;
};

// A token contains a character the vocabulary cannot cover.
struct encoding_error : error {
  using error::error;
};

// A serialized blob is truncated, corrupt, or fails its checksum.
struct format_error : error {
  using error::error;
};

// A checkpoint was produced against a different vocabulary.
struct compat_error : error {
  using error::error;
};

// Bad command-line flags or subcommands.
struct usage_error : error {
  using error::error;
};

// Training produced a non-finite loss or gradient.
struct numeric_error : error {
  using error::error;
};

}  // namespace csumm
