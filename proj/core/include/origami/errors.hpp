#pragma once

#include <stdexcept>
#include <string>

namespace origami {

struct DegreeMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A pair of elements was required to generate the whole group but does not.
struct NotGeneratingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotPairwiseCoprimeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OrderMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configurable size bound (group order, orbit size, modulus) was exceeded.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integer matrix arithmetic left the 64-bit range. Raised instead of wrapping.
struct Sl2OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

}  // namespace origami
