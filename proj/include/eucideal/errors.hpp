#pragma once

#include <stdexcept>
#include <string>

namespace eucideal {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// input-domain errors
struct not_squarefree : error {
    explicit not_squarefree(long d) : error("d = " + std::to_string(d) + " is not squarefree") {}
};
struct field_mismatch : error {
    field_mismatch() : error("operands belong to different fields") {}
};
struct zero_ideal : error {
    zero_ideal() : error("all generators are zero") {}
};
struct not_submodule : error {
    not_submodule() : error("second ideal is not contained in the first") {}
};
struct not_prime : error {
    explicit not_prime(long p) : error("p = " + std::to_string(p) + " is not prime") {}
};
struct does_not_contain_ring : error {
    does_not_contain_ring() : error("ideal does not contain 1") {}
};
struct degenerate_lattice : error {
    degenerate_lattice() : error("lattice basis is linearly dependent") {}
};
struct io_error : error {
    using error::error;
};

// broken internal postcondition; maps to exit code 2 in the CLI
struct invariant_violation : error {
    using error::error;
};

}  // namespace eucideal
