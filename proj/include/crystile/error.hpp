#pragma once

#include <stdexcept>
#include <string>

namespace crystile {

// Error taxonomy shared by the library and the CLI exit-code mapping.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_params_error : error {
    using error::error;
};
struct not_expanding_error : invalid_params_error {
    using invalid_params_error::invalid_params_error;
};
struct dependent_vectors_error : invalid_params_error {
    using invalid_params_error::invalid_params_error;
};
struct out_of_regime_error : error {
    using error::error;
};
struct out_of_range_error : error {
    using error::error;
};
struct singular_map_error : error {
    using error::error;
};
struct budget_exceeded_error : error {
    using error::error;
};
struct no_convergence_error : error {
    using error::error;
};
struct not_a_neighbor_error : error {
    using error::error;
};
struct undecided_error : error {
    using error::error;
};

} // namespace crystile
