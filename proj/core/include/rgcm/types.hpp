#ifndef RGCM_TYPES_HPP
#define RGCM_TYPES_HPP

#include <string>

namespace rgcm {

// Vinberg trichotomy verdict for an indecomposable matrix.
enum class Verdict { Finite, Affine, Indefinite };

std::string to_string(Verdict v);

} // namespace rgcm

#endif
