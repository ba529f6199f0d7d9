#include "raag/linalg.hpp"

#include "raag/trace.hpp"

namespace raag {

// Instantiations used across the library.
template class EchelonBasis<std::size_t>;
template class EchelonBasis<Trace>;

}  // namespace raag
