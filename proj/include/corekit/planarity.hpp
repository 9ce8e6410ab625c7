#ifndef COREKIT_PLANARITY_HPP
#define COREKIT_PLANARITY_HPP

#include "corekit/multigraph.hpp"

namespace corekit {

struct PlanarityVerdict {
    bool planar;
};

// Left-right planarity criterion (path-addition family), linear time, no
// embedding output. Loops and parallel edges never affect planarity and are
// stripped before testing; graphs failing the Euler bound m <= 3n-6 are
// rejected without running the test.
PlanarityVerdict is_planar(const Multigraph& g);

}  // namespace corekit

#endif
