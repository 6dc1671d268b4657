// exec.hpp -- execution policy for the data-parallel kernels
#pragma once

namespace su3b {

// Parallel fans the kernel out over OpenMP threads; Serial is the reference
// path the tests compare against. Both orderings are bit-identical because
// every work item writes its own slot and reductions are max/indexed.
enum class ExecPolicy { Serial, Parallel };

}  // namespace su3b
