#pragma once

namespace ndbound {

// Every data-parallel kernel has an OpenMP path and a plain serial reference
// path. Both must produce bit-identical results.
enum class Exec { Serial, Parallel };

}  // namespace ndbound
