#pragma once

#include "seqcert/sequence.hpp"

#include <string>
#include <vector>

namespace seqcert {

/// Built-in sequences: derangement, motzkin, fine, franel, domb, catalan,
/// central-binomial, fuss-catalan:p (p >= 2). Throws UnknownSequence.
SequenceDef catalog_lookup(const std::string& name);

/// Display names, fuss-catalan listed with its parameter placeholder.
std::vector<std::string> catalog_names();

} // namespace seqcert
