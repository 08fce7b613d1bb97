#pragma once

#include "seqcert/sequence.hpp"

#include <filesystem>
#include <vector>

namespace seqcert {

/// FNV-1a 64-bit over the canonical JSON of the definition.
std::string sequence_def_hash(const SequenceDef& def);

/// Atomically stores terms (decimal strings, one per line) under
/// dir/<name>.terms with a header carrying the definition hash.
void cache_terms(const SequenceDef& def, const std::vector<BigRat>& terms,
                 const std::filesystem::path& dir);

/// Loads cached terms when present and hash-valid, generating and re-caching
/// the remainder when `count` exceeds the stored prefix. An absent cache file
/// falls back to full generation. Throws HashMismatch / CorruptCache.
std::vector<BigRat> load_cached(const SequenceDef& def, const std::filesystem::path& dir,
                                long long count);

} // namespace seqcert
