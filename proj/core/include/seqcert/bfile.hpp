#pragma once

#include "seqcert/log_behavior.hpp"
#include "seqcert/sequence.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace seqcert {

/// Parsed OEIS b-file: "index value" lines, '#' comments and blanks skipped,
/// indices strictly increasing.
struct BFile {
    std::string oeis_id;
    std::vector<std::pair<long long, BigInt>> entries;
};

/// Total on arbitrary input: returns a BFile or throws a located
/// MalformedLine / NonMonotoneIndex.
BFile parse_bfile(std::istream& in, std::string oeis_id = "");
BFile parse_bfile_text(const std::string& text, std::string oeis_id = "");

/// Exact equality on every overlapping index; catalog index i corresponds to
/// b-file index i + def.oeis_offset. Throws NoOverlap.
CheckOutcome cross_validate(const SequenceDef& def, const BFile& bfile);

} // namespace seqcert
