#include "seqcert/bfile.hpp"

#include "seqcert/errors.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace seqcert {

namespace {

bool parse_integer_token(const std::string& tok, BigInt* out) {
    if (tok.empty()) return false;
    std::size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    return out->set_str(tok, 10) == 0;
}

} // namespace

BFile parse_bfile(std::istream& in, std::string oeis_id) {
    BFile bf;
    bf.oeis_id = std::move(oeis_id);
    std::string line;
    long long line_no = 0;
    bool have_prev = false;
    long long prev_index = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos) continue;       // blank
        if (line[pos] == '#') continue;               // comment
        std::istringstream ls(line);
        std::string idx_tok, val_tok, extra;
        ls >> idx_tok >> val_tok;
        if (val_tok.empty()) throw MalformedLine(line_no, "expected '<index> <value>'");
        if (ls >> extra) throw MalformedLine(line_no, "trailing content '" + extra + "'");
        BigInt idx, val;
        if (!parse_integer_token(idx_tok, &idx))
            throw MalformedLine(line_no, "bad index '" + idx_tok + "'");
        if (!parse_integer_token(val_tok, &val))
            throw MalformedLine(line_no, "bad value '" + val_tok + "'");
        if (!idx.fits_slong_p()) throw MalformedLine(line_no, "index out of range");
        long long index = idx.get_si();
        if (have_prev && index <= prev_index) throw NonMonotoneIndex(line_no);
        have_prev = true;
        prev_index = index;
        bf.entries.emplace_back(index, val);
    }
    return bf;
}

BFile parse_bfile_text(const std::string& text, std::string oeis_id) {
    std::istringstream in(text);
    return parse_bfile(in, std::move(oeis_id));
}

CheckOutcome cross_validate(const SequenceDef& def, const BFile& bfile) {
    long long first = def.first_index();
    long long def_cap = -1;  // inclusive max index; -1 = unbounded
    if (def.is_explicit())
        def_cap = first + static_cast<long long>(std::get<std::vector<BigRat>>(def.kind).size()) - 1;

    long long max_def_index = -1;
    bool any = false;
    for (const auto& [bi, v] : bfile.entries) {
        long long i = bi - def.oeis_offset;
        if (i < first) continue;
        if (def_cap >= 0 && i > def_cap) continue;
        any = true;
        max_def_index = std::max(max_def_index, i);
    }
    if (!any) throw NoOverlap();

    auto terms = generate_terms(def, max_def_index - first + 1);
    CheckOutcome out;
    out.strict = false;
    out.checked_range = {first + def.oeis_offset, max_def_index + def.oeis_offset};
    for (const auto& [bi, v] : bfile.entries) {
        long long i = bi - def.oeis_offset;
        if (i < first || (def_cap >= 0 && i > def_cap)) continue;
        const BigRat& term = terms[static_cast<std::size_t>(i - first)];
        if (term != BigRat(v)) {
            out.holds = false;
            out.first_violation = Violation{bi, term, BigRat(v)};
            return out;
        }
    }
    return out;
}

} // namespace seqcert
