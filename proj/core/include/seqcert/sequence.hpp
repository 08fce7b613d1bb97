#pragma once

#include "seqcert/rat_func.hpp"
#include "seqcert/rational.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace seqcert {

/// z_{n+1} = a(n) z_n + b(n) z_{n-1}, applied for n >= offset + 1.
struct RecurrenceDef {
    RatFunc a;
    RatFunc b;
    std::vector<BigRat> initial_terms;  // >= 2 entries
    long long offset = 0;               // index of the first initial term
};

/// C_i = (n0 + i a)! / ((k0 + i b)! (k0bar + i bbar)!)
struct GammaQuotientDef {
    unsigned long n0 = 0, k0 = 0, k0bar = 0;
    unsigned long a = 1, b = 1, bbar = 1;  // positive
};

struct SequenceDef {
    std::string name;
    std::variant<RecurrenceDef, GammaQuotientDef, std::vector<BigRat>> kind;
    std::optional<std::string> oeis_id;
    /// catalog index i corresponds to b-file index i + oeis_offset
    long long oeis_offset = 0;

    bool is_recurrence() const { return std::holds_alternative<RecurrenceDef>(kind); }
    const RecurrenceDef& recurrence() const { return std::get<RecurrenceDef>(kind); }
    bool is_gamma() const { return std::holds_alternative<GammaQuotientDef>(kind); }
    const GammaQuotientDef& gamma() const { return std::get<GammaQuotientDef>(kind); }
    bool is_explicit() const { return std::holds_alternative<std::vector<BigRat>>(kind); }

    /// Index of the first generated term.
    long long first_index() const;
    /// Canonical JSON text (stable field order); input to the cache hash.
    std::string canonical_json() const;
};

/// Exact terms z[first_index .. first_index+count-1].
std::vector<BigRat> generate_terms(const SequenceDef& def, long long count);

/// Exact ratios x_n = z_{n+1}/z_n for n = from .. from+count-1.
/// Throws ZeroTerm (with the term index) when a divisor term is zero.
std::vector<BigRat> ratio_terms(const SequenceDef& def, long long from, long long count);

/// True when every generated term is an integer (sanity assertion for the
/// catalog sequences; the engine itself does not assume integrality).
bool terms_are_integral(const std::vector<BigRat>& terms);

} // namespace seqcert
