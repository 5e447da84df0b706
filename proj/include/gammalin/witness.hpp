#ifndef GAMMALIN_WITNESS_HPP
#define GAMMALIN_WITNESS_HPP

#include <string>
#include <utility>

#include "gammalin/matrix.hpp"

namespace gammalin {

/// Candidate (gx, gy) pair for certification.
struct Witness {
    ExactMatrix gx, gy;
};

/// Parses the witness JSON format: {"dim": d, "field": "rational" |
/// "cyclotomic:<n>", "gx": [...], "gy": [...]} with row-major arrays of
/// exact-scalar strings.
Witness parse_witness_json(const std::string& text);

Witness load_witness_file(const std::string& path);

/// "builtin:pauli" (the 2x2 involution pair) or "builtin:clock3"
/// (clock/shift over Q(zeta_3)); anything else is read as a file path.
Witness resolve_witness(const std::string& spec);

std::string witness_to_json(const Witness& w, unsigned field_order);

}  // namespace gammalin

#endif
