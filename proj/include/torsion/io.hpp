#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "torsion/basis.hpp"
#include "torsion/chain_complex.hpp"
#include "torsion/group_ring.hpp"
#include "torsion/pi_radical.hpp"

namespace torsion::io {

inline constexpr std::string_view kSchema = "torsion-lab/1";

/// Canonical text of a PiRadical. With R = p or p/q in lowest terms and K > 0:
///   R, R*pi^K, R/pi^K                 when the value is rational times pi^K
///   sqrt(R), sqrt(R*pi^K), sqrt(R/pi^K) otherwise
std::string render_exact(const PiRadical& v);

/// Inverse of render_exact; also accepts non-canonical spellings of the same
/// grammar (e.g. "sqrt(4*pi^4)"). Throws InputError on malformed text.
PiRadical parse_exact(std::string_view text);

/// A complex document after parsing. Group-ring documents keep their source
/// data next to the twisted complex.
struct ComplexDocument {
    ChainComplex complex;
    std::optional<GroupRingComplex> group_ring;
    std::optional<Representation> representation;
};

/// Parses and validates a complex document; group-ring input is twisted.
/// Errors name the offending JSON location.
ComplexDocument parse_complex_document(std::string_view text);
GradedBasis parse_basis_document(std::string_view text);

nlohmann::json complex_to_json(const ChainComplex& c);
nlohmann::json complex_to_json(const GroupRingComplex& c, const Representation& rep);
nlohmann::json basis_to_json(const GradedBasis& h);

}  // namespace torsion::io
