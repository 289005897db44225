#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hbcell/hilburch.hpp"

namespace hbcell {

/// "0,5,7,11" -> make_cell; BAD_M_VECTOR or PARSE_ERROR on bad text.
MonomialCell parse_m_vector(std::string_view text);

/// One polynomial in x,y per line; blank lines and '#' comments skipped.
std::vector<BiPoly> parse_generators(std::string_view text, const FieldSpec& field);

/// {"m":[...],"index_base":1,"field":"QQ","entries":[["2*y - 2",...],...]}
std::string param_matrix_to_json(const ParamMatrix& a);

/// Reads the layout above. `cell` overrides a missing "m"; when both are
/// present they must agree. A "field" key, if present, must name `field`.
ParamMatrix param_matrix_from_json(std::string_view text, const FieldSpec& field,
                                   const std::optional<MonomialCell>& cell = std::nullopt);

}  // namespace hbcell
