#pragma once

#include <json.hpp>

#include "unitposet/blockmat.hpp"
#include "unitposet/canon.hpp"
#include "unitposet/cxla.hpp"
#include "unitposet/poset.hpp"
#include "unitposet/qform.hpp"
#include "unitposet/systems.hpp"
#include "unitposet/wildness.hpp"

// JSON interchange. Element and summand indices are 1-based on the wire.
// Readers throw ParseError with the offending field in the message.
namespace unitposet::json {

using nlohmann::json;

/// {"t": t, "relations": [[i, j], ...]}, closure applied on load.
json to_json(const Poset& p);
IngestedPoset poset_from_json(const json& j);

/// {"rows": m, "cols": n, "entries": [[re, im], ...]} row-major.
json to_json(const CMatrix& m);
CMatrix cmatrix_from_json(const json& j);

/// {"poset": ..., "rows": m, "widths": [...], "strips": [cmatrix, ...]}.
/// If the poset had to be renumbered, the strips follow their elements.
json to_json(const BlockMatrix& a);
BlockMatrix block_matrix_from_json(const json& j);

/// {"kind": "G", "k": 1, "sigma": 2.0}; F carries no k.
json to_json(const Summand& s);
Summand summand_from_json(const json& j);

/// {"E": [..], "F": c, "H": [..], "L": [..], "G": [{"k": k, "sigma": x}, ..]}.
json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const json& j);

/// {"n_vars": k, "gram_numerators": [[..]], "gram_denominator": d}.
json to_json(const QuadraticForm& f);
QuadraticForm quadratic_form_from_json(const json& j);

/// {"poset": ..., "ambient_dim": m, "spans": [cmatrix, ...]}.
json to_json(const SubspaceSystem& u);
SubspaceSystem subspace_system_from_json(const json& j);

json to_json(const SystemSummand& s);

/// Block matrix JSON plus {"triple": [i, j, k], "n": n}.
json to_json(const WildWitness& w);

}  // namespace unitposet::json
