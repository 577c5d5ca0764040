#pragma once

#include "koenig/certificate.hpp"
#include "koenig/ideal.hpp"
#include "koenig/poset.hpp"
#include "koenig/polyomino.hpp"

#include <json.hpp>

#include <string>

namespace koenig::io {

using Json = nlohmann::json;

/// Parses JSON text, turning syntax errors into ParseError with line and column.
Json parse_json(const std::string& text, const std::string& source = "input");

/// {"elements": [string...], "covers": [[string, string]...]}
Poset poset_from_json(const Json& j);
Json poset_to_json(const Poset& p);

/// {"cells": [[i, j]...]}
Polyomino polyomino_from_json(const Json& j);
Json polyomino_to_json(const Polyomino& p);

/// JSON object when the text starts with '{', otherwise an ASCII grid.
Polyomino parse_polyomino_text(const std::string& text);

/// {"generators": [tags], "marking": ["first"|"second"], "weights": {var: "p/q"},
///  "tiebreak": [vars], "flavor": "weight", "height": n}
Json certificate_to_json(const IdealGenerators& gens, const KoenigCertificate& cert);
KoenigCertificate certificate_from_json(const IdealGenerators& gens, const Json& j);

std::string read_file(const std::string& path);

}  // namespace koenig::io
