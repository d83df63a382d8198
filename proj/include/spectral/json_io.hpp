#pragma once

#include "spectral/dga.hpp"
#include "spectral/matrix.hpp"
#include "spectral/products.hpp"
#include "spectral/triple.hpp"

#include <json.hpp>

namespace spectral {

using Json = nlohmann::json;

/// Rows of exact rational strings "a/b+c/d i".
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

Json signs_to_json(const KOSigns& s);
KOSigns signs_from_json(const Json& j);

/// Lossless document: hilbert_dim, algebra_generators, dirac, real_structure.linear_part,
/// grading {kind: nontrivial, matrix} | {kind: trivial, eps_dprime}, metadata.
Json triple_to_json(const RealSpectralTriple& t);
/// Throws ParseError on schema violations.
RealSpectralTriple triple_from_json(const Json& j);

/// pair, predicted, extracted, class, convention, hilbert_dim, checks (name -> bool), passed.
Json product_report_to_json(const ProductReport& r);

/// basis [{label, degree}], unit, mult as sparse [i, j, k, value] entries, star, diff.
Json dga_to_json(const StarDGA& a);
StarDGA dga_from_json(const Json& j);

}  // namespace spectral
