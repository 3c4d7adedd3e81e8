#pragma once

#include "json.hpp"
#include "ratrel/approx.hpp"
#include "ratrel/model.hpp"

namespace ratrel {

/// Insertion-ordered JSON: field order is part of the CLI's byte-identical
/// output contract.
using ojson = nlohmann::ordered_json;

// Fractions serialize as canonical "p/q" strings ("p" alone when q == 1);
// matrices as row-major arrays of fraction strings.

ojson encode(const Rational& x);
ojson encode(const std::vector<Rational>& xs);
ojson encode(const Vec& v);
ojson encode(const Mat& m);
ojson encode(const PoincareMap& p);
ojson encode(const Line& l);
ojson encode(const Certificate& c);

Rational decode_rational(const ojson& j);
std::vector<Rational> decode_rational_list(const ojson& j);
Vec decode_vec(const ojson& j);
Mat decode_mat(const ojson& j);
/// Validates the Lorentz condition; propagates LorentzMatrix's error.
PoincareMap decode_poincare(const ojson& j);

}  // namespace ratrel
