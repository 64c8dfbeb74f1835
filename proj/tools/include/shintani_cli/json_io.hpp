#pragma once

#include "shintani/hecke.hpp"

#include <json.hpp>

#include <complex>
#include <string>

namespace shintani::cli {

using json = nlohmann::json;

/* integer, rational string, coordinate array, or {"power": [...]} */
FieldElement parse_element(NumberField const & F, json const & j);
std::vector<FieldElement> parse_elements(NumberField const & F, json const & j);
Q parse_q(json const & j);

json element_json(FieldElement const & x);
json ideal_json(FractionalIdeal const & a);
json point_json(TorsionPoint const & xi);
json exact_json(CycValue const & v);
json numeric_json(std::complex<long double> z, long double error);
json numeric_json(BigComplex const & z, long double error, int digits = 25);
std::string fmt(long double x);

} // namespace shintani::cli
