#include "shintani_cli/json_io.hpp"

#include "shintani/errors.hpp"

#include <cstdio>

namespace shintani::cli {

Q parse_q(json const & j)
{
    if (j.is_number_integer())
        return Q(j.get<long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw Error(ErrorCode::ConfigError, "expected an integer or a rational string, got " + j.dump());
}

FieldElement parse_element(NumberField const & F, json const & j)
{
    if (j.is_number_integer() || j.is_string())
        return F.from_rational(parse_q(j));
    if (j.is_array()) {
        if (static_cast<int>(j.size()) != F.degree())
            throw Error(ErrorCode::ConfigError, "element needs " + std::to_string(F.degree()) + " coordinates");
        FieldElement x;
        for (auto const & c : j)
            x.coords.push_back(parse_q(c));
        return x;
    }
    if (j.is_object() && j.size() == 1 && j.contains("power")) {
        std::vector<Q> p;
        for (auto const & c : j.at("power"))
            p.push_back(parse_q(c));
        p.resize(static_cast<std::size_t>(F.degree()), Q(0));
        return F.from_power_basis(p);
    }
    throw Error(ErrorCode::ConfigError, "cannot read a field element from " + j.dump());
}

std::vector<FieldElement> parse_elements(NumberField const & F, json const & j)
{
    if (!j.is_array())
        throw Error(ErrorCode::ConfigError, "expected a list of elements");
    std::vector<FieldElement> out;
    for (auto const & e : j)
        out.push_back(parse_element(F, e));
    return out;
}

json element_json(FieldElement const & x)
{
    json a = json::array();
    for (auto const & c : x.coords)
        a.push_back(to_string(c));
    return a;
}

json ideal_json(FractionalIdeal const & a)
{
    json h = json::array();
    for (std::size_t i = 0; i < a.hnf.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.hnf.cols; ++j)
            row.push_back(a.hnf(i, j).get_str());
        h.push_back(row);
    }
    return {{"den", a.den.get_str()}, {"hnf", h}, {"norm", to_string(a.norm)}};
}

json point_json(TorsionPoint const & xi)
{
    json r = json::array();
    for (auto const & c : xi.r)
        r.push_back(to_string(c));
    return {{"ideal", ideal_json(xi.ideal)}, {"r", r}};
}

json exact_json(CycValue const & v)
{
    json c = json::array();
    for (auto const & q : v.coeffs())
        c.push_back(to_string(q));
    return {{"exact", v.to_string()}, {"m", v.conductor()}, {"coeffs", c}};
}

std::string fmt(long double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.18Lg", x);
    return buf;
}

json numeric_json(std::complex<long double> z, long double error)
{
    return {{"re", fmt(z.real())}, {"im", fmt(z.imag())}, {"error", fmt(error)}};
}

json numeric_json(BigComplex const & z, long double error, int digits)
{
    return {{"re", to_string(z.re, digits)}, {"im", to_string(z.im, digits)}, {"error", fmt(error)}};
}

} // namespace shintani::cli
