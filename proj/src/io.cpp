#include "wig/io.hpp"

#include <fstream>
#include <sstream>

namespace wig {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("expected a [re,im] pair");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

Json element_to_json(const Element& e) { return Json(e); }

Element element_from_json(const Group& g, const Json& j) {
    Element e = j.get<Element>();
    if (e.size() != g.orders.size()) {
        throw GroupMismatch("element rank does not match the group");
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
        e[k] = ((e[k] % g.orders[k]) + g.orders[k]) % g.orders[k];
    }
    return e;
}

}  // namespace

Json group_to_json(const Group& g) { return Json{{"orders", g.orders}}; }

Group group_from_json(const Json& j) {
    return make_group(j.at("orders").get<std::vector<std::int64_t>>());
}

Json subgroup_to_json(const Subgroup& h) {
    Json gens = Json::array();
    for (const auto& e : h.generators) gens.push_back(element_to_json(e));
    return Json{{"generators", gens}};
}

Subgroup subgroup_from_json(const Group& g, const Json& j) {
    std::vector<Element> gens;
    for (const auto& e : j.at("generators")) gens.push_back(element_from_json(g, e));
    return subgroup_from_generators(g, gens);
}

Json state_to_json(const StateVector& f) {
    Json vals = Json::array();
    for (const auto& v : f.values) vals.push_back(complex_to_json(v));
    return Json{{"group", group_to_json(f.group)}, {"values", vals}};
}

StateVector state_from_json(const Json& j) {
    Group g = group_from_json(j.at("group"));
    std::vector<Complex> vals;
    for (const auto& v : j.at("values")) vals.push_back(complex_from_json(v));
    return make_state(g, std::move(vals));
}

Json sstate_spec_to_json(const SStateSpec& spec) {
    return Json{{"H", subgroup_to_json(spec.H)},
                {"beta", spec.beta.matrix},
                {"chi", element_to_json(spec.chi)},
                {"shift", element_to_json(spec.shift)},
                {"scale", complex_to_json(spec.scale)}};
}

SStateSpec sstate_spec_from_json(const Group& g, const Json& j) {
    SStateSpec spec;
    spec.H = subgroup_from_json(g, j.at("H"));
    CyclicBasis cb = cyclic_decompose(spec.H);
    auto matrix = j.at("beta").get<std::vector<std::vector<std::int64_t>>>();
    if (matrix.size() != cb.basis.size()) {
        throw std::invalid_argument("beta matrix rank does not match the subgroup basis");
    }
    for (const auto& row : matrix) {
        if (row.size() != cb.basis.size()) {
            throw std::invalid_argument("beta matrix is not square");
        }
    }
    spec.beta = SymmetricHom{std::move(cb), std::move(matrix)};
    spec.chi = element_from_json(g, j.at("chi"));
    spec.shift = element_from_json(g, j.at("shift"));
    spec.scale = j.contains("scale") ? complex_from_json(j.at("scale")) : Complex(1.0);
    return spec;
}

Json nadic_to_json(const NAdicNumber& x) {
    return Json{{"base", x.base}, {"start", x.start}, {"digits", x.digits}};
}

NAdicNumber nadic_from_json(const Json& j) {
    return make_nadic(j.at("base").get<std::int64_t>(), j.at("start").get<std::int64_t>(),
                      j.at("digits").get<std::vector<std::int64_t>>());
}

Json sb_to_json(const SchwartzBruhatFn& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(complex_to_json(c));
    return Json{{"base", f.base}, {"m", f.m}, {"M", f.M}, {"coeffs", coeffs}};
}

SchwartzBruhatFn sb_from_json(const Json& j) {
    std::vector<Complex> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(complex_from_json(c));
    return make_sb(j.at("base").get<std::int64_t>(), j.at("m").get<std::int64_t>(),
                   j.at("M").get<std::int64_t>(), std::move(coeffs));
}

Json solenoid_to_json(const SolenoidPoint& p) {
    return Json{{"a", Json::array({p.a.num, p.a.den})}, {"x", nadic_to_json(p.x)}};
}

SolenoidPoint solenoid_from_json(const Json& j) {
    const Json& a = j.at("a");
    return make_solenoid_point(make_rational(a.at(0).get<std::int64_t>(),
                                             a.at(1).get<std::int64_t>()),
                               nadic_from_json(j.at("x")));
}

Json table_to_json(const PhaseTable& t) {
    Json rows = Json::array();
    for (std::int64_t x = 0; x < t.group.cardinality; ++x) {
        for (std::int64_t a = 0; a < t.group.cardinality; ++a) {
            const Complex& v = t.at(x, a);
            rows.push_back(Json{{"x_index", x},
                                {"dual_index", a},
                                {"re", v.real()},
                                {"im", v.imag()}});
        }
    }
    return Json{{"group", group_to_json(t.group)}, {"cells", rows}};
}

std::string table_to_csv(const PhaseTable& t) {
    std::ostringstream out;
    out.precision(17);
    out << "x_index,dual_index,re,im\n";
    for (std::int64_t x = 0; x < t.group.cardinality; ++x) {
        for (std::int64_t a = 0; a < t.group.cardinality; ++a) {
            const Complex& v = t.at(x, a);
            out << x << ',' << a << ',' << v.real() << ',' << v.imag() << '\n';
        }
    }
    return out.str();
}

Json sb_table_to_json(const SbWignerTable& t) {
    Json rows = Json::array();
    for (std::int64_t r = 0; r < t.rows; ++r) {
        for (std::int64_t j = 0; j < t.q; ++j) {
            const Complex v = t.at(r, j);
            rows.push_back(Json{{"x_index", r},
                                {"dual_index", j},
                                {"re", v.real()},
                                {"im", v.imag()}});
        }
    }
    return Json{{"base", t.base}, {"m", t.m},       {"M", t.M},
                {"q", t.q},       {"rows", t.rows}, {"lambda2", t.lambda2},
                {"cells", rows}};
}

std::string sb_table_to_csv(const SbWignerTable& t) {
    std::ostringstream out;
    out.precision(17);
    out << "x_index,dual_index,re,im\n";
    for (std::int64_t r = 0; r < t.rows; ++r) {
        for (std::int64_t j = 0; j < t.q; ++j) {
            const Complex v = t.at(r, j);
            out << r << ',' << j << ',' << v.real() << ',' << v.imag() << '\n';
        }
    }
    return out.str();
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << content;
}

}  // namespace wig
