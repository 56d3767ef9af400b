#include "charcone/testfn_json.hpp"

#include <cmath>

#include "charcone/error.hpp"

namespace charcone {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw FormatError((path.empty() ? "/" : path) + ": " + msg);
}

const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    if (!j.contains(key)) fail(path, std::string("missing key '") + key + "'");
    return j.at(key);
}

template <class T>
T get(const json& j, const char* key, const std::string& path) {
    const json& v = field(j, key, path);
    try {
        return v.get<T>();
    } catch (const json::exception&) {
        fail(path + "/" + key, "wrong type");
    }
}

template <class T>
T get_or(const json& j, const char* key, const std::string& path, T fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    return get<T>(j, key, path);
}

double positive(const json& j, const char* key, const std::string& path) {
    const double v = get<double>(j, key, path);
    if (!(v > 0.0) || !std::isfinite(v)) fail(path + "/" + key, "must be > 0");
    return v;
}

}  // namespace

json complex_to_json(cplx c) { return json::array({c.real(), c.imag()}); }

cplx complex_from_json(const json& j, const std::string& path) {
    if (j.is_number()) return j.get<double>();
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    fail(path, "expected a number or [re, im]");
}

json spec_to_json(const TestFunctionSpec& spec) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return {{"type", "constant"}, {"dim", s.dim}, {"value", complex_to_json(s.value)}};
            } else if constexpr (std::is_same_v<T, GaussHermite>) {
                json j{{"type", "gauss_hermite"}, {"center", s.center}, {"sigma", s.sigma}, {"poly", s.poly}};
                if (!s.wave.empty()) j["wave"] = s.wave;
                return j;
            } else if constexpr (std::is_same_v<T, FlatAtZero>) {
                return {{"type", "flat_at_zero"}, {"base", spec_to_json(*s.base)}, {"axis", s.axis}, {"scale", s.scale}};
            } else if constexpr (std::is_same_v<T, Pullback>) {
                return {{"type", "pullback"},
                        {"sign", s.sign == Sheet::plus ? "+" : "-"},
                        {"m", s.m},
                        {"base", spec_to_json(*s.base)}};
            } else if constexpr (std::is_same_v<T, XMinusDerivative>) {
                return {{"type", "x_minus_derivative"}, {"order", s.order}, {"base", spec_to_json(*s.base)}};
            } else if constexpr (std::is_same_v<T, Sum>) {
                json terms = json::array();
                for (const auto& t : s.terms)
                    terms.push_back({{"coef", complex_to_json(t.coef)}, {"spec", spec_to_json(*t.spec)}});
                return {{"type", "sum"}, {"terms", terms}};
            } else {
                json factors = json::array();
                for (const auto& f : s.factors) factors.push_back(spec_to_json(*f));
                return {{"type", "product"}, {"coef", complex_to_json(s.coef)}, {"factors", factors}};
            }
        },
        spec.variant());
}

TestFunctionSpec spec_from_json(const json& j, const std::string& path) {
    const auto type = get<std::string>(j, "type", path);
    try {
        if (type == "gaussian") {
            return TestFunctionSpec::gaussian(get<std::vector<double>>(j, "center", path), positive(j, "sigma", path));
        }
        if (type == "gauss_hermite") {
            auto center = get<std::vector<double>>(j, "center", path);
            auto poly = get_or<std::vector<int>>(j, "poly", path, std::vector<int>(center.size(), 0));
            auto wave = get_or<std::vector<double>>(j, "wave", path, {});
            return TestFunctionSpec::gauss_hermite(std::move(center), positive(j, "sigma", path), std::move(poly),
                                                   std::move(wave));
        }
        if (type == "flat_at_zero") {
            return TestFunctionSpec::flat_at_zero(spec_from_json(field(j, "base", path), path + "/base"),
                                                  get_or<int>(j, "axis", path, 0), j.contains("scale") ? positive(j, "scale", path) : 1.0);
        }
        if (type == "pullback") {
            const auto sign = get<std::string>(j, "sign", path);
            if (sign != "+" && sign != "-") fail(path + "/sign", "expected \"+\" or \"-\"");
            return TestFunctionSpec::pullback(sign == "+" ? Sheet::plus : Sheet::minus,
                                              spec_from_json(field(j, "base", path), path + "/base"),
                                              positive(j, "m", path));
        }
        if (type == "x_minus_derivative") {
            return TestFunctionSpec::x_minus_derivative(spec_from_json(field(j, "base", path), path + "/base"),
                                                        get_or<int>(j, "order", path, 1));
        }
        if (type == "sum") {
            const json& terms = field(j, "terms", path);
            if (!terms.is_array()) fail(path + "/terms", "expected an array");
            std::vector<std::pair<cplx, TestFunctionSpec>> out;
            for (std::size_t i = 0; i < terms.size(); ++i) {
                const std::string tp = path + "/terms/" + std::to_string(i);
                const cplx c = terms[i].contains("coef") ? complex_from_json(terms[i]["coef"], tp + "/coef") : cplx(1.0);
                out.emplace_back(c, spec_from_json(field(terms[i], "spec", tp), tp + "/spec"));
            }
            return TestFunctionSpec::sum(std::move(out));
        }
        if (type == "product") {
            const json& factors = field(j, "factors", path);
            if (!factors.is_array()) fail(path + "/factors", "expected an array");
            std::vector<TestFunctionSpec> out;
            for (std::size_t i = 0; i < factors.size(); ++i)
                out.push_back(spec_from_json(factors[i], path + "/factors/" + std::to_string(i)));
            const cplx c = j.contains("coef") ? complex_from_json(j["coef"], path + "/coef") : cplx(1.0);
            return TestFunctionSpec::product(std::move(out), c);
        }
        if (type == "constant") {
            return TestFunctionSpec::constant(get<int>(j, "dim", path), complex_from_json(field(j, "value", path), path + "/value"));
        }
    } catch (const DomainError& e) {
        fail(path, e.what());
    }
    fail(path + "/type", "unknown type '" + type + "'");
}

}  // namespace charcone
