#include "canontl/json_io.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace canontl {

using nlohmann::json;

json laurent_to_json(const LaurentPoly& p) {
    json j = json::object();
    for (const auto& [e, c] : p.terms()) {
        if (!c.fits_slong_p())
            throw std::range_error("laurent_to_json: coefficient exceeds 64 bits");
        j[std::to_string(e)] = static_cast<std::int64_t>(c.get_si());
    }
    return j;
}

LaurentPoly laurent_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("laurent: expected object");
    LaurentPoly p;
    for (const auto& [k, v] : j.items())
        p += LaurentPoly::term(mpz_class(v.get<std::int64_t>()), std::stoi(k));
    return p;
}

json permutation_to_json(const Permutation& w) { return json(w.one_line()); }

Permutation permutation_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("permutation: expected array");
    return Permutation(j.get<std::vector<int>>());
}

json diagram_to_json(const TLDiagram& d) {
    const int m = d.bottom_count(), n = d.top_count();
    auto name = [&](int a) {
        return (d.is_top(a) ? "t" : "b") + std::to_string(d.line_index(a));
    };
    json pairs = json::array();
    for (int a = 0; a < m + n; ++a)
        if (d.partner(a) > a) pairs.push_back({name(a), name(d.partner(a))});
    return {{"m", m}, {"n", n}, {"pairs", pairs}};
}

TLDiagram diagram_from_json(const json& j) {
    const int m = j.at("m").get<int>(), n = j.at("n").get<int>();
    if (m < 0 || n < 0) throw std::invalid_argument("diagram: negative shape");
    auto point = [&](const std::string& s) {
        if (s.size() < 2 || (s[0] != 'b' && s[0] != 't'))
            throw std::invalid_argument("diagram: bad point name " + s);
        int i = std::stoi(s.substr(1));
        if (i < 1 || i > (s[0] == 'b' ? m : n))
            throw std::invalid_argument("diagram: point out of range " + s);
        return s[0] == 'b' ? i - 1 : m + i - 1;
    };
    std::vector<int> pairing(m + n, -1);
    for (const auto& pr : j.at("pairs")) {
        if (!pr.is_array() || pr.size() != 2)
            throw std::invalid_argument("diagram: bad pair entry");
        int a = point(pr[0].get<std::string>()), b = point(pr[1].get<std::string>());
        pairing[a] = b;
        pairing[b] = a;
    }
    return TLDiagram(m, n, std::move(pairing));
}

json spin_to_json(const SpinVector& v) {
    json coords = json::object();
    for (const auto& [s, c] : v.coords) coords[s] = laurent_to_json(c);
    return {{"n", v.n}, {"coords", coords}};
}

SpinVector spin_from_json(const json& j) {
    SpinVector v = spin_zero(j.at("n").get<int>());
    for (const auto& [s, c] : j.at("coords").items()) {
        if (static_cast<int>(s.size()) != v.n)
            throw std::invalid_argument("spin: coordinate length mismatch");
        spin_add_scaled(v, basis_tensor(s), laurent_from_json(c));
    }
    return v;
}

json hecke_to_json(const HeckeElt& h) {
    std::vector<Permutation> order;
    for (const auto& [w, c] : h) order.push_back(w);
    std::sort(order.begin(), order.end(), length_lex_less);
    json out = json::array();
    for (const auto& w : order)
        out.push_back({{"w", permutation_to_json(w)}, {"coeff", laurent_to_json(h.at(w))}});
    return out;
}

HeckeElt hecke_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("hecke: expected array");
    HeckeElt h;
    for (const auto& entry : j) {
        Permutation w = permutation_from_json(entry.at("w"));
        LaurentPoly c = laurent_from_json(entry.at("coeff"));
        if (!c.is_zero()) h[w] += c;
    }
    return h;
}

json parabolic_to_json(const ParabolicElt& x) {
    return {{"kind", kind_name(x.kind)}, {"terms", hecke_to_json(x.coords)}};
}

ParabolicElt parabolic_from_json(const json& j) {
    ParabolicElt x;
    const std::string k = j.at("kind").get<std::string>();
    if (k == "M")
        x.kind = ParabolicKind::M;
    else if (k == "N")
        x.kind = ParabolicKind::N;
    else if (k == "Q")
        x.kind = ParabolicKind::Nstar;
    else if (k == "R")
        x.kind = ParabolicKind::Mstar;
    else
        throw std::invalid_argument("parabolic: unknown kind " + k);
    x.coords = hecke_from_json(j.at("terms"));
    return x;
}

}  // namespace canontl
