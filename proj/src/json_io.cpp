#include "tate/json_io.hpp"

namespace tate {

const FieldInfo* field_from_order(long long q) {
    if (q < 2) throw domain_error("field order must be >= 2");
    long long p = 0;
    for (long long c = 2; c * c <= q; ++c)
        if (q % c == 0) { p = c; break; }
    if (p == 0) return FieldInfo::prime(q);
    int e = 0;
    long long rest = q;
    while (rest > 1) {
        if (rest % p) throw domain_error("field order must be a prime power");
        rest /= p;
        ++e;
    }
    return e == 1 ? FieldInfo::prime(p) : FieldInfo::extension(p, e);
}

json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const FieldInfo* f, const json& j) {
    if (j.is_number_integer()) return f->kind() == FieldKind::rational
                                          ? Scalar::rational(j.get<long long>(), 1)
                                          : f->from_integer(j.get<long long>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    throw domain_error("scalar literal must be a number or string");
}

json series_to_json(const LaurentSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(scalar_to_json(c));
    return json{{"v", s.is_zero_at_prec() ? 0 : s.v()}, {"prec", s.prec()}, {"coeffs", coeffs}};
}

LaurentSeries series_from_json(const FieldInfo* f, const json& j) {
    long v = j.at("v").get<long>();
    long prec = j.at("prec").get<long>();
    std::vector<Scalar> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(scalar_from_json(f, c));
    return LaurentSeries(f, v, prec, std::move(coeffs));
}

json laurent_matrix_to_json(const LaurentMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(series_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

LaurentMatrix laurent_matrix_from_json(const FieldInfo* f, const json& j) {
    int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
    LaurentMatrix m(f, rows, cols, 1);
    const json& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows) throw domain_error("entry row count mismatch");
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(entries[r].size()) != cols) throw domain_error("entry column count mismatch");
        for (int c = 0; c < cols; ++c) m.at(r, c) = series_from_json(f, entries[r][c]);
    }
    return m;
}

json lattice_to_json(const Lattice& l) {
    json j = laurent_matrix_to_json(l.basis());
    j["canonical"] = true;
    return j;
}

Lattice lattice_from_json(const FieldInfo* f, const json& j, long min_prec) {
    LaurentMatrix m = laurent_matrix_from_json(f, j);
    if (min_prec > 0) {
        // Inputs are exact digit lists; lifting the working precision is
        // sound and lets precision retries make progress.
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) {
                const LaurentSeries& s = m.at(r, c);
                long p = std::max(s.prec(), min_prec);
                m.at(r, c) = LaurentSeries(f, s.is_zero_at_prec() ? 0 : s.v(), p, s.coeffs());
            }
    }
    return Lattice::from_matrix(m);
}

json field_matrix_to_json(const FieldMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

FieldMatrix field_matrix_from_json(const FieldInfo* f, const json& j) {
    int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
    FieldMatrix m(f, rows, cols);
    const json& entries = j.at("entries");
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(f, entries.at(r).at(c));
    return m;
}

json diagram_to_json(const IndDiagram& d) {
    json elems = json::array(), leq = json::array();
    for (int i = 0; i < d.poset.size(); ++i) elems.push_back(d.poset.name(i));
    for (int i = 0; i < d.poset.size(); ++i)
        for (int j = 0; j < d.poset.size(); ++j)
            if (i != j && d.poset.leq(i, j)) leq.push_back(json::array({d.poset.name(i), d.poset.name(j)}));
    json objects = json::object(), transitions = json::object();
    for (int i = 0; i < d.poset.size(); ++i) objects[d.poset.name(i)] = d.objects[i].dim;
    for (const auto& [key, m] : d.transitions) {
        json rows = json::array();
        for (int r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
            rows.push_back(row);
        }
        transitions[d.poset.name(key.first) + "->" + d.poset.name(key.second)] = rows;
    }
    return json{{"poset", {{"elems", elems}, {"leq", leq}}}, {"objects", objects}, {"transitions", transitions}};
}

IndDiagram ind_diagram_from_json(const FieldInfo* f, const json& j) {
    std::vector<std::string> elems;
    for (const auto& e : j.at("poset").at("elems")) elems.push_back(e.get<std::string>());
    FinitePoset names_only(elems, {});
    std::vector<std::pair<int, int>> rel;
    for (const auto& pr : j.at("poset").at("leq"))
        rel.emplace_back(names_only.index_of(pr.at(0).get<std::string>()),
                         names_only.index_of(pr.at(1).get<std::string>()));
    FinitePoset poset(elems, rel);

    std::vector<VectObject> objects;
    for (int i = 0; i < poset.size(); ++i)
        objects.push_back(VectObject{j.at("objects").at(poset.name(i)).get<int>(), f});

    IndDiagram d{{poset, objects, {}}};
    for (const auto& [key, val] : j.at("transitions").items()) {
        auto arrow = key.find("->");
        if (arrow == std::string::npos) throw domain_error("transition key must be 'a->b'");
        int a = poset.index_of(key.substr(0, arrow));
        int b = poset.index_of(key.substr(arrow + 2));
        FieldMatrix m(f, objects[b].dim, objects[a].dim);
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) m.at(r, c) = scalar_from_json(f, val.at(r).at(c));
        d.transitions.insert_or_assign({a, b}, m);
    }
    // Missing composite transitions are filled in along the order.
    for (int i = 0; i < poset.size(); ++i)
        for (int k = 0; k < poset.size(); ++k) {
            if (i == k || !poset.leq(i, k) || d.transitions.count({i, k})) continue;
            for (int mid = 0; mid < poset.size(); ++mid) {
                if (mid == i || mid == k) continue;
                if (poset.leq(i, mid) && poset.leq(mid, k) && d.transitions.count({i, mid}) &&
                    d.transitions.count({mid, k})) {
                    d.transitions.insert_or_assign({i, k}, d.transition(mid, k) * d.transition(i, mid));
                    break;
                }
            }
        }
    return d;
}

json staircase_to_json(const Staircase2& s) {
    json profile = json::object();
    for (long j = s.j0(); j < s.j1(); ++j) {
        const Layer& l = s.layer(j);
        json v;
        switch (l.kind) {
            case Layer::Kind::zero: v = "Zero"; break;
            case Layer::Kind::full: v = "Full"; break;
            case Layer::Kind::lat: v = json{{"Lat", l.a}}; break;
        }
        profile[std::to_string(j)] = v;
    }
    return json{{"j0", s.j0()}, {"j1", s.j1()}, {"profile", profile}};
}

Staircase2 staircase_from_json(const json& j) {
    long j0 = j.at("j0").get<long>();
    long j1 = j.at("j1").get<long>();
    if (j1 < j0) throw domain_error("staircase needs j0 <= j1");
    std::vector<Layer> prof(static_cast<size_t>(j1 - j0), Layer::full());
    for (const auto& [key, val] : j.at("profile").items()) {
        long idx = std::stol(key);
        if (idx < j0 || idx >= j1) throw domain_error("staircase profile index out of range");
        Layer l = Layer::zero();
        if (val.is_string()) {
            std::string s = val.get<std::string>();
            if (s == "Full") l = Layer::full();
            else if (s == "Zero") l = Layer::zero();
            else throw domain_error("unknown staircase layer '" + s + "'");
        } else {
            l = Layer::lat(val.at("Lat").get<long>());
        }
        prof[idx - j0] = l;
    }
    return Staircase2(j0, std::move(prof));
}

RationalFunction rational_function_from_json(const FieldInfo* f, const json& j) {
    auto poly = [&](const json& arr) {
        std::vector<Scalar> c;
        for (const auto& v : arr) c.push_back(scalar_from_json(f, v));
        return Poly(f, std::move(c));
    };
    return RationalFunction(poly(j.at("num")), poly(j.at("den")));
}

}  // namespace tate
