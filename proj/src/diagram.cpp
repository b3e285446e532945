#include "tate/diagram.hpp"

#include <algorithm>

namespace tate {

FinitePoset::FinitePoset(std::vector<std::string> elems, const std::vector<std::pair<int, int>>& rel)
    : elems_(std::move(elems)) {
    const int n = size();
    leq_.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq_[i][i] = true;
    for (auto [a, b] : rel) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw domain_error("poset relation index out of range");
        leq_[a][b] = true;
    }
    // Warshall closure.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (leq_[i][k])
                for (int j = 0; j < n; ++j)
                    if (leq_[k][j]) leq_[i][j] = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && leq_[i][j] && leq_[j][i]) throw domain_error("poset relation has a cycle");
}

int FinitePoset::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (elems_[i] == name) return i;
    throw domain_error("unknown poset element '" + name + "'");
}

bool FinitePoset::directed() const {
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b) {
            bool ok = false;
            for (int c = 0; c < size() && !ok; ++c) ok = leq_[a][c] && leq_[b][c];
            if (!ok) return false;
        }
    return true;
}

std::optional<int> FinitePoset::maximum() const {
    for (int m = 0; m < size(); ++m) {
        bool top = true;
        for (int i = 0; i < size() && top; ++i) top = leq_[i][m];
        if (top) return m;
    }
    return std::nullopt;
}

std::vector<int> FinitePoset::topo_order() const {
    std::vector<int> order;
    std::vector<bool> used(size(), false);
    for (int step = 0; step < size(); ++step) {
        int pick = -1;
        for (int i = 0; i < size() && pick < 0; ++i) {
            if (used[i]) continue;
            bool minimal = true;
            for (int j = 0; j < size() && minimal; ++j)
                if (!used[j] && j != i && leq_[j][i]) minimal = false;
            if (minimal) pick = i;
        }
        used[pick] = true;
        order.push_back(pick);
    }
    return order;
}

FinitePoset FinitePoset::opposite() const {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            if (i != j && leq_[i][j]) rel.emplace_back(j, i);
    return FinitePoset(elems_, rel);
}

const FieldMatrix& Diagram::transition(int i, int j) const {
    auto it = transitions.find({i, j});
    if (it == transitions.end()) throw domain_error("missing diagram transition");
    return it->second;
}

// With transitions keyed (i, j) for i <= j and Pro transitions running
// X_j ->> X_i, passing to the opposite diagram and dualizing the vector
// spaces lands back on the same poset with every matrix transposed.
ProDiagram dual_of_ind(const IndDiagram& d) {
    ProDiagram p{{d.poset, d.objects, {}}};
    for (const auto& [key, m] : d.transitions) p.transitions.insert_or_assign(key, m.transpose());
    return p;
}

IndDiagram ind_of_pro(const ProDiagram& d) {
    IndDiagram x{{d.poset, d.objects, {}}};
    for (const auto& [key, m] : d.transitions) x.transitions.insert_or_assign(key, m.transpose());
    return x;
}

namespace {

// Shared structural checks: all comparable pairs present with the right
// shapes, functoriality of composites.  leg_check validates each transition.
template <typename LegCheck>
bool diagram_well_formed(const Diagram& d, bool transitions_forward, LegCheck leg_check) {
    const int n = d.poset.size();
    if (static_cast<int>(d.objects.size()) != n || n == 0) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !d.poset.leq(i, j)) {
                if (i != j && d.transitions.count({i, j})) return false;
                continue;
            }
            auto it = d.transitions.find({i, j});
            if (it == d.transitions.end()) return false;
            const FieldMatrix& m = it->second;
            int src = transitions_forward ? i : j, dst = transitions_forward ? j : i;
            if (m.cols() != d.objects[src].dim || m.rows() != d.objects[dst].dim) return false;
            if (m.field() != d.objects[src].field) return false;
            if (!leg_check(m)) return false;
        }
    // Composites agree.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                if (!(d.poset.leq(i, j) && d.poset.leq(j, k))) continue;
                if (transitions_forward) {
                    if (d.transition(j, k) * d.transition(i, j) != d.transition(i, k)) return false;
                } else {
                    if (d.transition(i, j) * d.transition(j, k) != d.transition(i, k)) return false;
                }
            }
    return true;
}

}  // namespace

bool check_admissible(const IndDiagram& d) {
    if (!d.poset.directed()) return false;
    return diagram_well_formed(d, true, [](const FieldMatrix& m) { return m.rank() == m.cols(); });
}

bool check_admissible(const ProDiagram& d) {
    if (!d.poset.directed()) return false;
    return diagram_well_formed(d, false, [](const FieldMatrix& m) { return m.rank() == m.rows(); });
}

Realization realize_colim(const IndDiagram& d) {
    const FieldInfo* f = d.field();
    const int n = d.poset.size();
    std::vector<int> offset(n + 1, 0);
    for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + d.objects[i].dim;
    const int total = offset[n];

    int nrel = 0;
    for (const auto& [key, m] : d.transitions) {
        (void)m;
        nrel += d.objects[key.first].dim;
    }
    FieldMatrix rel(f, total, nrel);
    int out = 0;
    for (const auto& [key, m] : d.transitions) {
        auto [i, j] = key;
        for (int c = 0; c < d.objects[i].dim; ++c) {
            rel.at(offset[i] + c, out) = f->one();
            for (int r = 0; r < d.objects[j].dim; ++r) rel.at(offset[j] + r, out) -= m.at(r, c);
            ++out;
        }
    }

    QuotientObject q = cokernel(rel);
    Realization res{q.obj, {}};
    for (int i = 0; i < n; ++i) {
        FieldMatrix leg(f, q.obj.dim, d.objects[i].dim);
        for (int r = 0; r < q.obj.dim; ++r)
            for (int c = 0; c < d.objects[i].dim; ++c) leg.at(r, c) = q.project.at(r, offset[i] + c);
        res.cocone.push_back(leg);
    }
    return res;
}

namespace {

// Minimal j (in topological order) with f factoring through Y_j -> colim Y,
// plus the factored component.
std::pair<int, FieldMatrix> canonical_section(const IndDiagram& y, const Realization& ry,
                                              const FieldMatrix& into_colim) {
    for (int j : y.poset.topo_order()) {
        auto sol = ry.cocone[j].solve(into_colim);
        if (sol && ry.cocone[j] * (*sol) == into_colim) return {j, *sol};
    }
    throw domain_error("morphism component does not factor through the diagram");
}

}  // namespace

HomElement hom_element_from_matrix(const IndDiagram& x, const IndDiagram& y, const FieldMatrix& f) {
    Realization rx = realize_colim(x), ry = realize_colim(y);
    if (f.cols() != rx.obj.dim || f.rows() != ry.obj.dim) throw domain_error("hom element shape mismatch");
    HomElement h{{}, {}, f};
    for (int i = 0; i < x.poset.size(); ++i) {
        auto [j, comp] = canonical_section(y, ry, f * rx.cocone[i]);
        h.target.push_back(j);
        h.component.push_back(comp);
    }
    return h;
}

HomSpace hom_ind(const IndDiagram& x, const IndDiagram& y) {
    if (!check_admissible(x) || !check_admissible(y)) throw domain_error("hom_ind needs admissible diagrams");
    const FieldInfo* f = x.field();
    Realization rx = realize_colim(x), ry = realize_colim(y);

    // Unknown: a matrix colim X -> colim Y.  Compatibility of the family
    // (f restricted along the cocone legs) is automatic, so the solution
    // space is all of hom; the content is the canonical section per leg.
    int vars = rx.obj.dim * ry.obj.dim;
    FieldMatrix basis = FieldMatrix::identity(f, vars);
    HomSpace hs{vars, {}};
    for (int b = 0; b < vars; ++b) {
        FieldMatrix m(f, ry.obj.dim, rx.obj.dim);
        int idx = 0;
        for (int r = 0; r < ry.obj.dim; ++r)
            for (int c = 0; c < rx.obj.dim; ++c) m.at(r, c) = basis.at(idx++, b);
        hs.basis.push_back(hom_element_from_matrix(x, y, m));
    }
    return hs;
}

Straightening straighten(const IndDiagram& x, const IndDiagram& y, const FieldMatrix& f) {
    Realization rx = realize_colim(x), ry = realize_colim(y);
    if (f.cols() != rx.obj.dim || f.rows() != ry.obj.dim) throw domain_error("straighten shape mismatch");

    Straightening s{{std::vector<std::string>{}, {}}, {}, {}, true, true};
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> pairs;
    std::vector<FieldMatrix> comps;
    for (int i = 0; i < x.poset.size(); ++i)
        for (int j = 0; j < y.poset.size(); ++j) {
            auto sol = ry.cocone[j].solve(f * rx.cocone[i]);
            if (!sol || !(ry.cocone[j] * (*sol) == f * rx.cocone[i])) continue;
            names.push_back(x.poset.name(i) + "|" + y.poset.name(j));
            pairs.emplace_back(i, j);
            comps.push_back(*sol);
        }
    std::vector<std::pair<int, int>> rel;
    for (size_t a = 0; a < pairs.size(); ++a)
        for (size_t b = 0; b < pairs.size(); ++b)
            if (a != b && x.poset.leq(pairs[a].first, pairs[b].first) && y.poset.leq(pairs[a].second, pairs[b].second))
                rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
    s.comma = FinitePoset(names, rel);
    s.pairs = pairs;
    s.component = comps;

    for (int i = 0; i < x.poset.size() && s.left_final; ++i) {
        bool hit = false;
        for (const auto& [pi, pj] : pairs) {
            (void)pj;
            if (x.poset.leq(i, pi)) { hit = true; break; }
        }
        s.left_final = hit;
    }
    for (int j = 0; j < y.poset.size() && s.right_final; ++j) {
        bool hit = false;
        for (const auto& [pi, pj] : pairs) {
            (void)pi;
            if (y.poset.leq(j, pj)) { hit = true; break; }
        }
        s.right_final = hit;
    }
    if (pairs.empty()) throw domain_error("morphism admits no commuting squares");
    return s;
}

FieldMatrix realize_straightening(const IndDiagram& x, const IndDiagram& y, const Straightening& s) {
    // Restrict X along the comma poset, realize, and compare against the
    // map induced by the components.
    const FieldInfo* f = x.field();
    IndDiagram xr{{s.comma, {}, {}}};
    for (const auto& [i, j] : s.pairs) {
        (void)j;
        xr.objects.push_back(x.objects[i]);
    }
    for (size_t a = 0; a < s.pairs.size(); ++a)
        for (size_t b = 0; b < s.pairs.size(); ++b) {
            if (a == b || !s.comma.leq(static_cast<int>(a), static_cast<int>(b))) continue;
            int ia = s.pairs[a].first, ib = s.pairs[b].first;
            xr.transitions.insert_or_assign(
                {static_cast<int>(a), static_cast<int>(b)},
                ia == ib ? FieldMatrix::identity(f, x.objects[ia].dim) : x.transition(ia, ib));
        }

    Realization rxr = realize_colim(xr);
    Realization rx = realize_colim(x);
    Realization ry = realize_colim(y);

    // Comparison iso colim(X|comma) -> colim(X), and the map induced by the
    // strict family; both are pinned down by the cocone legs.
    FieldMatrix legs(f, rx.obj.dim, 0), want(f, ry.obj.dim, 0);
    FieldMatrix legs_src(f, rxr.obj.dim, 0);
    for (size_t a = 0; a < s.pairs.size(); ++a) {
        legs_src = FieldMatrix::hstack(legs_src, rxr.cocone[a]);
        legs = FieldMatrix::hstack(legs, rx.cocone[s.pairs[a].first]);
        want = FieldMatrix::hstack(want, ry.cocone[s.pairs[a].second] * s.component[a]);
    }
    // legs_src has full row rank (cocone legs are jointly epic), so both
    // factorizations are unique.
    auto cmp = legs_src.transpose().solve(legs.transpose());
    auto g = legs_src.transpose().solve(want.transpose());
    if (!cmp || !g) throw domain_error("straightening does not assemble");
    FieldMatrix c = cmp->transpose();
    return g->transpose() * c.inverse();
}

IndDiagram chain_diagram(const std::vector<VectObject>& objs, const std::vector<FieldMatrix>& steps) {
    if (objs.empty() || steps.size() + 1 != objs.size()) throw domain_error("chain shape mismatch");
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> rel;
    for (size_t i = 0; i < objs.size(); ++i) {
        names.push_back(std::to_string(i));
        if (i + 1 < objs.size()) rel.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
    }
    IndDiagram d{{FinitePoset(names, rel), objs, {}}};
    for (size_t i = 0; i < objs.size(); ++i) {
        FieldMatrix acc = steps.empty() ? FieldMatrix::identity(objs[0].field, objs[0].dim) : steps[0];
        for (size_t j = i; j + 1 < objs.size(); ++j) {
            acc = j == i ? steps[j] : steps[j] * acc;
            d.transitions.insert_or_assign({static_cast<int>(i), static_cast<int>(j + 1)}, acc);
        }
    }
    return d;
}

IndDiagram constant_diagram(const FinitePoset& poset, const VectObject& obj) {
    IndDiagram d{{poset, std::vector<VectObject>(poset.size(), obj), {}}};
    for (int i = 0; i < poset.size(); ++i)
        for (int j = 0; j < poset.size(); ++j)
            if (i != j && poset.leq(i, j)) d.transitions.insert_or_assign({i, j}, FieldMatrix::identity(obj.field, obj.dim));
    return d;
}

}  // namespace tate
