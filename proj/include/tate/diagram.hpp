#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tate/exact.hpp"

namespace tate {

// Finite poset given by named elements and a relation; the constructor takes
// any set of pairs, closes it reflexively and transitively, and rejects
// cycles.
class FinitePoset {
  public:
    FinitePoset(std::vector<std::string> elems, const std::vector<std::pair<int, int>>& rel);

    int size() const { return static_cast<int>(elems_.size()); }
    const std::string& name(int i) const { return elems_[i]; }
    int index_of(const std::string& name) const;
    bool leq(int a, int b) const { return leq_[a][b]; }

    bool directed() const;
    std::optional<int> maximum() const;
    // Deterministic linear extension: repeatedly take the smallest-index
    // minimal element.
    std::vector<int> topo_order() const;
    FinitePoset opposite() const;

    friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
        return a.elems_ == b.elems_ && a.leq_ == b.leq_;
    }

  private:
    std::vector<std::string> elems_;
    std::vector<std::vector<bool>> leq_;
};

// Diagram of finite dimensional vector spaces over a finite poset.  For an
// Ind-diagram the transition for i <= j maps X_i into X_j and must be monic;
// a Pro-diagram stores, for i <= j, the surjection X_j ->> X_i.
struct Diagram {
    FinitePoset poset;
    std::vector<VectObject> objects;
    // Keyed by (i, j) for every strict comparable pair i < j.
    std::map<std::pair<int, int>, FieldMatrix> transitions;

    const FieldMatrix& transition(int i, int j) const;
    const FieldInfo* field() const { return objects.at(0).field; }
};

struct IndDiagram : Diagram {};
struct ProDiagram : Diagram {};

// Opposite-poset transposed duals; admissibility transports across them.
ProDiagram dual_of_ind(const IndDiagram& d);
IndDiagram ind_of_pro(const ProDiagram& d);

// Directedness, functoriality, and monic (resp. epic) transitions.
bool check_admissible(const IndDiagram& d);
bool check_admissible(const ProDiagram& d);

struct Realization {
    VectObject obj;
    std::vector<FieldMatrix> cocone;  // cocone[i] : X_i -> colim
};

// Colimit as the coequalizer of the transition relation.  Works for any
// finite poset diagram; for admissible directed diagrams the cocone legs are
// monic and the leg at the maximum is invertible.
Realization realize_colim(const IndDiagram& d);

// A morphism of Ind-objects as a compatible family: for each source index,
// the minimal target index (in topological order) through which the
// component factors.
struct HomElement {
    std::vector<int> target;            // per source element i, the chosen j
    std::vector<FieldMatrix> component; // X_i -> Y_{target[i]}
    FieldMatrix realized;               // colim X -> colim Y
};

struct HomSpace {
    int dim;
    std::vector<HomElement> basis;
};

// lim over I of colim over J of hom(X_i, Y_j), with a basis of compatible
// families in canonical section form.
HomSpace hom_ind(const IndDiagram& x, const IndDiagram& y);

// The hom element carried by a matrix between the realizations; throws if
// the matrix is not compatible with the diagrams.
HomElement hom_element_from_matrix(const IndDiagram& x, const IndDiagram& y, const FieldMatrix& f);

struct Straightening {
    FinitePoset comma;                        // poset of (i, j) pairs carrying a square
    std::vector<std::pair<int, int>> pairs;   // comma element -> (i, j)
    std::vector<FieldMatrix> component;       // alpha_{ij} : X_i -> Y_j
    bool left_final;                          // projection to I is final
    bool right_final;                         // projection to J is final
};

// Straightens a morphism of Ind-objects to a strict span of diagrams over
// the comma poset of commuting squares.  The component at (i, j) is the
// unique filler, when one exists.
Straightening straighten(const IndDiagram& x, const IndDiagram& y, const FieldMatrix& f);

// Realize the straightened span back to a matrix between the realizations
// (round trip: equals the straightened morphism).
FieldMatrix realize_straightening(const IndDiagram& x, const IndDiagram& y, const Straightening& s);

// Convenience builders.
IndDiagram chain_diagram(const std::vector<VectObject>& objs, const std::vector<FieldMatrix>& steps);
IndDiagram constant_diagram(const FinitePoset& poset, const VectObject& obj);

}  // namespace tate
