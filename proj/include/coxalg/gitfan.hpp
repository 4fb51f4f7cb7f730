#ifndef COXALG_GITFAN_HPP
#define COXALG_GITFAN_HPP

#include "coxalg/coxring.hpp"

namespace coxalg {

// ----------------------------------------------------------- GIT weights ----

// Diagonal torus action data: one integer weight vector per variable and a
// linearization character.
struct WeightSystem {
    std::vector<std::string> vars;
    std::vector<std::vector<long>> weights;
    std::vector<long> chi;
};

// exact test: chi in the rational cone spanned by the given vectors
bool in_rational_cone(const std::vector<std::vector<long>>& gens, const std::vector<long>& point);

// all inclusion-minimal variable subsets S with chi in Cone(weights(S));
// subsets returned as sorted index lists, ordered lexicographically
std::vector<std::vector<int>> semistable_supports(const WeightSystem& ws);

// weights of the support generate the full character lattice
bool isotropy_trivial(const WeightSystem& ws, const std::vector<int>& support);

// Does the `printed` support family describe the semistable locus of the
// subvariety cut out by `relations` exactly? Requires: printed ⊆ ambient,
// every printed chart meets the variety, and the printed charts cover every
// ambient chart on the variety (radical-membership tests).
struct SupportMatch {
    bool pass = true;
    std::vector<std::string> notes;
};
SupportMatch supports_match_on_variety(const std::vector<std::vector<int>>& ambient,
                                       const std::vector<std::vector<int>>& printed,
                                       const Ideal& relations);

// ------------------------------------------------------- monomial minors ----

struct MinorHit {
    std::vector<int> rows;  // variable indices
    std::vector<int> cols;  // generator indices
    Poly det;               // a single term
    std::vector<int> support;  // variables appearing in the monomial
};

struct MinorSearchOptions {
    // variables set to zero before differentiating
    std::vector<int> zeroed_vars;
    // try these column sets first (each of size `size`)
    std::vector<std::vector<int>> seed_columns;
    // when nonempty: only report hits whose support is contained here
    std::vector<int> support_filter;
    std::size_t max_hits = 1;
    bool exhaustive = true;  // enumerate all column subsets after the seeds
};

// Search for size x size minors of the Jacobian d(gens)/d(rows) that are
// single monomials. Rows are fixed; columns are seeded then enumerated.
std::vector<MinorHit> monomial_minor_search(const std::vector<Poly>& gens,
                                            const std::vector<int>& rows, std::size_t size,
                                            const MinorSearchOptions& opt = {});

// ------------------------------------------------------------ toric part ----

struct Cone {
    int rank = 0;
    std::vector<std::vector<long>> rays;  // primitive, deduplicated
    std::vector<std::vector<long>> facets;  // inward normals (computed on demand)

    static Cone from_rays(int rank, std::vector<std::vector<long>> rays);
    bool contains(const std::vector<long>& x) const;  // needs facets
    bool is_strongly_convex() const;
};

std::vector<long> primitive(std::vector<long> v);

// dual cone via active-subset enumeration; lineality is returned as opposite
// ray pairs. Throws past rank 8.
Cone dual_cone(const Cone& c);

// minimal generating set of Cone ∩ Z^rank (strongly convex, rank <= 4),
// sorted by a fixed interior grading then lexicographically
std::vector<std::vector<long>> hilbert_basis(const Cone& c);

// kernel of v_i -> x^{points[i]} (Laurent); binomial generators
Ideal toric_ideal(const std::vector<std::vector<long>>& points,
                  const std::vector<std::string>& varnames, const CyclotomicField& field);

// faces of a cone as sorted ray-index subsets (includes {} and all rays)
std::vector<std::vector<int>> cone_faces(const Cone& c);

// Affine toric chart: cone + Hilbert basis of the dual + named coordinates.
struct AffineToricData {
    Cone sigma;
    std::vector<std::vector<long>> hb;  // one per coordinate
    RingPtr ring;
};

// face whose orbit closure has the given ideal (added to the toric ideal);
// throws when no face matches
std::vector<int> orbit_face(const AffineToricData& td, const Ideal& subvariety);

struct Fan {
    int rank = 2;
    std::vector<std::vector<long>> rays;     // primitive, angularly sorted
    std::vector<std::vector<int>> cones2d;   // adjacent ray index pairs
    bool complete = false;
    bool smooth = false;
    // for smooth complete 4-ray fans: the Hirzebruch parameter a >= 0
    std::optional<long> hirzebruch_a;
};

// image fan of the faces of c not containing any removed face, under the
// lattice projection (rows = the map to Z^2)
Fan quotient_fan(const Cone& c, const std::vector<std::vector<int>>& removed_faces,
                 const std::vector<std::vector<long>>& projection);

// --------------------------------------------------- central fiber (D8) -----

struct CentralFiberItem {
    std::string id;
    std::string status;  // PASS / FAIL
    std::string detail;
};
struct CentralFiberReport {
    std::vector<CentralFiberItem> items;
    bool pass = true;
    std::vector<int> claimed_dims;
    std::vector<bool> stable_component;  // per claimed component
};

// Verifies a claimed component decomposition of the fiber over the image of
// the origin: containments up to radical, dimensions, and which components
// carry semistable points for the given weights.
CentralFiberReport central_fiber_verify(const CaseSpec& cs, const Ideal& embedding,
                                        const std::vector<Ideal>& claimed,
                                        const WeightSystem& ws,
                                        const std::vector<int>& expected_dims,
                                        const std::vector<bool>& expected_stable,
                                        long invariant_degree_bound);

}  // namespace coxalg

#endif
