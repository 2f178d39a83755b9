#pragma once

#include <optional>
#include <string>
#include <vector>

namespace chamber {

// Face vector f (f[k] = number of k-dimensional faces) together with the
// h-vector obtained by the standard transform.
struct FVector {
    std::vector<long long> f;
    std::vector<long long> h;
};

// A finite abstract simplicial complex stored by its facets.  Vertices carry
// opaque string labels; faces are sets of vertex ids.  The empty complex
// (no vertices, only the empty face) is representable and distinct from a
// single vertex.  Instances are immutable after construction and safe to
// share across threads.
class Complex {
public:
    // The empty complex.
    Complex() = default;

    // Builds a complex from labelled facets.  Non-maximal entries are
    // dropped, facets are stored with sorted vertex ids and in sorted order,
    // and vertex ids follow the order of first appearance in `labels`.
    // Labels that occur in no facet do not become vertices.  An unknown
    // label inside a facet throws std::invalid_argument.
    static Complex from_facets(const std::vector<std::string>& labels,
                               const std::vector<std::vector<std::string>>& facet_list);

    // Same, with facets given as id sets into `labels`.
    static Complex from_facet_ids(const std::vector<std::string>& labels,
                                  std::vector<std::vector<int>> facet_list);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& vertex_labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(static_cast<size_t>(v)); }
    // -1 when no vertex carries the label.
    int vertex_id(const std::string& label) const;

    // Facets, each a strictly increasing id vector; the list itself is
    // lexicographically sorted.
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }

    bool is_empty() const { return facets_.empty(); }
    // -1 for the empty complex.
    int dimension() const;
    bool is_pure() const;

    bool operator==(const Complex&) const = default;

    // All faces of K contained in the given vertex set (ids of this
    // complex); may be the empty complex.
    Complex full_subcomplex(const std::vector<int>& vertex_ids) const;

    // Link, closed star, and the face-deletion subcomplex
    // { sigma in K : v not in sigma }.  All three throw if v is not a
    // vertex.
    Complex link(int v) const;
    Complex star(int v) const;
    Complex delete_star(int v) const;

    // A vertex contained in every facet, if one exists: the certificate
    // that the complex is a cone (hence contractible).  Smallest such id.
    // Throws on the empty complex.
    std::optional<int> cone_apex() const;

    // Full face enumeration from the facets: faces_by_dim()[k] lists all
    // k-faces as sorted id vectors, lexicographically ordered.
    std::vector<std::vector<std::vector<int>>> faces_by_dim() const;
    FVector f_vector() const;
    long long face_count() const;

    // chi~ = sum_k (-1)^k f_k - 1, so the empty complex gives -1.
    long long euler_char_reduced() const;

    // Components of the 1-skeleton; isolated vertices count, the empty
    // complex has 0.
    int connected_components() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> facets_;

    // Rebuilds from candidate faces: drops non-maximal ones, renumbers the
    // vertices that actually occur (keeping this complex's label order).
    Complex rebuild(std::vector<std::vector<int>> faces) const;
};

}  // namespace chamber
