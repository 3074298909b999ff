#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace floerkit {

enum class PolytopeKind { Associahedron, Multiplihedron };

// Vertex kinds of planar and painted trees. Plain and Painted vertices are
// associahedron factors above and below the paint front; Front vertices sit on
// the front and are multiplihedron factors. IntervalEnd/Interval only occur in
// the degenerate J_0 = J_1 = [0,1].
enum class VertexKind : std::uint8_t { Leaf, Plain, Front, Painted, IntervalEnd, Interval };

struct Token {
  VertexKind kind;
  int arity;  // number of children; for IntervalEnd the endpoint 0 or 1
  friend auto operator<=>(const Token&, const Token&) = default;
};

// Rooted planar tree stored as its preorder token sequence. Faces of K_l are
// trees with Plain vertices of arity >= 2; faces of J_l are painted trees in
// which every root-to-leaf path crosses exactly one Front vertex.
class Tree {
 public:
  Tree() = default;
  explicit Tree(std::vector<Token> preorder);

  const std::vector<Token>& tokens() const { return tokens_; }
  int leaves() const;
  int dimension() const;
  bool painted() const;

  // Token list such as ["k3","L","k2","L","L","L"]; stable, used for ordering.
  std::vector<std::string> serialize() const;
  // Nested form such as "k3(L,k2(L,L),L)".
  std::string nested() const;
  static Tree deserialize(const std::vector<std::string>& tokens);

  friend auto operator<=>(const Tree&, const Tree&) = default;

 private:
  std::vector<Token> tokens_;
};

using PlanarTree = Tree;
using PaintedTree = Tree;

int vertex_dimension(const Token& t);
std::string token_text(const Token& t);

// Face budget; FLOERKIT_MAX_FACES overrides the default.
std::size_t default_face_budget();

// All faces (or those of one dimension) in lexicographic token order. The top
// cell is included when dim is not given. Throws UnsupportedL past the budget.
std::vector<Tree> enumerate_faces(PolytopeKind kind, int l, std::optional<int> dim = std::nullopt,
                                  std::size_t budget = default_face_budget());

// Number of faces per dimension 0..d, computed by recursion on leaf counts.
std::vector<std::size_t> face_counts(PolytopeKind kind, int l);
// Proper faces only: dimensions 0..d-1.
std::vector<std::size_t> f_vector(PolytopeKind kind, int l, std::size_t budget = default_face_budget());
int polytope_dimension(PolytopeKind kind, int l);

enum class FacetType { Assoc, MultiLower, MultiUpper, MultiEnd };

struct FacetFactorization {
  FacetType type;
  int l1 = 0;               // Assoc/MultiLower: outer arity; MultiUpper: q
  int l2 = 0;               // Assoc/MultiLower: inner arity
  int position = 0;         // Assoc/MultiLower: i; MultiEnd: endpoint s
  std::vector<int> blocks;  // MultiUpper: l_1..l_q
  int sign = 1;             // +1 when boundary and product orientations coincide
  std::string describe() const;
};

// Sign rules for the codimension-one faces.
int assoc_facet_sign(int l1, int l2, int i);
int multi_lower_facet_sign(int l1, int l2, int i);
int multi_upper_facet_sign(const std::vector<int>& blocks);

std::vector<FacetFactorization> facets_with_signs(PolytopeKind kind, int l);

// Which parity terms enter the facet signs. The defaults are the actual rules;
// switching a term off gives the mutants used to test the boundary check.
struct FacetSignRules {
  bool assoc_product_term = true;   // l1*l2 in the associahedron rule
  bool assoc_position_term = true;  // i*(l2-1) in the associahedron rule
  bool lower_product_term = true;
  bool lower_position_term = true;
  bool upper_reversed = false;      // use sum of j*(l_j-1) instead of (q-j)*(l_j-1)
  int assoc(int l1, int l2, int i) const;
  int lower(int l1, int l2, int i) const;
  int upper(const std::vector<int>& blocks) const;
};

using Chain = std::map<Tree, long>;

// Signed cellular boundary of a face with product orientations taken in
// preorder of the vertices.
Chain boundary(const Tree& face, const FacetSignRules& rules = {});

struct BoundaryReport {
  PolytopeKind kind;
  int l = 0;
  std::size_t faces_checked = 0;
  std::size_t nonzero_faces = 0;  // faces whose boundary of boundary is nonzero
  std::optional<Tree> first_failure;
  bool ok() const { return nonzero_faces == 0; }
};

BoundaryReport boundary_map_consistency(PolytopeKind kind, int l, const FacetSignRules& rules = {},
                                        std::size_t budget = default_face_budget());

}  // namespace floerkit
