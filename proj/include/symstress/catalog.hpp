#pragma once

#include "symstress/framework.hpp"
#include "symstress/reptheory.hpp"
#include "symstress/symmetry.hpp"

#include <Eigen/Dense>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace symstress {

/// Where an expected value comes from: stated in the published figure or
/// example text, or computed independently (rank oracle, hand reduction).
enum class Provenance { published, derived };

/// One expected integer. Quantity keys:
///   v, e, k, v_c, e_2, e_sigma:<class>  census under the declared group
///   s, m, s:<irrep>, m:<irrep>          numeric, under the declared group
struct Expectation {
    std::string quantity;
    int value = 0;
    Provenance provenance = Provenance::derived;
};

struct ExpectedDecomposition {
    PointGroup group;
    std::vector<std::pair<std::string, int>> terms;   // irreps not listed are 0
    Provenance provenance = Provenance::derived;
};

struct CatalogEntry {
    std::string name;
    std::string description;
    Framework framework;
    PointGroup group;
    std::vector<Expectation> expectations;
    std::vector<ExpectedDecomposition> decompositions;

    /// Expected value of a quantity, if recorded.
    const Expectation* find(const std::string& quantity) const;
};

using CatalogParams = std::map<std::string, double>;

/// Names accepted by generate, in catalog order.
std::vector<std::string> catalog_names();

/// Parameters: fig9b "stretch" (1.5), fig10 "delta" (0), quadgrid "n" (24).
/// Throws UnknownEntry for an unknown name or parameter.
CatalogEntry generate(const std::string& name, const CatalogParams& params = {});

/// p -> a p + t. Throws SingularMap when det(a) is (relatively) zero.
Framework affine_map(const Framework& fw, const Eigen::Matrix2d& a, const Eigen::Vector2d& t = Eigen::Vector2d::Zero());

/// Count-only entry: the pinned gridshell form diagram, whose geometry is unpublished.
struct CensusEntry {
    std::string name;
    PointGroup group;
    SymmetryCensus census;
    ExpectedDecomposition decomposition;
};

CensusEntry gridshell_census();

}  // namespace symstress
