#pragma once
#include <memory>
#include <string>
#include <vector>

#include "dgar/algebra.hpp"

namespace dgar {

/* k[X]/(X^2) with |X| = d. */
std::shared_ptr<const DGAlgebra> sphere_algebra(const Field& f, int d);
/* k[x]/(x^3) with |x| = 2. */
std::shared_ptr<const DGAlgebra> cp2_algebra(const Field& f);
/* k[x,y]/(x^2, y^2) with |x| = |y| = 2. */
std::shared_ptr<const DGAlgebra> s2xs2_algebra(const Field& f);
/* k[x,y]/(x^2, xy, y^2) with |x| = |y| = 2. */
std::shared_ptr<const DGAlgebra> wedge_algebra(const Field& f);

std::vector<std::string> catalog_names();
std::shared_ptr<const DGAlgebra> build_catalog_algebra(const std::string& name, const Field& f);

}  // namespace dgar
