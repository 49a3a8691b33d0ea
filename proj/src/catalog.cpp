#include "dgar/catalog.hpp"

#include "dgar/errors.hpp"

namespace dgar {

namespace {

void add_unit_rows(DGAlgebra& a) {
  const Field& f = a.field;
  for (auto& [n, d] : a.space.dims()) {
    if (n == 0) continue;
    a.mul[{0, n}] = Matrix::identity(f, d);
    a.mul[{n, 0}] = Matrix::identity(f, d);
  }
  a.mul[{0, 0}] = Matrix::identity(f, 1);
}

}  // namespace

std::shared_ptr<const DGAlgebra> sphere_algebra(const Field& f, int d) {
  if (d < 2) throw ValidationError("sphere model needs top degree at least 2");
  DGAlgebra a;
  a.field = f;
  a.name = "sphere-" + std::to_string(d);
  a.space.set_dim(0, 1);
  a.space.set_dim(d, 1);
  a.labels[0] = {"1"};
  a.labels[d] = {"x"};
  add_unit_rows(a);
  return std::make_shared<const DGAlgebra>(std::move(a));
}

std::shared_ptr<const DGAlgebra> cp2_algebra(const Field& f) {
  DGAlgebra a;
  a.field = f;
  a.name = "cp2-like";
  a.space.set_dim(0, 1);
  a.space.set_dim(2, 1);
  a.space.set_dim(4, 1);
  a.labels[0] = {"1"};
  a.labels[2] = {"x"};
  a.labels[4] = {"x2"};
  add_unit_rows(a);
  Matrix sq(f, 1, 1);
  sq.set(0, 0, f.one());
  a.mul[{2, 2}] = sq;
  return std::make_shared<const DGAlgebra>(std::move(a));
}

std::shared_ptr<const DGAlgebra> s2xs2_algebra(const Field& f) {
  DGAlgebra a;
  a.field = f;
  a.name = "s2xs2";
  a.space.set_dim(0, 1);
  a.space.set_dim(2, 2);
  a.space.set_dim(4, 1);
  a.labels[0] = {"1"};
  a.labels[2] = {"x", "y"};
  a.labels[4] = {"xy"};
  add_unit_rows(a);
  Matrix t(f, 1, 4);  // cols (x,x), (x,y), (y,x), (y,y)
  t.set(0, 1, f.one());
  t.set(0, 2, f.one());
  a.mul[{2, 2}] = t;
  return std::make_shared<const DGAlgebra>(std::move(a));
}

std::shared_ptr<const DGAlgebra> wedge_algebra(const Field& f) {
  DGAlgebra a;
  a.field = f;
  a.name = "wedge";
  a.space.set_dim(0, 1);
  a.space.set_dim(2, 2);
  a.labels[0] = {"1"};
  a.labels[2] = {"x", "y"};
  add_unit_rows(a);
  return std::make_shared<const DGAlgebra>(std::move(a));
}

std::vector<std::string> catalog_names() {
  return {"sphere-2", "sphere-3", "sphere-4", "sphere-7", "cp2-like", "s2xs2", "wedge"};
}

std::shared_ptr<const DGAlgebra> build_catalog_algebra(const std::string& name, const Field& f) {
  if (name.rfind("sphere-", 0) == 0) {
    try {
      int d = std::stoi(name.substr(7));
      return sphere_algebra(f, d);
    } catch (const std::invalid_argument&) {
      throw ValidationError("unknown catalog algebra: " + name);
    }
  }
  if (name == "cp2-like") return cp2_algebra(f);
  if (name == "s2xs2") return s2xs2_algebra(f);
  if (name == "wedge") return wedge_algebra(f);
  throw ValidationError("unknown catalog algebra: " + name);
}

}  // namespace dgar
