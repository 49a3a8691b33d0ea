#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dgar {

/* Finitely supported map degree -> dimension.  Zero dimensions are never
 * stored, so map equality is space equality. */
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::map<int, int> dims);

  int dim(int n) const;
  void set_dim(int n, int d);
  const std::map<int, int>& dims() const { return dims_; }
  bool is_zero() const { return dims_.empty(); }
  std::optional<int> bottom() const;
  std::optional<int> top() const;
  int total() const;
  bool operator==(const GradedSpace& o) const { return dims_ == o.dims_; }

 private:
  std::map<int, int> dims_;
};

/* Default basis labels "stem0", "stem1", ... for one degree. */
std::vector<std::string> default_labels(const std::string& stem, int n);

}  // namespace dgar
